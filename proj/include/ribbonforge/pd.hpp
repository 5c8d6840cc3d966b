#pragma once

#include <array>
#include <string>
#include <vector>

namespace ribbonforge {

// Planar diagram code. Each crossing lists four arc labels counterclockwise,
// starting from the incoming under-arc. Signs are stored explicitly so that
// writhe does not depend on guessing orientation from label arithmetic.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    std::vector<int> signs;  // +1 / -1 per crossing
    int free_loops = 0;      // components that take part in no crossing

    std::size_t size() const { return crossings.size(); }
    bool operator==(const PDCode&) const = default;
};

// Throws std::invalid_argument if labels do not appear exactly twice, or if
// signs and crossings disagree in length.
void validate_pd(const PDCode& pd);

int component_count(const PDCode& pd);
int writhe(const PDCode& pd);

// Mirror image: every crossing changes over/under.
PDCode mirror(const PDCode& pd);

// Relabel arcs to 1..2n in order of first appearance along components.
// Arc a is followed by the outgoing arc at the crossing it enters.
PDCode canonical_labels(const PDCode& pd);

std::string to_text(const PDCode& pd);  // X[a,b,c,d], X[...]
PDCode parse_pd(const std::string& text, const std::vector<int>& signs = {});

// Signed crossing sequence per component, components separated by " | ".
std::string gauss_code(const PDCode& pd);

}  // namespace ribbonforge
