#pragma once

#include "ribbonforge/families.hpp"

#include <optional>
#include <string>

namespace ribbonforge {

// Diagram file format:
//   {"strands": [[[x_num, x_den, y_num, y_den], ...], ...],
//    "layers": [[l0, l1, ...], ...],
//    "orientation": [1, -1, ...]}
// Integers too large for 64 bits are written as decimal strings. A strand
// with orientation -1 is reversed on reading. Throws std::invalid_argument
// on malformed input.
std::string diagram_to_json(const KnotDiagram& d);
KnotDiagram diagram_from_json(const std::string& text);

KnotDiagram read_diagram_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

struct RunReport {
    std::string spec;
    ExactLength ribbonlength;
    double ribbonlength_float = 0;
    Rational width{1};
    int sticks = 0;
    int pd_crossings = 0;
    int components = 0;
    std::optional<Topology> topology;
    bool allowed = false;
    std::string certification = "skipped";  // "jones match (...)", "skipped", "failed"
    std::string pretzel_case;                // empty unless a pretzel
    std::string note;
    double generate_ms = 0;
    double check_ms = 0;
    double certify_ms = 0;
};

// Generate, check and certify a family instance. Ribbonlength is reported
// at the given width: the construction is scaled so that length/width is
// unchanged.
RunReport run_family(const FamilySpec& spec, const Rational& width, bool with_certification = true);

std::string report_json(const RunReport& r);
std::string report_text(const RunReport& r);

struct SvgOptions {
    double explode = 0;  // stacked layers are shifted by explode * layer
    double scale = 80;   // pixels per unit
};

// Centreline, fold lines and ribbon faces coloured by kind.
std::string render_svg(const FoldedRibbon& r, const SvgOptions& opt = {});
// Open half-twist patch: its unit squares and the four labelled ends.
std::string render_svg(const HalfTwistPatch& h, const SvgOptions& opt = {});

}  // namespace ribbonforge
