#pragma once

#include "ribbonforge/diagram.hpp"
#include "ribbonforge/invariants.hpp"
#include "ribbonforge/ribbon.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ribbonforge {

enum class FamilyKind { half_twists, torus_2p, pretzel, twist, torus_pq, two_bridge };
std::string to_string(FamilyKind k);

struct FamilySpec {
    FamilyKind kind = FamilyKind::torus_pq;
    std::vector<int> params;

    std::string str() const;  // round-trips through parse_family
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Accepts "halftwists:5", "torus2p:5", "torus:3,2", "pretzel:3,-2,3",
// "twist:4", "twobridge:3,2,2". Parameter ranges are checked here, so a
// parsed spec is always constructible. Throws std::invalid_argument.
FamilySpec parse_family(const std::string& text);

// Both strands of a twist region laid over one unit square centred at the
// origin. Strand 0 starts at end A on the west side and runs east-west,
// strand 1 starts at end C on the south side and runs north-south; every
// crossing of the square is one unit square of ribbon.
struct HalfTwistPatch {
    struct End {
        char label = 'A';
        Point at;         // midpoint of the side the end leaves through
        Point direction;  // unit lattice vector pointing away from the square
        int strand = 0;
    };
    int p = 0;
    std::array<std::vector<Point>, 2> strands;  // open polylines
    std::array<std::vector<int>, 2> layers;     // one per edge
    std::array<End, 4> ends;                    // A, B, C, D
    int unit_squares = 0;

    const End& end(char label) const;
};

HalfTwistPatch gen_half_twists(int p);

struct ConstructionResult {
    FamilySpec spec;
    FoldedRibbon ribbon;  // w = 1
    ExactLength expected_ribbonlength;
    int expected_sticks = 0;
    int expected_crossing_number = 0;
    bool crossing_number_is_bound = false;  // mixed-sign pretzels
    std::optional<Topology> expected_topology;
    int components = 1;
    int pretzel_case = 0;              // 1..5 for pretzel knots, 0 for links
    std::array<int, 3> normalized{};   // pretzel parameters after normalisation
    bool mirrored = false;             // built as the mirror of the normalised triple
    std::string note;

    const KnotDiagram& diagram() const { return ribbon.diagram; }
};

ConstructionResult gen_torus_2p(int p);
ConstructionResult gen_torus_pq(int p, int q);
ConstructionResult gen_pretzel(int p, int q, int r);
ConstructionResult gen_twist(int n);

struct TwoBridgeResult {
    ConstructionResult step1;
    int step2_planar_length = 0;
};
TwoBridgeResult gen_two_bridge(const std::vector<int>& a);

// Dispatch on the family kind. Half twists are open patches and are rejected here.
ConstructionResult generate(const FamilySpec& spec);

// Pretzel case selection. Cyclic rotation, transposition and mirroring are
// applied until the triple matches one of the five layouts.
struct PretzelPlan {
    std::array<int, 3> pqr{};
    bool mirrored = false;
    int pretzel_case = 0;
    bool link = false;  // two or more even entries
};
PretzelPlan plan_pretzel(int p, int q, int r);

// Knot-type evidence for a construction.
struct Certification {
    bool available = false;  // a reference diagram exists for the family
    bool match = false;
    std::string method;      // e.g. "jones", "bracket up to units"
    std::string reference;   // what the reference diagram is
    LaurentPoly generated;
    LaurentPoly expected;
    int generated_components = 0;
    int expected_components = 0;
};

PDCode reference_pd(const FamilySpec& spec);
Certification certify(const ConstructionResult& c);

}  // namespace ribbonforge
