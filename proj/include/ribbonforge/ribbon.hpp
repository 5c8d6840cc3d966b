#pragma once

#include "ribbonforge/diagram.hpp"
#include "ribbonforge/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ribbonforge {

enum class FaceKind { trapezoid, fold_triangle };
std::string to_string(FaceKind k);

// One planar piece of the ribbon. Each edge's strip between its two cut lines
// (fold lines, or perpendiculars where the strand runs straight) is split into
// a fold triangle at each folded end and a trapezoid in between.
struct RibbonFace {
    FaceKind kind = FaceKind::trapezoid;
    int layer = 0;
    std::size_t strand = 0;
    std::size_t edge = 0;
    std::optional<std::size_t> vertex;  // fold vertex, for fold triangles
    std::vector<Point> exact;           // empty when coordinates leave Q
    std::vector<Vec2> polygon;
};

struct FoldLineRecord {
    std::size_t strand = 0;
    std::size_t vertex = 0;
    int layer_in = 0;
    int layer_out = 0;
    std::optional<Segment> exact;
    SegmentF line;
};

struct FoldedRibbon {
    KnotDiagram diagram;
    double width = 0;
    std::optional<Rational> exact_width;
    FoldingInfo folding;
    std::vector<RibbonFace> faces;
    std::vector<FoldLineRecord> fold_lines;

    bool exact() const { return exact_width.has_value(); }
};

// Exact faces whenever w is rational and every edge direction has rational
// length. A width so large that the ribbon folds past its own edge is not an
// error here; check_allowed reports it.
FoldedRibbon build_ribbon(const KnotDiagram& d, const Rational& w, const FoldingInfo& f);
FoldedRibbon build_ribbon(const KnotDiagram& d, double w, const FoldingInfo& f);

struct Witness {
    std::string condition;
    Vec2 where;
    std::string detail;
};

struct AllowedReport {
    bool regular = false;
    bool fold_lines_disjoint = true;
    int fold_line_touches = 0;  // pairs meeting only at a common endpoint, which is accepted
    int max_overlap_degree = 0;
    bool overlap_ok = true;  // <= 2 for regular diagrams; stacked ones are not held to it
    bool layer_consistent = true;
    bool folding_matches = true;
    bool verdict = true;
    std::vector<Witness> witnesses;
};

// For a regular diagram every pair of fold lines must be disjoint. In a
// stacked diagram two fold lines clash only if they meet and share a layer.
AllowedReport check_allowed(const FoldedRibbon& r);

struct WidthSearch {
    double w_star = 0;
    std::vector<std::pair<double, bool>> trace;  // probed width, feasible
};

// Bisection for the largest width with disjoint fold lines and at most double
// points. Throws std::runtime_error when no feasible start is found or the
// layer data are inconsistent.
WidthSearch max_allowed_width(const KnotDiagram& d, const FoldingInfo& f, double tol = 1e-9);

}  // namespace ribbonforge
