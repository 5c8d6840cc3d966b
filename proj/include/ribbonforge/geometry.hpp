#pragma once

#include "ribbonforge/diagram.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ribbonforge {

// Floating-point point for general-angle geometry.
struct Vec2 {
    double x = 0;
    double y = 0;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct SegmentF {
    Vec2 a;
    Vec2 b;
};

Vec2 to_vec(const Point& p);
double norm(const Vec2& v);

// Local measurements of a ribbon of width w folded at angle theta, where theta
// is the angle between the reversed incoming edge and the outgoing edge.
struct FoldLocalGeometry {
    double theta = 0;
    double width = 0;
    double fold_line_length = 0;       // w / cos(theta/2)
    double fold_diagram_length = 0;    // w / sin(theta), centreline inside the fold
    double extended_fold_length = 0;
    double rhombus_side = 0;           // w / (2 sin theta)
    double rhombus_half_diagonal = 0;  // w / (2 sin(theta/2))
};

// Throws std::domain_error unless 0 < theta < pi and w > 0.
FoldLocalGeometry fold_local(double theta, double width);

// Diagonals (long, short) of the rhombus where two ribbons of width w cross at
// angle theta.
std::pair<double, double> crossing_rhombus(double theta, double width);

// Exact unit vector along d when |d| is rational, e.g. (3,4) -> (3/5,4/5).
std::optional<Point> exact_unit(const Point& d);

// Fold line at a vertex: centred there, perpendicular to the bisector of the
// fold angle, spanning the ribbon. Directions need not be normalised. The
// exact overload requires |dir_in| and |dir_out| rational (axis-aligned
// directions always are) and throws std::domain_error otherwise. Both throw
// std::domain_error when the strand goes straight on.
Segment fold_line(const Point& vertex, const Point& dir_in, const Point& dir_out, const Rational& width);
SegmentF fold_line(const Vec2& vertex, const Vec2& dir_in, const Vec2& dir_out, double width);

template <class Pt>
struct OverlapResult {
    int max_multiplicity = 0;
    Pt witness{};
};

// Largest number of polygon interiors sharing a point. Polygons are simple and
// given by their vertices in order. The arrangement is cut into vertical slabs
// at every vertex and every edge intersection; within a slab the faces are
// fixed, so probing each slab's midline is enough. Exact for Point input.
template <class Pt>
OverlapResult<Pt> overlap_degree(const std::vector<std::vector<Pt>>& faces);

extern template OverlapResult<Point> overlap_degree(const std::vector<std::vector<Point>>&);
extern template OverlapResult<Vec2> overlap_degree(const std::vector<std::vector<Vec2>>&);

// Strict interior test (boundary points are outside).
bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly);

// Closed segments share a point.
bool segments_meet(const Segment& a, const Segment& b);
bool segments_meet(const SegmentF& a, const SegmentF& b);
// The segments meet only in an endpoint common to both.
bool segments_touch_at_endpoint(const Segment& a, const Segment& b);
bool segments_touch_at_endpoint(const SegmentF& a, const SegmentF& b);

}  // namespace ribbonforge
