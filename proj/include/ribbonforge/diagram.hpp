#pragma once

#include "ribbonforge/numeric.hpp"
#include "ribbonforge/pd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ribbonforge {

struct Point {
    Rational x{0};
    Rational y{0};

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& k, const Point& a);
Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);
std::string to_string(const Point& p);

struct Segment {
    Point a;
    Point b;
};

struct Point3 {
    Rational x{0};
    Rational y{0};
    Rational z{0};
    friend bool operator==(const Point3&, const Point3&) = default;
};

// A closed polyline. Edge i runs from vertices[i] to vertices[i+1 mod n] and
// sits at height layers[i]. Coincident or crossing edges must carry distinct
// layers; a layer change at a vertex is realised as a short vertical
// connector (see spatial_curve).
struct Strand {
    std::vector<Point> vertices;
    std::vector<int> layers;
    bool reversed = false;  // traverse vertices backwards

    std::size_t size() const { return vertices.size(); }
    const Point& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
    Point edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }
};

struct KnotDiagram {
    std::vector<Strand> strands;

    // Build a single-strand diagram, all edges at layer 0 unless given.
    static KnotDiagram polygon(std::vector<Point> pts, std::vector<int> layers = {});
};

enum class Fold { none, over, under };

// Per strand, per vertex.
struct FoldingInfo {
    std::vector<std::vector<Fold>> folds;
};

enum class Topology { annulus, moebius };
std::string to_string(Topology t);

// Throws std::invalid_argument for zero-length edges, size mismatches, or
// strands with fewer than two vertices.
void validate(const KnotDiagram& d);

// Exact when every edge is axis-aligned or at 45 degrees; otherwise throws
// std::domain_error (use diagram_length_approx).
ExactLength diagram_length(const KnotDiagram& d);
double diagram_length_approx(const KnotDiagram& d);
ExactLength ribbonlength(const KnotDiagram& d, const Rational& w);
double ribbonlength(const KnotDiagram& d, double w);

int stick_count(const KnotDiagram& d);

// True when the strand turns at vertex i (fold angle strictly below pi).
bool is_fold_vertex(const Strand& s, std::size_t i);
int fold_count(const Strand& s);
// Angle in [0, pi] between the reversed incoming edge and the outgoing edge.
double fold_angle(const Strand& s, std::size_t i);

Topology ribbon_topology(const KnotDiagram& d, const FoldingInfo& f);

// Over where the outgoing edge is higher, under where lower; free (reported
// as over) where the layer does not change.
FoldingInfo derive_folding(const KnotDiagram& d);

// Result of comparing a FoldingInfo against the layer data; empty if fine.
std::optional<std::string> folding_mismatch(const KnotDiagram& d, const FoldingInfo& f);

// Layered realisation in space. Vertex v with layers a (in) and b (out) becomes
// (v,a) -> apex -> (v,b), the apex pushed outward from the corner by an amount
// proportional to |a-b| at height (a+b)/2, so nested folds stay disjoint.
std::vector<std::vector<Point3>> spatial_curve(const KnotDiagram& d);

// First pair of non-adjacent spatial segments that meet, if any.
std::optional<std::string> spatial_collision(const KnotDiagram& d);

// Regular diagram: edges meet only at shared vertices or in transverse double
// points away from vertices.
bool is_regular(const KnotDiagram& d);

// Two planar edges that touch while sharing a layer; empty if none.
std::optional<std::string> layer_conflict(const KnotDiagram& d);

struct ExtractOptions {
    bool search_views = false;  // also try oblique views, keep the fewest crossings
};

// PD code of the diagram seen from above after a generic infinitesimal tilt.
PDCode extract_pd(const KnotDiagram& d, const ExtractOptions& opt = {});

}  // namespace ribbonforge
