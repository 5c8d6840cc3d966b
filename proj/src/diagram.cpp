#include "ribbonforge/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace ribbonforge {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& k, const Point& a) { return {k * a.x, k * a.y}; }
Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

std::string to_string(const Point& p) {
    return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

std::string to_string(Topology t) { return t == Topology::annulus ? "annulus" : "moebius"; }

KnotDiagram KnotDiagram::polygon(std::vector<Point> pts, std::vector<int> layers) {
    if (layers.empty()) layers.assign(pts.size(), 0);
    KnotDiagram d;
    d.strands.push_back({std::move(pts), std::move(layers), false});
    validate(d);
    return d;
}

void validate(const KnotDiagram& d) {
    for (std::size_t k = 0; k < d.strands.size(); ++k) {
        const Strand& s = d.strands[k];
        if (s.vertices.size() < 2)
            throw std::invalid_argument("strand " + std::to_string(k) + " has fewer than two vertices");
        if (s.layers.size() != s.vertices.size())
            throw std::invalid_argument("strand " + std::to_string(k) + ": one layer per edge required");
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s.vertex(i) == s.vertex(i + 1))
                throw std::invalid_argument("strand " + std::to_string(k) + ": zero-length edge at vertex " +
                                            std::to_string(i));
    }
}

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational linf(const Point& p) { return std::max(abs_q(p.x), abs_q(p.y)); }

double to_d(const Rational& q) { return q.convert_to<double>(); }

// Vertices and layers in traversal order.
struct Oriented {
    std::vector<Point> v;
    std::vector<int> layer;  // edge i: v[i] -> v[i+1]
};

Oriented oriented(const Strand& s) {
    Oriented o{s.vertices, s.layers};
    if (s.reversed) {
        std::size_t n = s.size();
        std::reverse(o.v.begin(), o.v.end());
        for (std::size_t j = 0; j < n; ++j) o.layer[j] = s.layers[(2 * n - 2 - j) % n];
    }
    return o;
}

bool same_direction(const Point& a, const Point& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

}  // namespace

ExactLength diagram_length(const KnotDiagram& d) {
    validate(d);
    ExactLength total;
    for (const Strand& s : d.strands) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Point e = s.edge_vector(i);
            Rational ax = abs_q(e.x), ay = abs_q(e.y);
            if (ax == 0 || ay == 0) total += ExactLength(ax + ay);
            else if (ax == ay) total += ExactLength(0, ax);
            else throw std::domain_error("edge " + to_string(s.vertex(i)) + "->" + to_string(s.vertex(i + 1)) +
                                         " is not axis-aligned or diagonal");
        }
    }
    return total;
}

double diagram_length_approx(const KnotDiagram& d) {
    validate(d);
    double total = 0;
    for (const Strand& s : d.strands)
        for (std::size_t i = 0; i < s.size(); ++i) {
            Point e = s.edge_vector(i);
            total += std::hypot(to_d(e.x), to_d(e.y));
        }
    return total;
}

ExactLength ribbonlength(const KnotDiagram& d, const Rational& w) {
    if (w <= 0) throw std::domain_error("width must be positive");
    return diagram_length(d) / w;
}

double ribbonlength(const KnotDiagram& d, double w) {
    if (!(w > 0)) throw std::domain_error("width must be positive");
    return diagram_length_approx(d) / w;
}

bool is_fold_vertex(const Strand& s, std::size_t i) {
    std::size_t n = s.size();
    Point din = s.edge_vector((i + n - 1) % n);
    Point dout = s.edge_vector(i % n);
    return !same_direction(din, dout);
}

int fold_count(const Strand& s) {
    int n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) n += is_fold_vertex(s, i);
    return n;
}

double fold_angle(const Strand& s, std::size_t i) {
    std::size_t n = s.size();
    Point din = s.edge_vector((i + n - 1) % n);
    Point dout = s.edge_vector(i % n);
    double ax = -to_d(din.x), ay = -to_d(din.y), bx = to_d(dout.x), by = to_d(dout.y);
    return std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by);
}

int stick_count(const KnotDiagram& d) {
    validate(d);
    int total = 0;
    for (const Strand& s : d.strands) total += fold_count(s);
    return total;
}

Topology ribbon_topology(const KnotDiagram& d, const FoldingInfo& f) {
    validate(d);
    if (d.strands.size() != 1)
        throw std::invalid_argument("ribbon topology is defined per component; diagram has " +
                                    std::to_string(d.strands.size()));
    if (!f.folds.empty() && f.folds.size() != 1)
        throw std::invalid_argument("folding information does not match the diagram");
    return fold_count(d.strands[0]) % 2 == 0 ? Topology::annulus : Topology::moebius;
}

FoldingInfo derive_folding(const KnotDiagram& d) {
    FoldingInfo f;
    for (const Strand& s : d.strands) {
        Oriented o = oriented(s);
        std::size_t n = s.size();
        std::vector<Fold> row(n, Fold::none);
        for (std::size_t i = 0; i < n; ++i) {
            if (!same_direction(o.v[i] - o.v[(i + n - 1) % n], o.v[(i + 1) % n] - o.v[i]))
                row[i] = o.layer[i] < o.layer[(i + n - 1) % n] ? Fold::under : Fold::over;
        }
        f.folds.push_back(std::move(row));
    }
    return f;
}

std::optional<std::string> folding_mismatch(const KnotDiagram& d, const FoldingInfo& f) {
    if (f.folds.size() != d.strands.size()) return "folding information covers a different number of strands";
    for (std::size_t k = 0; k < d.strands.size(); ++k) {
        Oriented o = oriented(d.strands[k]);
        std::size_t n = o.v.size();
        if (f.folds[k].size() != n) return "strand " + std::to_string(k) + ": one fold flag per vertex required";
        for (std::size_t i = 0; i < n; ++i) {
            bool folds = !same_direction(o.v[i] - o.v[(i + n - 1) % n], o.v[(i + 1) % n] - o.v[i]);
            Fold flag = f.folds[k][i];
            if (!folds) {
                if (flag != Fold::none)
                    return "strand " + std::to_string(k) + " vertex " + std::to_string(i) + ": flag on a straight vertex";
                continue;
            }
            if (flag == Fold::none)
                return "strand " + std::to_string(k) + " vertex " + std::to_string(i) + ": fold without a flag";
            int a = o.layer[(i + n - 1) % n], b = o.layer[i];
            if ((b > a && flag == Fold::under) || (b < a && flag == Fold::over))
                return "strand " + std::to_string(k) + " vertex " + std::to_string(i) + " at " + to_string(o.v[i]) +
                       ": flag contradicts the layer change";
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Spatial realisation

namespace {

Rational apex_scale(const KnotDiagram& d) {
    Rational feature;
    bool have = false;
    int span = 0;
    std::vector<Point> verts;
    for (const Strand& s : d.strands) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            Rational len = linf(s.edge_vector(i));
            if (!have || len < feature) feature = len, have = true;
            span = std::max(span, std::abs(s.layers[i] - s.layers[(i + s.size() - 1) % s.size()]));
            verts.push_back(s.vertices[i]);
        }
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() <= 64) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                Rational g = linf(verts[i] - verts[j]);
                if (g < feature) feature = g;
            }
    }
    return feature / (8 * (span + 1));
}

}  // namespace

std::vector<std::vector<Point3>> spatial_curve(const KnotDiagram& d) {
    validate(d);
    Rational eta = apex_scale(d);
    std::vector<std::vector<Point3>> out;
    for (const Strand& s : d.strands) {
        Oriented o = oriented(s);
        std::size_t n = o.v.size();
        std::vector<Point3> pts;
        for (std::size_t i = 0; i < n; ++i) {
            const Point& v = o.v[i];
            int a = o.layer[(i + n - 1) % n], b = o.layer[i];
            if (a == b) {
                pts.push_back({v.x, v.y, a});
                continue;
            }
            Point din = v - o.v[(i + n - 1) % n];
            Point dout = o.v[(i + 1) % n] - v;
            Point u = (1 / linf(din)) * din - (1 / linf(dout)) * dout;
            pts.push_back({v.x, v.y, a});
            if (u.x != 0 || u.y != 0) {
                Point apex = v + Rational(eta * std::abs(a - b)) * u;
                pts.push_back({apex.x, apex.y, Rational(a + b, 2)});
            }
            pts.push_back({v.x, v.y, b});
        }
        out.push_back(std::move(pts));
    }
    return out;
}

namespace {

struct Vec3 {
    Rational x, y, z;
};
Vec3 sub(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Rational dot3(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
bool is_zero(const Vec3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }

struct Box {
    double lo[3], hi[3];
};

Box box_of(const Point3& a, const Point3& b) {
    double pa[3] = {to_d(a.x), to_d(a.y), to_d(a.z)};
    double pb[3] = {to_d(b.x), to_d(b.y), to_d(b.z)};
    Box r;
    for (int k = 0; k < 3; ++k) {
        r.lo[k] = std::min(pa[k], pb[k]) - 1e-9 * (1 + std::abs(pa[k]));
        r.hi[k] = std::max(pa[k], pb[k]) + 1e-9 * (1 + std::abs(pb[k]));
    }
    return r;
}

bool boxes_meet(const Box& a, const Box& b, int dims) {
    for (int k = 0; k < dims; ++k)
        if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return false;
    return true;
}

bool segments_meet_3d(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1) {
    Vec3 d1 = sub(p1, p0), d2 = sub(q1, q0), w = sub(q0, p0);
    Vec3 n = cross3(d1, d2);
    if (is_zero(n)) {
        if (!is_zero(cross3(w, d1))) return false;
        // Collinear: project onto d1 and test interval overlap.
        Rational len = dot3(d1, d1);
        Rational s0 = dot3(w, d1) / len, s1 = dot3(sub(q1, p0), d1) / len;
        if (s0 > s1) std::swap(s0, s1);
        return !(s1 < 0 || s0 > 1);
    }
    if (dot3(w, n) != 0) return false;
    Rational nn = dot3(n, n);
    Rational t = dot3(cross3(w, d2), n) / nn;
    Rational u = dot3(cross3(w, d1), n) / nn;
    return t >= 0 && t <= 1 && u >= 0 && u <= 1;
}

struct Seg3 {
    int comp;
    int index;
    Point3 a, b;
    Box box;
};

std::vector<Seg3> segments_of(const std::vector<std::vector<Point3>>& curve) {
    std::vector<Seg3> segs;
    for (std::size_t c = 0; c < curve.size(); ++c) {
        const auto& pts = curve[c];
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point3& a = pts[i];
            const Point3& b = pts[(i + 1) % pts.size()];
            segs.push_back({static_cast<int>(c), static_cast<int>(i), a, b, box_of(a, b)});
        }
    }
    return segs;
}

// 0: not adjacent, 1: share one endpoint, 2: the component is a 2-cycle.
int adjacency(const Seg3& s, const Seg3& t, const std::vector<std::vector<Point3>>& curve) {
    if (s.comp != t.comp) return 0;
    int n = static_cast<int>(curve[s.comp].size());
    int diff = ((s.index - t.index) % n + n) % n;
    if (n == 2) return 2;
    return (diff == 1 || diff == n - 1) ? 1 : 0;
}

std::string describe(const Point3& p) {
    return "(" + to_string(p.x) + "," + to_string(p.y) + "," + to_string(p.z) + ")";
}

}  // namespace

std::optional<std::string> spatial_collision(const KnotDiagram& d) {
    auto curve = spatial_curve(d);
    auto segs = segments_of(curve);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Seg3& s = segs[i];
            const Seg3& t = segs[j];
            if (!boxes_meet(s.box, t.box, 3)) continue;
            int adj = adjacency(s, t, curve);
            if (adj == 2) {
                return "component " + std::to_string(s.comp) + " is a doubled segment";
            }
            if (adj == 1) {
                Vec3 d1 = sub(s.b, s.a), d2 = sub(t.b, t.a);
                if (is_zero(cross3(d1, d2)) && dot3(d1, d2) < 0)
                    return "edges fold back on themselves at " + describe(s.b == t.a ? s.b : s.a);
                continue;
            }
            if (segments_meet_3d(s.a, s.b, t.a, t.b))
                return "strand pieces meet in space near " + describe(s.a) + "-" + describe(s.b) + " and " +
                       describe(t.a) + "-" + describe(t.b);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Planar predicates

namespace {

struct PlanarEdge {
    int strand;
    int index;
    Point a, b;
    int layer;
};

std::vector<PlanarEdge> planar_edges(const KnotDiagram& d) {
    std::vector<PlanarEdge> out;
    for (std::size_t k = 0; k < d.strands.size(); ++k) {
        const Strand& s = d.strands[k];
        for (std::size_t i = 0; i < s.size(); ++i)
            out.push_back({static_cast<int>(k), static_cast<int>(i), s.vertex(i), s.vertex(i + 1), s.layers[i]});
    }
    return out;
}

enum class Touch { none, proper, degenerate };

// Closed-segment intersection classification. `proper` means a single point
// interior to both segments; `degenerate` covers endpoints and overlaps.
Touch classify(const Point& a1, const Point& b1, const Point& a2, const Point& b2, Point* where = nullptr) {
    Point r = b1 - a1, s = b2 - a2, w = a2 - a1;
    Rational denom = cross(r, s);
    if (denom == 0) {
        if (cross(w, r) != 0) return Touch::none;
        Rational len = dot(r, r);
        Rational t0 = dot(w, r) / len, t1 = dot(b2 - a1, r) / len;
        if (t0 > t1) std::swap(t0, t1);
        if (t1 < 0 || t0 > 1) return Touch::none;
        if (where) *where = a1 + std::max(t0, Rational(0)) * r;
        return Touch::degenerate;
    }
    Rational t = cross(w, s) / denom;
    Rational u = cross(w, r) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return Touch::none;
    if (where) *where = a1 + t * r;
    if (t == 0 || t == 1 || u == 0 || u == 1) return Touch::degenerate;
    return Touch::proper;
}

bool planar_adjacent(const PlanarEdge& e, const PlanarEdge& f, const KnotDiagram& d) {
    if (e.strand != f.strand) return false;
    int n = static_cast<int>(d.strands[e.strand].size());
    int diff = ((e.index - f.index) % n + n) % n;
    return diff == 1 || diff == n - 1;
}

}  // namespace

bool is_regular(const KnotDiagram& d) {
    validate(d);
    auto edges = planar_edges(d);
    std::set<Point> crossings;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i];
            const auto& f = edges[j];
            if (planar_adjacent(e, f, d)) {
                Point r = e.b - e.a, s = f.b - f.a;
                if (cross(r, s) == 0 && dot(r, s) < 0) return false;
                if (d.strands[e.strand].size() == 2) return false;
                continue;
            }
            Point at;
            Touch t = classify(e.a, e.b, f.a, f.b, &at);
            if (t == Touch::degenerate) return false;
            if (t == Touch::proper && !crossings.insert(at).second) return false;
        }
    }
    return true;
}

std::optional<std::string> layer_conflict(const KnotDiagram& d) {
    validate(d);
    auto edges = planar_edges(d);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i];
            const auto& f = edges[j];
            if (e.layer != f.layer) continue;
            if (planar_adjacent(e, f, d)) {
                Point r = e.b - e.a, s = f.b - f.a;
                if (cross(r, s) == 0 && dot(r, s) < 0)
                    return "fold-back at layer " + std::to_string(e.layer) + " near " + to_string(e.b);
                continue;
            }
            Point at;
            if (classify(e.a, e.b, f.a, f.b, &at) != Touch::none)
                return "edges share layer " + std::to_string(e.layer) + " where they meet at " + to_string(at);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// PD extraction

namespace {

struct View {
    Vec3 n, e1, e2;
};

View make_view(const Rational& nx, const Rational& ny, const Rational& nz) {
    View v;
    v.n = {nx, ny, nz};
    if (nz != 0 || nx != 0) v.e1 = {nz, 0, -nx};
    else v.e1 = {0, nz, -ny};
    v.e2 = cross3(v.n, v.e1);
    return v;
}

Point project(const View& v, const Point3& p) {
    Vec3 q{p.x, p.y, p.z};
    return {dot3(v.e1, q), dot3(v.e2, q)};
}

Rational depth(const View& v, const Point3& p) { return dot3(v.n, {p.x, p.y, p.z}); }

struct Passage {
    Rational t;
    int crossing;
    bool over;
};

struct Projected {
    int comp;
    int index;
    Point a, b;
    Rational ha, hb;
    double lo[2], hi[2];
};

// Empty result means the view is not generic.
std::optional<PDCode> pd_from_view(const std::vector<std::vector<Point3>>& curve, const View& view) {
    std::vector<Projected> segs;
    for (std::size_t c = 0; c < curve.size(); ++c) {
        const auto& pts = curve[c];
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point3& p = pts[i];
            const Point3& q = pts[(i + 1) % pts.size()];
            Projected s{static_cast<int>(c), static_cast<int>(i), project(view, p), project(view, q),
                        depth(view, p), depth(view, q), {}, {}};
            double ax = to_d(s.a.x), ay = to_d(s.a.y), bx = to_d(s.b.x), by = to_d(s.b.y);
            s.lo[0] = std::min(ax, bx) - 1e-9 * (1 + std::abs(ax));
            s.hi[0] = std::max(ax, bx) + 1e-9 * (1 + std::abs(bx));
            s.lo[1] = std::min(ay, by) - 1e-9 * (1 + std::abs(ay));
            s.hi[1] = std::max(ay, by) + 1e-9 * (1 + std::abs(by));
            if (s.a == s.b) return std::nullopt;  // view along a segment
            segs.push_back(std::move(s));
        }
    }

    struct RawCrossing {
        int under_seg, over_seg;
        Point under_dir, over_dir;
    };
    std::vector<RawCrossing> raw;
    std::vector<std::vector<Passage>> passages(segs.size());
    std::set<Point> points;

    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Projected& s = segs[i];
            const Projected& t = segs[j];
            if (s.hi[0] < t.lo[0] || t.hi[0] < s.lo[0] || s.hi[1] < t.lo[1] || t.hi[1] < s.lo[1]) continue;
            bool adj = false;
            if (s.comp == t.comp) {
                int n = static_cast<int>(curve[s.comp].size());
                int diff = ((s.index - t.index) % n + n) % n;
                adj = diff == 1 || diff == n - 1;
            }
            Point r = s.b - s.a, q = t.b - t.a;
            if (adj) {
                if (cross(r, q) == 0 && dot(r, q) < 0) return std::nullopt;
                continue;
            }
            Point w = t.a - s.a;
            Rational denom = cross(r, q);
            if (denom == 0) {
                if (cross(w, r) != 0) continue;
                Rational len = dot(r, r);
                Rational t0 = dot(w, r) / len, t1 = dot(t.b - s.a, r) / len;
                if (t0 > t1) std::swap(t0, t1);
                if (t1 < 0 || t0 > 1) continue;
                return std::nullopt;
            }
            Rational ts = cross(w, q) / denom;
            Rational tt = cross(w, r) / denom;
            if (ts < 0 || ts > 1 || tt < 0 || tt > 1) continue;
            if (ts == 0 || ts == 1 || tt == 0 || tt == 1) return std::nullopt;
            Point at = s.a + ts * r;
            if (!points.insert(at).second) return std::nullopt;
            Rational hs = s.ha + ts * (s.hb - s.ha);
            Rational ht = t.ha + tt * (t.hb - t.ha);
            if (hs == ht)
                throw std::invalid_argument("diagram is not embedded: strands meet in space at " + to_string(at));
            int id = static_cast<int>(raw.size());
            bool s_over = hs > ht;
            raw.push_back({s_over ? static_cast<int>(j) : static_cast<int>(i),
                           s_over ? static_cast<int>(i) : static_cast<int>(j), s_over ? q : r, s_over ? r : q});
            passages[i].push_back({ts, id, s_over});
            passages[j].push_back({tt, id, !s_over});
        }
    }
    for (auto& p : passages)
        std::sort(p.begin(), p.end(), [](const Passage& a, const Passage& b) { return a.t < b.t; });

    // Walk components, labelling arcs consecutively from each basepoint.
    struct Ends {
        int in_under = 0, out_under = 0, in_over = 0, out_over = 0;
    };
    std::vector<Ends> ends(raw.size());
    PDCode pd;
    int next_label = 1;
    std::size_t seg_base = 0;
    for (std::size_t c = 0; c < curve.size(); ++c) {
        std::size_t n = curve[c].size();
        std::vector<std::pair<int, bool>> order;  // crossing id, over?
        for (std::size_t k = 0; k < n; ++k)
            for (const Passage& p : passages[seg_base + k]) order.push_back({p.crossing, p.over});
        seg_base += n;
        if (order.empty()) {
            ++pd.free_loops;
            continue;
        }
        int m = static_cast<int>(order.size());
        for (int k = 0; k < m; ++k) {
            int in = next_label + k;
            int out = next_label + (k + 1) % m;
            Ends& e = ends[order[k].first];
            if (order[k].second) e.in_over = in, e.out_over = out;
            else e.in_under = in, e.out_under = out;
        }
        next_label += m;
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Ends& e = ends[i];
        if (cross(raw[i].under_dir, raw[i].over_dir) < 0) {
            pd.crossings.push_back({e.in_under, e.out_over, e.out_under, e.in_over});
            pd.signs.push_back(1);
        } else {
            pd.crossings.push_back({e.in_under, e.in_over, e.out_under, e.out_over});
            pd.signs.push_back(-1);
        }
    }
    return pd;
}

// Rotate each component so it starts at its lexicographically smallest point.
void rebase(std::vector<std::vector<Point3>>& curve) {
    for (auto& pts : curve) {
        auto less = [](const Point3& a, const Point3& b) {
            if (a.x != b.x) return a.x < b.x;
            if (a.y != b.y) return a.y < b.y;
            return a.z < b.z;
        };
        auto it = std::min_element(pts.begin(), pts.end(), less);
        std::rotate(pts.begin(), it, pts.end());
    }
}

}  // namespace

PDCode extract_pd(const KnotDiagram& d, const ExtractOptions& opt) {
    if (auto clash = layer_conflict(d)) throw std::invalid_argument("no total layer order: " + *clash);
    auto curve = spatial_curve(d);
    rebase(curve);

    int zmax = 1;
    Rational feature = apex_scale(d);
    for (const Strand& s : d.strands)
        for (int l : s.layers) zmax = std::max(zmax, std::abs(l) + 1);
    Rational tilt = feature / (16 * zmax);

    // Near-vertical views first; these realise the infinitesimal layer offset.
    const std::pair<Rational, Rational> generic[] = {
        {Rational(37, 61), Rational(29, 71)}, {Rational(-41, 67), Rational(23, 59)},
        {Rational(31, 73), Rational(-43, 53)}, {Rational(19, 83), Rational(47, 79)},
        {Rational(-13, 89), Rational(-37, 97)}, {Rational(53, 101), Rational(11, 103)}};
    std::optional<PDCode> best;
    for (const auto& [a, b] : generic) {
        best = pd_from_view(curve, make_view(a * tilt, b * tilt, 1));
        if (best) break;
    }
    if (!best) throw std::runtime_error("no generic view found for PD extraction");
    if (opt.search_views) {
        const Rational side[][3] = {
            {1, Rational(3, 7), Rational(1, 5)},      {Rational(3, 7), -1, Rational(1, 5)},
            {1, Rational(-2, 5), Rational(1, 7)},     {Rational(2, 5), 1, Rational(1, 7)},
            {1, Rational(5, 11), Rational(-1, 9)},    {Rational(-5, 11), 1, Rational(1, 9)},
            {1, 1, Rational(2, 13)},                  {1, -1, Rational(3, 17)},
            {Rational(7, 5), Rational(1, 3), 1},      {Rational(1, 3), Rational(7, 5), 1}};
        for (const auto& n : side) {
            auto pd = pd_from_view(curve, make_view(n[0], n[1], n[2]));
            if (pd && pd->size() < best->size()) best = std::move(pd);
        }
    }
    return *best;
}

}  // namespace ribbonforge
