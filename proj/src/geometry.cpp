#include "ribbonforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ribbonforge {

Vec2 to_vec(const Point& p) { return {p.x.convert_to<double>(), p.y.convert_to<double>()}; }

double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

namespace {

void check_angle(double theta, double width) {
    if (!(theta > 0 && theta < std::numbers::pi)) throw std::domain_error("fold angle must lie in (0, pi)");
    if (!(width > 0)) throw std::domain_error("width must be positive");
}

// Uniform access so the sweep below works for Point and Vec2 alike.
template <class Pt>
struct Ops;

template <>
struct Ops<Point> {
    using S = Rational;
    static S eps(const S&) { return S(0); }
    static S half(const S& a, const S& b) { return (a + b) / 2; }
    static bool exact() { return true; }
};

template <>
struct Ops<Vec2> {
    using S = double;
    static S eps(const S& scale) { return 1e-12 * std::max(1.0, scale); }
    static S half(const S& a, const S& b) { return 0.5 * (a + b); }
    static bool exact() { return false; }
};

template <class Pt, class S = typename Ops<Pt>::S>
S cross2(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

template <class S>
S abs_of(const S& v) {
    return v < 0 ? S(-v) : v;
}

}  // namespace

FoldLocalGeometry fold_local(double theta, double width) {
    check_angle(theta, width);
    FoldLocalGeometry g;
    g.theta = theta;
    g.width = width;
    g.fold_line_length = width / std::cos(theta / 2);
    g.fold_diagram_length = width / std::sin(theta);
    g.rhombus_side = width / (2 * std::sin(theta));
    g.rhombus_half_diagonal = width / (2 * std::sin(theta / 2));
    if (theta <= std::numbers::pi / 2)
        g.extended_fold_length = width / std::tan(theta / 2);
    else
        g.extended_fold_length = width * std::tan(theta / 2);
    return g;
}

std::pair<double, double> crossing_rhombus(double theta, double width) {
    check_angle(theta, width);
    return {width / std::cos(theta / 2), width / std::sin(theta / 2)};
}

std::optional<Point> exact_unit(const Point& d) {
    Rational n2 = d.x * d.x + d.y * d.y;
    if (n2 == 0) return std::nullopt;
    BigInt num = boost::multiprecision::numerator(n2);
    BigInt den = boost::multiprecision::denominator(n2);
    BigInt rn = boost::multiprecision::sqrt(num);
    BigInt rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    Rational len(rn, rd);
    return Point{d.x / len, d.y / len};
}

Segment fold_line(const Point& vertex, const Point& dir_in, const Point& dir_out, const Rational& width) {
    if (width <= 0) throw std::domain_error("width must be positive");
    auto u = exact_unit(dir_in);
    auto t = exact_unit(dir_out);
    if (!u || !t) throw std::domain_error("exact fold line needs directions of rational length");
    if (*u == *t) throw std::domain_error("no fold line where the strand goes straight on");
    Rational c = cross(*u, *t);
    Point off;
    if (c == 0) {
        // Turn-back: the fold line is perpendicular to the edge.
        off = (width / 2) * Point{-u->y, u->x};
    } else {
        Rational lambda = width / (2 * (c < 0 ? Rational(-c) : c));
        off = lambda * (*u + *t);
    }
    return {vertex - off, vertex + off};
}

SegmentF fold_line(const Vec2& vertex, const Vec2& dir_in, const Vec2& dir_out, double width) {
    if (!(width > 0)) throw std::domain_error("width must be positive");
    double nu = norm(dir_in), nt = norm(dir_out);
    if (nu == 0 || nt == 0) throw std::domain_error("zero direction");
    Vec2 u{dir_in.x / nu, dir_in.y / nu}, t{dir_out.x / nt, dir_out.y / nt};
    double c = u.x * t.y - u.y * t.x;
    double d = u.x * t.x + u.y * t.y;
    Vec2 off;
    if (d > 0 && std::abs(c) <= 1e-15) throw std::domain_error("no fold line where the strand goes straight on");
    if (d < 0 && std::abs(c) <= 1e-15) {
        off = {-u.y * width / 2, u.x * width / 2};
    } else {
        double lambda = width / (2 * std::abs(c));
        off = {lambda * (u.x + t.x), lambda * (u.y + t.y)};
    }
    return {{vertex.x - off.x, vertex.y - off.y}, {vertex.x + off.x, vertex.y + off.y}};
}

template <class Pt>
OverlapResult<Pt> overlap_degree(const std::vector<std::vector<Pt>>& faces) {
    using O = Ops<Pt>;
    using S = typename O::S;
    struct Edge {
        Pt a, b;
    };
    std::vector<Edge> edges;
    std::vector<S> xs;
    S scale(0);
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            edges.push_back({f[i], f[(i + 1) % f.size()]});
            xs.push_back(f[i].x);
            scale = std::max(scale, std::max(abs_of(f[i].x), abs_of(f[i].y)));
        }
    const S eps = O::eps(scale);

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        S lo1 = std::min(e.a.x, e.b.x), hi1 = std::max(e.a.x, e.b.x);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& f = edges[j];
            if (std::max(f.a.x, f.b.x) < lo1 || std::min(f.a.x, f.b.x) > hi1) continue;
            S dx1 = e.b.x - e.a.x, dy1 = e.b.y - e.a.y;
            S dx2 = f.b.x - f.a.x, dy2 = f.b.y - f.a.y;
            S den = dx1 * dy2 - dy1 * dx2;
            if (den == 0) continue;  // parallel: endpoints already in xs
            S t = ((f.a.x - e.a.x) * dy2 - (f.a.y - e.a.y) * dx2) / den;
            S s = ((f.a.x - e.a.x) * dy1 - (f.a.y - e.a.y) * dx1) / den;
            if (t < 0 || t > 1 || s < 0 || s > 1) continue;
            xs.push_back(e.a.x + t * dx1);
        }
    }
    std::sort(xs.begin(), xs.end());
    std::vector<S> cuts;
    for (const auto& x : xs)
        if (cuts.empty() || x - cuts.back() > eps) cuts.push_back(x);

    OverlapResult<Pt> best;
    std::vector<std::pair<S, int>> events;
    std::vector<S> ys;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        S c = O::half(cuts[k], cuts[k + 1]);
        events.clear();
        for (const auto& f : faces) {
            ys.clear();
            for (std::size_t i = 0; i < f.size(); ++i) {
                const Pt& p = f[i];
                const Pt& q = f[(i + 1) % f.size()];
                if ((p.x < c) == (q.x < c)) continue;
                ys.push_back(p.y + (c - p.x) * (q.y - p.y) / (q.x - p.x));
            }
            std::sort(ys.begin(), ys.end());
            for (std::size_t i = 0; i + 1 < ys.size(); i += 2) {
                events.push_back({ys[i], +1});
                events.push_back({ys[i + 1], -1});
            }
        }
        std::sort(events.begin(), events.end());
        int depth = 0;
        for (std::size_t i = 0; i < events.size();) {
            S y = events[i].first;
            while (i < events.size() && events[i].first == y) depth += events[i++].second;
            if (i == events.size()) break;
            S next = events[i].first;
            if (next - y > eps && depth > best.max_multiplicity) {
                best.max_multiplicity = depth;
                best.witness.x = c;
                best.witness.y = O::half(y, next);
            }
        }
    }
    return best;
}

template OverlapResult<Point> overlap_degree(const std::vector<std::vector<Point>>&);
template OverlapResult<Vec2> overlap_degree(const std::vector<std::vector<Vec2>>&);

bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly) {
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[j];
        double c = cross2(a, b, p);
        // On the boundary counts as outside.
        if (c == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
            std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
            return false;
        if ((a.y > p.y) != (b.y > p.y)) {
            double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

namespace {

template <class Pt>
bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

template <class Pt>
bool meet(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    auto sgn = [](const auto& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    int d1 = sgn(cross2(c, d, a)), d2 = sgn(cross2(c, d, b));
    int d3 = sgn(cross2(a, b, c)), d4 = sgn(cross2(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) ||
           (d3 == 0 && on_segment(c, a, b)) || (d4 == 0 && on_segment(d, a, b));
}

template <class Pt>
bool endpoint_contact(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    if (!meet(a, b, c, d)) return false;
    const Pt* shared = nullptr;
    const Pt* other1 = nullptr;
    const Pt* other2 = nullptr;
    if (a == c) shared = &a, other1 = &b, other2 = &d;
    else if (a == d) shared = &a, other1 = &b, other2 = &c;
    else if (b == c) shared = &b, other1 = &a, other2 = &d;
    else if (b == d) shared = &b, other1 = &a, other2 = &c;
    if (!shared) return false;
    if (cross2(*shared, *other1, *other2) != 0) return true;
    // Collinear: they overlap unless they leave the shared point in opposite directions.
    auto dx1 = other1->x - shared->x, dy1 = other1->y - shared->y;
    auto dx2 = other2->x - shared->x, dy2 = other2->y - shared->y;
    return dx1 * dx2 + dy1 * dy2 < 0;
}

}  // namespace

bool segments_meet(const Segment& a, const Segment& b) { return meet(a.a, a.b, b.a, b.b); }
bool segments_meet(const SegmentF& a, const SegmentF& b) { return meet(a.a, a.b, b.a, b.b); }
bool segments_touch_at_endpoint(const Segment& a, const Segment& b) { return endpoint_contact(a.a, a.b, b.a, b.b); }
bool segments_touch_at_endpoint(const SegmentF& a, const SegmentF& b) {
    return endpoint_contact(a.a, a.b, b.a, b.b);
}

}  // namespace ribbonforge
