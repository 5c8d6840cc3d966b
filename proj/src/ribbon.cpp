#include "ribbonforge/ribbon.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

std::string to_string(FaceKind k) {
    return k == FaceKind::trapezoid ? "trapezoid" : "fold-triangle";
}

namespace {

struct NotExact {};

Point unit_of(const Point& d) {
    auto u = exact_unit(d);
    if (!u) throw NotExact{};
    return *u;
}
Vec2 unit_of(const Vec2& d) {
    double n = norm(d);
    return {d.x / n, d.y / n};
}

Point add(const Point& a, const Point& b) { return a + b; }
Vec2 add(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Point sub(const Point& a, const Point& b) { return a - b; }
Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Point scale(const Rational& k, const Point& a) { return k * a; }
Vec2 scale(double k, const Vec2& a) { return {k * a.x, k * a.y}; }

template <class Pt>
auto dot2(const Pt& a, const Pt& b) {
    return a.x * b.x + a.y * b.y;
}
template <class Pt>
auto cross2(const Pt& a, const Pt& b) {
    return a.x * b.y - a.y * b.x;
}

template <class Pt>
Pt conv(const Point& p);
template <>
Point conv<Point>(const Point& p) {
    return p;
}
template <>
Vec2 conv<Vec2>(const Point& p) {
    return to_vec(p);
}

std::pair<Point, Point> fold_ends(const Point& v, const Point& u, const Point& t, const Rational& w) {
    Segment s = fold_line(v, u, t, w);
    return {s.a, s.b};
}
std::pair<Vec2, Vec2> fold_ends(const Vec2& v, const Vec2& u, const Vec2& t, double w) {
    SegmentF s = fold_line(v, u, t, w);
    return {s.a, s.b};
}

template <class Pt, class S>
std::vector<std::pair<std::vector<Pt>, RibbonFace>> build_faces(const KnotDiagram& d, const S& w) {
    std::vector<std::pair<std::vector<Pt>, RibbonFace>> out;
    const S half = w / 2;
    for (std::size_t si = 0; si < d.strands.size(); ++si) {
        const Strand& s = d.strands[si];
        const std::size_t n = s.size();
        auto dir = [&](std::size_t e) { return unit_of(conv<Pt>(s.edge_vector(e % n))); };
        for (std::size_t i = 0; i < n; ++i) {
            Pt a = conv<Pt>(s.vertex(i));
            Pt b = conv<Pt>(s.vertex(i + 1));
            Pt t = dir(i);
            Pt nrm{-t.y, t.x};
            auto cut = [&](const Pt& v, std::size_t vi, const Pt& u, const Pt& tout) {
                std::pair<Pt, Pt> ends = is_fold_vertex(s, vi % n)
                                             ? fold_ends(v, u, tout, w)
                                             : std::pair<Pt, Pt>{sub(v, scale(half, nrm)), add(v, scale(half, nrm))};
                // (left, right) relative to this edge's direction.
                if (cross2(t, sub(ends.first, a)) > 0) return ends;
                return std::pair<Pt, Pt>{ends.second, ends.first};
            };
            auto [sl, sr] = cut(a, i, dir(i + n - 1), t);
            auto [el, er] = cut(b, i + 1, t, dir(i + 1));
            auto param = [&](const Pt& p) { return S(dot2(sub(p, a), t)); };
            auto at = [&](const S& k, int side) {
                return add(add(a, scale(k, t)), scale(side > 0 ? S(half) : S(-half), nrm));
            };
            S p_sl = param(sl), p_sr = param(sr), p_el = param(el), p_er = param(er);
            S s1 = std::max(p_sl, p_sr), s2 = std::min(p_el, p_er);

            RibbonFace meta;
            meta.layer = s.layers[i];
            meta.strand = si;
            meta.edge = i;
            if (!(s1 < s2)) {
                out.push_back({{sr, er, el, sl}, meta});
                continue;
            }
            if (p_sl != p_sr) {
                RibbonFace f = meta;
                f.kind = FaceKind::fold_triangle;
                f.vertex = i;
                if (p_sl < p_sr) out.push_back({{sr, at(s1, +1), sl}, f});
                else out.push_back({{sl, sr, at(s1, -1)}, f});
            }
            out.push_back({{at(s1, -1), at(s2, -1), at(s2, +1), at(s1, +1)}, meta});
            if (p_el != p_er) {
                RibbonFace f = meta;
                f.kind = FaceKind::fold_triangle;
                f.vertex = (i + 1) % n;
                if (p_el > p_er) out.push_back({{er, el, at(s2, +1)}, f});
                else out.push_back({{at(s2, -1), er, el}, f});
            }
        }
    }
    return out;
}

template <class Pt, class S>
std::vector<FoldLineRecord> build_fold_lines(const KnotDiagram& d, const S& w) {
    std::vector<FoldLineRecord> out;
    for (std::size_t si = 0; si < d.strands.size(); ++si) {
        const Strand& s = d.strands[si];
        const std::size_t n = s.size();
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_fold_vertex(s, j)) continue;
            FoldLineRecord rec;
            rec.strand = si;
            rec.vertex = j;
            rec.layer_in = s.layers[(j + n - 1) % n];
            rec.layer_out = s.layers[j];
            auto ends = fold_ends(conv<Pt>(s.vertex(j)), conv<Pt>(s.edge_vector((j + n - 1) % n)),
                                  conv<Pt>(s.edge_vector(j)), w);
            if constexpr (std::is_same_v<Pt, Point>) {
                rec.exact = Segment{ends.first, ends.second};
                rec.line = {to_vec(ends.first), to_vec(ends.second)};
            } else {
                rec.line = {ends.first, ends.second};
            }
            out.push_back(rec);
        }
    }
    return out;
}

void fill_double(FoldedRibbon& r, double w) {
    for (auto& [poly, meta] : build_faces<Vec2>(r.diagram, w)) {
        meta.polygon = poly;
        r.faces.push_back(meta);
    }
    r.fold_lines = build_fold_lines<Vec2>(r.diagram, w);
}

}  // namespace

FoldedRibbon build_ribbon(const KnotDiagram& d, const Rational& w, const FoldingInfo& f) {
    if (w <= 0) throw std::domain_error("width must be positive");
    validate(d);
    FoldedRibbon r;
    r.diagram = d;
    r.width = w.convert_to<double>();
    r.folding = f;
    try {
        auto faces = build_faces<Point>(d, w);
        for (auto& [poly, meta] : faces) {
            meta.exact = poly;
            for (const auto& p : poly) meta.polygon.push_back(to_vec(p));
            r.faces.push_back(meta);
        }
        r.fold_lines = build_fold_lines<Point>(d, w);
        r.exact_width = w;
    } catch (const NotExact&) {
        r.faces.clear();
        fill_double(r, r.width);
    }
    return r;
}

FoldedRibbon build_ribbon(const KnotDiagram& d, double w, const FoldingInfo& f) {
    if (!(w > 0)) throw std::domain_error("width must be positive");
    validate(d);
    FoldedRibbon r;
    r.diagram = d;
    r.width = w;
    r.folding = f;
    fill_double(r, w);
    return r;
}

namespace {

bool share_layer(const FoldLineRecord& a, const FoldLineRecord& b) {
    return a.layer_in == b.layer_in || a.layer_in == b.layer_out || a.layer_out == b.layer_in ||
           a.layer_out == b.layer_out;
}

Vec2 midpoint(const SegmentF& s) { return {(s.a.x + s.b.x) / 2, (s.a.y + s.b.y) / 2}; }

// Geometric part of the check: fold lines and overlap degree.
void check_geometry(const FoldedRibbon& r, bool regular, AllowedReport& rep) {
    const auto& fl = r.fold_lines;
    for (std::size_t i = 0; i < fl.size(); ++i)
        for (std::size_t j = i + 1; j < fl.size(); ++j) {
            if (!regular && !share_layer(fl[i], fl[j])) continue;
            bool meet = fl[i].exact && fl[j].exact ? segments_meet(*fl[i].exact, *fl[j].exact)
                                                   : segments_meet(fl[i].line, fl[j].line);
            if (!meet) continue;
            bool touch = fl[i].exact && fl[j].exact ? segments_touch_at_endpoint(*fl[i].exact, *fl[j].exact)
                                                    : segments_touch_at_endpoint(fl[i].line, fl[j].line);
            if (touch) {
                ++rep.fold_line_touches;
                continue;
            }
            if (rep.fold_lines_disjoint) {
                std::ostringstream os;
                os << "fold lines at strand " << fl[i].strand << " vertex " << fl[i].vertex << " and strand "
                   << fl[j].strand << " vertex " << fl[j].vertex << " meet";
                rep.witnesses.push_back({"fold_lines_disjoint", midpoint(fl[i].line), os.str()});
            }
            rep.fold_lines_disjoint = false;
        }
    if (r.exact()) {
        std::vector<std::vector<Point>> polys;
        for (const auto& f : r.faces) polys.push_back(f.exact);
        auto res = overlap_degree(polys);
        rep.max_overlap_degree = res.max_multiplicity;
        if (res.max_multiplicity > 2)
            rep.witnesses.push_back({"overlap", to_vec(res.witness), "point covered " + std::to_string(res.max_multiplicity) + " times"});
    } else {
        std::vector<std::vector<Vec2>> polys;
        for (const auto& f : r.faces) polys.push_back(f.polygon);
        auto res = overlap_degree(polys);
        rep.max_overlap_degree = res.max_multiplicity;
        if (res.max_multiplicity > 2)
            rep.witnesses.push_back({"overlap", res.witness, "point covered " + std::to_string(res.max_multiplicity) + " times"});
    }
    rep.overlap_ok = !regular || rep.max_overlap_degree <= 2;
}

void check_layers(const FoldedRibbon& r, AllowedReport& rep) {
    if (auto c = layer_conflict(r.diagram)) {
        rep.layer_consistent = false;
        rep.witnesses.push_back({"layer_consistent", {}, *c});
    } else if (auto c2 = spatial_collision(r.diagram)) {
        rep.layer_consistent = false;
        rep.witnesses.push_back({"layer_consistent", {}, *c2});
    }
    if (auto m = folding_mismatch(r.diagram, r.folding)) {
        rep.folding_matches = false;
        rep.witnesses.push_back({"folding_matches", {}, *m});
    }
}

}  // namespace

AllowedReport check_allowed(const FoldedRibbon& r) {
    AllowedReport rep;
    rep.regular = is_regular(r.diagram);
    check_geometry(r, rep.regular, rep);
    check_layers(r, rep);
    rep.verdict = rep.fold_lines_disjoint && rep.overlap_ok && rep.layer_consistent && rep.folding_matches;
    return rep;
}

WidthSearch max_allowed_width(const KnotDiagram& d, const FoldingInfo& f, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    validate(d);
    bool regular = is_regular(d);
    {
        AllowedReport layers;
        FoldedRibbon probe;
        probe.diagram = d;
        probe.folding = f;
        check_layers(probe, layers);
        if (!layers.layer_consistent || !layers.folding_matches)
            throw std::runtime_error("layer or folding data inconsistent: " + layers.witnesses.front().detail);
    }
    WidthSearch out;
    auto feasible = [&](double w) {
        AllowedReport rep;
        check_geometry(build_ribbon(d, w, f), regular, rep);
        bool ok = rep.fold_lines_disjoint && rep.overlap_ok;
        out.trace.push_back({w, ok});
        return ok;
    };
    double feature = diagram_length_approx(d);
    for (const auto& s : d.strands)
        for (std::size_t i = 0; i < s.size(); ++i) feature = std::min(feature, norm(to_vec(s.edge_vector(i))));
    double lo = 0, hi = feature;
    if (feasible(hi)) {
        int k = 0;
        for (lo = hi; k < 60; ++k, lo = hi)
            if (!feasible(hi = 2 * lo)) break;
        if (k == 60) throw std::runtime_error("width search found no upper bound");
    } else {
        double w = hi / 2;
        for (int k = 0; k < 60 && lo == 0; ++k, w /= 2)
            if (feasible(w)) lo = w;
            else hi = w;
        if (lo == 0) throw std::runtime_error("no feasible width below the minimum feature size");
    }
    while (hi - lo > tol * lo / 2) {
        double mid = (lo + hi) / 2;
        if (feasible(mid)) lo = mid;
        else hi = mid;
    }
    out.w_star = (lo + hi) / 2;
    return out;
}

}  // namespace ribbonforge
