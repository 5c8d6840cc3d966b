// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "oracles.hpp"
#include "ribbonforge/bounds.hpp"
#include "ribbonforge/families.hpp"
#include "ribbonforge/invariants.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

using namespace ribbonforge;

namespace {

constexpr double pi = std::numbers::pi;

struct Check {
    std::ostringstream failures;
    int count = 0;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (count++ < 4) failures << (count > 1 ? "; " : "") << what;
    }
};

ExactLength L(int n) { return ExactLength(Rational(n)); }

std::vector<int> torus_word(int p, int q) {
    std::vector<int> word;
    for (int k = 0; k < p; ++k)
        for (int i = 1; i < q; ++i) word.push_back(i);
    return word;
}

LaurentPoly jones_of(const ConstructionResult& c) { return jones(extract_pd(c.diagram(), {true})); }

std::vector<ConstructionResult> headline_instances() {
    std::vector<ConstructionResult> out{gen_torus_pq(3, 2), gen_twist(2), gen_pretzel(3, 3, 3)};
    for (int p : {3, 5, 7, 9}) out.push_back(gen_torus_2p(p));
    for (auto a : std::vector<std::vector<int>>{{3}, {2, 1, 1}, {3, 2, 2}}) out.push_back(gen_two_bridge(a).step1);
    return out;
}

void headline(Check& c) {
    ConstructionResult t32 = gen_torus_pq(3, 2);
    c.expect(ribbonlength(t32.diagram(), Rational(1)) == L(5), "T(3,2) length");
    c.expect(stick_count(t32.diagram()) == 10, "T(3,2) sticks");
    for (int p : {3, 5, 7, 9}) {
        ConstructionResult t = gen_torus_2p(p);
        c.expect(ribbonlength(t.diagram(), Rational(1)) == L(2 * p), "T(2," + std::to_string(p) + ") length");
        c.expect(stick_count(t.diagram()) == 2 * p + 2, "T(2," + std::to_string(p) + ") sticks");
    }
    c.expect(ribbonlength(gen_twist(2).diagram(), Rational(1)) == L(10), "figure-eight length");
    c.expect(ribbonlength(gen_pretzel(3, 3, 3).diagram(), Rational(1)) == L(20), "P(3,3,3) length");
    for (auto a : std::vector<std::vector<int>>{{3}, {2, 1, 1}, {3, 2, 2}}) {
        int cr = std::accumulate(a.begin(), a.end(), 0);
        TwoBridgeResult t = gen_two_bridge(a);
        c.expect(ribbonlength(t.step1.diagram(), Rational(1)) == L(8 * cr), "two-bridge step 1");
        c.expect(t.step2_planar_length == 6 * cr - 2, "two-bridge step 2");
    }
}

void torus_sweep(Check& c) {
    for (int q = 2; q <= 6; ++q)
        for (int p = q; p <= 6; ++p) {
            ConstructionResult t = gen_torus_pq(p, q);
            std::string tag = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
            c.expect(ribbonlength(t.diagram(), Rational(1)) == L(p + q), tag + " length");
            c.expect(stick_count(t.diagram()) == 2 * p + 2 * q, tag + " sticks");
            c.expect(component_count(extract_pd(t.diagram(), {true})) == std::gcd(p, q), tag + " components");
        }
}

void certification(Check& c) {
    auto torus = [](int p, int q) { return jones(braid_closure_pd(torus_word(p, q), q)); };
    for (int p : {3, 5, 7}) c.expect(jones_of(gen_torus_2p(p)) == torus(p, 2), "T(2," + std::to_string(p) + ")");
    c.expect(jones_of(gen_torus_pq(3, 2)) == torus(2, 3), "T(3,2) vs T(2,3) braid");
    c.expect(jones_of(gen_torus_pq(3, 2)) == jones_of(gen_torus_2p(3)), "T(3,2) vs torus2p:3");
    c.expect(jones_of(gen_torus_pq(4, 3)) == torus(4, 3), "T(4,3)");
    c.expect(jones_of(gen_torus_pq(5, 2)) == torus(5, 2), "T(5,2)");
    LaurentPoly f8 = jones_of(gen_twist(2));
    c.expect(is_palindromic(f8), "figure-eight palindromic");
    c.expect(jones_of(gen_two_bridge({2, 1, 1}).step1) == f8, "[2,1,1] vs figure-eight");
}

void fold_geometry(Check& c) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> th(0, pi), wd(0, 10);
    for (int i = 0; i < 1000; ++i) {
        double theta = th(rng), w = wd(rng);
        if (theta == 0 || w == 0) continue;
        auto g = fold_local(theta, w);
        auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
        c.expect(near(g.fold_line_length, w / std::cos(theta / 2)), "fold line length");
        c.expect(near(g.fold_diagram_length, w / std::sin(theta)), "fold diagram length");
        c.expect(near(g.rhombus_side, w / (2 * std::sin(theta))), "rhombus side");
        c.expect(near(g.rhombus_half_diagonal, w / (2 * std::sin(theta / 2))), "rhombus half diagonal");
        double ext = theta <= pi / 2 ? w / std::tan(theta / 2) : w * std::tan(theta / 2);
        c.expect(near(g.extended_fold_length, ext), "extended fold length");
        SegmentF s = fold_line({0, 0}, {1, 0}, {-std::cos(theta), std::sin(theta)}, w);
        c.expect(near(std::hypot(s.a.x - s.b.x, s.a.y - s.b.y), g.fold_line_length), "fold line endpoints");
    }
    for (double w : {0.5, 1.0, 3.0}) {
        double below = fold_local(pi / 2 - 1e-13, w).extended_fold_length;
        double above = fold_local(pi / 2 + 1e-13, w).extended_fold_length;
        c.expect(std::abs(below - above) <= 1e-12 * w && std::abs(below - w) <= 1e-12 * w, "branches at pi/2");
        double at = fold_local(pi / 2, w).fold_diagram_length;
        for (int k = 1; k < 2000; ++k) {
            double theta = pi * k / 2000;
            c.expect(fold_local(theta, w).fold_diagram_length >= at - 1e-15 * w, "minimum away from pi/2");
        }
    }
}

void max_width(Check& c) {
    KnotDiagram pent = oracle::regular_polygon(5);
    WidthSearch s = max_allowed_width(pent, derive_folding(pent));
    std::ostringstream msg;
    msg.precision(10);
    c.expect(std::abs(s.w_star - std::tan(pi / 5)) <= 1e-6, "pentagon w*");
    c.expect(std::abs(diagram_length_approx(pent) / s.w_star - 5 / std::tan(pi / 5)) <= 1e-5, "pentagon length");
    KnotDiagram sq = KnotDiagram::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    WidthSearch q = max_allowed_width(sq, derive_folding(sq));
    msg << "square w* = " << q.w_star << ", wanted 0.5";
    c.expect(std::abs(q.w_star - 0.5) <= 1e-6, msg.str());
}

void allowed(Check& c) {
    std::vector<ConstructionResult> all = headline_instances();
    for (int q = 2; q <= 6; ++q)
        for (int p = q; p <= 6; ++p) all.push_back(gen_torus_pq(p, q));
    for (const auto& r : all) c.expect(check_allowed(r.ribbon).verdict, r.spec.str() + " not allowed");
    for (int n : {3, 4, 5, 6}) {
        KnotDiagram d = oracle::regular_polygon(n);
        FoldingInfo f = derive_folding(d);
        double w = 0.9 * max_allowed_width(d, f).w_star;
        AllowedReport rep = check_allowed(build_ribbon(d, w, f));
        c.expect(rep.verdict && rep.max_overlap_degree <= 2, std::to_string(n) + "-gon at 0.9 w*");
    }
}

void topology(Check& c, int& grid) {
    for (int q = 2; q <= 6; ++q)
        for (int p = q; p <= 6; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ConstructionResult t = gen_torus_pq(p, q);
            c.expect(ribbon_topology(t.diagram(), derive_folding(t.diagram())) == Topology::annulus, t.spec.str());
        }
    for (int p = -5; p <= 5; ++p)
        for (int q = -5; q <= 5; ++q)
            for (int r = -5; r <= 5; ++r) {
                if (p == 0 || q == 0 || r == 0) continue;
                ConstructionResult k = gen_pretzel(p, q, r);
                if (k.pretzel_case == 0) continue;
                ++grid;
                Topology want = k.pretzel_case == 3 || k.pretzel_case == 4 ? Topology::moebius : Topology::annulus;
                c.expect(ribbon_topology(k.diagram(), derive_folding(k.diagram())) == want,
                         k.spec.str() + " case " + std::to_string(k.pretzel_case));
            }
}

void bounds(Check& c) {
    for (const BoundRecord& r : comparison_table(50))
        if (r.claimed) c.expect(r.holds, r.family + " " + r.params + " vs " + r.prior.source);
    for (int n = 1; n <= 30; ++n) {
        bool smaller = to_float(construction_bound(parse_family("twist:" + std::to_string(n)))) < tian_twist_bound(n);
        c.expect(smaller == (n <= 8), "twist crossover at n=" + std::to_string(n));
    }
    for (int q = 2; q <= 50; ++q)
        for (int p = q; p <= 50; ++p) {
            SublinearCoeff s = sublinear_coeff(p, q);
            c.expect(s.a * q + s.b == p && std::abs(s.c - 2 * std::numbers::sqrt2 * (s.a + s.b / 2.0)) < 1e-12,
                     "coefficient decomposition");
            c.expect(p + q <= s.c * std::sqrt(double(p) * (q - 1)) + 1e-9, "sublinear inequality");
            if (p == 2 * q + 1) c.expect(std::abs(s.c - 5 * std::numbers::sqrt2) < 1e-12, "(2q+1,q) coefficient");
        }
}

void oracles(Check& c, int& corpus) {
    std::vector<PDCode> pds;
    for (int p : {3, 5, 7, 9}) pds.push_back(braid_closure_pd(torus_word(p, 2), 2));
    pds.push_back(braid_closure_pd(torus_word(4, 3), 3));
    pds.push_back(braid_closure_pd(torus_word(3, 4), 4));
    pds.push_back(braid_closure_pd({1, -2, 1, -2}, 3));
    pds.push_back(braid_closure_pd({1, 1, -2, 1, 3, -2, 3}, 4));
    for (auto v : std::vector<std::array<int, 3>>{{1, 1, 1}, {3, 3, 3}, {1, -2, 3}, {-1, 3, 5}, {2, 2, -2}})
        pds.push_back(pretzel_reference_pd(v[0], v[1], v[2]));
    for (auto a : std::vector<std::vector<int>>{{3}, {2, 1, 1}, {3, 2, 2}, {5}, {2, 3, 1}}) pds.push_back(four_plat_pd(a));
    for (const char* s : {"torus:3,2", "torus:4,2", "torus:5,2", "torus:4,3", "torus2p:5", "twist:1", "twist:2",
                          "twist:3", "pretzel:1,1,1", "pretzel:3,-2,1", "pretzel:1,2,1", "twobridge:2,1,1"})
        pds.push_back(extract_pd(generate(parse_family(s)).diagram(), {true}));
    for (const PDCode& pd : pds) {
        if (pd.crossings.size() > 10) continue;
        ++corpus;
        c.expect(kauffman_bracket(pd) == kauffman_bracket_naive(pd), to_text(pd));
    }

    using Big = boost::multiprecision::cpp_bin_float_100;
    const Big root2 = boost::multiprecision::sqrt(Big(2));
    auto value = [&](const ExactLength& x) {
        auto q = [](const Rational& r) {
            return Big(boost::multiprecision::numerator(r).str()) / Big(boost::multiprecision::denominator(r).str());
        };
        return q(x.r()) + q(x.s()) * root2;
    };
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-5000, 5000), den(1, 997);
    for (int i = 0; i < 10000; ++i) {
        ExactLength a{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        ExactLength b = i % 3 ? ExactLength{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))} : a;
        Big gap = value(a) - value(b);
        auto want = gap == 0 ? std::strong_ordering::equal
                    : gap < 0 ? std::strong_ordering::less
                              : std::strong_ordering::greater;
        c.expect(exact_cmp(a, b) == want, a.str() + " vs " + b.str());
    }
}

}  // namespace

int main() {
    int grid = 0, corpus = 0;
    struct Criterion {
        int id;
        std::string name;
        double budget_s;
        std::function<void(Check&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "headline values at w=1", 1, headline},
        {2, "torus sweep 2<=q<=p<=6", 5, torus_sweep},
        {3, "knot-type certification", 30, certification},
        {4, "fold-geometry identities", 1, fold_geometry},
        {5, "max-width search", 10, max_width},
        {6, "allowed-ribbon validation", 10, allowed},
        {7, "topology parity", 1, [&](Check& c) { topology(c, grid); }},
        {8, "bounds engine", 1, bounds},
        {9, "oracle equivalence", 30, [&](Check& c) { oracles(c, corpus); }},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(secs <= cr.budget_s, "took " + std::to_string(secs) + " s");
        bool ok = c.count == 0;
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << secs << " s)";
        if (cr.id == 7) std::cout << " [" << grid << " pretzel knots]";
        if (cr.id == 9) std::cout << " [" << corpus << " PD codes]";
        if (!ok) std::cout << " -- " << c.count << " failure(s): " << c.failures.str();
        std::cout << '\n';
    }
    return failed == 0 ? 0 : 1;
}
