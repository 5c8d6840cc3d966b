#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ribbonforge/geometry.hpp"
#include "ribbonforge/ribbon.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace ribbonforge;
using std::numbers::pi;

namespace {

Point P(Rational x, Rational y) { return {x, y}; }

double dist(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Solve a1 x + b1 y = c1, a2 x + b2 y = c2.
Vec2 solve(double a1, double b1, double c1, double a2, double b2, double c2) {
    double det = a1 * b2 - a2 * b1;
    return {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

}  // namespace

TEST(FoldLocal, QuarterTurn) {
    auto g = fold_local(pi / 2, 1);
    EXPECT_NEAR(g.fold_diagram_length, 1, 1e-15);
    EXPECT_NEAR(g.fold_line_length, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(g.extended_fold_length, 1, 1e-15);
}

TEST(FoldLocal, CentrelineInsideFoldMatchesConstruction) {
    // Incoming along +x into the origin, turning by pi - theta. The inner
    // ribbon corner is where the two inner boundary lines meet; writing it as
    // a*t - b*u gives the centreline lengths covered by the fold.
    for (double theta : {pi / 3, pi / 2, 2.0, 0.4}) {
        double w = 2;
        Vec2 u{1, 0}, t{-std::cos(theta), std::sin(theta)};
        // Inner normals point toward the turn (left for a left turn).
        Vec2 nu{0, 1}, nt{-t.y, t.x};
        Vec2 q = solve(nu.x, nu.y, w / 2, nt.x, nt.y, w / 2);
        // q = a t - b u
        Vec2 ab = solve(t.x, -u.x, q.x, t.y, -u.y, q.y);
        EXPECT_NEAR(ab.x + ab.y, fold_local(theta, w).fold_diagram_length, 1e-12) << theta;
        EXPECT_NEAR(ab.x, fold_local(theta, w).rhombus_side, 1e-12);
    }
    EXPECT_NEAR(fold_local(pi / 3, 2).fold_diagram_length, 4 / std::sqrt(3.0), 1e-12);
}

TEST(FoldLocal, RandomIdentities) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> th(0, pi), wd(0, 10);
    for (int i = 0; i < 1000; ++i) {
        double theta = th(rng), w = wd(rng);
        if (theta == 0 || w == 0) continue;
        auto g = fold_local(theta, w);
        EXPECT_NEAR(g.fold_line_length, w / std::cos(theta / 2), 1e-12 * g.fold_line_length);
        EXPECT_NEAR(g.rhombus_side, w / (2 * std::sin(theta)), 1e-12 * g.rhombus_side);
        EXPECT_NEAR(g.rhombus_half_diagonal, w / (2 * std::sin(theta / 2)), 1e-12 * g.rhombus_half_diagonal);
        EXPECT_GE(g.fold_diagram_length, w * (1 - 1e-15));
        SegmentF s = fold_line({0, 0}, {1, 0}, {-std::cos(theta), std::sin(theta)}, w);
        EXPECT_NEAR(dist(s.a, s.b), g.fold_line_length, 1e-12 * std::max(1.0, g.fold_line_length));
        for (double c : {2.0, 3.0, 0.5}) {
            auto h = fold_local(theta, c * w);
            EXPECT_NEAR(h.extended_fold_length, c * g.extended_fold_length, 1e-12 * h.extended_fold_length);
        }
    }
    auto below = fold_local(pi / 2 - 1e-13, 1), above = fold_local(pi / 2 + 1e-13, 1);
    EXPECT_NEAR(below.extended_fold_length, above.extended_fold_length, 1e-12);
    EXPECT_EQ(fold_local(pi / 2, 1).fold_diagram_length, 1.0);
}

TEST(FoldLocal, RejectsBadInput) {
    EXPECT_THROW(fold_local(0, 1), std::domain_error);
    EXPECT_THROW(fold_local(pi, 1), std::domain_error);
    EXPECT_THROW(fold_local(1, 0), std::domain_error);
    EXPECT_THROW(crossing_rhombus(1, -1), std::domain_error);
}

TEST(CrossingRhombus, DiagonalsFromOffsetLines) {
    auto sq = crossing_rhombus(pi / 2, 1);
    EXPECT_NEAR(sq.first, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(sq.second, std::sqrt(2.0), 1e-15);
    auto big = crossing_rhombus(pi / 2, 3);
    EXPECT_NEAR(big.first, 3 * std::sqrt(2.0), 1e-14);
    for (double theta : {pi / 3, 1.0, 2.5}) {
        double w = 1;
        // Strip 1: |y| <= w/2. Strip 2 along (cos, sin): |-sin x + cos y| <= w/2.
        double s = std::sin(theta), c = std::cos(theta);
        Vec2 corner[4];
        int k = 0;
        for (int i : {1, -1})
            for (int j : {1, -1}) corner[k++] = solve(0, 1, i * w / 2, -s, c, j * w / 2);
        double d1 = dist(corner[0], corner[3]), d2 = dist(corner[1], corner[2]);
        auto r = crossing_rhombus(theta, w);
        EXPECT_NEAR(std::max(d1, d2), std::max(r.first, r.second), 1e-12);
        EXPECT_NEAR(std::min(d1, d2), std::min(r.first, r.second), 1e-12);
    }
    auto third = crossing_rhombus(pi / 3, 1);
    EXPECT_NEAR(third.first, 2 / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(third.second, 2, 1e-12);
}

TEST(FoldLine, ExactQuarterTurn) {
    Segment s = fold_line(P(0, 0), P(1, 0), P(0, 1), Rational(1));
    EXPECT_EQ(s.a, P(Rational(-1, 2), Rational(-1, 2)));
    EXPECT_EQ(s.b, P(Rational(1, 2), Rational(1, 2)));
    Segment t = fold_line(P(2, 3), P(5, 0), P(0, 7), Rational(2));
    EXPECT_EQ(t.a, P(1, 2));
    EXPECT_EQ(t.b, P(3, 4));
}

TEST(FoldLine, TurnBackIsPerpendicular) {
    Segment s = fold_line(P(0, 0), P(1, 0), P(-1, 0), Rational(1));
    EXPECT_EQ(s.a.x, 0);
    EXPECT_EQ(s.b.x, 0);
    EXPECT_EQ(abs(s.b.y - s.a.y), 1);
}

TEST(FoldLine, RationalDirections) {
    // (3,4) has length 5, so the exact path applies.
    Segment s = fold_line(P(0, 0), P(3, 4), P(-3, 4), Rational(1));
    SegmentF f = fold_line({0, 0}, {3, 4}, {-3, 4}, 1.0);
    EXPECT_NEAR(to_vec(s.a).x, f.a.x, 1e-15);
    EXPECT_NEAR(to_vec(s.b).y, f.b.y, 1e-15);
    EXPECT_THROW(fold_line(P(0, 0), P(1, 1), P(0, 1), Rational(1)), std::domain_error);
    EXPECT_THROW(fold_line(P(0, 0), P(1, 0), P(2, 0), Rational(1)), std::domain_error);
    EXPECT_THROW(fold_line({0, 0}, {1, 0}, {2, 0}, 1.0), std::domain_error);
}

TEST(Overlap, SquaresExactAndFloat) {
    std::vector<std::vector<Point>> disjoint{{P(0, 0), P(1, 0), P(1, 1), P(0, 1)},
                                             {P(2, 0), P(3, 0), P(3, 1), P(2, 1)}};
    EXPECT_EQ(overlap_degree(disjoint).max_multiplicity, 1);
    std::vector<std::vector<Point>> quarter{{P(0, 0), P(1, 0), P(1, 1), P(0, 1)},
                                            {P(Rational(1, 2), Rational(1, 2)), P(Rational(3, 2), Rational(1, 2)),
                                             P(Rational(3, 2), Rational(3, 2)), P(Rational(1, 2), Rational(3, 2))}};
    auto r = overlap_degree(quarter);
    EXPECT_EQ(r.max_multiplicity, 2);
    EXPECT_GT(r.witness.x, Rational(1, 2));
    EXPECT_LT(r.witness.x, 1);
    EXPECT_GT(r.witness.y, Rational(1, 2));
    EXPECT_LT(r.witness.y, 1);
    // Sharing an edge only is not an overlap.
    std::vector<std::vector<Point>> touching{{P(0, 0), P(1, 0), P(1, 1), P(0, 1)},
                                             {P(1, 0), P(2, 0), P(2, 1), P(1, 1)}};
    EXPECT_EQ(overlap_degree(touching).max_multiplicity, 1);
    std::vector<std::vector<Vec2>> f;
    for (const auto& poly : quarter) {
        f.emplace_back();
        for (const auto& p : poly) f.back().push_back(to_vec(p));
    }
    EXPECT_EQ(overlap_degree(f).max_multiplicity, 2);
}

TEST(Overlap, TriangleFan) {
    // Three triangles sharing a corner region.
    std::vector<std::vector<Point>> fan{{P(0, 0), P(4, 0), P(0, 4)},
                                        {P(1, 1), P(5, 1), P(1, 5)},
                                        {P(-1, 2), P(3, -2), P(3, 2)}};
    EXPECT_EQ(overlap_degree(fan).max_multiplicity, 3);
}

TEST(Overlap, PentagonRibbonAgreesWithSampling) {
    KnotDiagram pent = oracle::regular_polygon(5);
    for (double w : {0.3, 0.7, 1.0}) {
        FoldedRibbon r = build_ribbon(pent, w, derive_folding(pent));
        std::vector<std::vector<Vec2>> polys;
        for (const auto& f : r.faces) polys.push_back(f.polygon);
        EXPECT_EQ(overlap_degree(polys).max_multiplicity, oracle::sampled_overlap(r)) << w;
    }
}

TEST(MaxWidth, RegularPentagon) {
    KnotDiagram pent = oracle::regular_polygon(5);
    WidthSearch s = max_allowed_width(pent, derive_folding(pent));
    EXPECT_NEAR(s.w_star, std::tan(pi / 5), 1e-6);
    EXPECT_NEAR(diagram_length_approx(pent) / s.w_star, 5 / std::tan(pi / 5), 1e-5);
    EXPECT_FALSE(s.trace.empty());
}

TEST(MaxWidth, EquilateralTriangleGivesThreeRootThree) {
    KnotDiagram tri = oracle::regular_polygon(3);
    WidthSearch s = max_allowed_width(tri, derive_folding(tri));
    EXPECT_NEAR(diagram_length_approx(tri) / s.w_star, 3 * std::sqrt(3.0), 1e-5);
    FoldedRibbon below = build_ribbon(tri, 0.98 * s.w_star, derive_folding(tri));
    FoldedRibbon above = build_ribbon(tri, 1.02 * s.w_star, derive_folding(tri));
    EXPECT_LE(oracle::sampled_overlap(below), 2);
    EXPECT_GE(oracle::sampled_overlap(above), 3);
}

TEST(MaxWidth, UnitSquareMatchesSamplingOracle) {
    KnotDiagram sq = KnotDiagram::polygon({P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
    WidthSearch s = max_allowed_width(sq, derive_folding(sq));
    FoldedRibbon below = build_ribbon(sq, 0.98 * s.w_star, derive_folding(sq));
    FoldedRibbon above = build_ribbon(sq, 1.02 * s.w_star, derive_folding(sq));
    EXPECT_LE(oracle::sampled_overlap(below), 2);
    EXPECT_GE(oracle::sampled_overlap(above), 3);
    // Opposite fold lines meet in the centre exactly at w = 1.
    EXPECT_NEAR(s.w_star, 1.0, 1e-6);
}

TEST(MaxWidth, MonotoneBelowOptimum) {
    for (int n : {3, 4, 5, 6}) {
        KnotDiagram d = oracle::regular_polygon(n);
        FoldingInfo f = derive_folding(d);
        double w_star = max_allowed_width(d, f).w_star;
        for (int k = 1; k <= 10; ++k) {
            auto rep = check_allowed(build_ribbon(d, w_star * k / 10.5, f));
            EXPECT_TRUE(rep.verdict) << n << " " << k;
        }
    }
}

TEST(Segments, EndpointContact) {
    Segment a{P(0, 0), P(1, 1)};
    EXPECT_TRUE(segments_meet(a, {P(1, 1), P(2, 0)}));
    EXPECT_TRUE(segments_touch_at_endpoint(a, {P(1, 1), P(2, 0)}));
    // Collinear and continuing past the shared point.
    EXPECT_TRUE(segments_touch_at_endpoint(a, {P(1, 1), P(2, 2)}));
    // Collinear and folding back over the first segment.
    EXPECT_FALSE(segments_touch_at_endpoint(a, {P(1, 1), P(Rational(1, 2), Rational(1, 2))}));
    // Proper crossing, and an endpoint landing inside the other segment.
    EXPECT_FALSE(segments_touch_at_endpoint(a, {P(0, 1), P(1, 0)}));
    EXPECT_FALSE(segments_touch_at_endpoint(a, {P(Rational(1, 2), Rational(1, 2)), P(1, 0)}));
    EXPECT_FALSE(segments_touch_at_endpoint(a, {P(2, 0), P(3, 0)}));
    SegmentF f{{0, 0}, {1, 1}};
    EXPECT_TRUE(segments_touch_at_endpoint(f, SegmentF{{1, 1}, {2, 0}}));
}
