#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ribbonforge/ribbon.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace ribbonforge;

namespace {

Point P(Rational x, Rational y) { return {x, y}; }

KnotDiagram unit_square() { return KnotDiagram::polygon({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}); }

int count(const FoldedRibbon& r, FaceKind k) {
    int n = 0;
    for (const auto& f : r.faces) n += f.kind == k;
    return n;
}

// Length of segment a-b inside a convex polygon (Cyrus-Beck clipping).
double clipped_length(Vec2 a, Vec2 b, const std::vector<Vec2>& poly) {
    double t0 = 0, t1 = 1;
    double area = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % poly.size()];
        area += p.x * q.y - p.y * q.x;
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % poly.size()];
        // Inward normal for the polygon's orientation.
        Vec2 n = area > 0 ? Vec2{-(q.y - p.y), q.x - p.x} : Vec2{q.y - p.y, -(q.x - p.x)};
        double num = n.x * (a.x - p.x) + n.y * (a.y - p.y);
        double den = n.x * (b.x - a.x) + n.y * (b.y - a.y);
        if (den == 0) {
            if (num < 0) return 0;
        } else if (den > 0) {
            t0 = std::max(t0, -num / den);
        } else {
            t1 = std::min(t1, -num / den);
        }
    }
    return t1 > t0 ? (t1 - t0) * std::hypot(b.x - a.x, b.y - a.y) : 0;
}

}  // namespace

TEST(Ribbon, UnitSquareFaces) {
    KnotDiagram sq = unit_square();
    FoldedRibbon r = build_ribbon(sq, Rational(1, 2), derive_folding(sq));
    ASSERT_TRUE(r.exact());
    EXPECT_EQ(count(r, FaceKind::trapezoid), 4);
    EXPECT_EQ(count(r, FaceKind::fold_triangle), 8);
    ASSERT_EQ(r.fold_lines.size(), 4u);
    for (const auto& fl : r.fold_lines) {
        Point d = fl.exact->b - fl.exact->a;
        // Length (1/2)sqrt2, i.e. squared length 1/2.
        EXPECT_EQ(dot(d, d), Rational(1, 2));
    }
    // The fold at (1,0): both triangles are the inner half of the corner square.
    std::vector<Point> expected{P(Rational(3, 4), Rational(-1, 4)), P(Rational(5, 4), Rational(1, 4)),
                                P(Rational(3, 4), Rational(1, 4))};
    int matches = 0;
    for (const auto& f : r.faces) {
        if (f.kind != FaceKind::fold_triangle || f.vertex != 1u) continue;
        std::vector<Point> got = f.exact;
        std::sort(got.begin(), got.end());
        std::vector<Point> want = expected;
        std::sort(want.begin(), want.end());
        matches += got == want;
    }
    EXPECT_EQ(matches, 2);
}

TEST(Ribbon, FlattenedStrandHasNoTriangles) {
    // Out-and-back strand: two rectangles joined by turn-back fold lines.
    KnotDiagram d = KnotDiagram::polygon({P(0, 0), P(3, 0)}, {0, 1});
    FoldedRibbon r = build_ribbon(d, Rational(1), derive_folding(d));
    EXPECT_EQ(count(r, FaceKind::trapezoid), 2);
    EXPECT_EQ(count(r, FaceKind::fold_triangle), 0);
    ASSERT_EQ(r.fold_lines.size(), 2u);
    EXPECT_EQ(r.fold_lines[0].exact->a.x, r.fold_lines[0].exact->b.x);
    AllowedReport rep = check_allowed(r);
    EXPECT_FALSE(rep.regular);
    EXPECT_TRUE(rep.verdict);
}

TEST(Ribbon, QuarterTurnFoldCoversOneWidthOfCentreline) {
    KnotDiagram sq = unit_square();
    double w = 0.3;
    FoldedRibbon r = build_ribbon(sq, w, derive_folding(sq));
    std::vector<double> per_vertex(4, 0);
    for (const auto& f : r.faces) {
        if (f.kind != FaceKind::fold_triangle) continue;
        Vec2 a = to_vec(sq.strands[0].vertex(f.edge)), b = to_vec(sq.strands[0].vertex(f.edge + 1));
        per_vertex[*f.vertex] += clipped_length(a, b, f.polygon);
    }
    for (double len : per_vertex) EXPECT_NEAR(len, fold_local(std::acos(0.0), w).fold_diagram_length, 1e-12);
}

// Near a fold the outer part of a perpendicular crosses the fold line and is
// folded away, so only centreline points outside the fold cells are sampled.
TEST(Ribbon, FacesCoverThePerpendicularSegments) {
    KnotDiagram pent = oracle::regular_polygon(5);
    double w = 0.5;
    FoldedRibbon r = build_ribbon(pent, w, derive_folding(pent));
    const Strand& s = pent.strands[0];
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 1000; ++k) {
        std::size_t e = rng() % s.size();
        Vec2 a = to_vec(s.vertex(e)), b = to_vec(s.vertex(e + 1));
        double t = u(rng), off = (u(rng) - 0.5) * w * 0.999;
        double len = std::hypot(b.x - a.x, b.y - a.y);
        // Interior angle 3pi/5: fold lines reach (w/2)cot(pi/5) along the edge.
        double reach = w / 2 / std::tan(std::numbers::pi / 5);
        if (t * len < reach || (1 - t) * len < reach) continue;
        Vec2 n{-(b.y - a.y) / len, (b.x - a.x) / len};
        Vec2 p{a.x + t * (b.x - a.x) + off * n.x, a.y + t * (b.y - a.y) + off * n.y};
        bool covered = false;
        for (const auto& f : r.faces) covered = covered || point_in_polygon(p, f.polygon);
        EXPECT_TRUE(covered) << k;
    }
}

TEST(Allowed, UnitSquareNarrowAndWide) {
    KnotDiagram sq = unit_square();
    AllowedReport narrow = check_allowed(build_ribbon(sq, Rational(1, 4), derive_folding(sq)));
    EXPECT_TRUE(narrow.regular);
    EXPECT_TRUE(narrow.verdict);
    EXPECT_EQ(narrow.max_overlap_degree, 2);
    EXPECT_EQ(oracle::sampled_overlap(build_ribbon(sq, 0.25, derive_folding(sq))), 2);
    AllowedReport wide = check_allowed(build_ribbon(sq, Rational(10), derive_folding(sq)));
    EXPECT_FALSE(wide.verdict);
    EXPECT_FALSE(wide.fold_lines_disjoint);
    EXPECT_FALSE(wide.witnesses.empty());
}

TEST(Allowed, FoldingMismatchIsReported) {
    KnotDiagram d = KnotDiagram::polygon({P(0, 0), P(3, 0)}, {0, 1});
    FoldingInfo f = derive_folding(d);
    f.folds[0][1] = f.folds[0][1] == Fold::over ? Fold::under : Fold::over;
    AllowedReport rep = check_allowed(build_ribbon(d, Rational(1), f));
    EXPECT_FALSE(rep.folding_matches);
    EXPECT_FALSE(rep.verdict);
}

TEST(Allowed, CollidingLayersAreReported) {
    KnotDiagram d;
    d.strands.push_back({{P(0, 0), P(3, 0)}, {0, 1}});
    d.strands.push_back({{P(1, -1), P(1, 1)}, {1, 0}});
    AllowedReport rep = check_allowed(build_ribbon(d, Rational(1, 2), derive_folding(d)));
    EXPECT_FALSE(rep.layer_consistent);
    EXPECT_FALSE(rep.verdict);
}

TEST(Allowed, RegularPolygonsBelowMaxWidth) {
    for (int n : {3, 4, 5}) {
        KnotDiagram d = oracle::regular_polygon(n);
        FoldingInfo f = derive_folding(d);
        double w_star = max_allowed_width(d, f).w_star;
        AllowedReport rep = check_allowed(build_ribbon(d, 0.9 * w_star, f));
        EXPECT_TRUE(rep.verdict) << n;
        EXPECT_LE(rep.max_overlap_degree, 2);
    }
}

TEST(Ribbon, RejectsBadWidth) {
    EXPECT_THROW(build_ribbon(unit_square(), Rational(0), FoldingInfo{}), std::domain_error);
    EXPECT_THROW(build_ribbon(unit_square(), -1.0, FoldingInfo{}), std::domain_error);
}

TEST(Allowed, FoldLinesSharingACornerAreAccepted) {
    // A unit staircase at width 1: consecutive fold lines share ribbon corners.
    KnotDiagram d = KnotDiagram::polygon({P(0, 0), P(2, 0), P(2, 1), P(1, 1), P(1, 2), P(0, 2)});
    AllowedReport rep = check_allowed(build_ribbon(d, Rational(1), derive_folding(d)));
    EXPECT_GT(rep.fold_line_touches, 0);
    EXPECT_TRUE(rep.fold_lines_disjoint);
}
