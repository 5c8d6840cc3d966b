#include <gtest/gtest.h>

#include "ribbonforge/invariants.hpp"

#include <cstdlib>
#include <numeric>
#include <random>

using namespace ribbonforge;

namespace {

LaurentPoly A(long long c, int e) { return LaurentPoly::monomial(c, e); }

std::vector<int> torus_word(int p, int q) {
    std::vector<int> w;
    for (int k = 0; k < p; ++k)
        for (int i = 1; i < q; ++i) w.push_back(i);
    return w;
}

}  // namespace

TEST(LaurentPoly, ArithmeticAndPrinting) {
    LaurentPoly p = A(-1, -4) + A(1, -12);
    EXPECT_EQ(p.str(), "-A^-4 + A^-12");
    EXPECT_EQ((p - p).str(), "0");
    EXPECT_EQ((A(1, 1) + A(1, -1)).pow(2).str(), "A^2 + 2 + A^-2");
    EXPECT_EQ(A(3, 1).str(), "3*A");
    EXPECT_EQ(p.inverted().str(), "A^12 - A^4");
}

TEST(LaurentPoly, TVariablePrinting) {
    EXPECT_EQ(jones_t_string(A(1, -4) + A(1, -12) - A(1, -16)), "-t^4 + t^3 + t");
    EXPECT_EQ(jones_t_string(A(1, 2)), "t^(-1/2)");
}

TEST(Bracket, Loops) {
    PDCode one;
    one.free_loops = 1;
    EXPECT_EQ(kauffman_bracket(one), A(1, 0));
    PDCode two;
    two.free_loops = 2;
    EXPECT_EQ(kauffman_bracket(two), A(-1, 2) + A(-1, -2));
    EXPECT_EQ(jones(one), A(1, 0));
}

TEST(Jones, RightHandedTrefoil) {
    PDCode pd = parse_pd("X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]", {1, 1, 1});
    EXPECT_EQ(writhe(pd), 3);
    EXPECT_EQ(kauffman_bracket(pd).terms().size(), 3u);
    // t + t^3 - t^4 with t = A^-4
    EXPECT_EQ(jones(pd), A(1, -4) + A(1, -12) - A(1, -16));
    EXPECT_EQ(jones(mirror(pd)), jones(pd).inverted());
}

TEST(Jones, FigureEight) {
    PDCode pd = parse_pd("X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]");
    EXPECT_EQ(writhe(pd), 0);
    EXPECT_EQ(jones_t_string(jones(pd)), "t^2 - t + 1 - t^-1 + t^-2");
    EXPECT_TRUE(is_palindromic(jones(pd)));
}

TEST(Braid, ClosureBasics) {
    PDCode tref = braid_closure_pd({1, 1, 1}, 2);
    EXPECT_EQ(tref.size(), 3u);
    EXPECT_EQ(jones(tref), A(1, -4) + A(1, -12) - A(1, -16));
    EXPECT_EQ(component_count(braid_closure_pd({1, 1}, 2)), 2);
    PDCode t43 = braid_closure_pd(torus_word(4, 3), 3);
    EXPECT_EQ(t43.size(), 8u);
    EXPECT_EQ(component_count(t43), 1);
    EXPECT_EQ(jones_t_string(jones(t43)), "-t^8 + t^5 + t^3");
    EXPECT_THROW(braid_closure_pd({3}, 3), std::out_of_range);
    EXPECT_EQ(component_count(braid_closure_pd({}, 3)), 3);
}

TEST(Braid, StabilisationKeepsJones) {
    EXPECT_EQ(jones(braid_closure_pd({1, 1, 1}, 2)), jones(braid_closure_pd({1, 2, 1, 2}, 3)));
    EXPECT_EQ(jones(braid_closure_pd({1, -2, 1, -2}, 3)), jones(braid_closure_pd({1, -2, 1, -2, -3}, 4)));
}

TEST(Braid, TorusSymmetry) {
    for (int p = 2; p <= 7; ++p)
        for (int q = 2; q <= 7 && p + q <= 9; ++q) {
            if (std::gcd(p, q) != 1) continue;
            EXPECT_EQ(jones(braid_closure_pd(torus_word(p, q), q)), jones(braid_closure_pd(torus_word(q, p), p)))
                << p << "," << q;
        }
}

TEST(Bracket, MemoisedMatchesNaive) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int strands = 2 + trial % 3;
        int len = 1 + static_cast<int>(rng() % 10);
        std::vector<int> word;
        for (int i = 0; i < len; ++i) {
            int g = 1 + static_cast<int>(rng() % (strands - 1));
            word.push_back(rng() % 2 ? g : -g);
        }
        PDCode pd = braid_closure_pd(word, strands);
        ASSERT_EQ(kauffman_bracket(pd), kauffman_bracket_naive(pd)) << to_text(pd);
    }
}

TEST(Bracket, InvariantUnderRelabelling) {
    PDCode pd = braid_closure_pd({1, -2, 1, -2, 1}, 3);
    PDCode shifted = pd;
    for (auto& x : shifted.crossings)
        for (int& a : x) a = 100 - a;
    EXPECT_EQ(jones(shifted), jones(pd));
    EXPECT_EQ(jones(canonical_labels(shifted)), jones(pd));
}

TEST(Bracket, CapIsEnforced) {
    PDCode big = braid_closure_pd(std::vector<int>(25, 1), 2);
    EXPECT_THROW(kauffman_bracket(big), std::length_error);
    setenv("RIBBONFORGE_BRACKET_CAP", "30", 1);
    EXPECT_EQ(bracket_cap(), 30);
    EXPECT_NO_THROW(kauffman_bracket(big));
    unsetenv("RIBBONFORGE_BRACKET_CAP");
    EXPECT_EQ(bracket_cap(), 24);
}

TEST(References, TwistRegionIsTwoBraid) {
    for (int k : {2, 3, 5, -3})
        EXPECT_EQ(jones(twist_region_closure_pd(k)), jones(braid_closure_pd(std::vector<int>(std::abs(k), k > 0 ? 1 : -1), 2)));
}

TEST(References, PretzelSmallCases) {
    // P(-1,-1,-1) is the right-handed trefoil.
    EXPECT_EQ(jones(pretzel_reference_pd(-1, -1, -1)), jones(braid_closure_pd({1, 1, 1}, 2)));
    EXPECT_EQ(jones(pretzel_reference_pd(1, 1, 1)), jones(braid_closure_pd({-1, -1, -1}, 2)));
    // P(2,1,1) is the figure-eight knot.
    EXPECT_TRUE(is_palindromic(jones(pretzel_reference_pd(2, 1, 1))));
    EXPECT_EQ(component_count(pretzel_reference_pd(3, 3, 3)), 1);
    EXPECT_EQ(component_count(pretzel_reference_pd(2, 2, 3)), 2);
}

TEST(References, FourPlat) {
    EXPECT_TRUE(is_palindromic(jones(four_plat_pd({2, 1, 1}))));
    EXPECT_EQ(jones(four_plat_pd({2, 1, 1})), jones(pretzel_reference_pd(2, 1, 1)));
    LaurentPoly tref = jones(braid_closure_pd({1, 1, 1}, 2));
    LaurentPoly v3 = jones(four_plat_pd({3}));
    EXPECT_TRUE(v3 == tref || v3 == tref.inverted());
    EXPECT_EQ(four_plat_pd({3, 2, 2}).size(), 7u);
}
