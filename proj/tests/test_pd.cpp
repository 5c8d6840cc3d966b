#include <gtest/gtest.h>

#include "ribbonforge/pd.hpp"

using namespace ribbonforge;

namespace {
// Right-handed trefoil, all crossings positive.
PDCode trefoil() { return parse_pd("X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]", {1, 1, 1}); }
}  // namespace

TEST(PD, TextRoundTrip) {
    PDCode pd = trefoil();
    EXPECT_EQ(to_text(pd), "X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]");
    EXPECT_EQ(parse_pd(to_text(pd), pd.signs), pd);
}

TEST(PD, RejectsMalformed) {
    EXPECT_THROW(parse_pd("X[1,2,3,4]"), std::invalid_argument);
    EXPECT_THROW(parse_pd("X[1,1,2,2], Y[3]"), std::invalid_argument);
}

TEST(PD, InfersSignsFromConsecutiveLabels) {
    PDCode pd = parse_pd("X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]");
    EXPECT_EQ(pd.signs, (std::vector<int>{1, 1, 1}));
}

TEST(PD, ComponentCount) {
    EXPECT_EQ(component_count(trefoil()), 1);
    PDCode hopf = parse_pd("X[1,3,2,4], X[3,1,4,2]", {1, 1});
    EXPECT_EQ(component_count(hopf), 2);
    PDCode empty;
    empty.free_loops = 1;
    EXPECT_EQ(component_count(empty), 1);
}

TEST(PD, MirrorNegatesWritheAndIsInvolution) {
    PDCode pd = trefoil();
    EXPECT_EQ(writhe(pd), 3);
    PDCode m = mirror(pd);
    EXPECT_EQ(writhe(m), -3);
    EXPECT_NO_THROW(validate_pd(m));
    EXPECT_EQ(mirror(m), pd);
}

TEST(PD, CanonicalLabelsFollowComponents) {
    PDCode pd = parse_pd("X[10,50,20,40], X[30,10,40,60], X[50,30,60,20]", {1, 1, 1});
    EXPECT_EQ(to_text(canonical_labels(pd)), "X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]");
}

TEST(PD, GaussCode) {
    EXPECT_EQ(gauss_code(trefoil()), "-1, 3, -2, 1, -3, 2");
}
