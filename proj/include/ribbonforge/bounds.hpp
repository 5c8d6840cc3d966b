#pragma once

#include "ribbonforge/families.hpp"

#include <string>
#include <vector>

namespace ribbonforge {

struct CrossingNumber {
    int value = 0;
    bool is_bound = false;  // true: an upper bound, not the crossing number
};

// Known crossing numbers: torus, twist, 2-bridge, same-sign pretzels and
// P(-p,q,r) with p,q,r >= 2. Other pretzels give |p|+|q|+|r| flagged as a bound.
CrossingNumber crossing_number_info(const FamilySpec& spec);
// Throws std::domain_error when only a bound is known.
int crossing_number(const FamilySpec& spec);

// Upper bound on folded ribbonlength proved for the family.
ExactLength construction_bound(const FamilySpec& spec);

struct SublinearCoeff {
    int a = 0;
    int b = 0;
    double c = 0;  // 2*sqrt2*(a + b/2)
};
// p = a*q + b; then p + q <= c * sqrt(Cr(T(p,q))). Requires p >= q >= 2.
SublinearCoeff sublinear_coeff(int p, int q);

struct PriorBound {
    std::string source;
    double value = 0;
};

struct BoundRecord {
    std::string family;  // row label, e.g. "T(q+1,q)"
    std::string params;
    int crossing_number = 0;
    ExactLength this_bound;
    PriorBound prior;
    bool holds = false;    // this_bound < prior.value
    bool claimed = true;   // the inequality is asserted to hold for this row
    std::string note;
};

// One row per family instance and prior bound, q = 2..q_max.
std::vector<BoundRecord> comparison_table(int q_max);

// Twist knots: 2n+6 against the bound with coefficient (sqrt5+1)/2.
struct TwistCrossover {
    double crossover = 0;  // real n where the two bounds agree
    int last_smaller = 0;  // largest integer n with 2n+6 below the prior bound
};
double tian_twist_bound(int n);
TwistCrossover twist_crossover();

std::string table_csv(const std::vector<BoundRecord>& rows);
std::string table_text(const std::vector<BoundRecord>& rows);

}  // namespace ribbonforge
