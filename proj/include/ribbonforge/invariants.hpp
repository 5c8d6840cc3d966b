#pragma once

#include "ribbonforge/pd.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace ribbonforge {

class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long coeff, int exp);

    const std::map<int, long long>& terms() const { return terms_; }
    long long coeff(int exp) const;
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly shifted(int k) const;  // multiply by var^k
    LaurentPoly inverted() const;      // var -> var^-1
    LaurentPoly pow(int n) const;

    // Descending exponents, e.g. "-A^-4 + A^-12".
    std::string str(const std::string& var = "A") const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    void add_term(int exp, long long c);
    std::map<int, long long> terms_;
};

// Cap on crossings accepted by the bracket engines; RIBBONFORGE_BRACKET_CAP
// overrides the default of 24.
int bracket_cap();

// State-sum over smoothings with memoisation on partial matchings.
LaurentPoly kauffman_bracket(const PDCode& pd);
// Plain 2^n enumeration, kept as an oracle.
LaurentPoly kauffman_bracket_naive(const PDCode& pd);

LaurentPoly jones(const PDCode& pd);
// Jones in t = A^-4, e.g. "t + t^3 - t^4"; half-integer powers print as t^(1/2).
std::string jones_t_string(const LaurentPoly& jones_in_a);
// V(t) = V(1/t), i.e. symmetric exponents in A.
bool is_palindromic(const LaurentPoly& p);

// Closure of a braid word; generator i > 0 is sigma_i, i < 0 its inverse.
PDCode braid_closure_pd(const std::vector<int>& word, int strands);

// Combinatorial diagram assembled from 4-valent crossings. Ports are numbered
// counterclockwise from the lower left: SW, SE, NE, NW. A strand entering at
// one port leaves at the opposite one. The caller supplies a planar layout.
class PortDiagram {
public:
    enum Port { SW = 0, SE = 1, NE = 2, NW = 3 };

    // ne_over: the SW-NE diagonal passes over the SE-NW one.
    int add_crossing(bool ne_over);
    void connect(int c1, Port p1, int c2, Port p2);
    void add_free_loop() { ++free_loops_; }
    std::size_t size() const { return over_.size(); }

    // Components are traced entering at the lowest-numbered free bottom port.
    PDCode to_pd() const;

private:
    std::vector<bool> over_;
    std::map<std::pair<int, int>, std::pair<int, int>> link_;
    int free_loops_ = 0;
};

// Reference diagrams.
PDCode pretzel_reference_pd(int p, int q, int r);
// Closure of k vertical half-twists with left ends and right ends joined.
PDCode twist_region_closure_pd(int k);
// Four-plat closure of sigma2^a1 sigma1^-a2 sigma2^a3 ...
PDCode four_plat_pd(const std::vector<int>& a);

}  // namespace ribbonforge
