#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>

namespace ribbonforge {

using BigInt = boost::multiprecision::mpz_int;
// GMP keeps mpq values canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::mpq_rational;

// Global tolerance for the floating-point geometry path.
double default_tolerance();
void set_default_tolerance(double eps);

Rational parse_rational(const std::string& text);  // "p/q", "p", or a decimal like "0.25"
std::string to_string(const Rational& q);          // "p/q" or "p" when integral
int sign(const Rational& q);
Rational rational_from_double(double v);  // exact binary value of v

// r + s*sqrt(2)
class ExactLength {
public:
    ExactLength() = default;
    ExactLength(Rational r, Rational s = 0) : r_(std::move(r)), s_(std::move(s)) {}
    ExactLength(long long v) : r_(v), s_(0) {}

    const Rational& r() const { return r_; }
    const Rational& s() const { return s_; }

    static ExactLength sqrt2() { return {0, 1}; }

    ExactLength operator-() const { return {-r_, -s_}; }
    ExactLength& operator+=(const ExactLength& o);
    ExactLength& operator-=(const ExactLength& o);
    ExactLength& operator*=(const ExactLength& o);
    ExactLength& operator/=(const Rational& q);

    friend ExactLength operator+(ExactLength a, const ExactLength& b) { return a += b; }
    friend ExactLength operator-(ExactLength a, const ExactLength& b) { return a -= b; }
    friend ExactLength operator*(ExactLength a, const ExactLength& b) { return a *= b; }
    friend ExactLength operator/(ExactLength a, const Rational& q) { return a /= q; }

    friend bool operator==(const ExactLength& a, const ExactLength& b) {
        return a.r_ == b.r_ && a.s_ == b.s_;
    }

    bool is_rational() const { return s_ == 0; }
    int sign() const;
    std::string str() const;  // "r + s*sqrt2" style, for messages

private:
    Rational r_{0};
    Rational s_{0};
};

std::strong_ordering exact_cmp(const ExactLength& a, const ExactLength& b);
double to_float(const ExactLength& a);

inline std::strong_ordering operator<=>(const ExactLength& a, const ExactLength& b) {
    return exact_cmp(a, b);
}

}  // namespace ribbonforge
