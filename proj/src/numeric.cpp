#include "ribbonforge/numeric.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace ribbonforge {

namespace mp = boost::multiprecision;

namespace {
std::atomic<double> g_tolerance{1e-9};
using HighFloat = mp::mpf_float_100;
}  // namespace

double default_tolerance() { return g_tolerance.load(); }

void set_default_tolerance(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("tolerance must be positive");
    g_tolerance.store(eps);
}

namespace {

// Base-10 only; a leading zero must not switch to octal.
BigInt decimal_int(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
        throw std::invalid_argument("bad integer: " + s);
    BigInt v;
    mpz_set_str(v.backend().data(), s.c_str() + i, 10);
    return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        try {
            auto slash = text.find('/');
            if (slash == std::string::npos) return Rational(decimal_int(text));
            return Rational(decimal_int(text.substr(0, slash))) / Rational(decimal_int(text.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational: " + text);
        }
    }
    // Decimal literal: scale by the power of ten implied by the fraction digits.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad rational: " + text);
    try {
        BigInt num = decimal_int(digits);
        BigInt den = mp::pow(BigInt(10), static_cast<unsigned>(frac));
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: " + text);
    }
}

std::string to_string(const Rational& q) {
    if (mp::denominator(q) == 1) return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

int sign(const Rational& q) { return q.sign(); }

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
    int exp = 0;
    double mant = std::frexp(v, &exp);
    // 53 bits of mantissa are exact once scaled to an integer.
    auto m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational out(m);
    if (exp > 0) out *= Rational(mp::pow(BigInt(2), static_cast<unsigned>(exp)));
    if (exp < 0) out /= Rational(mp::pow(BigInt(2), static_cast<unsigned>(-exp)));
    return out;
}

ExactLength& ExactLength::operator+=(const ExactLength& o) {
    r_ += o.r_;
    s_ += o.s_;
    return *this;
}

ExactLength& ExactLength::operator-=(const ExactLength& o) {
    r_ -= o.r_;
    s_ -= o.s_;
    return *this;
}

ExactLength& ExactLength::operator*=(const ExactLength& o) {
    Rational r = r_ * o.r_ + 2 * s_ * o.s_;
    Rational s = r_ * o.s_ + s_ * o.r_;
    r_ = std::move(r);
    s_ = std::move(s);
    return *this;
}

ExactLength& ExactLength::operator/=(const Rational& q) {
    if (q == 0) throw std::domain_error("division by zero");
    r_ /= q;
    s_ /= q;
    return *this;
}

int ExactLength::sign() const {
    int sr = r_.sign();
    int ss = s_.sign();
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // Opposite signs: the larger magnitude wins, compare r^2 with 2 s^2.
    Rational lhs = r_ * r_;
    Rational rhs = 2 * s_ * s_;
    if (lhs == rhs) return 0;  // cannot happen for rational r, s != 0
    return lhs > rhs ? sr : ss;
}

std::string ExactLength::str() const {
    if (s_ == 0) return to_string(r_);
    std::string out;
    if (r_ != 0) out = to_string(r_) + (s_ > 0 ? " + " : " - ");
    else if (s_ < 0) out = "-";
    Rational as = s_ > 0 ? s_ : Rational(-s_);
    if (as != 1) out += to_string(as) + "*";
    out += "sqrt2";
    return out;
}

std::strong_ordering exact_cmp(const ExactLength& a, const ExactLength& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double to_float(const ExactLength& a) {
    HighFloat x = HighFloat(a.r()) + HighFloat(a.s()) * mp::sqrt(HighFloat(2));
    double d = x.convert_to<double>();
    // mpf conversion truncates; pick the closer neighbour to round to nearest.
    double up = std::nextafter(d, HUGE_VAL);
    double down = std::nextafter(d, -HUGE_VAL);
    double best = d;
    HighFloat err = mp::abs(x - HighFloat(d));
    for (double c : {up, down}) {
        HighFloat e = mp::abs(x - HighFloat(c));
        if (e < err) {
            err = e;
            best = c;
        }
    }
    return best;
}

}  // namespace ribbonforge
