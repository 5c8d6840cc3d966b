#include "ribbonforge/bounds.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

namespace {

double cot(double x) { return 1.0 / std::tan(x); }

int torus_crossings(int p, int q) { return std::min(p * (q - 1), q * (p - 1)); }

}  // namespace

CrossingNumber crossing_number_info(const FamilySpec& spec) {
    const auto& v = spec.params;
    switch (spec.kind) {
        case FamilyKind::torus_2p: return {v.at(0), false};
        case FamilyKind::torus_pq: return {torus_crossings(v.at(0), v.at(1)), false};
        case FamilyKind::twist: return {v.at(0) + 2, false};
        case FamilyKind::two_bridge: return {std::accumulate(v.begin(), v.end(), 0), false};
        case FamilyKind::pretzel: {
            int sum = std::abs(v.at(0)) + std::abs(v.at(1)) + std::abs(v.at(2));
            bool same_sign = (v[0] > 0) == (v[1] > 0) && (v[1] > 0) == (v[2] > 0);
            bool all_large = std::abs(v[0]) >= 2 && std::abs(v[1]) >= 2 && std::abs(v[2]) >= 2;
            return {sum, !(same_sign || all_large)};
        }
        case FamilyKind::half_twists: break;
    }
    throw std::invalid_argument("half twists are an open patch without a crossing number");
}

int crossing_number(const FamilySpec& spec) {
    CrossingNumber c = crossing_number_info(spec);
    if (c.is_bound)
        throw std::domain_error("crossing number of " + spec.str() + " is not known; " + std::to_string(c.value) +
                                " is an upper bound");
    return c.value;
}

ExactLength construction_bound(const FamilySpec& spec) {
    const auto& v = spec.params;
    switch (spec.kind) {
        case FamilyKind::torus_2p: return ExactLength(Rational(2 * v.at(0)));
        case FamilyKind::torus_pq: {
            int p = std::max(v.at(0), v.at(1)), q = std::min(v.at(0), v.at(1));
            int b = p + q;
            if (q == 2 && p % 2 == 1) b = std::min(b, 2 * p);
            return ExactLength(Rational(b));
        }
        case FamilyKind::pretzel:
            return ExactLength(Rational(2 * (std::abs(v.at(0)) + std::abs(v.at(1)) + std::abs(v.at(2))) + 2));
        case FamilyKind::twist: return ExactLength(Rational(2 * v.at(0) + 6));
        case FamilyKind::two_bridge:
            return ExactLength(Rational(6 * std::accumulate(v.begin(), v.end(), 0) - 2));
        case FamilyKind::half_twists: return ExactLength(Rational(2 * std::abs(v.at(0))));
    }
    return {};
}

SublinearCoeff sublinear_coeff(int p, int q) {
    if (q < 2 || p < q) throw std::invalid_argument("sublinear_coeff needs p >= q >= 2");
    SublinearCoeff c;
    c.a = p / q;
    c.b = p % q;
    c.c = 2 * std::numbers::sqrt2 * (c.a + c.b / 2.0);
    return c;
}

double tian_twist_bound(int n) {
    const double s5 = std::sqrt(5.0);
    return (s5 + 1) / 2 * n + 5 + s5 + std::sqrt((5 + s5) / 2);
}

TwistCrossover twist_crossover() {
    const double s5 = std::sqrt(5.0);
    const double slope = (s5 + 1) / 2;
    TwistCrossover t;
    t.crossover = (5 + s5 + std::sqrt((5 + s5) / 2) - 6) / (2 - slope);
    t.last_smaller = 0;
    for (int n = 1; 2.0 * n + 6 < tian_twist_bound(n); ++n) t.last_smaller = n;
    return t;
}

namespace {

BoundRecord row(std::string family, const FamilySpec& spec, std::string source, double prior, std::string note = "") {
    BoundRecord r;
    r.family = std::move(family);
    r.params = spec.str();
    r.crossing_number = crossing_number_info(spec).value;
    r.this_bound = construction_bound(spec);
    r.prior = {std::move(source), prior};
    r.holds = to_float(r.this_bound) < prior;
    r.note = std::move(note);
    return r;
}

FamilySpec torus(int p, int q) { return {FamilyKind::torus_pq, {p, q}}; }

}  // namespace

std::vector<BoundRecord> comparison_table(int q_max) {
    if (q_max < 2) throw std::invalid_argument("comparison_table needs q_max >= 2");
    const double pi = std::numbers::pi;
    std::vector<BoundRecord> rows;
    for (int q = 2; q <= q_max; ++q) {
        rows.push_back(row("T(q+1,q)", torus(q + 1, q), "Kennedy et al.", (2 * q + 1) * cot(pi / (2 * q + 1))));
        rows.push_back(
            row("T(2q+1,q)", torus(2 * q + 1, q), "Kennedy et al.", (2 * q + 1) * cot(pi / (2 * (2 * q + 1)))));
        rows.push_back(row("T(2q+2,q)", torus(2 * q + 2, q), "Kennedy et al.", (2 * q + 2) * cot(pi / (2 * q + 2))));
        rows.push_back(row("T(2q+4,q)", torus(2 * q + 4, q), "Kennedy et al.", (2 * q + 4) * cot(pi / (2 * q + 4))));
        int p = 2 * q + 3;  // odd p >= 7
        rows.push_back(row("T(p,2), p>=7 odd", torus(p, 2), "Kennedy et al.", p * cot(pi / p)));
    }
    for (int q = 2; q <= q_max; ++q)
        for (int p = q; p <= q_max; ++p)
            rows.push_back(row("T(p,q)", torus(p, q), "Tian 4pq", 4.0 * p * q));
    for (int q = 2; q <= q_max; ++q) {
        int p = 2 * q - 1;
        FamilySpec s{FamilyKind::torus_2p, {p}};
        rows.push_back(row("T(2,p)", s, "Tian 8Cr", 8.0 * p));
    }
    rows.push_back(row("trefoil", {FamilyKind::torus_2p, {3}}, "Kauffman 5cot(pi/5)", 5 * cot(pi / 5)));
    rows.push_back(row("trefoil", torus(3, 2), "Kauffman 5cot(pi/5)", 5 * cot(pi / 5)));
    rows.push_back(row("figure-eight", {FamilyKind::twist, {2}}, "Kauffman 40/sqrt15", 40 / std::sqrt(15.0)));
    rows.push_back(row("figure-eight", {FamilyKind::twist, {2}}, "Tian 12 sticks", 12.375));
    TwistCrossover tc = twist_crossover();
    for (int n = 1; n <= q_max; ++n) {
        BoundRecord r = row("twist T_n", {FamilyKind::twist, {n}}, "Tian (sqrt5+1)/2 n + ...", tian_twist_bound(n));
        r.claimed = n <= tc.last_smaller;
        std::ostringstream note;
        note << "crossover at n = " << std::fixed << std::setprecision(3) << tc.crossover;
        r.note = note.str();
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << x;
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::vector<std::string>> cells(const std::vector<BoundRecord>& rows) {
    std::vector<std::vector<std::string>> t;
    t.push_back({"family", "params", "Cr", "our bound", "prior source", "prior value", "holds?"});
    for (const auto& r : rows) {
        std::string holds = r.holds ? "yes" : "no";
        if (!r.claimed) holds += " (not claimed)";
        t.push_back({r.family, r.params, std::to_string(r.crossing_number), r.this_bound.str(), r.prior.source,
                     fmt(r.prior.value), holds});
    }
    return t;
}

}  // namespace

std::string table_csv(const std::vector<BoundRecord>& rows) {
    std::string out;
    for (const auto& line : cells(rows)) {
        for (std::size_t i = 0; i < line.size(); ++i) out += (i ? "," : "") + csv_field(line[i]);
        out += '\n';
    }
    return out;
}

std::string table_text(const std::vector<BoundRecord>& rows) {
    auto t = cells(rows);
    std::vector<std::size_t> width(t[0].size(), 0);
    for (const auto& line : t)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream os;
    for (const auto& line : t) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            os << std::left << std::setw(static_cast<int>(width[i])) << line[i];
            if (i + 1 < line.size()) os << "  ";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace ribbonforge
