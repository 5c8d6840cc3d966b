#include "ribbonforge/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

// ---------------------------------------------------------------------------
// LaurentPoly

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

void LaurentPoly::add_term(int exp, long long c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

long long LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (auto [ea, ca] : a.terms_)
        for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, checked_mul(ca, cb));
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (auto [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly out;
    for (auto [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a polynomial");
    LaurentPoly out = monomial(1, 0), base = *this;
    while (n) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

namespace {

std::string format_terms(const std::vector<std::pair<std::string, long long>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [power, c] : terms) {
        long long mag = c < 0 ? -c : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (power.empty()) os << mag;
        else if (mag == 1) os << power;
        else os << mag << "*" << power;
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::str(const std::string& var) const {
    std::vector<std::pair<std::string, long long>> terms;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int e = it->first;
        std::string power = e == 0 ? "" : e == 1 ? var : var + "^" + std::to_string(e);
        terms.push_back({power, it->second});
    }
    return format_terms(terms);
}

std::string jones_t_string(const LaurentPoly& p) {
    // A^e = t^(-e/4); sort by t-exponent descending, i.e. e ascending.
    std::vector<std::pair<std::string, long long>> terms;
    for (auto [e, c] : p.terms()) {
        int num = -e, den = 4;
        int g = std::gcd(std::abs(num), den);
        num /= g;
        den /= g;
        std::string power;
        if (num == 0) power = "";
        else if (den == 1) power = num == 1 ? "t" : "t^" + std::to_string(num);
        else power = "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
        terms.push_back({power, c});
    }
    return format_terms(terms);
}

bool is_palindromic(const LaurentPoly& p) { return p == p.inverted(); }

// ---------------------------------------------------------------------------
// Bracket

int bracket_cap() {
    if (const char* env = std::getenv("RIBBONFORGE_BRACKET_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 24;
}

namespace {

LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

void check_cap(const PDCode& pd) {
    int cap = bracket_cap();
    if (static_cast<int>(pd.size()) > cap)
        throw std::length_error("PD has " + std::to_string(pd.size()) + " crossings, above the bracket cap of " +
                                std::to_string(cap));
}

// A-smoothing of X[a,b,c,d] joins (a,b) and (c,d); the B-smoothing joins
// (a,d) and (b,c).
constexpr int kA[2][2] = {{0, 1}, {2, 3}};
constexpr int kB[2][2] = {{0, 3}, {1, 2}};

LaurentPoly finish(LaurentPoly states, int free_loops, bool any_crossing) {
    if (!any_crossing) {
        if (free_loops <= 1) return LaurentPoly::monomial(1, 0);
        return loop_value().pow(free_loops - 1);
    }
    return states * loop_value().pow(free_loops);
}

// Greedy order: next crossing shares the most labels with the open frontier.
std::vector<int> elimination_order(const PDCode& pd) {
    std::size_t n = pd.size();
    std::vector<int> order;
    std::vector<bool> used(n, false);
    std::multiset<int> open;
    for (std::size_t step = 0; step < n; ++step) {
        int best = -1, best_score = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            int score = 0;
            for (int a : pd.crossings[i]) score += static_cast<int>(open.count(a));
            if (score > best_score) best = static_cast<int>(i), best_score = score;
        }
        used[best] = true;
        order.push_back(best);
        for (int a : pd.crossings[best]) {
            auto it = open.find(a);
            if (it != open.end()) open.erase(it);
            else open.insert(a);
        }
    }
    return order;
}

struct Matching {
    std::map<int, int> partner;
    int loops = 0;

    // Add a path piece joining the ends of arcs x and y.
    void connect(int x, int y) {
        if (x == y) {
            ++loops;
            return;
        }
        auto ix = partner.find(x);
        auto iy = partner.find(y);
        bool ox = ix != partner.end(), oy = iy != partner.end();
        if (ox && oy) {
            int px = ix->second, py = iy->second;
            partner.erase(x);
            partner.erase(y);
            if (px == y) {
                ++loops;
                return;
            }
            partner[px] = py;
            partner[py] = px;
        } else if (ox) {
            int px = ix->second;
            partner.erase(x);
            partner[px] = y;
            partner[y] = px;
        } else if (oy) {
            int py = iy->second;
            partner.erase(y);
            partner[py] = x;
            partner[x] = py;
        } else {
            partner[x] = y;
            partner[y] = x;
        }
    }
};

std::vector<int> key_of(const std::map<int, int>& partner, bool looped) {
    std::vector<int> key;
    key.reserve(partner.size() + 1);
    for (auto [a, b] : partner)
        if (a < b) key.push_back(a), key.push_back(b);
    key.push_back(looped ? 1 : 0);
    return key;
}

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& pd) {
    validate_pd(pd);
    check_cap(pd);
    if (pd.crossings.empty()) return finish({}, pd.free_loops, false);

    const LaurentPoly d = loop_value();
    std::map<std::vector<int>, LaurentPoly> states;
    states[{0}] = LaurentPoly::monomial(1, 0);
    for (int ci : elimination_order(pd)) {
        const auto& x = pd.crossings[ci];
        std::map<std::vector<int>, LaurentPoly> next;
        for (const auto& [key, poly] : states) {
            bool looped = key.back() != 0;
            std::map<int, int> partner;
            for (std::size_t i = 0; i + 1 < key.size(); i += 2) {
                partner[key[i]] = key[i + 1];
                partner[key[i + 1]] = key[i];
            }
            for (int which = 0; which < 2; ++which) {
                const auto& pairs = which == 0 ? kA : kB;
                Matching m{partner, 0};
                m.connect(x[pairs[0][0]], x[pairs[0][1]]);
                m.connect(x[pairs[1][0]], x[pairs[1][1]]);
                int extra = m.loops;
                bool now_looped = looped;
                if (!looped && extra > 0) {
                    --extra;
                    now_looped = true;
                }
                LaurentPoly term = poly.shifted(which == 0 ? 1 : -1);
                if (extra > 0) term = term * d.pow(extra);
                next[key_of(m.partner, now_looped)] += term;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero()) it = next.erase(it);
            else ++it;
        }
        states = std::move(next);
    }
    LaurentPoly total;
    for (const auto& [key, poly] : states) {
        if (key.size() != 1) throw std::logic_error("bracket recursion left open arcs");
        total += poly;
    }
    return finish(total, pd.free_loops, true);
}

LaurentPoly kauffman_bracket_naive(const PDCode& pd) {
    validate_pd(pd);
    check_cap(pd);
    if (pd.crossings.empty()) return finish({}, pd.free_loops, false);

    std::map<int, int> index;
    for (const auto& x : pd.crossings)
        for (int a : x) index.emplace(a, static_cast<int>(index.size()));
    const int arcs = static_cast<int>(index.size());
    const std::size_t n = pd.size();
    const LaurentPoly d = loop_value();
    std::vector<int> parent(arcs);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    LaurentPoly total;
    std::map<std::pair<int, int>, long long> tally;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        int comps = arcs;
        int exp = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool a_smooth = !((mask >> i) & 1ULL);
            const auto& pairs = a_smooth ? kA : kB;
            exp += a_smooth ? 1 : -1;
            for (const auto& pr : pairs) {
                int u = find(index[pd.crossings[i][pr[0]]]);
                int v = find(index[pd.crossings[i][pr[1]]]);
                if (u != v) parent[u] = v, --comps;
            }
        }
        ++tally[{exp, comps}];
    }
    for (const auto& [key, count] : tally)
        total += LaurentPoly::monomial(count, key.first) * d.pow(key.second - 1);
    return finish(total, pd.free_loops, true);
}

LaurentPoly jones(const PDCode& pd) {
    LaurentPoly br = kauffman_bracket(pd);
    int w = writhe(pd);
    long long sgn = (w % 2 == 0) ? 1 : -1;
    return LaurentPoly::monomial(sgn, -3 * w) * br;
}

// ---------------------------------------------------------------------------
// PortDiagram

int PortDiagram::add_crossing(bool ne_over) {
    over_.push_back(ne_over);
    return static_cast<int>(over_.size()) - 1;
}

void PortDiagram::connect(int c1, Port p1, int c2, Port p2) {
    auto a = std::make_pair(c1, static_cast<int>(p1));
    auto b = std::make_pair(c2, static_cast<int>(p2));
    if (c1 < 0 || c2 < 0 || c1 >= static_cast<int>(size()) || c2 >= static_cast<int>(size()))
        throw std::out_of_range("crossing index out of range");
    if (link_.count(a) || link_.count(b) || a == b) throw std::invalid_argument("port already connected");
    link_[a] = b;
    link_[b] = a;
}

PDCode PortDiagram::to_pd() const {
    const int n = static_cast<int>(size());
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p)
            if (!link_.count({c, p}))
                throw std::invalid_argument("crossing " + std::to_string(c) + " has an open port");

    std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
    std::vector<std::array<bool, 4>> entry(n, {false, false, false, false});
    std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
    int next_label = 1;
    const int starts[] = {SW, SE, NW, NE};
    for (int c = 0; c < n; ++c) {
        for (int p : starts) {
            if (seen[c][p]) continue;
            std::pair<int, int> at{c, p};
            while (!seen[at.first][at.second]) {
                auto [cc, pp] = at;
                int out = (pp + 2) % 4;
                seen[cc][pp] = seen[cc][out] = true;
                entry[cc][pp] = true;
                label[cc][out] = next_label;
                at = link_.at({cc, out});
                label[at.first][at.second] = next_label;
                ++next_label;
            }
        }
    }

    static const int px[4] = {-1, 1, 1, -1};
    static const int py[4] = {-1, -1, 1, 1};
    PDCode pd;
    pd.free_loops = free_loops_;
    for (int c = 0; c < n; ++c) {
        int u0 = over_[c] ? SE : SW;  // under diagonal
        int o0 = over_[c] ? SW : SE;
        int iu = entry[c][u0] ? u0 : (u0 + 2) % 4;
        int io = entry[c][o0] ? o0 : (o0 + 2) % 4;
        int ux = px[(iu + 2) % 4] - px[iu], uy = py[(iu + 2) % 4] - py[iu];
        int ox = px[(io + 2) % 4] - px[io], oy = py[(io + 2) % 4] - py[io];
        pd.crossings.push_back({label[c][iu], label[c][(iu + 1) % 4], label[c][(iu + 2) % 4], label[c][(iu + 3) % 4]});
        pd.signs.push_back(ox * uy - oy * ux > 0 ? 1 : -1);
    }
    validate_pd(pd);
    return pd;
}

// ---------------------------------------------------------------------------
// References

PDCode braid_closure_pd(const std::vector<int>& word, int strands) {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    using P = PortDiagram;
    P g;
    struct End {
        int c = -1;
        P::Port p = P::SW;
    };
    std::vector<End> bottom(strands + 1), top(strands + 1);
    for (int gen : word) {
        int i = std::abs(gen);
        if (gen == 0 || i >= strands)
            throw std::out_of_range("braid generator " + std::to_string(gen) + " out of range for " +
                                    std::to_string(strands) + " strands");
        int c = g.add_crossing(gen > 0);
        for (auto [pos, port_in, port_out] : {std::tuple{i, P::SW, P::NW}, std::tuple{i + 1, P::SE, P::NE}}) {
            if (top[pos].c < 0) bottom[pos] = {c, port_in};
            else g.connect(top[pos].c, top[pos].p, c, port_in);
            top[pos] = {c, port_out};
        }
    }
    for (int pos = 1; pos <= strands; ++pos) {
        if (top[pos].c < 0) g.add_free_loop();
        else g.connect(top[pos].c, top[pos].p, bottom[pos].c, bottom[pos].p);
    }
    return g.to_pd();
}

namespace {

struct Region {
    int first = -1, last = -1;
};

// k vertical half-twists; positive k crosses the SW-NE strand over.
Region add_twist_region(PortDiagram& g, int k) {
    if (k == 0) throw std::invalid_argument("twist region needs at least one half-twist");
    Region r;
    for (int j = 0; j < std::abs(k); ++j) {
        int c = g.add_crossing(k > 0);
        if (r.first < 0) r.first = c;
        else {
            g.connect(r.last, PortDiagram::NW, c, PortDiagram::SW);
            g.connect(r.last, PortDiagram::NE, c, PortDiagram::SE);
        }
        r.last = c;
    }
    return r;
}

}  // namespace

PDCode twist_region_closure_pd(int k) {
    PortDiagram g;
    Region r = add_twist_region(g, k);
    g.connect(r.first, PortDiagram::SW, r.last, PortDiagram::NW);
    g.connect(r.first, PortDiagram::SE, r.last, PortDiagram::NE);
    return g.to_pd();
}

PDCode pretzel_reference_pd(int p, int q, int r) {
    using P = PortDiagram;
    P g;
    Region reg[3] = {add_twist_region(g, p), add_twist_region(g, q), add_twist_region(g, r)};
    for (int i = 0; i < 3; ++i) {
        const Region& a = reg[i];
        const Region& b = reg[(i + 1) % 3];
        g.connect(a.last, P::NE, b.last, P::NW);
        g.connect(a.first, P::SE, b.first, P::SW);
    }
    return g.to_pd();
}

PDCode four_plat_pd(const std::vector<int>& a) {
    if (a.empty()) throw std::invalid_argument("empty continued fraction");
    using P = PortDiagram;
    P g;
    struct End {
        int c = -1;
        P::Port p = P::SW;
    };
    std::vector<End> bottom(5), top(5);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] <= 0) throw std::invalid_argument("continued fraction entries must be positive");
        int i = k % 2 == 0 ? 2 : 1;
        bool ne_over = k % 2 == 0;
        for (int j = 0; j < a[k]; ++j) {
            int c = g.add_crossing(ne_over);
            for (auto [pos, port_in, port_out] : {std::tuple{i, P::SW, P::NW}, std::tuple{i + 1, P::SE, P::NE}}) {
                if (top[pos].c < 0) bottom[pos] = {c, port_in};
                else g.connect(top[pos].c, top[pos].p, c, port_in);
                top[pos] = {c, port_out};
            }
        }
    }
    // Caps join positions 1-2 and 3-4 at both ends. A position without
    // crossings is a straight strand from its bottom cap to its top cap.
    auto close_pair = [&](int x, int y) {
        bool lx = top[x].c >= 0, ly = top[y].c >= 0;
        if (lx && ly) {
            g.connect(bottom[x].c, bottom[x].p, bottom[y].c, bottom[y].p);
            g.connect(top[x].c, top[x].p, top[y].c, top[y].p);
        } else if (lx || ly) {
            int live = lx ? x : y;
            g.connect(bottom[live].c, bottom[live].p, top[live].c, top[live].p);
        } else {
            g.add_free_loop();
        }
    };
    close_pair(1, 2);
    close_pair(3, 4);
    return g.to_pd();
}

}  // namespace ribbonforge
