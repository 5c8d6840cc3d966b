#include "ribbonforge/families.hpp"

#include "ribbonforge/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

namespace {

const Rational kHalf(1, 2);

// Sides of the unit square, counterclockwise; kCentre is the origin.
enum Side { kEast = 0, kNorth = 1, kWest = 2, kSouth = 3, kCentre = 4 };

Point side_point(int s) {
    switch (s) {
        case kEast: return {kHalf, 0};
        case kNorth: return {0, kHalf};
        case kWest: return {-kHalf, 0};
        case kSouth: return {0, -kHalf};
        default: return {0, 0};
    }
}

int opposite(int s) { return (s + 2) % 4; }

struct Edge {
    int from = 0;
    int to = 0;
    int layer = 0;
};

// Closed strand from a chain of side-to-side edges.
Strand strand_from(const std::vector<Edge>& edges) {
    Strand st;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].to != edges[(i + 1) % edges.size()].from)
            throw std::logic_error("construction edges do not close up");
        st.vertices.push_back(side_point(edges[i].from));
        st.layers.push_back(edges[i].layer);
    }
    return st;
}

FoldedRibbon unit_ribbon(const KnotDiagram& d) { return build_ribbon(d, Rational(1), derive_folding(d)); }

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

void check_spec(const FamilySpec& s) {
    auto need = [&](std::size_t n) {
        if (s.params.size() != n)
            throw std::invalid_argument(to_string(s.kind) + " takes " + std::to_string(n) + " parameter(s)");
    };
    const auto& v = s.params;
    switch (s.kind) {
        case FamilyKind::half_twists:
            need(1);
            if (v[0] == 0) throw std::invalid_argument("half twists: p must be nonzero");
            break;
        case FamilyKind::torus_2p:
            need(1);
            if (v[0] < 3 || v[0] % 2 == 0) throw std::invalid_argument("torus2p: p must be odd and at least 3");
            break;
        case FamilyKind::torus_pq:
            need(2);
            if (v[0] < 2 || v[1] < 2) throw std::invalid_argument("torus: p and q must be at least 2");
            break;
        case FamilyKind::pretzel:
            need(3);
            if (v[0] == 0 || v[1] == 0 || v[2] == 0) throw std::invalid_argument("pretzel: entries must be nonzero");
            break;
        case FamilyKind::twist:
            need(1);
            if (v[0] < 1) throw std::invalid_argument("twist: n must be at least 1");
            break;
        case FamilyKind::two_bridge:
            if (v.empty() || v.size() % 2 == 0)
                throw std::invalid_argument("twobridge: needs an odd number of entries");
            for (int a : v)
                if (a <= 0) throw std::invalid_argument("twobridge: entries must be positive");
            if (std::accumulate(v.begin(), v.end(), 0) < 2)
                throw std::invalid_argument("twobridge: needs at least two crossings");
            break;
    }
}

}  // namespace

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::half_twists: return "halftwists";
        case FamilyKind::torus_2p: return "torus2p";
        case FamilyKind::pretzel: return "pretzel";
        case FamilyKind::twist: return "twist";
        case FamilyKind::torus_pq: return "torus";
        case FamilyKind::two_bridge: return "twobridge";
    }
    return "?";
}

std::string FamilySpec::str() const { return to_string(kind) + ":" + join(params); }

FamilySpec parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected family:params, got '" + text + "'");
    std::string name = text.substr(0, colon);
    FamilySpec s;
    if (name == "halftwists") s.kind = FamilyKind::half_twists;
    else if (name == "torus2p") s.kind = FamilyKind::torus_2p;
    else if (name == "torus") s.kind = FamilyKind::torus_pq;
    else if (name == "pretzel") s.kind = FamilyKind::pretzel;
    else if (name == "twist") s.kind = FamilyKind::twist;
    else if (name == "twobridge") s.kind = FamilyKind::two_bridge;
    else throw std::invalid_argument("unknown family '" + name + "'");
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) s.params.push_back(parse_int(item));
    check_spec(s);
    return s;
}

// ---------------------------------------------------------------- half twists

namespace {

// Layers of the k-th crossing of the square by one strand of an n-twist
// region. The strand starting at A (west) is on top for n > 0; each further
// half twist lays the next pair of crossings underneath, so both strands
// descend through the stack.
int twist_layer(int n, bool horizontal, int k) {
    int m = std::abs(n);
    bool top = horizontal == (n > 0);
    return top ? 2 * m - 1 - 2 * k : 2 * m - 2 - 2 * k;
}

}  // namespace

const HalfTwistPatch::End& HalfTwistPatch::end(char label) const {
    for (const auto& e : ends)
        if (e.label == label) return e;
    throw std::invalid_argument(std::string("no end labelled ") + label);
}

HalfTwistPatch gen_half_twists(int p) {
    check_spec({FamilyKind::half_twists, {p}});
    HalfTwistPatch h;
    h.p = p;
    int m = std::abs(p);
    for (int s = 0; s < 2; ++s) {
        int side = s == 0 ? kWest : kSouth;
        h.strands[s].push_back(side_point(side));
        for (int k = 0; k < m; ++k) {
            side = opposite(side);
            h.strands[s].push_back(side_point(side));
            h.layers[s].push_back(twist_layer(p, s == 0, k));
        }
    }
    auto outward = [](const Point& at) { return Rational(2) * at; };
    const Point& b = h.strands[0].back();
    const Point& d = h.strands[1].back();
    h.ends = {HalfTwistPatch::End{'A', side_point(kWest), outward(side_point(kWest)), 0},
              HalfTwistPatch::End{'B', b, outward(b), 0},
              HalfTwistPatch::End{'C', side_point(kSouth), outward(side_point(kSouth)), 1},
              HalfTwistPatch::End{'D', d, outward(d), 1}};
    h.unit_squares = 2 * m;
    return h;
}

// ---------------------------------------------------------------- torus knots

ConstructionResult gen_torus_2p(int p) {
    FamilySpec spec{FamilyKind::torus_2p, {p}};
    check_spec(spec);
    // The p-twist region on one square, with A folded at O onto D and C onto
    // B. The horizontal strand is on top and both descend through the stack;
    // the two half squares at O become the connecting folds.
    std::vector<Edge> e;
    e.push_back({kNorth, kCentre, 2 * p});
    e.push_back({kCentre, kEast, 2 * p - 1});
    int at = kEast;
    for (int k = 2; k <= p; ++k) {
        e.push_back({at, opposite(at), 2 * p - 2 * k + 1});
        at = opposite(at);
    }
    e.push_back({at, kCentre, 2 * p + 1});
    e.push_back({kCentre, kNorth, 2 * p - 2});
    at = kNorth;
    for (int k = 2; k <= p; ++k) {
        e.push_back({at, opposite(at), 2 * p - 2 * k});
        at = opposite(at);
    }
    KnotDiagram d;
    d.strands.push_back(strand_from(e));

    ConstructionResult r;
    r.spec = spec;
    r.ribbon = unit_ribbon(d);
    r.expected_ribbonlength = ExactLength(Rational(2 * p));
    r.expected_sticks = 2 * p + 2;
    r.expected_crossing_number = p;
    r.expected_topology = Topology::annulus;
    return r;
}

ConstructionResult gen_torus_pq(int p, int q) {
    if (p < q) std::swap(p, q);
    FamilySpec spec{FamilyKind::torus_pq, {p, q}};
    check_spec(spec);
    // Strand i (1 = top of the stack) runs west to the centre as a_i. The
    // top q strands fold up to the north point (b_i) and back down beneath
    // the stack (c_i); the rest fold straight back. The returning pieces d_i
    // are laid over everything, unwrapped strands first, and end i' is
    // joined to the left end of the strand visited next.
    auto A = [&](int i) { return i - 1; };
    auto D = [&](int i) { return p + i - 1; };
    auto B = [&](int i) { return 2 * p + i - 1; };
    auto C = [&](int i) { return 2 * p + q + i - 1; };
    std::vector<int> L(2 * p + 2 * q);
    int top = 0, bottom = -p - 1;
    for (int i = 1; i <= p; ++i) L[A(i)] = -i;
    for (int k = 1; k <= q; ++k) {
        L[B(k)] = ++top;
        L[C(k)] = --bottom;
    }
    for (int j = 1; j <= p - q; ++j) L[D(q + j)] = ++top;
    for (int k = 1; k <= q; ++k) L[D(k)] = ++top;
    // Viewed from the other side, so that the result is T(p,q) and not its mirror.
    for (int& x : L) x = -x;

    auto next = [&](int i) { return ((i - q - 1) % p + p) % p + 1; };
    KnotDiagram d;
    std::vector<bool> seen(p + 1, false);
    for (int s = 1; s <= p; ++s) {
        if (seen[s]) continue;
        std::vector<Edge> e;
        for (int i = s; !seen[i]; i = next(i)) {
            seen[i] = true;
            e.push_back({kWest, kCentre, L[A(i)]});
            if (i <= q) {
                e.push_back({kCentre, kNorth, L[B(i)]});
                e.push_back({kNorth, kCentre, L[C(i)]});
            }
            e.push_back({kCentre, kWest, L[D(i)]});
        }
        d.strands.push_back(strand_from(e));
    }

    ConstructionResult r;
    r.spec = spec;
    r.ribbon = unit_ribbon(d);
    r.expected_ribbonlength = ExactLength(Rational(p + q));
    r.expected_sticks = 2 * p + 2 * q;
    r.expected_crossing_number = std::min(p * (q - 1), q * (p - 1));
    r.components = std::gcd(p, q);
    if (r.components == 1) r.expected_topology = Topology::annulus;
    else r.note = "link with " + std::to_string(r.components) + " components";
    return r;
}

// ---------------------------------------------------------------- pretzels

namespace {

// Square symmetry: optional reflection in the east-west axis, then a
// counterclockwise rotation by rot quarter turns. A reflected region is
// turned over, so its layer order is reversed.
struct Placement {
    int rot = 0;
    bool reflect = false;

    int apply(int s) const {
        if (s == kCentre) return s;
        if (reflect) s = (4 - s) % 4;
        return (s + rot) % 4;
    }
};

// End labels of a twist region in the usual upright pretzel picture.
enum Label { kSW = 0, kNE = 1, kSE = 2, kNW = 3 };

struct Region {
    std::array<std::vector<Edge>, 2> strands;  // 0 starts west, 1 starts south
    std::array<int, 4> side{};                 // per label
    std::array<int, 4> strand{};
    std::array<bool, 4> is_start{};
};

Region make_region(int n, int offset, Placement g) {
    Region R;
    int m = std::abs(n);
    for (int s = 0; s < 2; ++s) {
        int at = s == 0 ? kWest : kSouth;
        for (int k = 0; k < m; ++k) {
            R.strands[s].push_back({at, opposite(at), twist_layer(n, s == 0, k)});
            at = opposite(at);
        }
    }
    // Odd regions: SW-NE and SE-NW strands. Even regions: SW-NW and SE-NE.
    std::array<int, 4> which = m % 2 ? std::array<int, 4>{0, 0, 1, 1} : std::array<int, 4>{0, 1, 1, 0};
    std::array<bool, 4> start = {true, false, true, false};
    for (int l = 0; l < 4; ++l) {
        int s = which[l];
        const auto& e = R.strands[s];
        R.strand[l] = s;
        R.is_start[l] = start[l];
        R.side[l] = g.apply(start[l] ? e.front().from : e.back().to);
    }
    for (auto& st : R.strands)
        for (Edge& e : st) {
            e.from = g.apply(e.from);
            e.to = g.apply(e.to);
            if (g.reflect) e.layer = 2 * m - 1 - e.layer;
            e.layer += offset;
        }
    return R;
}

struct Layout {
    std::array<Placement, 3> place;
    unsigned trims = 0;  // two bits per connection: cut the piece before / after it at the centre
};

Layout layout_for(int pretzel_case) {
    switch (pretzel_case) {
        case 1:
        case 2: return {{Placement{0, false}, Placement{1, true}, Placement{0, false}}, 0};
        case 3:
        case 4: return {{Placement{0, false}, Placement{2, false}, Placement{3, false}}, 0b000100};
        default: return {{Placement{0, false}, Placement{2, false}, Placement{3, false}}, 0b010100};
    }
}

// Regions p, q, r stacked bottom to top on one square. Ends that land on the
// same side are glued with no extra length; other pairs are joined through
// the centre underneath the stack.
KnotDiagram assemble_pretzel(const std::array<int, 3>& pqr, const Layout& lay) {
    std::array<Region, 3> reg;
    int offset = 0;
    for (int i = 0; i < 3; ++i) {
        reg[i] = make_region(pqr[i], offset, lay.place[i]);
        offset += 2 * std::abs(pqr[i]);
    }
    // Region i's NE end meets region i+1's NW end; SE meets the next SW.
    auto partner = [](int rg, int lb) -> std::pair<int, int> {
        switch (lb) {
            case kNE: return {(rg + 1) % 3, kNW};
            case kNW: return {(rg + 2) % 3, kNE};
            case kSE: return {(rg + 1) % 3, kSW};
            default: return {(rg + 2) % 3, kSE};
        }
    };
    KnotDiagram d;
    std::array<std::array<bool, 4>, 3> used{};
    int bottom = 0, joins = 0;
    for (int r0 = 0; r0 < 3; ++r0)
        for (int l0 = 0; l0 < 4; ++l0) {
            if (used[r0][l0]) continue;
            std::vector<Edge> cur;
            bool trim_next = false;
            int rg = r0, lb = l0;
            while (!used[rg][lb]) {
                const Region& R = reg[rg];
                int s = R.strand[lb];
                int other = 0;
                for (int l = 0; l < 4; ++l)
                    if (l != lb && R.strand[l] == s) other = l;
                used[rg][lb] = used[rg][other] = true;
                std::vector<Edge> piece = R.strands[s];
                if (!R.is_start[lb]) {
                    std::reverse(piece.begin(), piece.end());
                    for (Edge& e : piece) std::swap(e.from, e.to);
                }
                if (trim_next) piece.front().from = kCentre;
                trim_next = false;
                cur.insert(cur.end(), piece.begin(), piece.end());
                auto [rg2, lb2] = partner(rg, other);
                int s1 = R.side[other], s2 = reg[rg2].side[lb2];
                if (s1 != s2) {
                    unsigned t = (lay.trims >> (2 * joins)) & 3u;
                    ++joins;
                    int l1 = --bottom, l2 = --bottom;
                    if (t & 1u) cur.back().to = kCentre;
                    else cur.push_back({s1, kCentre, l1});
                    if (t & 2u) trim_next = true;
                    else cur.push_back({kCentre, s2, l2});
                }
                rg = rg2;
                lb = lb2;
            }
            if (trim_next) cur.front().from = kCentre;
            d.strands.push_back(strand_from(cur));
        }
    return d;
}

void mirror_layers(KnotDiagram& d) {
    for (Strand& s : d.strands)
        for (int& l : s.layers) l = -l;
}

}  // namespace

PretzelPlan plan_pretzel(int p, int q, int r) {
    check_spec({FamilyKind::pretzel, {p, q, r}});
    std::array<int, 3> v{p, q, r};
    int evens = 0;
    for (int x : v) evens += x % 2 == 0;
    PretzelPlan plan;
    plan.link = evens >= 2;
    std::array<int, 3> best{};
    // All six orders are the same pretzel knot; try them with and without mirroring.
    std::array<int, 3> idx{0, 1, 2};
    do {
        for (int m = 0; m < 2; ++m) {
            std::array<int, 3> w{v[idx[0]], v[idx[1]], v[idx[2]]};
            if (m)
                for (int& x : w) x = -x;
            auto odd = [](int x) { return x % 2 != 0; };
            int c = 0;
            if (odd(w[0]) && odd(w[1]) && odd(w[2])) {
                if (w[0] > 0 && w[1] > 0 && w[2] > 0) c = 1;
                else if (w[0] > 0 && w[1] > 0 && w[2] < 0) c = 2;
            } else if (odd(w[0]) && !odd(w[1]) && odd(w[2])) {
                if (w[0] > 0 && w[2] > 0) c = w[1] > 0 ? 3 : 4;
                else if (w[0] < 0 && w[1] > 0 && w[2] > 0) c = 5;
            }
            if (c && (plan.pretzel_case == 0 || c < plan.pretzel_case)) {
                plan.pretzel_case = c;
                plan.mirrored = m == 1;
                best = w;
            }
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    if (plan.pretzel_case == 0) {
        if (!plan.link)
            throw std::invalid_argument("pretzel " + join({p, q, r}) + " does not reduce to a supported layout");
        // Links: rotate two even entries into the last two places and use the first layout.
        plan.pqr = v;
        while (plan.pqr[1] % 2 != 0 || plan.pqr[2] % 2 != 0) std::rotate(plan.pqr.begin(), plan.pqr.begin() + 1, plan.pqr.end());
        return plan;
    }
    plan.pqr = best;
    return plan;
}

ConstructionResult gen_pretzel(int p, int q, int r) {
    PretzelPlan plan = plan_pretzel(p, q, r);
    KnotDiagram d = assemble_pretzel(plan.pqr, layout_for(plan.link ? 1 : plan.pretzel_case));
    if (plan.mirrored) mirror_layers(d);

    ConstructionResult res;
    res.spec = {FamilyKind::pretzel, {p, q, r}};
    res.ribbon = unit_ribbon(d);
    res.pretzel_case = plan.pretzel_case;
    res.normalized = plan.pqr;
    res.mirrored = plan.mirrored;
    res.components = static_cast<int>(d.strands.size());
    int total = std::abs(p) + std::abs(q) + std::abs(r);
    switch (plan.pretzel_case) {
        case 0: {
            bool all_even = plan.pqr[0] % 2 == 0;
            res.expected_ribbonlength = ExactLength(Rational(2 * total + (all_even ? 2 : 3)));
            res.expected_sticks = stick_count(d);
            break;
        }
        case 1:
        case 2:
            res.expected_ribbonlength = ExactLength(Rational(2 * total + 2));
            res.expected_sticks = 2 * (total + 2);
            res.expected_topology = Topology::annulus;
            break;
        case 3:
        case 4:
            res.expected_ribbonlength = ExactLength(Rational(2 * total + 2));
            res.expected_sticks = 2 * (total + 1) + 1;
            res.expected_topology = Topology::moebius;
            break;
        default:
            res.expected_ribbonlength = ExactLength(Rational(2 * total + 1));
            res.expected_sticks = 2 * (total + 1);
            res.expected_topology = Topology::annulus;
            break;
    }
    CrossingNumber cn = crossing_number_info(res.spec);
    res.expected_crossing_number = cn.value;
    res.crossing_number_is_bound = cn.is_bound;
    if (plan.link) {
        res.expected_topology.reset();
        res.note = "link: two or more even entries, outside the five knot layouts";
    }
    return res;
}

ConstructionResult gen_twist(int n) {
    check_spec({FamilyKind::twist, {n}});
    ConstructionResult r = gen_pretzel(n, 1, 1);
    r.spec = {FamilyKind::twist, {n}};
    r.expected_crossing_number = n + 2;
    r.crossing_number_is_bound = false;
    return r;
}

// ---------------------------------------------------------------- 2-bridge

namespace {

struct LatticePoint {
    long x = 0;
    long y = 0;
};

}  // namespace

TwoBridgeResult gen_two_bridge(const std::vector<int>& a) {
    FamilySpec spec{FamilyKind::two_bridge, a};
    check_spec(spec);
    // The four strings of the plat run as lattice staircases along the
    // diagonal x+y (time); their positions x-y are 2 apart. A crossing of
    // neighbouring strings is a lattice point where one passes horizontally
    // and the other vertically (4 edges); the other two strings take two
    // steps each and return to their positions. The first crossing fans the
    // strings out from two shared points and the last one gathers them in, so
    // the caps have no length and each crossing costs 8 edges.
    std::array<std::vector<LatticePoint>, 4> path;
    std::array<std::vector<int>, 4> lay;
    std::array<int, 4> slot{0, 1, 2, 3};  // string at each position
    const int cr = std::accumulate(a.begin(), a.end(), 0);
    long t = 0;
    int done = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        int i = k % 2 == 0 ? 1 : 0;  // twists alternate between positions 2-3 and 1-2
        bool east_over = k % 2 == 0;
        for (int j = 0; j < a[k]; ++j, ++done) {
            bool first = done == 0, last = done + 1 == cr;
            long sa = -2 + 2 * i;
            long px = (t + sa + 2) / 2, py = (t - sa) / 2;  // crossing point
            for (int pos = 0; pos < 4; ++pos) {
                int st = slot[pos];
                auto& P = path[st];
                if (first) P.push_back(pos <= i ? LatticePoint{px - 1, py} : LatticePoint{px, py - 1});
                LatticePoint s = P.back();
                int l = 2;
                auto step = [&](long dx1, long dy1, long dx2, long dy2) {
                    P.push_back({s.x + dx1, s.y + dy1});
                    P.push_back({s.x + dx1 + dx2, s.y + dy1 + dy2});
                    lay[st].push_back(l);
                    lay[st].push_back(l);
                };
                if (pos == i) {
                    l = east_over ? 2 : 1;
                    step(1, 0, 1, 0);
                } else if (pos == i + 1) {
                    l = east_over ? 1 : 2;
                    step(0, 1, 0, 1);
                } else if (first) {
                    pos < i ? step(0, 1, 0, 1) : step(1, 0, 1, 0);
                } else if (last) {
                    pos < i ? step(1, 0, 1, 0) : step(0, 1, 0, 1);
                } else {
                    pos < i ? step(1, 0, 0, 1) : step(0, 1, 1, 0);
                }
            }
            std::swap(slot[i], slot[i + 1]);
            t += 2;
        }
    }
    // Caps: strings 0,1 and 2,3 share their first points; the strings at
    // positions 1,2 and 3,4 share their last points.
    std::array<int, 4> top_partner{}, bottom_partner{1, 0, 3, 2};
    top_partner[slot[0]] = slot[1];
    top_partner[slot[1]] = slot[0];
    top_partner[slot[2]] = slot[3];
    top_partner[slot[3]] = slot[2];
    KnotDiagram d;
    std::array<bool, 4> seen{};
    for (int s0 = 0; s0 < 4; ++s0) {
        if (seen[s0]) continue;
        Strand raw;
        bool forward = true;
        for (int cur = s0; !seen[cur]; forward = !forward) {
            seen[cur] = true;
            auto P = path[cur];
            auto L = lay[cur];
            if (!forward) {
                std::reverse(P.begin(), P.end());
                std::reverse(L.begin(), L.end());
            }
            for (std::size_t e = 0; e < L.size(); ++e) {
                raw.vertices.push_back({Rational(P[e].x), Rational(P[e].y)});
                raw.layers.push_back(L[e]);
            }
            cur = forward ? top_partner[cur] : bottom_partner[cur];
        }
        // Merge unit steps that continue straight on the same layer.
        Strand st;
        std::size_t n = raw.size();
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t u = (v + n - 1) % n;
            Point in = raw.vertices[v] - raw.vertices[u];
            Point out = raw.vertex(v + 1) - raw.vertices[v];
            if (cross(in, out) == 0 && dot(in, out) > 0 && raw.layers[u] == raw.layers[v]) continue;
            st.vertices.push_back(raw.vertices[v]);
            st.layers.push_back(raw.layers[v]);
        }
        d.strands.push_back(std::move(st));
    }

    TwoBridgeResult out;
    ConstructionResult& r = out.step1;
    r.spec = spec;
    r.ribbon = unit_ribbon(d);
    r.expected_ribbonlength = ExactLength(Rational(8 * cr));
    r.expected_sticks = stick_count(d);
    r.expected_crossing_number = cr;
    r.components = static_cast<int>(d.strands.size());
    r.note = "planar lattice embedding before the halving step";
    out.step2_planar_length = 8 * cr - 2 * cr - 2;
    return out;
}

ConstructionResult generate(const FamilySpec& spec) {
    check_spec(spec);
    const auto& v = spec.params;
    switch (spec.kind) {
        case FamilyKind::torus_2p: return gen_torus_2p(v[0]);
        case FamilyKind::torus_pq: return gen_torus_pq(v[0], v[1]);
        case FamilyKind::pretzel: return gen_pretzel(v[0], v[1], v[2]);
        case FamilyKind::twist: return gen_twist(v[0]);
        case FamilyKind::two_bridge: return gen_two_bridge(v).step1;
        case FamilyKind::half_twists: break;
    }
    throw std::invalid_argument("half twists give an open patch, not a closed construction");
}

// ---------------------------------------------------------------- certification

PDCode reference_pd(const FamilySpec& spec) {
    check_spec(spec);
    const auto& v = spec.params;
    auto torus = [](int p, int q) {
        std::vector<int> word;
        for (int k = 0; k < p; ++k)
            for (int i = 1; i < q; ++i) word.push_back(i);
        return braid_closure_pd(word, q);
    };
    switch (spec.kind) {
        case FamilyKind::torus_2p: return torus(v[0], 2);
        case FamilyKind::torus_pq: return torus(std::max(v[0], v[1]), std::min(v[0], v[1]));
        case FamilyKind::pretzel: return pretzel_reference_pd(v[0], v[1], v[2]);
        case FamilyKind::twist: return pretzel_reference_pd(v[0], 1, 1);
        case FamilyKind::two_bridge: return four_plat_pd(v);
        case FamilyKind::half_twists: break;
    }
    throw std::invalid_argument("no reference diagram for an open patch");
}

namespace {

std::string reference_name(const FamilySpec& s) {
    const auto& v = s.params;
    switch (s.kind) {
        case FamilyKind::torus_2p: return "closure of sigma1^" + std::to_string(v[0]);
        case FamilyKind::torus_pq: {
            int p = std::max(v[0], v[1]), q = std::min(v[0], v[1]);
            if (q == 2) return "closure of sigma1^" + std::to_string(p);
            return "closure of (sigma1..sigma" + std::to_string(q - 1) + ")^" + std::to_string(p);
        }
        case FamilyKind::twist:
            if (v[0] == 2) return "twist region assembly P(2,1,1) (figure-eight)";
            return "twist region assembly P(" + std::to_string(v[0]) + ",1,1)";
        case FamilyKind::pretzel: return "twist region assembly P(" + join(v) + ")";
        case FamilyKind::two_bridge: return "four-plat [" + join(v) + "]";
        default: return "";
    }
}

// Bracket equality up to a factor +-A^k, the orientation-free comparison for links.
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a == b;
    int k = a.min_exp() - b.min_exp();
    LaurentPoly s = b.shifted(k);
    LaurentPoly neg = LaurentPoly() - s;
    return a == s || a == neg;
}

}  // namespace

Certification certify(const ConstructionResult& c) {
    Certification cert;
    if (c.spec.kind == FamilyKind::half_twists) return cert;
    cert.available = true;
    cert.reference = reference_name(c.spec);
    PDCode gen = extract_pd(c.diagram(), {true});
    PDCode ref = reference_pd(c.spec);
    cert.generated_components = component_count(gen);
    cert.expected_components = component_count(ref);
    if (cert.generated_components == 1 && cert.expected_components == 1) {
        cert.method = "jones";
        cert.generated = jones(gen);
        cert.expected = jones(ref);
        cert.match = cert.generated == cert.expected;
    } else {
        cert.method = "components and bracket up to units";
        cert.generated = kauffman_bracket(gen);
        cert.expected = kauffman_bracket(ref);
        cert.match = cert.generated_components == cert.expected_components &&
                     equal_up_to_unit(cert.generated, cert.expected);
    }
    return cert;
}

}  // namespace ribbonforge
