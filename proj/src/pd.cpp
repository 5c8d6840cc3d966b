#include "ribbonforge/pd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace ribbonforge {

namespace {

// Where an arc goes: the crossing it enters, whether it passes under, and
// the arc that leaves.
struct Passage {
    int crossing;
    bool under;
    int out;
};

std::map<int, Passage> successor_map(const PDCode& pd) {
    std::map<int, Passage> next;
    auto put = [&](int in, Passage p) {
        if (!next.emplace(in, p).second)
            throw std::invalid_argument("arc " + std::to_string(in) + " enters two crossings");
    };
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& x = pd.crossings[i];
        int c = static_cast<int>(i);
        put(x[0], {c, true, x[2]});
        if (pd.signs[i] > 0) put(x[3], {c, false, x[1]});
        else put(x[1], {c, false, x[3]});
    }
    return next;
}

}  // namespace

void validate_pd(const PDCode& pd) {
    if (pd.signs.size() != pd.crossings.size())
        throw std::invalid_argument("PD signs and crossings differ in length");
    if (pd.free_loops < 0) throw std::invalid_argument("negative free loop count");
    std::map<int, int> seen;
    for (const auto& x : pd.crossings)
        for (int a : x) ++seen[a];
    for (auto [label, n] : seen)
        if (n != 2)
            throw std::invalid_argument("arc " + std::to_string(label) + " appears " +
                                        std::to_string(n) + " times");
    for (int s : pd.signs)
        if (s != 1 && s != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
    successor_map(pd);
}

int component_count(const PDCode& pd) {
    validate_pd(pd);
    auto next = successor_map(pd);
    std::map<int, bool> visited;
    int comps = 0;
    for (const auto& [start, _] : next) {
        if (visited[start]) continue;
        ++comps;
        int a = start;
        while (!visited[a]) {
            visited[a] = true;
            a = next.at(a).out;
        }
    }
    return comps + pd.free_loops;
}

int writhe(const PDCode& pd) {
    return std::accumulate(pd.signs.begin(), pd.signs.end(), 0);
}

PDCode mirror(const PDCode& pd) {
    PDCode out = pd;
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        auto [a, b, c, d] = pd.crossings[i];
        if (pd.signs[i] > 0) out.crossings[i] = {d, a, b, c};
        else out.crossings[i] = {b, c, d, a};
        out.signs[i] = -pd.signs[i];
    }
    return out;
}

PDCode canonical_labels(const PDCode& pd) {
    validate_pd(pd);
    auto next = successor_map(pd);
    std::map<int, int> relabel;
    int label = 1;
    for (const auto& [start, _] : next) {
        if (relabel.count(start)) continue;
        int a = start;
        while (!relabel.count(a)) {
            relabel[a] = label++;
            a = next.at(a).out;
        }
    }
    PDCode out = pd;
    for (auto& x : out.crossings)
        for (int& a : x) a = relabel.at(a);
    return out;
}

std::string to_text(const PDCode& pd) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& x = pd.crossings[i];
        if (i) os << ", ";
        os << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
    }
    return os.str();
}

PDCode parse_pd(const std::string& text, const std::vector<int>& signs) {
    static const std::regex tuple(R"(X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
    PDCode pd;
    for (std::sregex_iterator it(text.begin(), text.end(), tuple), end; it != end; ++it) {
        const auto& m = *it;
        pd.crossings.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
    }
    std::string stripped = std::regex_replace(text, tuple, "");
    if (stripped.find_first_not_of(" ,\t\r\n") != std::string::npos)
        throw std::invalid_argument("unrecognised PD text near: " + stripped);
    if (!signs.empty()) {
        pd.signs = signs;
    } else {
        // Consecutive-label convention: the over strand runs from the 4th
        // entry to the 2nd exactly when the crossing is positive.
        for (const auto& x : pd.crossings) {
            int b = x[1], d = x[3];
            pd.signs.push_back((b - d == 1 || d - b > 1) ? 1 : -1);
        }
    }
    validate_pd(pd);
    return pd;
}

std::string gauss_code(const PDCode& pd) {
    validate_pd(pd);
    auto next = successor_map(pd);
    std::map<int, bool> visited;
    std::ostringstream os;
    bool first_comp = true;
    for (const auto& [start, _] : next) {
        if (visited[start]) continue;
        if (!first_comp) os << " | ";
        first_comp = false;
        int a = start;
        bool first = true;
        while (!visited[a]) {
            visited[a] = true;
            const Passage& p = next.at(a);
            if (!first) os << ", ";
            first = false;
            os << (p.under ? -(p.crossing + 1) : (p.crossing + 1));
            a = p.out;
        }
    }
    for (int i = 0; i < pd.free_loops; ++i) os << (first_comp && i == 0 ? "" : " | ") << "()";
    return os.str();
}

}  // namespace ribbonforge
