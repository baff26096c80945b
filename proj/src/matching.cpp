#include "nroots/matching.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace nroots {

Matching Matching::of(std::vector<std::pair<int, int>> blocks) {
    Matching m;
    m.blocks = std::move(blocks);
    std::vector<bool> seen(2 * m.blocks.size() + 1, false);
    for (auto& [a, b] : m.blocks) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > static_cast<int>(2 * m.blocks.size()) || seen[a] || seen[b])
            throw Error("blocks do not partition [2k]");
        seen[a] = seen[b] = true;
    }
    std::sort(m.blocks.begin(), m.blocks.end());
    return m;
}

namespace {

void matchings_rec(std::vector<int>& free, std::vector<std::pair<int, int>>& acc,
                   std::vector<Matching>& out) {
    if (free.empty()) {
        out.push_back(Matching::of(acc));
        return;
    }
    const int a = free.front();
    for (size_t t = 1; t < free.size(); ++t) {
        const int b = free[t];
        std::vector<int> rest;
        for (int v : free)
            if (v != a && v != b) rest.push_back(v);
        acc.emplace_back(a, b);
        matchings_rec(rest, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Matching> all_matchings(int two_k) {
    if (two_k < 2 || two_k % 2 != 0) throw Error("perfect matchings need an even point count");
    std::vector<int> pts(two_k);
    std::iota(pts.begin(), pts.end(), 1);
    std::vector<std::pair<int, int>> acc;
    std::vector<Matching> out;
    matchings_rec(pts, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

int perm_length(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

Perm inverse_perm(const Perm& p) {
    Perm inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

std::vector<Perm> all_permutations(int k) {
    Perm p(k);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm sigma(const Matching& m) {
    Perm s(m.points());
    for (int t = 0; t < m.k(); ++t) {
        s[2 * t] = m.blocks[t].first;
        s[2 * t + 1] = m.blocks[t].second;
    }
    return s;
}

Perm tau(const Matching& m) {
    Perm t(m.points());
    for (auto [a, b] : m.blocks) {
        t[a - 1] = b;
        t[b - 1] = a;
    }
    return t;
}

std::vector<std::pair<int, int>> inversions(const Perm& p) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) out.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

std::vector<std::pair<int, int>> matching_diagram(const Matching& m) {
    const Perm t = tau(m);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= m.points(); ++i)
        for (int j = i + 1; j <= m.points(); ++j)
            if (t[i - 1] > j && t[j - 1] > i) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> rothe_diagram(const Perm& p) {
    const Perm inv = inverse_perm(p);
    const int k = static_cast<int>(p.size());
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (p[i - 1] > j && inv[j - 1] > i) out.emplace_back(i, j);
    return out;
}

MatchingStats matching_stats(const Matching& m) {
    MatchingStats st;
    st.sigma_m = sigma(m);
    st.tau_m = tau(m);
    st.inversions_m = inversions(st.sigma_m);
    st.diagram_m = matching_diagram(m);
    std::set<std::pair<int, int>> image;
    for (auto [i, j] : st.inversions_m) {
        const std::pair<int, int> y{st.tau_m[st.sigma_m[i - 1] - 1], st.sigma_m[j - 1]};
        st.psi_image.push_back(y);
        image.insert(y);
    }
    std::set<std::pair<int, int>> target(st.diagram_m.begin(), st.diagram_m.end());
    st.bijection_ok = image.size() == st.inversions_m.size() && image == target;
    if (!st.bijection_ok) {
        std::ostringstream os;
        os << "psi_M is not a bijection I_M -> D_M for matching {";
        for (auto [a, b] : m.blocks) os << "{" << a << "," << b << "}";
        os << "}";
        throw BijectionFailure(os.str());
    }
    return st;
}

} // namespace nroots
