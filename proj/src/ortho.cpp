#include "nroots/ortho.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace nroots {

namespace {

// Small dynamic bitset, enough for |U| <= 128 universes but not capped there.
struct Bits {
    std::vector<uint64_t> w;

    explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    Bits and_with(const Bits& o) const {
        Bits r(*this);
        for (size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
        return r;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & o.w[i]);
        return c;
    }
    template <typename F> void for_each(F f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t x = w[i];
            while (x) {
                const int b = __builtin_ctzll(x);
                f(static_cast<int>(i * 64 + b));
                x &= x - 1;
            }
        }
    }
};

void bron_kerbosch(const std::vector<Bits>& adj, Bits clique, Bits cand, Bits excl,
                   std::vector<int>& stack, std::vector<std::vector<int>>& out) {
    if (cand.empty() && excl.empty()) {
        out.push_back(stack);
        return;
    }
    int pivot = -1, best = -1;
    auto consider = [&](int u) {
        const int c = cand.count_and(adj[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    };
    cand.for_each(consider);
    excl.for_each(consider);
    std::vector<int> branch;
    cand.for_each([&](int v) {
        if (!adj[pivot].test(v)) branch.push_back(v);
    });
    for (int v : branch) {
        stack.push_back(v);
        bron_kerbosch(adj, clique, cand.and_with(adj[v]), excl.and_with(adj[v]), stack, out);
        stack.pop_back();
        cand.w[v >> 6] &= ~(uint64_t(1) << (v & 63));
        excl.set(v);
    }
}

uint64_t fnv64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_signature(const RootSystem& rs, const std::vector<RootId>& universe) {
    std::ostringstream os;
    os << rs.type().name();
    for (RootId a : universe) os << "," << a;
    return os.str();
}

std::optional<OmegaSet> cache_load(const std::string& dir, const RootSystem& rs,
                                   const std::vector<RootId>& universe) {
    const std::string sig = cache_signature(rs, universe);
    std::ostringstream name;
    name << dir << "/omega-" << std::hex << fnv64(sig) << ".txt";
    std::ifstream in(name.str());
    if (!in) return std::nullopt;
    std::string header, stored;
    if (!std::getline(in, header) || header != "nroots-omega v1") return std::nullopt;
    if (!std::getline(in, stored) || stored != sig) return std::nullopt;
    OmegaSet om;
    om.universe = universe;
    size_t members = 0;
    in >> om.kappa >> members;
    om.members.resize(members);
    for (auto& m : om.members) {
        m.resize(om.kappa);
        for (auto& x : m) {
            in >> x;
            if (!in || x < 0 || x >= rs.num_roots()) return std::nullopt;
        }
    }
    return om;
}

void cache_store(const std::string& dir, const RootSystem& rs, const OmegaSet& om) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string sig = cache_signature(rs, om.universe);
    std::ostringstream name;
    name << dir << "/omega-" << std::hex << fnv64(sig) << ".txt";
    const std::string tmp = name.str() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "nroots-omega v1\n" << sig << "\n";
        out << om.kappa << " " << om.members.size() << "\n";
        for (const auto& m : om.members) {
            for (size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
            out << "\n";
        }
    }
    std::filesystem::rename(tmp, name.str(), ec);
}

} // namespace

const char* feature_name(FeatureKind k) {
    switch (k) {
    case FeatureKind::Alignment: return "alignment";
    case FeatureKind::Crossing: return "crossing";
    case FeatureKind::Nesting: return "nesting";
    }
    return "?";
}

bool orthogonal_set(const RootSystem& rs, const KRoot& r) {
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = i + 1; j < r.size(); ++j)
            if (rs.gram(r[i], r[j]) != 0) return false;
    return true;
}

OmegaSet enumerate_omega(const RootSystem& rs, std::vector<RootId> universe) {
    if (universe.empty()) throw EmptyUniverse("Omega_U is undefined for empty U");
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    for (RootId a : universe)
        if (!rs.is_positive(a)) throw Error("universe must consist of positive roots");

    const char* env = std::getenv("ROOTS_CACHE_DIR");
    if (env && *env) {
        if (auto hit = cache_load(env, rs, universe)) return *hit;
    }

    const int n = static_cast<int>(universe.size());
    std::vector<Bits> adj(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rs.gram(universe[i], universe[j]) == 0) {
                adj[i].set(j);
                adj[j].set(i);
            }
    Bits cand(n);
    for (int i = 0; i < n; ++i) cand.set(i);
    std::vector<std::vector<int>> cliques;
    std::vector<int> stack;
    bron_kerbosch(adj, Bits(n), cand, Bits(n), stack, cliques);

    OmegaSet om;
    om.universe = universe;
    size_t kappa = 0;
    for (const auto& c : cliques) kappa = std::max(kappa, c.size());
    om.kappa = static_cast<int>(kappa);
    for (const auto& c : cliques) {
        if (c.size() != kappa) continue;
        KRoot m(c.size());
        for (size_t i = 0; i < c.size(); ++i) m[i] = universe[c[i]];
        std::sort(m.begin(), m.end());
        om.members.push_back(std::move(m));
    }
    std::sort(om.members.begin(), om.members.end());

    if (env && *env) cache_store(env, rs, om);
    return om;
}

KRoot support(const RootSystem& rs, const KRoot& r, RootId alpha) {
    Coeffs twice = 2 * rs.coeffs(alpha);
    Coeffs proj = Coeffs::Zero(rs.rank());
    KRoot sup;
    for (RootId b : r) {
        const int g = rs.gram(alpha, b);
        if (g != 0) {
            proj += g * rs.coeffs(b);
            sup.push_back(b);
        }
    }
    if (proj != twice)
        throw NotInSpan("root does not lie in the span of the orthogonal set");
    return sup;
}

std::vector<RootId> span_roots(const RootSystem& rs, const KRoot& h) {
    std::vector<RootId> out;
    for (RootId g = 0; g < rs.num_roots(); ++g) {
        Coeffs proj = Coeffs::Zero(rs.rank());
        for (RootId b : h) proj += rs.gram(g, b) * rs.coeffs(b);
        if (proj == 2 * rs.coeffs(g)) out.push_back(g);
    }
    return out;
}

std::optional<RootId> coplanar_center(const RootSystem& rs, const KRoot& q) {
    if (q.size() != 4) return std::nullopt;
    Coeffs sum = Coeffs::Zero(rs.rank());
    for (RootId b : q) sum += rs.coeffs(b);
    for (int i = 0; i < rs.rank(); ++i)
        if (sum[i] % 2 != 0) return std::nullopt;
    return rs.find(sum / 2);
}

std::vector<KRoot> d_sets(const RootSystem& rs, const KRoot& r, int k) {
    if (k != 4 && k != 6) throw Error("d_sets supports k = 4 or 6");
    const int n = static_cast<int>(r.size());
    std::vector<KRoot> out;
    if (n < k) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        KRoot h(k);
        for (int i = 0; i < k; ++i) h[i] = r[idx[i]];
        if (k == 4) {
            if (coplanar_center(rs, h)) out.push_back(h);
        } else {
            if (span_roots(rs, h).size() == 60) out.push_back(h); // |Phi(D6)| = 60
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

FeatureKind classify_feature(const RootSystem& rs, const KRoot& q) {
    if (!coplanar_center(rs, q))
        throw NotCoplanar("quadruple does not sum to twice a root");
    auto psi = span_roots(rs, q);
    auto simple = induced_simple_system(rs, psi);
    int hits = 0;
    for (RootId b : q)
        if (std::find(simple.begin(), simple.end(), b) != simple.end()) ++hits;
    switch (hits) {
    case 3: return FeatureKind::Alignment;
    case 0: return FeatureKind::Crossing;
    case 1: return FeatureKind::Nesting;
    default:
        throw MalformedSubsystem("|Q cap Pi_Psi| = " + std::to_string(hits));
    }
}

FeatureCounts feature_counts(const RootSystem& rs, const KRoot& r) {
    FeatureCounts fc;
    for (const KRoot& q : d_sets(rs, r, 4)) {
        switch (classify_feature(rs, q)) {
        case FeatureKind::Alignment: ++fc.alignments; break;
        case FeatureKind::Crossing: ++fc.crossings; break;
        case FeatureKind::Nesting: ++fc.nestings; break;
        }
    }
    return fc;
}

bool admits_nroots(const RootSystem& rs) {
    const DynkinType& t = rs.type();
    if (t.family == Family::D) return t.rank % 2 == 0;
    if (t.family == Family::E) return t.rank >= 7;
    return false;
}

KRoot extend_to_nroot(const RootSystem& rs, const KRoot& partial,
                      const std::vector<RootId>& avoid) {
    if (!admits_nroots(rs))
        throw CannotExtend("n-roots exist only in types E7, E8, and D_n for n even");
    if (!orthogonal_set(rs, partial)) throw Error("partial set is not orthogonal");
    std::vector<bool> avoided(rs.num_roots(), false);
    for (RootId a : avoid) avoided[a] = true;

    auto grow = [&](bool respect_avoid) {
        KRoot cur = partial;
        std::sort(cur.begin(), cur.end());
        while (static_cast<int>(cur.size()) < rs.rank()) {
            RootId pick = -1;
            for (RootId c = rs.num_positive(); c < rs.num_roots(); ++c) {
                if (respect_avoid && avoided[c]) continue;
                if (std::find(cur.begin(), cur.end(), c) != cur.end()) continue;
                bool ok = true;
                for (RootId b : cur)
                    if (rs.gram(c, b) != 0) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    pick = c;
                    break;
                }
            }
            if (pick < 0) return KRoot{};
            cur.insert(std::lower_bound(cur.begin(), cur.end(), pick), pick);
        }
        return cur;
    };

    KRoot full = grow(true);
    if (full.empty()) full = grow(false);
    if (full.empty()) throw CannotExtend("greedy completion failed");
    return full;
}

} // namespace nroots
