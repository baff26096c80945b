#include "nroots/qp.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace nroots {

namespace {

std::string kroot_key(const KRoot& r) {
    std::string k;
    k.reserve(r.size() * sizeof(RootId));
    for (RootId x : r) k.append(reinterpret_cast<const char*>(&x), sizeof(RootId));
    return k;
}

std::string kroot_str(const KRoot& r) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "}";
    return os.str();
}

} // namespace

KRoot standard_act(const RootSystem& rs, RootId w, const KRoot& r) {
    KRoot out(r.size());
    for (size_t i = 0; i < r.size(); ++i) out[i] = rs.abs_id(rs.reflected(w, r[i]));
    std::sort(out.begin(), out.end());
    return out;
}

int ScaledInstance::member_index(const KRoot& r) const {
    auto it = index_.find(kroot_key(r));
    return it == index_.end() ? -1 : it->second;
}

ScaledInstance make_instance(const RootSystem& rs, std::vector<int> generator_nodes,
                             std::vector<RootId> universe) {
    ScaledInstance inst;
    inst.rs = &rs;
    std::sort(generator_nodes.begin(), generator_nodes.end());
    inst.generator_nodes = std::move(generator_nodes);
    inst.omega = enumerate_omega(rs, std::move(universe));
    inst.universe = inst.omega.universe;
    for (int i = 0; i < inst.size(); ++i)
        inst.index_.emplace(kroot_key(inst.omega.members[i]), i);
    inst.levels.resize(inst.size());
    for (int i = 0; i < inst.size(); ++i)
        inst.levels[i] = level_wrt(rs, inst.universe, inst.omega.members[i]);
    for (RootId a : parabolic_subroots(rs, inst.generator_nodes))
        if (rs.is_positive(a)) inst.reflections.push_back(a);
    inst.gen_act.resize(inst.generator_nodes.size());
    for (size_t g = 0; g < inst.generator_nodes.size(); ++g) {
        const RootId s = rs.simple_root(inst.generator_nodes[g]);
        inst.gen_act[g].resize(inst.size());
        for (int i = 0; i < inst.size(); ++i)
            inst.gen_act[g][i] = inst.member_index(standard_act(rs, s, inst.omega.members[i]));
    }
    return inst;
}

QPVerdict verify_qp_triple(const ScaledInstance& inst, int witness_cap) {
    const RootSystem& rs = *inst.rs;
    QPVerdict v;
    int closure_fail = 0, scaled_fail = 0, qp1_fail = 0, qp2_fail = 0;
    auto witness = [&](int& counter, Witness w) {
        if (counter++ < witness_cap) v.witnesses.push_back(std::move(w));
    };

    // Scaled W-set: closed under the generators, with |lambda(sx)-lambda(x)| <= 1.
    for (size_t g = 0; g < inst.generator_nodes.size(); ++g) {
        const int node = inst.generator_nodes[g];
        for (int x = 0; x < inst.size(); ++x) {
            const int sx = inst.gen_act[g][x];
            if (sx < 0) {
                witness(closure_fail, {"closure", rs.simple_root(node), node, x,
                                       "s" + std::to_string(node) + "." + std::to_string(x) +
                                           " leaves Omega_U"});
                continue;
            }
            if (std::abs(inst.levels[sx] - inst.levels[x]) > 1) {
                std::ostringstream os;
                os << "lambda jumps from " << inst.levels[x] << " to " << inst.levels[sx];
                witness(scaled_fail, {"scaled", rs.simple_root(node), node, x, os.str()});
            }
        }
    }
    v.scaled = closure_fail == 0 && scaled_fail == 0;

    // QP1 and QP2 sweep all reflections of W_I.
    if (closure_fail == 0) {
        for (RootId r : inst.reflections) {
            for (int x = 0; x < inst.size(); ++x) {
                const int rx = inst.member_index(standard_act(rs, r, inst.omega.members[x]));
                if (rx < 0) {
                    witness(closure_fail,
                            {"closure", r, -1, x, "reflection orbit leaves Omega_U"});
                    continue;
                }
                if (inst.levels[rx] == inst.levels[x] && rx != x) {
                    std::ostringstream os;
                    os << "r." << x << " = " << rx << " at equal level " << inst.levels[x];
                    witness(qp1_fail, {"qp1", r, -1, x, os.str()});
                }
                if (inst.levels[rx] > inst.levels[x]) {
                    for (size_t g = 0; g < inst.generator_nodes.size(); ++g) {
                        const int srx = inst.gen_act[g][rx];
                        const int sx = inst.gen_act[g][x];
                        if (srx < 0 || sx < 0) continue; // reported above
                        if (inst.levels[srx] < inst.levels[sx] && rx != sx) {
                            std::ostringstream os;
                            os << "r." << x << "=" << rx << " but s" << inst.generator_nodes[g]
                               << " sends levels " << inst.levels[x] << "," << inst.levels[rx]
                               << " to " << inst.levels[sx] << "," << inst.levels[srx];
                            witness(qp2_fail,
                                    {"qp2", r, inst.generator_nodes[g], x, os.str()});
                        }
                    }
                }
            }
        }
    }
    v.scaled = v.scaled && closure_fail == 0;
    v.qp1 = closure_fail == 0 && qp1_fail == 0;
    v.qp2 = closure_fail == 0 && qp2_fail == 0;

    // Transitivity: one BFS orbit under the generators.
    if (closure_fail == 0 && inst.size() > 0) {
        std::vector<bool> seen(inst.size(), false);
        std::deque<int> queue{0};
        seen[0] = true;
        int reached = 1;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (size_t g = 0; g < inst.generator_nodes.size(); ++g) {
                const int y = inst.gen_act[g][x];
                if (y >= 0 && !seen[y]) {
                    seen[y] = true;
                    ++reached;
                    queue.push_back(y);
                }
            }
        }
        v.transitive = reached == inst.size();
    }
    return v;
}

QPVerdict verify_qp_triple(const RootSystem& rs, std::vector<int> generator_nodes,
                           std::vector<RootId> universe, int witness_cap) {
    return verify_qp_triple(make_instance(rs, std::move(generator_nodes), std::move(universe)),
                            witness_cap);
}

Extremals extremal_elements(const ScaledInstance& inst) {
    Extremals e;
    for (int x = 0; x < inst.size(); ++x) {
        bool minimal = true, maximal = true;
        for (size_t g = 0; g < inst.generator_nodes.size(); ++g) {
            const int sx = inst.gen_act[g][x];
            if (sx < 0) continue;
            if (inst.levels[sx] < inst.levels[x]) minimal = false;
            if (inst.levels[sx] > inst.levels[x]) maximal = false;
        }
        if (minimal) e.minimal.push_back(x);
        if (maximal) e.maximal.push_back(x);
    }
    return e;
}

QPOrder qp_order(const ScaledInstance& inst) {
    QPVerdict v = verify_qp_triple(inst);
    if (!v.quasiparabolic())
        throw NotQuasiparabolic("instance failed the quasiparabolic checks");

    const int n = inst.size();
    std::vector<std::vector<int>> up(n); // generating relations x -> rx with lambda increase
    for (RootId r : inst.reflections) {
        for (int x = 0; x < n; ++x) {
            const int rx = inst.member_index(standard_act(*inst.rs, r, inst.omega.members[x]));
            if (inst.levels[rx] > inst.levels[x]) up[x].push_back(rx);
        }
    }
    for (auto& e : up) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }

    QPOrder ord;
    int min_level = n ? *std::min_element(inst.levels.begin(), inst.levels.end()) : 0;
    ord.ranks.resize(n);
    for (int x = 0; x < n; ++x) ord.ranks[x] = inst.levels[x] - min_level;

    // Strict reachability, filled in decreasing level order.
    const int words = (n + 63) / 64;
    ord.reach_.assign(n, std::vector<uint64_t>(words, 0));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return inst.levels[a] > inst.levels[b]; });
    for (int x : order) {
        for (int y : up[x]) {
            ord.reach_[x][y >> 6] |= uint64_t(1) << (y & 63);
            for (int w = 0; w < words; ++w) ord.reach_[x][w] |= ord.reach_[y][w];
        }
    }

    // Transitive reduction: keep x -> y unless some other successor reaches y.
    for (int x = 0; x < n; ++x) {
        for (int y : up[x]) {
            bool redundant = false;
            for (int z : up[x]) {
                if (z == y) continue;
                if ((ord.reach_[z][y >> 6] >> (y & 63)) & 1) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) ord.covers.emplace_back(x, y);
        }
    }
    std::sort(ord.covers.begin(), ord.covers.end());
    return ord;
}

RankReport rank_consistency(const ScaledInstance& inst) {
    QPVerdict v = verify_qp_triple(inst);
    RankReport rep;
    if (!v.transitive) {
        rep.detail = "instance is not transitive";
        return rep;
    }
    Extremals e = extremal_elements(inst);
    if (e.minimal.size() != 1) {
        rep.detail = "expected a unique minimal element, found " +
                     std::to_string(e.minimal.size());
        return rep;
    }
    const int x0 = e.minimal.front();
    std::vector<int> dist(inst.size(), -1);
    std::deque<int> queue{x0};
    dist[x0] = 0;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (size_t g = 0; g < inst.generator_nodes.size(); ++g) {
            const int y = inst.gen_act[g][x];
            if (y >= 0 && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    for (int x = 0; x < inst.size(); ++x) {
        if (dist[x] != inst.levels[x] - inst.levels[x0]) {
            std::ostringstream os;
            os << "member " << kroot_str(inst.omega.members[x]) << " has BFS distance "
               << dist[x] << " but level offset " << inst.levels[x] - inst.levels[x0];
            rep.detail = os.str();
            return rep;
        }
        rep.max_distance = std::max(rep.max_distance, dist[x]);
    }
    rep.ok = true;
    return rep;
}

} // namespace nroots
