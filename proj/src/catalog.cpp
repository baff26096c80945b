#include "nroots/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace nroots {

std::vector<RootId> positive_universe(const RootSystem& rs) { return rs.positive_ids(); }

std::vector<RootId> odd_height_universe(const RootSystem& rs, int node) {
    if (node < 1 || node > rs.rank())
        throw InvalidNode("node out of range: " + std::to_string(node));
    std::vector<RootId> out;
    for (RootId a = rs.num_positive(); a < rs.num_roots(); ++a)
        if (rs.coeffs(a)[node - 1] % 2 == 1) out.push_back(a);
    return out;
}

std::vector<RootId> odd_pair_universe(const RootSystem& rs, int node) {
    if (rs.type().family != Family::D)
        throw InvalidType("odd-pair universes are defined in type D");
    auto a = odd_height_universe(rs, node);
    auto b = odd_height_universe(rs, rs.rank());
    std::vector<RootId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

KRoot matching_to_kroot(const RootSystem& rs, const Matching& m) {
    if (rs.type().family != Family::D || rs.rank() != m.points())
        throw Error("matching model needs a D_{2k} system matching the point count");
    KRoot r;
    for (auto [i, j] : m.blocks) {
        Eigen::VectorXi e = Eigen::VectorXi::Zero(rs.rank());
        e[i - 1] = 1;
        e[j - 1] = 1;
        r.push_back(*rs.from_epsilon(e));
    }
    std::sort(r.begin(), r.end());
    return r;
}

KRoot perm_to_kroot(const RootSystem& rs, const Perm& pi) {
    const int k = static_cast<int>(pi.size());
    if (rs.type().family != Family::D || rs.rank() != 2 * k)
        throw Error("permutation model needs a D_{2k} system");
    KRoot r;
    for (int i = 1; i <= k; ++i) {
        Eigen::VectorXi e = Eigen::VectorXi::Zero(rs.rank());
        e[i - 1] = 1;
        e[k + pi[i - 1] - 1] = 1;
        r.push_back(*rs.from_epsilon(e));
    }
    std::sort(r.begin(), r.end());
    return r;
}

namespace {

Table1Row table1_cell(const RootSystem& rs, int n, int p) {
    Table1Row row;
    row.n = n;
    row.p = p;
    row.triple = "T(E" + std::to_string(n) + "," + std::to_string(p) + ")";
    std::vector<int> gens;
    for (int i = 1; i <= n; ++i)
        if (i != p) gens.push_back(i);
    auto universe = odd_height_universe(rs, p);
    row.u_size = static_cast<int>(universe.size());
    ScaledInstance inst = make_instance(rs, gens, universe);
    row.omega_size = inst.size();
    row.kappa = inst.omega.kappa;
    QPVerdict v = verify_qp_triple(inst);
    row.pass = v.quasiparabolic();
    if (row.pass) {
        QPoly ps;
        for (int lvl : inst.levels) ps += QPoly::monomial(lvl);
        if (auto d = factor_quantum_integers(ps)) {
            row.degrees = *d;
            row.degrees_ok = true;
        }
    } else {
        std::ostringstream os;
        bool sep = false;
        auto add = [&](const char* what) {
            if (sep) os << "+";
            os << what;
            sep = true;
        };
        if (!v.scaled) add("scaled");
        if (!v.qp1) add("qp1");
        if (!v.qp2) add("qp2");
        row.failure = os.str() + "-check failure";
    }
    return row;
}

} // namespace

std::vector<Table1Row> table1(int jobs) {
    struct Cell {
        int n, p;
    };
    std::vector<Cell> cells;
    for (int n : {6, 7, 8})
        for (int p = 1; p <= n; ++p) cells.push_back({n, p});

    std::vector<Table1Row> rows(cells.size());
    const RootSystem e6(DynkinType(Family::E, 6));
    const RootSystem e7(DynkinType(Family::E, 7));
    const RootSystem e8(DynkinType(Family::E, 8));
    auto system_for = [&](int n) -> const RootSystem& {
        return n == 6 ? e6 : (n == 7 ? e7 : e8);
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < cells.size(); ++i)
            rows[i] = table1_cell(system_for(cells[i].n), cells[i].n, cells[i].p);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                rows[i] = table1_cell(system_for(cells[i].n), cells[i].n, cells[i].p);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

GameDag game_dag(const RootSystem& rs, const std::vector<int>& generator_nodes,
                 const std::vector<RootId>& universe) {
    ScaledInstance inst = make_instance(rs, generator_nodes, universe);
    QPVerdict v = verify_qp_triple(inst);
    if (!v.quasiparabolic())
        throw NotQuasiparabolic("game DAG requires a verified QP-triple");

    GameDag dag;
    dag.vertices = inst.universe;
    const int n = static_cast<int>(dag.vertices.size());
    std::vector<bool> parabolic_pos(rs.num_roots(), false);
    for (RootId r : inst.reflections) parabolic_pos[r] = true;

    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Coeffs diff = rs.coeffs(dag.vertices[j]) - rs.coeffs(dag.vertices[i]);
            auto d = rs.find(diff);
            if (d && parabolic_pos[*d]) {
                dag.edges.emplace_back(i, j);
                succ[i].push_back(j);
            }
        }

    // Backward induction; edges increase height, so process high to low.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return rs.height(dag.vertices[a]) > rs.height(dag.vertices[b]);
    });
    std::vector<bool> in_kernel(n, false);
    for (int x : order) {
        bool escapes = false;
        for (int y : succ[x])
            if (in_kernel[y]) {
                escapes = true;
                break;
            }
        in_kernel[x] = !escapes;
    }
    KRoot kernel;
    for (int i = 0; i < n; ++i)
        if (in_kernel[i]) kernel.push_back(dag.vertices[i]);

    // Cross-check against the level function: every rho = 0 member of
    // Omega_U must coincide with the backward-induction kernel.
    for (int x = 0; x < inst.size(); ++x)
        if (inst.levels[x] == 0 && inst.omega.members[x] != kernel)
            throw Error("level-0 member disagrees with the game-theoretic kernel");

    dag.kernels.push_back(std::move(kernel));
    return dag;
}

} // namespace nroots
