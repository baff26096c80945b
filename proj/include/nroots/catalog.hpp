#pragma once

#include <string>
#include <vector>

#include "nroots/matching.hpp"
#include "nroots/poly.hpp"
#include "nroots/qp.hpp"
#include "nroots/root_system.hpp"

namespace nroots {

/// U selectors.
std::vector<RootId> positive_universe(const RootSystem& rs);
/// U(Gamma, p): positive roots with odd p-height.
std::vector<RootId> odd_height_universe(const RootSystem& rs, int node);
/// U'_p = U(D_n, p) cap U(D_n, n), for type D only.
std::vector<RootId> odd_pair_universe(const RootSystem& rs, int node);

/// R(M) = {e_i + e_j : {i,j} in M} as a k-root of D_{2k}.
KRoot matching_to_kroot(const RootSystem& rs, const Matching& m);

/// R(pi) = {e_i + e_{pi(i)+k}} as a k-root of D_{2k}.
KRoot perm_to_kroot(const RootSystem& rs, const Perm& pi);

struct Table1Row {
    std::string triple; // e.g. "T(E7,7)"
    int n = 0, p = 0;
    bool pass = false;
    int u_size = 0;
    int omega_size = 0;
    int kappa = 0;
    std::vector<int> degrees;      // empty if PS does not factor
    bool degrees_ok = false;       // PS factored into quantum integers
    std::string failure;           // failed checks for excluded cells
};

/// All T(E_n, p) for n in {6,7,8}, 1 <= p <= n, in (n, p) order, with pass
/// rows carrying |U|, |Omega_U|, kappa and degrees, and failing rows the
/// failure kind. Cells are independent; `jobs` bounds the worker count.
std::vector<Table1Row> table1(int jobs = 1);

struct GameDag {
    std::vector<RootId> vertices;            // U, sorted
    std::vector<std::pair<int, int>> edges;  // index pairs u1 -> u2
    std::vector<KRoot> kernels;              // from backward induction (unique for a DAG)
};

/// The DAG on U with u1 -> u2 when u2 - u1 is a positive root of W_I.
/// Requires (W, I, U) to verify as a QP-triple; the kernel is computed by
/// backward induction, independently of any residue computation.
GameDag game_dag(const RootSystem& rs, const std::vector<int>& generator_nodes,
                 const std::vector<RootId>& universe);

} // namespace nroots
