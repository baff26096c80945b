#pragma once

#include <vector>

#include "nroots/ortho.hpp"
#include "nroots/root_system.hpp"

namespace nroots {

/// Res_U(R) together with its cardinality, the level rho_U(R).
struct ResidueSet {
    std::vector<RootId> residues; // sorted ascending
    int level() const { return static_cast<int>(residues.size()); }
};

/// Res_U(R) = {gamma in U : s_beta(gamma) > 0 for all beta in R}. R may be
/// any orthogonal set of positive roots; it need not be contained in U.
ResidueSet residues_wrt(const RootSystem& rs, const std::vector<RootId>& universe, const KRoot& r);

int level_wrt(const RootSystem& rs, const std::vector<RootId>& universe, const KRoot& r);

/// Res(R) = Res_{Psi_+}(R) where Psi = Span(R) cap Phi. Equals
/// Res_{Phi_+}(R) cap Span(R); for n-roots it equals Res_{Phi_+}(R).
ResidueSet internal_residues(const RootSystem& rs, const KRoot& r);

/// Res^{(i)}(H) = Res(H) cap U_i, where U_i is the set of positive roots of
/// 8-height i. Only meaningful in type E8.
std::vector<RootId> residues_by_height(const RootSystem& rs, const KRoot& h, int i);

} // namespace nroots
