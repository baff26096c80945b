#pragma once

#include <utility>
#include <vector>

#include "nroots/errors.hpp"

namespace nroots {

/// A perfect matching of [2k], stored canonically: i_t < j_t within blocks
/// and i_1 < i_2 < ... across blocks. Entries are 1-based.
struct Matching {
    std::vector<std::pair<int, int>> blocks;

    static Matching of(std::vector<std::pair<int, int>> blocks);
    int k() const { return static_cast<int>(blocks.size()); }
    int points() const { return 2 * k(); }
    bool operator==(const Matching&) const = default;
    bool operator<(const Matching& o) const { return blocks < o.blocks; }
};

std::vector<Matching> all_matchings(int two_k);

/// One-line notation helpers; perm[i-1] = value at position i.
using Perm = std::vector<int>;

int perm_length(const Perm& p); // inversion count
Perm inverse_perm(const Perm& p);
std::vector<Perm> all_permutations(int k);

/// sigma_M from the two-line notation [1 2 ... 2k / i_1 j_1 ... i_k j_k].
Perm sigma(const Matching& m);
/// tau_M, the fixed point free involution with cycles (i_t, j_t).
Perm tau(const Matching& m);

std::vector<std::pair<int, int>> inversions(const Perm& p); // {(i,j): i<j, p(i)>p(j)}

/// D_M = {(i,j) : i < j, tau(i) > j, tau(j) > i}.
std::vector<std::pair<int, int>> matching_diagram(const Matching& m);

/// Rothe diagram D(pi) = {(i,j) : pi(i) > j, pi^{-1}(j) > i}.
std::vector<std::pair<int, int>> rothe_diagram(const Perm& p);

struct MatchingStats {
    Perm sigma_m;
    Perm tau_m;
    std::vector<std::pair<int, int>> inversions_m; // I_M
    std::vector<std::pair<int, int>> diagram_m;    // D_M
    std::vector<std::pair<int, int>> psi_image;    // psi_M applied to I_M, in I_M order
    bool bijection_ok = false;
};

/// Computes sigma_M, tau_M, I_M, D_M and checks that
/// psi_M((i,j)) = (tau_M sigma_M(i), sigma_M(j)) is a bijection I_M -> D_M.
/// Throws BijectionFailure when the check fails.
MatchingStats matching_stats(const Matching& m);

} // namespace nroots
