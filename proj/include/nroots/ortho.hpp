#pragma once

#include <optional>
#include <vector>

#include "nroots/root_system.hpp"

namespace nroots {

/// A set of pairwise orthogonal positive roots, sorted ascending by id.
using KRoot = std::vector<RootId>;

enum class FeatureKind { Alignment, Crossing, Nesting };

const char* feature_name(FeatureKind k);

/// Omega_U: all orthogonal subsets of U of maximum cardinality kappa.
/// Members are sorted lexicographically on their id tuples.
struct OmegaSet {
    std::vector<RootId> universe;
    int kappa = 0;
    std::vector<KRoot> members;
};

bool orthogonal_set(const RootSystem& rs, const KRoot& r);

/// Enumerates Omega_U by maximal-clique search on the orthogonality graph of
/// U. If ROOTS_CACHE_DIR is set in the environment, results are memoized
/// there.
OmegaSet enumerate_omega(const RootSystem& rs, std::vector<RootId> universe);

/// Elements of the orthogonal basis R not orthogonal to alpha. Requires
/// alpha in Span(R), checked through the projection identity
/// 2*alpha = sum B(alpha, beta_i) beta_i.
KRoot support(const RootSystem& rs, const KRoot& r, RootId alpha);

/// Span(H) cap Phi for an orthogonal set H, as root ids of both signs.
std::vector<RootId> span_roots(const RootSystem& rs, const KRoot& h);

/// The root alpha with sum(Q) == 2*alpha, if Q is a coplanar quadruple.
std::optional<RootId> coplanar_center(const RootSystem& rs, const KRoot& q);

/// D_k(R) for k in {4, 6}: k-subsets of R spanning a subsystem of type D_k.
/// For k = 4 these are exactly the coplanar quadruples of R.
std::vector<KRoot> d_sets(const RootSystem& rs, const KRoot& r, int k);

FeatureKind classify_feature(const RootSystem& rs, const KRoot& q);

struct FeatureCounts {
    int alignments = 0;
    int crossings = 0;
    int nestings = 0;
};

/// Counts of alignments, crossings and nestings among D_4(R).
FeatureCounts feature_counts(const RootSystem& rs, const KRoot& r);

/// Whether rank-sized orthogonal sets exist (types E7, E8, D_n for n even).
bool admits_nroots(const RootSystem& rs);

/// Extends `partial` to an n-root by greedily adding the lowest-id
/// compatible positive root. Roots in `avoid` are skipped when a completion
/// without them exists.
KRoot extend_to_nroot(const RootSystem& rs, const KRoot& partial,
                      const std::vector<RootId>& avoid = {});

} // namespace nroots
