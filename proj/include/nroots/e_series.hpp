#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nroots/ortho.hpp"
#include "nroots/poly.hpp"
#include "nroots/root_system.hpp"

namespace nroots {

struct E8Decomposition {
    KRoot q1; // support of theta in R, contained in U_1
    KRoot q0; // R minus q1, contained in U_0
};

/// Splits an 8-root R with theta not in R as R = Q1 (disjoint union) Q0,
/// where Q1 is the support of theta. Throws ContainsTheta otherwise.
E8Decomposition e8_decompose(const RootSystem& e8, const KRoot& r);

/// iota(T) = s_8(T) cup {eta} for a triple T in Omega_{U(E7,7)}, landing in
/// Omega_{U(E8,8)}; injective, W(E6)-equivariant and level-preserving.
KRoot iota(const RootSystem& e8, const KRoot& triple);

/// One of the 27 labels a_i, b_i (kind 'a'/'b', index i) or c_{ij} (i < j).
struct ABCLabel {
    char kind = '?';
    int i = 0, j = 0;

    static ABCLabel a(int i) { return {'a', i, 0}; }
    static ABCLabel b(int i) { return {'b', i, 0}; }
    static ABCLabel c(int i, int j);
    static ABCLabel parse(const std::string& s);
    std::string str() const;
    auto operator<=>(const ABCLabel&) const = default;
};

using ABCTriple = std::vector<ABCLabel>; // sorted, size 3

/// The exceptional-curve labelling: the 56 roots of U(E8,8) map through a
/// linear change of coordinates onto the vectors {+-v_{ij} : i < j <= 8},
/// v_{ij} = 4(e_i + e_j) - sum_k e_k, and are named X_ij / Y_ij; composing
/// with s_8 identifies the 27 roots of U(E7,7) with the labels a_i = X_i7,
/// b_i = X_i8, c_ij = Y_ij (i, j <= 6). Construction throws
/// LabellingFailure if any image is not a +-v vector.
class ABCLabelling {
public:
    explicit ABCLabelling(const RootSystem& e8);

    const RootSystem& system() const { return *e8_; }
    const std::vector<RootId>& u56() const { return u56_; }  // U(E8,8)
    const std::vector<RootId>& u27() const { return u27_; }  // U(E7,7) inside Phi(E8)

    /// X_ij / Y_ij name of a root in U(E8,8).
    std::string xy_label(RootId b) const;
    ABCLabel label(RootId u27_root) const;
    RootId root(const ABCLabel& l) const;
    std::optional<ABCLabel> try_label(RootId b) const;
    std::optional<std::string> try_xy(RootId b) const;

    ABCTriple to_labels(const KRoot& triple) const;
    KRoot to_roots(const ABCTriple& labels) const;

private:
    const RootSystem* e8_;
    std::vector<RootId> u56_, u27_;
    std::map<RootId, std::string> xy_;
    std::map<RootId, ABCLabel> abc_;
    std::map<ABCLabel, RootId> root_of_;
};

struct Rothe45 {
    int level = 0;
    std::vector<ABCLabel> residues; // sorted
};

/// Closed-form level and residues of a triple (a_i c_ij b_j or a c-matching).
Rothe45 rothe45_closed_form(const ABCTriple& triple);

/// Closed form cross-checked against the direct residue computation in the
/// root system; throws CrossCheckMismatch on disagreement.
Rothe45 rothe45(const ABCLabelling& lab, const ABCTriple& triple);

struct CubicTerm {
    int level = 0;
    ABCTriple monomial;
    int coeff = 0; // (-1)^level
};

/// Pf(U') as 45 terms over the a/b/c labels, sorted by (level, monomial).
std::vector<CubicTerm> invariant_cubic(const ABCLabelling& lab);

} // namespace nroots
