#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nroots/errors.hpp"

namespace nroots {

/// A root id. Roots are sorted by (height, lexicographic coefficients) and
/// numbered 0..2P-1, so the P negative roots come first and -alpha sits at
/// the mirrored index 2P-1-id.
using RootId = int;

/// Coefficients of a root over the simple roots, indexed by Dynkin node - 1.
using Coeffs = Eigen::VectorXi;

enum class Family : char { A = 'A', D = 'D', E = 'E' };

struct DynkinType {
    Family family;
    int rank;

    DynkinType(Family f, int r);
    static DynkinType parse(std::string_view name); // "A3", "D6", "E8"
    std::string name() const;
    bool operator==(const DynkinType&) const = default;
};

struct HeightProfile {
    RootId id;
    int total;
    Coeffs per_node; // ht_i for each node
};

/// A simply laced root system, stored abstractly as integer coefficient
/// vectors over the simple roots. Immutable after construction; all query
/// methods are pure and safe for concurrent use.
class RootSystem {
public:
    explicit RootSystem(DynkinType t);

    const DynkinType& type() const { return type_; }
    int rank() const { return rank_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_roots() / 2; }
    const Eigen::MatrixXi& cartan() const { return cartan_; }

    const Coeffs& coeffs(RootId a) const { return roots_[check(a)]; }
    bool is_positive(RootId a) const { return check(a) >= num_positive(); }
    RootId negate(RootId a) const { return num_roots() - 1 - check(a); }
    RootId abs_id(RootId a) const { return is_positive(a) ? a : negate(a); }
    int height(RootId a) const { return heights_[check(a)]; }

    /// Positive root ids in increasing order (P..2P-1).
    std::vector<RootId> positive_ids() const;

    /// Id of the simple root alpha_node (node is 1-based, as in the Dynkin
    /// diagram labelling).
    RootId simple_root(int node) const;

    std::optional<RootId> find(const Coeffs& c) const;
    RootId id_of(const Coeffs& c) const; // throws Error if not a root

    /// B(a, b); always in {-2,...,2}, equal to 2 iff a == b.
    int gram(RootId a, RootId b) const { return gram_[check(a) * num_roots() + check(b)]; }

    /// s_a(b). Reflections satisfy s_a = s_{-a}.
    RootId reflected(RootId a, RootId b) const {
        return refl_[(abs_id(a) - num_positive()) * num_roots() + check(b)];
    }

    /// Epsilon-coordinate realization, available for types A and D only
    /// (A_n lives in R^{n+1}, D_n in R^n).
    bool has_epsilon() const { return type_.family != Family::E; }
    int epsilon_dim() const;
    Eigen::VectorXi epsilon(RootId a) const;
    std::optional<RootId> from_epsilon(const Eigen::VectorXi& v) const;

private:
    int check(RootId a) const;
    void generate();
    void build_tables();
    void build_epsilon();

    DynkinType type_;
    int rank_;
    Eigen::MatrixXi cartan_;
    std::vector<Coeffs> roots_;
    std::vector<int> heights_;
    std::vector<int8_t> gram_;
    std::vector<int16_t> refl_;
    std::unordered_map<std::string, RootId> lookup_;
    std::vector<Eigen::VectorXi> eps_; // empty for type E
    std::unordered_map<std::string, RootId> eps_lookup_;
};

RootSystem build_root_system(DynkinType t);
RootSystem build_root_system(std::string_view name);

inline int bilinear(const RootSystem& rs, RootId a, RootId b) { return rs.gram(a, b); }
inline RootId reflect(const RootSystem& rs, RootId a, RootId b) { return rs.reflected(a, b); }

HeightProfile heights(const RootSystem& rs, RootId a);

/// The unique coefficientwise-maximal root theta.
RootId highest_root(const RootSystem& rs);

/// All roots supported on the given set of nodes (1-based labels); this is
/// Phi intersected with the span of Pi_I, and indexes the reflections of the
/// standard parabolic subgroup W_I.
std::vector<RootId> parabolic_subroots(const RootSystem& rs, const std::vector<int>& nodes);

/// Highest root of the (irreducible) parabolic subsystem on `nodes`.
RootId parabolic_highest(const RootSystem& rs, const std::vector<int>& nodes);

/// The induced simple system Pi_Psi of a reflection-closed subset psi,
/// computed as the elements of Psi_+ that are not a sum of two elements of
/// Psi_+. psi must contain both signs of each of its roots.
std::vector<RootId> induced_simple_system(const RootSystem& rs, const std::vector<RootId>& psi);

/// Phi_{node,value}: positive roots whose node-coefficient equals value.
std::vector<RootId> height_filter(const RootSystem& rs, int node, int value);

std::string coeff_string(const RootSystem& rs, RootId a);

} // namespace nroots
