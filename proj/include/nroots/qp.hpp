#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "nroots/ortho.hpp"
#include "nroots/residue.hpp"
#include "nroots/root_system.hpp"

namespace nroots {

/// w . R = {|s_w(alpha)| : alpha in R}, the standard action of a reflection.
KRoot standard_act(const RootSystem& rs, RootId w, const KRoot& r);

/// Omega_U with levels and the W_I action tables needed for the
/// quasiparabolic sweeps. Immutable once built.
struct ScaledInstance {
    const RootSystem* rs = nullptr;
    std::vector<int> generator_nodes;      // I, 1-based node labels
    std::vector<RootId> universe;          // U
    OmegaSet omega;
    std::vector<int> levels;               // rho_U per member
    std::vector<RootId> reflections;       // positive roots of the parabolic on I
    std::vector<std::vector<int>> gen_act; // [generator][member] -> member index, -1 if outside

    int member_index(const KRoot& r) const;
    int size() const { return static_cast<int>(omega.members.size()); }

private:
    friend ScaledInstance make_instance(const RootSystem&, std::vector<int>, std::vector<RootId>);
    std::unordered_map<std::string, int> index_;
};

ScaledInstance make_instance(const RootSystem& rs, std::vector<int> generator_nodes,
                             std::vector<RootId> universe);

struct Witness {
    std::string check; // "closure" | "scaled" | "qp1" | "qp2"
    RootId reflection = -1;
    int generator_node = -1;
    int member = -1;
    std::string detail;
};

struct QPVerdict {
    bool scaled = false;
    bool qp1 = false;
    bool qp2 = false;
    bool transitive = false;
    std::vector<Witness> witnesses;

    bool quasiparabolic() const { return scaled && qp1 && qp2; }
};

/// Full sweep: closure and scaledness over generators, QP1 over all
/// reflections of W_I, QP2 over (reflection, member, generator), and orbit
/// transitivity. Failures are reported as witnesses, capped per check.
QPVerdict verify_qp_triple(const ScaledInstance& inst, int witness_cap = 10);
QPVerdict verify_qp_triple(const RootSystem& rs, std::vector<int> generator_nodes,
                           std::vector<RootId> universe, int witness_cap = 10);

struct Extremals {
    std::vector<int> minimal; // member indices with lambda(sx) >= lambda(x) for all s
    std::vector<int> maximal;
};

Extremals extremal_elements(const ScaledInstance& inst);

/// The quasiparabolic order: the weakest partial order with x <= rx whenever
/// lambda(x) <= lambda(rx), with rank = level shifted to start at 0.
struct QPOrder {
    std::vector<int> ranks;
    std::vector<std::pair<int, int>> covers; // Hasse edges (lower, upper)

    bool less_eq(int x, int y) const {
        return x == y || ((reach_[x][y >> 6] >> (y & 63)) & 1);
    }

private:
    friend QPOrder qp_order(const ScaledInstance&);
    std::vector<std::vector<uint64_t>> reach_; // strict reachability
};

/// Requires a passing verdict; throws NotQuasiparabolic otherwise.
QPOrder qp_order(const ScaledInstance& inst);

struct RankReport {
    bool ok = false;
    int max_distance = -1;
    std::string detail;
};

/// Checks that BFS distance from the unique minimal element under generator
/// moves equals lambda(x) - lambda(x0) for every member.
RankReport rank_consistency(const ScaledInstance& inst);

} // namespace nroots
