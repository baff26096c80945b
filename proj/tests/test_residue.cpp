#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "nroots/catalog.hpp"
#include "nroots/e_series.hpp"
#include "nroots/residue.hpp"

using namespace nroots;
using testutil::kroot;
using testutil::root;

TEST_CASE("the D4 golden residue sets") {
    RootSystem d4 = build_root_system("D4");
    const auto universe = positive_universe(d4);
    const RootId theta = highest_root(d4);
    const RootId second = root(d4, {1, 1, 1, 1}); // theta - alpha_2

    CHECK(residues_wrt(d4, universe, testutil::d4_q1(d4)).residues.empty());
    CHECK(residues_wrt(d4, universe, testutil::d4_q2(d4)).residues == std::vector<RootId>{theta});
    CHECK(residues_wrt(d4, universe, testutil::d4_q3(d4)).residues ==
          std::vector<RootId>{second, theta});
}

TEST_CASE("matching-model residues follow the involution rule") {
    RootSystem d6 = build_root_system("D6");
    const auto universe = odd_height_universe(d6, 6); // {e_i + e_j}
    for (const Matching& m : all_matchings(6)) {
        const KRoot r = matching_to_kroot(d6, m);
        const Perm t = tau(m);
        std::set<RootId> expected;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                if (t[i - 1] > j && t[j - 1] > i) {
                    Eigen::VectorXi e = Eigen::VectorXi::Zero(6);
                    e[i - 1] = 1;
                    e[j - 1] = 1;
                    expected.insert(*d6.from_epsilon(e));
                }
        const ResidueSet res = residues_wrt(d6, universe, r);
        CHECK(std::set<RootId>(res.residues.begin(), res.residues.end()) == expected);
    }
}

TEST_CASE("internal residues of features encode the feature kind") {
    RootSystem d4 = build_root_system("D4");
    CHECK(internal_residues(d4, testutil::d4_q1(d4)).level() == 0);
    CHECK(internal_residues(d4, testutil::d4_q2(d4)).level() == 1);
    CHECK(internal_residues(d4, testutil::d4_q3(d4)).level() == 2);

    RootSystem e8 = build_root_system("E8");
    const KRoot r = extend_to_nroot(e8, {});
    for (const KRoot& q : d_sets(e8, r, 4)) {
        const int level = internal_residues(e8, q).level();
        switch (classify_feature(e8, q)) {
        case FeatureKind::Alignment: CHECK(level == 0); break;
        case FeatureKind::Crossing: CHECK(level == 1); break;
        case FeatureKind::Nesting: CHECK(level == 2); break;
        }
    }
}

TEST_CASE("internal residues of n-roots match Res over the positive roots") {
    RootSystem d6 = build_root_system("D6");
    OmegaSet om = enumerate_omega(d6, positive_universe(d6));
    for (const KRoot& r : om.members) {
        ResidueSet internal = internal_residues(d6, r);
        ResidueSet global = residues_wrt(d6, positive_universe(d6), r);
        CHECK(internal.residues == global.residues);
        // no residue lies in R
        for (RootId g : internal.residues)
            CHECK(std::find(r.begin(), r.end(), g) == r.end());
        // level = C + 2N
        FeatureCounts fc = feature_counts(d6, r);
        CHECK(internal.level() == fc.crossings + 2 * fc.nestings);
    }
}

TEST_CASE("the minimal E8 8-root has no residues") {
    RootSystem e8 = build_root_system("E8");
    const KRoot minimal = kroot(e8, {{0, 1, 0, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 0, 0, 0, 0, 0},
                                     {0, 0, 0, 0, 1, 0, 0, 0},
                                     {0, 0, 0, 0, 0, 0, 1, 0},
                                     {0, 1, 1, 2, 1, 0, 0, 0},
                                     {0, 1, 1, 2, 2, 2, 1, 0},
                                     {2, 2, 3, 4, 3, 2, 1, 0},
                                     {2, 3, 4, 6, 5, 4, 3, 2}});
    CHECK(internal_residues(e8, minimal).level() == 0);
}

TEST_CASE("residue partition over coplanar quadruples") {
    // Res(R) is the disjoint union of Res(Q) over Q in D4(R).
    auto check_partition = [](const RootSystem& rs, const KRoot& r) {
        std::vector<RootId> merged;
        for (const KRoot& q : d_sets(rs, r, 4)) {
            for (RootId g : internal_residues(rs, q).residues) merged.push_back(g);
        }
        std::sort(merged.begin(), merged.end());
        CHECK(std::adjacent_find(merged.begin(), merged.end()) == merged.end()); // disjoint
        CHECK(merged == internal_residues(rs, r).residues);
    };

    RootSystem d4 = build_root_system("D4");
    for (const KRoot& r : enumerate_omega(d4, positive_universe(d4)).members)
        check_partition(d4, r);

    RootSystem d6 = build_root_system("D6");
    for (const KRoot& r : enumerate_omega(d6, positive_universe(d6)).members)
        check_partition(d6, r);

    RootSystem e8 = build_root_system("E8");
    OmegaSet om = enumerate_omega(e8, positive_universe(e8));
    std::mt19937 rng(3);
    std::uniform_int_distribution<size_t> pick(0, om.members.size() - 1);
    for (int t = 0; t < 25; ++t) check_partition(e8, om.members[pick(rng)]);
}

TEST_CASE("nested residue decomposition in E8") {
    // Res(R) = Res(Q) u Res(R\Q) u union over D6 sets H containing Q of
    // Res(H) \ Res(Q), all disjoint.
    RootSystem e8 = build_root_system("E8");
    OmegaSet om = enumerate_omega(e8, positive_universe(e8));
    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> pick(0, om.members.size() - 1);
    for (int t = 0; t < 8; ++t) {
        const KRoot& r = om.members[pick(rng)];
        auto sixes = d_sets(e8, r, 6);
        for (const KRoot& q : d_sets(e8, r, 4)) {
            std::vector<RootId> merged = internal_residues(e8, q).residues;
            const auto res_q = merged;
            KRoot complement;
            for (RootId b : r)
                if (std::find(q.begin(), q.end(), b) == q.end()) complement.push_back(b);
            for (RootId g : internal_residues(e8, complement).residues) merged.push_back(g);
            for (const KRoot& h : sixes) {
                const bool contains_q = std::includes(h.begin(), h.end(), q.begin(), q.end());
                if (!contains_q) continue;
                for (RootId g : internal_residues(e8, h).residues)
                    if (!std::binary_search(res_q.begin(), res_q.end(), g)) merged.push_back(g);
            }
            std::sort(merged.begin(), merged.end());
            CHECK(std::adjacent_find(merged.begin(), merged.end()) == merged.end());
            CHECK(merged == internal_residues(e8, r).residues);
        }
    }
}

TEST_CASE("level jumps across supports are even (full D6 and E7 sweeps)") {
    for (const char* name : {"D6", "E7"}) {
        RootSystem rs = build_root_system(name);
        OmegaSet om = enumerate_omega(rs, positive_universe(rs));
        const auto universe = positive_universe(rs);
        for (const KRoot& r : om.members) {
            for (RootId a = rs.num_positive(); a < rs.num_roots(); ++a) {
                if (std::find(r.begin(), r.end(), a) != r.end()) continue;
                const KRoot q = support(rs, r, a);
                KRoot rq, rr;
                for (RootId b : q) rq.push_back(rs.abs_id(rs.reflected(a, b)));
                for (RootId b : r) rr.push_back(rs.abs_id(rs.reflected(a, b)));
                std::sort(rq.begin(), rq.end());
                std::sort(rr.begin(), rr.end());
                const int rho_q = internal_residues(rs, q).level();
                const int rho_rq = internal_residues(rs, rq).level();
                if (rho_rq <= rho_q) continue;
                const int d = (level_wrt(rs, universe, rr) - level_wrt(rs, universe, r)) -
                              (rho_rq - rho_q);
                CHECK(d >= 0);
                CHECK(d % 2 == 0);
            }
        }
    }
}

TEST_CASE("residues filtered by 8-height") {
    RootSystem e8 = build_root_system("E8");
    const RootId theta = highest_root(e8);
    OmegaSet om = enumerate_omega(e8, positive_universe(e8));
    int seen = 0;
    for (const KRoot& r : om.members) {
        if (std::find(r.begin(), r.end(), theta) != r.end()) continue;
        if (++seen > 40) break;
        CHECK(residues_by_height(e8, r, 2) == std::vector<RootId>{theta});
        E8Decomposition dec = e8_decompose(e8, r);
        CHECK(residues_by_height(e8, r, 0) == internal_residues(e8, dec.q0).residues);
        // features meeting U_0 in fewer than 4 elements have no 0-height residues
        for (const KRoot& q : d_sets(e8, r, 4)) {
            int in_u0 = 0;
            for (RootId b : q)
                if (e8.coeffs(b)[7] == 0) ++in_u0;
            if (in_u0 < 4) CHECK(residues_by_height(e8, q, 0).empty());
        }
    }
    CHECK(seen > 40);

    CHECK_THROWS_AS(residues_by_height(build_root_system("D4"), {}, 0), Error);
}

TEST_CASE("residues accept k-roots outside the universe") {
    // Res_U picks up sets R not contained in U, as used throughout the E8
    // height decompositions.
    RootSystem e8 = build_root_system("E8");
    const auto u1 = height_filter(e8, 8, 1);
    const KRoot r = extend_to_nroot(e8, {}); // mixes heights 0 and 1
    const ResidueSet res = residues_wrt(e8, u1, r);
    CHECK(res.level() >= 0);
    for (RootId g : res.residues) CHECK(e8.coeffs(g)[7] == 1);
}
