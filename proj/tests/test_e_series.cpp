#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "helpers.hpp"
#include "nroots/catalog.hpp"
#include "nroots/e_series.hpp"
#include "nroots/qp.hpp"
#include "nroots/residue.hpp"
#include "nroots/serialize.hpp"

using namespace nroots;
using testutil::kroot;

namespace {

ABCTriple labels(std::initializer_list<const char*> names) {
    ABCTriple t;
    for (const char* n : names) t.push_back(ABCLabel::parse(n));
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

TEST_CASE("decomposition of theta-free 8-roots") {
    RootSystem e8 = build_root_system("E8");
    const RootId theta = highest_root(e8);
    OmegaSet om = enumerate_omega(e8, positive_universe(e8));
    int with_theta = 0, without = 0;
    for (const KRoot& r : om.members) {
        if (std::find(r.begin(), r.end(), theta) != r.end()) {
            ++with_theta;
            CHECK_THROWS_AS(e8_decompose(e8, r), ContainsTheta);
            continue;
        }
        ++without;
        if (without % 16 != 0) continue; // spot-check the structure
        E8Decomposition d = e8_decompose(e8, r);
        CHECK(d.q1.size() == 4);
        CHECK(d.q0.size() == 4);
        CHECK(coplanar_center(e8, d.q1).has_value());
        CHECK(coplanar_center(e8, d.q0).has_value());
        auto res1 = internal_residues(e8, d.q1).residues;
        CHECK(std::find(res1.begin(), res1.end(), theta) != res1.end());
    }
    CHECK(with_theta == 135);
    CHECK(without == 1890);
}

TEST_CASE("Omega of U(E8,8) consists of the features inside U_1") {
    RootSystem e8 = build_root_system("E8");
    OmegaSet om = enumerate_omega(e8, odd_height_universe(e8, 8));
    CHECK(om.kappa == 4);
    CHECK(om.members.size() == 630);
    for (size_t i = 0; i < om.members.size(); i += 37)
        CHECK(coplanar_center(e8, om.members[i]).has_value());

    // 3-to-1: each member extends to exactly three theta-free 8-roots.
    OmegaSet full = enumerate_omega(e8, positive_universe(e8));
    std::map<KRoot, int> fibers;
    const RootId theta = highest_root(e8);
    for (const KRoot& r : full.members) {
        if (std::find(r.begin(), r.end(), theta) != r.end()) continue;
        fibers[e8_decompose(e8, r).q1]++;
    }
    CHECK(fibers.size() == 630);
    for (const auto& [q1, count] : fibers) CHECK(count == 3);
}

TEST_CASE("iota embeds the 45 triples into Omega_{U(E8,8)}") {
    RootSystem e8 = build_root_system("E8");
    const auto u27 = [&] {
        std::vector<RootId> u;
        for (RootId a = e8.num_positive(); a < e8.num_roots(); ++a)
            if (e8.coeffs(a)[7] == 0 && e8.coeffs(a)[6] == 1) u.push_back(a);
        return u;
    }();
    REQUIRE(u27.size() == 27);
    OmegaSet om27 = enumerate_omega(e8, u27);
    REQUIRE(om27.members.size() == 45);
    CHECK(om27.kappa == 3);

    OmegaSet om56 = enumerate_omega(e8, odd_height_universe(e8, 8));
    std::set<KRoot> images;
    for (const KRoot& t : om27.members) {
        const KRoot img = iota(e8, t);
        CHECK(std::binary_search(om56.members.begin(), om56.members.end(), img));
        images.insert(img);
        CHECK(level_wrt(e8, u27, t) ==
              level_wrt(e8, odd_height_universe(e8, 8), img)); // level-preserving
    }
    CHECK(images.size() == 45); // injective

    // W(E6)-equivariance on the generators
    for (int node = 1; node <= 6; ++node) {
        const RootId s = e8.simple_root(node);
        for (const KRoot& t : om27.members)
            CHECK(iota(e8, standard_act(e8, s, t)) == standard_act(e8, s, iota(e8, t)));
    }

    CHECK_THROWS_AS(iota(e8, KRoot{u27[0]}), NotATriple);
}

TEST_CASE("the minimal quadruple is the s8-image of the minimal triple") {
    RootSystem e8 = build_root_system("E8");
    const RootId s8 = e8.simple_root(8);
    KRoot expected;
    for (RootId b : {e8.simple_root(7), parabolic_highest(e8, {2, 3, 4, 5, 6, 7}),
                     parabolic_highest(e8, {1, 2, 3, 4, 5, 6, 7}), highest_root(e8)})
        expected.push_back(e8.reflected(s8, b));
    std::sort(expected.begin(), expected.end());

    std::vector<int> gens{1, 2, 3, 4, 5, 6, 7};
    ScaledInstance inst = make_instance(e8, gens, odd_height_universe(e8, 8));
    Extremals ex = extremal_elements(inst);
    REQUIRE(ex.minimal.size() == 1);
    CHECK(inst.omega.members[ex.minimal[0]] == expected);
    CHECK(inst.levels[ex.minimal[0]] == 0);
}

TEST_CASE("eta is the unique maximal element of U(E8,8)") {
    RootSystem e8 = build_root_system("E8");
    const RootId eta = e8.reflected(e8.simple_root(8), highest_root(e8));
    CHECK(e8.coeffs(eta) == e8.coeffs(highest_root(e8)) - e8.coeffs(e8.simple_root(8)));
    for (RootId b : odd_height_universe(e8, 8)) {
        Coeffs diff = e8.coeffs(eta) - e8.coeffs(b);
        CHECK(diff.minCoeff() >= 0); // every element of U lies below eta
    }
}

TEST_CASE("s8 bijects U(E7,7) onto the eta-orthogonal part of U(E8,8)") {
    RootSystem e8 = build_root_system("E8");
    const RootId s8 = e8.simple_root(8);
    const RootId eta = e8.reflected(s8, highest_root(e8));
    std::set<RootId> eta_perp;
    for (RootId b : odd_height_universe(e8, 8))
        if (e8.gram(b, eta) == 0) eta_perp.insert(b);
    std::set<RootId> image;
    for (RootId g = e8.num_positive(); g < e8.num_roots(); ++g)
        if (e8.coeffs(g)[7] == 0 && e8.coeffs(g)[6] == 1) image.insert(e8.reflected(s8, g));
    CHECK(image.size() == 27);
    CHECK(image == eta_perp);
}

TEST_CASE("residues of quadruples containing eta avoid alpha8 and stay orthogonal to eta") {
    RootSystem e8 = build_root_system("E8");
    const RootId eta = e8.reflected(e8.simple_root(8), highest_root(e8));
    const RootId alpha8 = e8.simple_root(8);
    const auto u = odd_height_universe(e8, 8);
    int seen = 0;
    for (const KRoot& q : enumerate_omega(e8, u).members) {
        if (std::find(q.begin(), q.end(), eta) == q.end()) continue;
        ++seen;
        for (RootId g : residues_wrt(e8, u, q).residues) {
            CHECK(g != alpha8);
            CHECK(e8.gram(g, eta) == 0);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("the a/b/c labelling identifies U(E7,7)") {
    RootSystem e8 = build_root_system("E8");
    ABCLabelling lab(e8);
    CHECK(lab.u56().size() == 56);
    CHECK(lab.u27().size() == 27);

    int as = 0, bs = 0, cs = 0;
    for (RootId g : lab.u27()) {
        const ABCLabel l = lab.label(g);
        if (l.kind == 'a') ++as;
        if (l.kind == 'b') ++bs;
        if (l.kind == 'c') ++cs;
        CHECK(lab.root(l) == g);
    }
    CHECK(as == 6);
    CHECK(bs == 6);
    CHECK(cs == 15);

    // the minimal triple {alpha_7, theta_6, theta_7} reads {b6, c16, a1}
    KRoot minimal{e8.simple_root(7), parabolic_highest(e8, {2, 3, 4, 5, 6, 7}),
                  parabolic_highest(e8, {1, 2, 3, 4, 5, 6, 7})};
    std::sort(minimal.begin(), minimal.end());
    CHECK(lab.to_labels(minimal) == labels({"a1", "c16", "b6"}));

    // triples are a_i c_ij b_j or c-matchings: 30 + 15 = 45
    OmegaSet om = enumerate_omega(e8, lab.u27());
    int acb = 0, matchings = 0;
    for (const KRoot& t : om.members) {
        const ABCTriple lt = lab.to_labels(t);
        int a = 0, b = 0, c = 0;
        for (const auto& l : lt) {
            if (l.kind == 'a') ++a;
            if (l.kind == 'b') ++b;
            if (l.kind == 'c') ++c;
        }
        if (c == 3) {
            ++matchings;
        } else {
            REQUIRE(a == 1);
            REQUIRE(b == 1);
            REQUIRE(c == 1);
            int ai = 0, bj = 0, ci = 0, cj = 0;
            for (const auto& l : lt) {
                if (l.kind == 'a') ai = l.i;
                if (l.kind == 'b') bj = l.i;
                if (l.kind == 'c') ci = l.i, cj = l.j;
            }
            CHECK(ai != bj);
            CHECK(std::set<int>{ci, cj} == std::set<int>{ai, bj});
            ++acb;
        }
    }
    CHECK(acb == 30);
    CHECK(matchings == 15);
}

TEST_CASE("closed-form Rothe data for the 45 triples") {
    RootSystem e8 = build_root_system("E8");
    ABCLabelling lab(e8);

    Rothe45 r = rothe45(lab, labels({"a4", "c24", "b2"}));
    CHECK(r.level == 6);
    CHECK(r.residues == std::vector<ABCLabel>{ABCLabel::a(1), ABCLabel::a(2), ABCLabel::a(3),
                                              ABCLabel::c(3, 4), ABCLabel::c(4, 5),
                                              ABCLabel::c(4, 6)});

    CHECK(rothe45(lab, labels({"a2", "c26", "b6"})).level == 1);
    CHECK(rothe45(lab, labels({"c13", "c25", "c46"})).level == 8);
    CHECK(rothe45(lab, labels({"a1", "c16", "b6"})).level == 0);

    // cross-check every triple (rothe45 throws on any mismatch)
    OmegaSet om = enumerate_omega(e8, lab.u27());
    for (const KRoot& t : om.members) {
        const Rothe45 rr = rothe45(lab, lab.to_labels(t));
        CHECK(rr.level == level_wrt(e8, lab.u27(), t));
    }

    CHECK_THROWS_AS(rothe45_closed_form(labels({"a1", "c23", "b4"})), NotATriple);
    CHECK_THROWS_AS(rothe45_closed_form(labels({"a1", "a2", "a3"})), NotATriple);
}

TEST_CASE("invariant cubic coefficients and sign flips") {
    RootSystem e8 = build_root_system("E8");
    ABCLabelling lab(e8);
    auto terms = invariant_cubic(lab);
    REQUIRE(terms.size() == 45);

    std::map<ABCTriple, CubicTerm> by_monomial;
    for (const auto& t : terms) {
        CHECK(t.coeff == (t.level % 2 == 0 ? 1 : -1));
        by_monomial[t.monomial] = t;
    }
    CHECK(by_monomial.at(labels({"a1", "c16", "b6"})).coeff == 1);
    CHECK(by_monomial.at(labels({"a2", "c26", "b6"})).coeff == -1);
    CHECK(by_monomial.at(labels({"c16", "c25", "c34"})).coeff == 1);
    CHECK(by_monomial.at(labels({"c16", "c25", "c34"})).level == 12);

    // generators either fix a monomial or negate its coefficient
    for (int node = 1; node <= 6; ++node) {
        const RootId s = e8.simple_root(node);
        for (const auto& t : terms) {
            const KRoot image = standard_act(e8, s, lab.to_roots(t.monomial));
            const ABCTriple image_labels = lab.to_labels(image);
            if (image_labels == t.monomial) continue;
            CHECK(by_monomial.at(image_labels).coeff == -t.coeff);
        }
    }
}

TEST_CASE("cubic golden file matches the computed polynomial") {
    RootSystem e8 = build_root_system("E8");
    ABCLabelling lab(e8);
    std::ifstream in(std::string(NROOTS_GOLDEN_DIR) + "/cubic.txt");
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == cubic_text(invariant_cubic(lab)));
}

TEST_CASE("the disjointness graph on the 45 triples is strongly regular") {
    RootSystem e8 = build_root_system("E8");
    ABCLabelling lab(e8);
    OmegaSet om = enumerate_omega(e8, lab.u27());
    const int n = static_cast<int>(om.members.size());
    REQUIRE(n == 45);
    auto disjoint = [&](int x, int y) {
        for (RootId a : om.members[x])
            for (RootId b : om.members[y])
                if (a == b) return false;
        return true;
    };
    for (int x = 0; x < n; ++x) {
        int deg = 0;
        for (int y = 0; y < n; ++y)
            if (y != x && disjoint(x, y)) ++deg;
        CHECK(deg == 32);
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int common = 0;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (disjoint(x, z) && disjoint(y, z)) ++common;
            }
            CHECK(common == (disjoint(x, y) ? 22 : 24));
        }
}

TEST_CASE("game DAG kernels of T(E7,7)") {
    RootSystem e7 = build_root_system("E7");
    GameDag dag = game_dag(e7, {1, 2, 3, 4, 5, 6}, odd_height_universe(e7, 7));
    REQUIRE(dag.kernels.size() == 1);
    KRoot minimal{e7.simple_root(7), parabolic_highest(e7, {2, 3, 4, 5, 6, 7}),
                  highest_root(e7)};
    std::sort(minimal.begin(), minimal.end());
    CHECK(dag.kernels[0] == minimal);
}
