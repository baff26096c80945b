// roots: construct, enumerate, verify, and export the objects of the k-root
// machinery (root systems, Omega_U, residues, quantum Hafnians, QP-triples).
//
// Exit codes: 0 = success / verified, 1 = verified-false, 2 = usage error.

#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nroots/catalog.hpp"
#include "nroots/e_series.hpp"
#include "nroots/poly.hpp"
#include "nroots/qp.hpp"
#include "nroots/residue.hpp"
#include "nroots/serialize.hpp"

using namespace nroots;

namespace {

struct Common {
    std::string type;
    std::string universe = "all";
    std::string format = "text";
    std::string display = "coeffs";
    int jobs = 1;
};

std::vector<RootId> parse_universe(const RootSystem& rs, const std::string& sel) {
    if (sel == "all") return positive_universe(rs);
    auto colon = sel.find(':');
    const std::string kind = sel.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : sel.substr(colon + 1);
    if (kind == "odd") return odd_height_universe(rs, std::stoi(arg));
    if (kind == "oddpair") return odd_pair_universe(rs, std::stoi(arg));
    if (kind == "height") {
        auto comma = arg.find(',');
        if (comma == std::string::npos) throw Error("height selector needs i,j");
        return height_filter(rs, std::stoi(arg.substr(0, comma)),
                             std::stoi(arg.substr(comma + 1)));
    }
    throw Error("unknown universe selector '" + sel + "' (all | odd:p | oddpair:p | height:i,j)");
}

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<int> generator_nodes(const RootSystem& rs, const std::string& gens, int exclude) {
    std::vector<int> nodes;
    if (!gens.empty()) {
        nodes = parse_ints(gens);
    } else {
        for (int i = 1; i <= rs.rank(); ++i)
            if (i != exclude) nodes.push_back(i);
    }
    return nodes;
}

Display display_of(const Common& c) {
    return c.display == "epsilon" ? Display::Epsilon : Display::Coeffs;
}

// Maps a root to its display label. "abc" resolves roots of U(E7,7) and
// U(E8,8) to their exceptional-curve names; other roots keep their
// coefficient form.
LabelFn make_labeller(const RootSystem& rs, const Common& c) {
    if (c.display == "abc") {
        if (rs.type().family != Family::E || rs.rank() < 7)
            throw Error("--display abc needs type E7 or E8");
        auto e8 = std::make_shared<RootSystem>(DynkinType(Family::E, 8));
        auto lab = std::make_shared<ABCLabelling>(*e8);
        const bool embed = rs.rank() == 7;
        return [&rs, e8, lab, embed](RootId a) -> std::string {
            Coeffs c8 = Coeffs::Zero(8);
            if (embed)
                c8.head(7) = rs.coeffs(a);
            else
                c8 = rs.coeffs(a);
            auto id = e8->find(c8);
            if (id) {
                if (auto l = lab->try_label(*id)) return l->str();
                if (auto xy = lab->try_xy(*id)) return *xy;
            }
            return coeff_string(rs, a);
        };
    }
    const Display d = display_of(c);
    return [&rs, d](RootId a) { return root_string(rs, a, d); };
}

LabelFn label_fn(const RootSystem& rs, const Common& c) {
    LabelFn base = make_labeller(rs, c);
    if (c.display == "abc") return base;
    return [base](RootId a) { return "x" + base(a); };
}

int cmd_gen(const Common& c) {
    RootSystem rs = build_root_system(c.type);
    if (c.format == "json") {
        nlohmann::json roots = nlohmann::json::array();
        for (RootId a = 0; a < rs.num_roots(); ++a) {
            nlohmann::json r = {{"id", a},
                                {"coeffs", std::vector<int>(rs.coeffs(a).data(),
                                                            rs.coeffs(a).data() + rs.rank())},
                                {"height", rs.height(a)},
                                {"positive", rs.is_positive(a)}};
            if (rs.has_epsilon()) {
                Eigen::VectorXi e = rs.epsilon(a);
                r["epsilon"] = std::vector<int>(e.data(), e.data() + e.size());
            }
            roots.push_back(r);
        }
        std::cout << nlohmann::json{{"type", rs.type().name()},
                                    {"num_roots", rs.num_roots()},
                                    {"num_positive", rs.num_positive()},
                                    {"roots", roots}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << rs.type().name() << ": " << rs.num_roots() << " roots, " << rs.num_positive()
              << " positive\n";
    for (RootId a = 0; a < rs.num_roots(); ++a)
        std::cout << a << "  " << root_string(rs, a, display_of(c)) << "\n";
    return 0;
}

int cmd_omega(const Common& c) {
    RootSystem rs = build_root_system(c.type);
    auto universe = parse_universe(rs, c.universe);
    OmegaSet om = enumerate_omega(rs, universe);
    std::vector<int> levels;
    for (const auto& m : om.members) levels.push_back(level_wrt(rs, om.universe, m));
    if (c.format == "json") {
        std::cout << omega_json(om, levels).dump(2) << "\n";
        return 0;
    }
    LabelFn label = make_labeller(rs, c);
    std::cout << "|U| = " << om.universe.size() << ", kappa = " << om.kappa
              << ", |Omega_U| = " << om.members.size() << "\n";
    for (size_t i = 0; i < om.members.size(); ++i) {
        std::cout << "{";
        for (size_t t = 0; t < om.members[i].size(); ++t)
            std::cout << (t ? "," : "") << label(om.members[i][t]);
        std::cout << "}  level=" << levels[i] << "\n";
    }
    return 0;
}

int cmd_residues(const Common& c, const std::string& kroot_csv) {
    RootSystem rs = build_root_system(c.type);
    auto universe = parse_universe(rs, c.universe);
    KRoot r;
    for (int id : parse_ints(kroot_csv)) r.push_back(id);
    std::sort(r.begin(), r.end());
    if (!orthogonal_set(rs, r)) throw Error("--kroot is not an orthogonal set");
    ResidueSet res = residues_wrt(rs, universe, r);
    if (c.format == "json") {
        std::cout << nlohmann::json{{"kroot", r}, {"residues", res.residues},
                                    {"level", res.level()}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    LabelFn label = make_labeller(rs, c);
    std::cout << "level = " << res.level() << "\n";
    for (RootId g : res.residues) std::cout << g << "  " << label(g) << "\n";
    return 0;
}

int cmd_hafnian(const Common& c, const std::string& spec) {
    RootSystem rs = build_root_system(c.type);
    auto universe = parse_universe(rs, c.universe);
    HafnianPoly h = quantum_hafnian(rs, universe);
    if (spec == "negate") h = specialize_negate_q(h);
    else if (spec != "none") h = specialize_q(h, std::stoll(spec));
    if (c.format == "json") {
        std::cout << hafnian_json(h, label_fn(rs, c)).dump(2) << "\n";
        return 0;
    }
    if (display_of(c) == Display::Epsilon && rs.type().family == Family::D) {
        try {
            std::cout << hafnian_text_collapsed(rs, h);
            return 0;
        } catch (const Error&) {
            // fall through to plain epsilon labels
        }
    }
    std::cout << hafnian_text(h, label_fn(rs, c));
    return 0;
}

int cmd_poincare(const Common& c, bool degrees_only) {
    RootSystem rs = build_root_system(c.type);
    auto universe = parse_universe(rs, c.universe);
    QPoly ps = poincare(rs, universe);
    auto degrees = factor_quantum_integers(ps);
    if (c.format == "json") {
        nlohmann::json j = {{"poincare", ps.coeffs()}, {"value_at_1", ps(1)}};
        if (degrees) j["degrees"] = *degrees;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (!degrees_only) std::cout << "PS = " << ps.str() << "  (|Omega_U| = " << ps(1) << ")\n";
    if (degrees) {
        std::cout << "degrees: {";
        for (size_t i = 0; i < degrees->size(); ++i)
            std::cout << (i ? "," : "") << (*degrees)[i];
        std::cout << "}\n";
    } else {
        std::cout << "no factorization into quantum integers\n";
    }
    return 0;
}

void print_verdict(const QPVerdict& v) {
    std::cout << "scaled:     " << (v.scaled ? "pass" : "FAIL") << "\n"
              << "qp1:        " << (v.qp1 ? "pass" : "FAIL") << "\n"
              << "qp2:        " << (v.qp2 ? "pass" : "FAIL") << "\n"
              << "transitive: " << (v.transitive ? "yes" : "no") << "\n";
    for (const auto& w : v.witnesses)
        std::cout << "witness [" << w.check << "] r=" << w.reflection
                  << " s=" << w.generator_node << " x=" << w.member << ": " << w.detail << "\n";
}

int cmd_verify(const Common& c, const std::string& gens, int exclude) {
    RootSystem rs = build_root_system(c.type);
    auto universe = parse_universe(rs, c.universe);
    auto nodes = generator_nodes(rs, gens, exclude);
    QPVerdict v = verify_qp_triple(rs, nodes, universe);
    if (c.format == "json")
        std::cout << verdict_json(v).dump(2) << "\n";
    else
        print_verdict(v);
    return v.quasiparabolic() ? 0 : 1;
}

int cmd_order(const Common& c, const std::string& gens, int exclude) {
    RootSystem rs = build_root_system(c.type);
    auto universe = parse_universe(rs, c.universe);
    ScaledInstance inst = make_instance(rs, generator_nodes(rs, gens, exclude), universe);
    QPOrder ord;
    try {
        ord = qp_order(inst);
    } catch (const NotQuasiparabolic& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (c.format == "dot") {
        std::cout << hasse_dot(inst, ord);
    } else {
        std::cout << inst.size() << " elements, " << ord.covers.size() << " covers\n";
        for (auto [lo, hi] : ord.covers) std::cout << lo << " -> " << hi << "\n";
    }
    return 0;
}

int cmd_table1(const Common& c) {
    auto rows = table1(c.jobs);
    if (c.format == "json") {
        std::cout << table1_json(rows).dump(2) << "\n";
        return 0;
    }
    std::cout << "triple      |U|  |Omega|  kappa  degrees\n";
    for (const auto& r : rows) {
        if (!r.pass) continue;
        std::ostringstream deg;
        deg << "{";
        for (size_t i = 0; i < r.degrees.size(); ++i) deg << (i ? "," : "") << r.degrees[i];
        deg << "}";
        std::cout << r.triple << "  " << r.u_size << "  " << r.omega_size << "  " << r.kappa
                  << "  " << deg.str() << "\n";
    }
    for (const auto& r : rows)
        if (!r.pass) std::cout << "excluded " << r.triple << ": " << r.failure << "\n";
    return 0;
}

int cmd_cubic(const Common& c) {
    RootSystem e8(DynkinType::parse("E8"));
    ABCLabelling lab(e8);
    auto terms = invariant_cubic(lab);
    if (c.format == "json")
        std::cout << cubic_json(terms).dump(2) << "\n";
    else
        std::cout << cubic_text(terms);
    return 0;
}

int cmd_gamedag(const Common& c, const std::string& gens, int exclude) {
    RootSystem rs = build_root_system(c.type);
    auto universe = parse_universe(rs, c.universe);
    auto nodes = generator_nodes(rs, gens, exclude);
    GameDag dag;
    try {
        dag = game_dag(rs, nodes, universe);
    } catch (const NotQuasiparabolic& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (c.format == "dot") {
        std::cout << gamedag_dot(rs, dag);
        return 0;
    }
    std::cout << dag.vertices.size() << " vertices, " << dag.edges.size() << " edges, "
              << dag.kernels.size() << " kernel(s)\n";
    for (const auto& k : dag.kernels) {
        std::cout << "kernel: {";
        for (size_t i = 0; i < k.size(); ++i)
            std::cout << (i ? "," : "") << root_string(rs, k[i], display_of(c));
        std::cout << "}\n";
    }
    return 0;
}

int cmd_oracle(const std::string& model, int k, int trials, uint64_t seed) {
    if (k < 2 || k > 4) throw Error("oracle comparisons support 2 <= k <= 4");
    RootSystem rs(DynkinType(Family::D, 2 * k));
    const bool matching = model == "matching";
    auto universe = matching ? odd_height_universe(rs, 2 * k) : odd_pair_universe(rs, k);
    HafnianPoly h = quantum_hafnian(rs, universe);
    OracleReport rep = matrix_oracle_compare(
        rs, h, matching ? OracleModel::Matching : OracleModel::Permutation, k, trials, seed);
    if (rep.ok) {
        std::cout << "oracle comparison passed (" << trials << " trials)\n";
        return 0;
    }
    std::cout << rep.detail << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-roots, generalized Rothe diagrams, and quasiparabolic sets"};
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App* cmd, bool needs_type) {
        if (needs_type) cmd->add_option("--type", c.type, "Dynkin type, e.g. A3, D6, E8")->required();
        cmd->add_option("--format", c.format, "text | json | dot");
        cmd->add_option("--display", c.display, "coeffs | epsilon | abc");
        cmd->add_option("--jobs", c.jobs, "worker count for independent sweeps");
        return cmd;
    };

    auto* gen = add_common(app.add_subcommand("gen", "generate a root system"), true);

    auto* omega = add_common(app.add_subcommand("omega", "enumerate Omega_U"), true);
    omega->add_option("--universe", c.universe, "all | odd:p | oddpair:p | height:i,j");

    std::string kroot_csv;
    auto* res_cmd = app.add_subcommand("residues", "residues of a k-root with respect to U");
    add_common(res_cmd, true);
    res_cmd->add_option("--universe", c.universe, "all | odd:p | oddpair:p | height:i,j");
    res_cmd->add_option("--kroot", kroot_csv, "comma-separated root ids")->required();

    std::string specialize = "none";
    auto* haf = add_common(app.add_subcommand("hafnian", "quantum Hafnian of U"), true);
    haf->add_option("--universe", c.universe, "all | odd:p | oddpair:p | height:i,j");
    haf->add_option("--specialize", specialize, "none | negate | <integer q>");

    auto* poi = add_common(app.add_subcommand("poincare", "Poincare polynomial of U"), true);
    poi->add_option("--universe", c.universe, "all | odd:p | oddpair:p | height:i,j");

    auto* deg = add_common(app.add_subcommand("degrees", "quantum-integer degrees of U"), true);
    deg->add_option("--universe", c.universe, "all | odd:p | oddpair:p | height:i,j");

    std::string gens;
    int exclude = 0;
    auto* ver = add_common(app.add_subcommand("verify-qp", "verify a QP-triple"), true);
    ver->add_option("--universe", c.universe, "all | odd:p | oddpair:p | height:i,j");
    ver->add_option("--gens", gens, "comma-separated generator nodes (default: all)");
    ver->add_option("--exclude", exclude, "exclude one node from the generators");

    auto* ord = add_common(app.add_subcommand("order", "quasiparabolic order / Hasse diagram"), true);
    ord->add_option("--universe", c.universe, "all | odd:p | oddpair:p | height:i,j");
    ord->add_option("--gens", gens, "comma-separated generator nodes (default: all)");
    ord->add_option("--exclude", exclude, "exclude one node from the generators");

    auto* tab = add_common(app.add_subcommand("table1", "all T(E_n,p) rows"), false);

    auto* cub = add_common(app.add_subcommand("cubic", "invariant cubic of T(E7,7)"), false);

    auto* dag = add_common(app.add_subcommand("gamedag", "game DAG and kernels"), true);
    dag->add_option("--universe", c.universe, "all | odd:p | oddpair:p | height:i,j");
    dag->add_option("--gens", gens, "comma-separated generator nodes (default: all)");
    dag->add_option("--exclude", exclude, "exclude one node from the generators");

    std::string model = "matching";
    int k = 3, trials = 20;
    uint64_t seed = 1;
    auto* orc = app.add_subcommand("oracle", "matrix-oracle cross-checks");
    orc->add_option("--model", model, "matching | permutation");
    orc->add_option("-k,--k", k, "board size parameter");
    orc->add_option("--trials", trials, "number of random substitutions");
    orc->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(c);
        if (omega->parsed()) return cmd_omega(c);
        if (res_cmd->parsed()) return cmd_residues(c, kroot_csv);
        if (haf->parsed()) return cmd_hafnian(c, specialize);
        if (poi->parsed()) return cmd_poincare(c, false);
        if (deg->parsed()) return cmd_poincare(c, true);
        if (ver->parsed()) return cmd_verify(c, gens, exclude);
        if (ord->parsed()) return cmd_order(c, gens, exclude);
        if (tab->parsed()) return cmd_table1(c);
        if (cub->parsed()) return cmd_cubic(c);
        if (dag->parsed()) return cmd_gamedag(c, gens, exclude);
        if (orc->parsed()) return cmd_oracle(model, k, trials, seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
