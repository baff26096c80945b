#include "nroots/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nroots {

std::string root_string(const RootSystem& rs, RootId a, Display d) {
    if (d == Display::Coeffs || !rs.has_epsilon()) return coeff_string(rs, a);
    Eigen::VectorXi e = rs.epsilon(a);
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < e.size(); ++t) {
        if (e[t] == 0) continue;
        if (e[t] > 0)
            os << (first ? "" : "+");
        else
            os << "-";
        os << "e" << t + 1;
        first = false;
    }
    return os.str();
}

std::string u_label(const RootSystem& rs, RootId a) {
    Eigen::VectorXi e = rs.epsilon(a);
    int i = -1, j = -1;
    for (int t = 0; t < e.size(); ++t) {
        if (e[t] == 1) (i < 0 ? i : j) = t + 1;
        else if (e[t] != 0) throw Error("root is not of the form e_i + e_j");
    }
    if (j < 0) throw Error("root is not of the form e_i + e_j");
    std::ostringstream os;
    os << "u" << i;
    if (j >= 10) os << "_";
    os << j;
    return os.str();
}

std::vector<std::string> couple_collapsed_labels(const RootSystem& rs, const Monomial& m) {
    // Pair e_i - e_j with e_i + e_j when both occur.
    std::map<std::pair<int, int>, int> plus, minus; // (i,j) -> count
    for (RootId a : m) {
        Eigen::VectorXi e = rs.epsilon(a);
        int i = -1, j = -1;
        bool negative_j = false;
        for (int t = 0; t < e.size(); ++t) {
            if (e[t] == 0) continue;
            if (i < 0) {
                i = t + 1;
            } else {
                j = t + 1;
                negative_j = e[t] < 0;
            }
        }
        if (i < 0 || j < 0) throw Error("monomial root is not supported on two coordinates");
        (negative_j ? minus : plus)[{i, j}]++;
    }
    std::vector<std::string> labels;
    for (auto& [ij, n] : plus) {
        const auto [i, j] = ij;
        auto mit = minus.find(ij);
        if (mit != minus.end() && mit->second > 0) --mit->second; // couple collapses
        std::ostringstream os;
        os << "u" << i;
        if (j >= 10) os << "_";
        os << j;
        while (n-- > 0) labels.push_back(os.str());
    }
    for (auto& [ij, n] : minus)
        if (n > 0) throw Error("unpaired e_i - e_j root has no u_ij display");
    std::sort(labels.begin(), labels.end());
    return labels;
}

namespace {

struct FlatTerm {
    int q;
    std::vector<std::string> labels;
    long long coeff;
};

std::vector<FlatTerm> flatten(const HafnianPoly& h, const LabelFn& label) {
    std::vector<FlatTerm> out;
    for (const auto& [m, poly] : h.terms) {
        std::vector<std::string> labels;
        for (RootId a : m) labels.push_back(label(a));
        std::sort(labels.begin(), labels.end());
        for (int k = 0; k <= poly.degree(); ++k)
            if (poly.coeff(k) != 0) out.push_back({k, labels, poly.coeff(k)});
    }
    std::sort(out.begin(), out.end(), [](const FlatTerm& a, const FlatTerm& b) {
        if (a.q != b.q) return a.q < b.q;
        return a.labels < b.labels;
    });
    return out;
}

std::string render(const std::vector<FlatTerm>& terms) {
    std::ostringstream os;
    for (const auto& t : terms) {
        os << (t.coeff < 0 ? "-" : "+") << (t.coeff < 0 ? -t.coeff : t.coeff) << " q^" << t.q
           << " ";
        for (size_t i = 0; i < t.labels.size(); ++i) os << (i ? "*" : "") << t.labels[i];
        os << "\n";
    }
    return os.str();
}

} // namespace

std::string hafnian_text(const HafnianPoly& h, const LabelFn& label) {
    return render(flatten(h, label));
}

std::string hafnian_text_collapsed(const RootSystem& rs, const HafnianPoly& h) {
    std::vector<FlatTerm> out;
    for (const auto& [m, poly] : h.terms) {
        auto labels = couple_collapsed_labels(rs, m);
        for (int k = 0; k <= poly.degree(); ++k)
            if (poly.coeff(k) != 0) out.push_back({k, labels, poly.coeff(k)});
    }
    std::sort(out.begin(), out.end(), [](const FlatTerm& a, const FlatTerm& b) {
        if (a.q != b.q) return a.q < b.q;
        return a.labels < b.labels;
    });
    return render(out);
}

nlohmann::json hafnian_json(const HafnianPoly& h, const LabelFn& label) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : flatten(h, label))
        terms.push_back({{"q", t.q}, {"coeff", t.coeff}, {"monomial", t.labels}});
    return {{"terms", terms}};
}

nlohmann::json omega_json(const OmegaSet& om, const std::vector<int>& levels) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : om.members) members.push_back(m);
    return {{"universe", om.universe},
            {"kappa", om.kappa},
            {"members", members},
            {"levels", levels}};
}

nlohmann::json verdict_json(const QPVerdict& v) {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : v.witnesses)
        ws.push_back({{"check", w.check},
                      {"reflection", w.reflection},
                      {"generator", w.generator_node},
                      {"member", w.member},
                      {"detail", w.detail}});
    return {{"scaled", v.scaled},
            {"qp1", v.qp1},
            {"qp2", v.qp2},
            {"transitive", v.transitive},
            {"witnesses", ws}};
}

nlohmann::json table1_json(const std::vector<Table1Row>& rows) {
    nlohmann::json passing = nlohmann::json::array();
    nlohmann::json excluded = nlohmann::json::array();
    for (const auto& r : rows) {
        if (r.pass) {
            passing.push_back({{"triple", r.triple},
                               {"U", r.u_size},
                               {"omega", r.omega_size},
                               {"kappa", r.kappa},
                               {"degrees", r.degrees}});
        } else {
            excluded.push_back({{"triple", r.triple}, {"failure", r.failure}});
        }
    }
    return {{"rows", passing}, {"excluded", excluded}};
}

std::string cubic_text(const std::vector<CubicTerm>& terms) {
    std::ostringstream os;
    for (const auto& t : terms) {
        os << (t.coeff < 0 ? "-1" : "+1") << " q^" << t.level << " ";
        for (size_t i = 0; i < t.monomial.size(); ++i)
            os << (i ? "*" : "") << t.monomial[i].str();
        os << "\n";
    }
    return os.str();
}

nlohmann::json cubic_json(const std::vector<CubicTerm>& terms) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : terms) {
        std::vector<std::string> mono;
        for (const auto& l : t.monomial) mono.push_back(l.str());
        out.push_back({{"level", t.level}, {"coeff", t.coeff}, {"monomial", mono}});
    }
    return {{"terms", out}};
}

std::string hasse_dot(const ScaledInstance& inst, const QPOrder& ord) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    const int maxrank = ord.ranks.empty()
                            ? -1
                            : *std::max_element(ord.ranks.begin(), ord.ranks.end());
    for (int rk = 0; rk <= maxrank; ++rk) {
        os << "  { rank=same;";
        for (int x = 0; x < inst.size(); ++x)
            if (ord.ranks[x] == rk) os << " n" << x << ";";
        os << " }\n";
    }
    for (int x = 0; x < inst.size(); ++x) {
        os << "  n" << x << " [label=\"";
        const KRoot& m = inst.omega.members[x];
        for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
        os << " | " << ord.ranks[x] << "\"];\n";
    }
    for (auto [lo, hi] : ord.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

std::string gamedag_dot(const RootSystem& rs, const GameDag& dag) {
    std::ostringstream os;
    os << "digraph game {\n  node [shape=ellipse];\n";
    std::vector<bool> in_kernel(dag.vertices.size(), false);
    for (const auto& k : dag.kernels)
        for (RootId a : k) {
            const auto it = std::lower_bound(dag.vertices.begin(), dag.vertices.end(), a);
            in_kernel[it - dag.vertices.begin()] = true;
        }
    for (size_t i = 0; i < dag.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << coeff_string(rs, dag.vertices[i]) << "\"";
        if (in_kernel[i]) os << " style=filled fillcolor=gray85";
        os << "];\n";
    }
    for (auto [a, b] : dag.edges) os << "  v" << a << " -> v" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace nroots
