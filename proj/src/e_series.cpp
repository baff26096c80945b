#include "nroots/e_series.hpp"

#include <algorithm>
#include <sstream>

#include "nroots/matching.hpp"
#include "nroots/residue.hpp"

namespace nroots {

namespace {

const DynkinType kE8{Family::E, 8};

void require_e8(const RootSystem& rs) {
    if (rs.type() != kE8) throw Error("operation requires the E8 root system");
}

} // namespace

E8Decomposition e8_decompose(const RootSystem& e8, const KRoot& r) {
    require_e8(e8);
    if (static_cast<int>(r.size()) != 8 || !orthogonal_set(e8, r))
        throw Error("expected an orthogonal 8-root");
    const RootId theta = highest_root(e8);
    if (std::find(r.begin(), r.end(), theta) != r.end())
        throw ContainsTheta("8-root contains the highest root");
    E8Decomposition d;
    d.q1 = support(e8, r, theta);
    for (RootId b : r)
        if (std::find(d.q1.begin(), d.q1.end(), b) == d.q1.end()) d.q0.push_back(b);
    for (RootId b : d.q1)
        if (e8.coeffs(b)[7] != 1) throw Error("support of theta escaped U_1");
    for (RootId b : d.q0)
        if (e8.coeffs(b)[7] != 0) throw Error("complement escaped U_0");
    return d;
}

KRoot iota(const RootSystem& e8, const KRoot& triple) {
    require_e8(e8);
    if (triple.size() != 3) throw NotATriple("iota expects a triple");
    if (!orthogonal_set(e8, triple)) throw NotATriple("iota expects an orthogonal triple");
    const RootId s8 = e8.simple_root(8);
    const RootId eta = e8.reflected(s8, highest_root(e8));
    KRoot out;
    for (RootId b : triple) {
        const Coeffs& c = e8.coeffs(b);
        if (c[7] != 0 || c[6] != 1) throw NotATriple("triple is not contained in U(E7,7)");
        out.push_back(e8.reflected(s8, b));
    }
    out.push_back(eta);
    std::sort(out.begin(), out.end());
    return out;
}

ABCLabel ABCLabel::c(int i, int j) {
    if (i > j) std::swap(i, j);
    return {'c', i, j};
}

ABCLabel ABCLabel::parse(const std::string& s) {
    if (s.size() == 2 && (s[0] == 'a' || s[0] == 'b'))
        return {s[0], s[1] - '0', 0};
    if (s.size() == 3 && s[0] == 'c') return ABCLabel::c(s[1] - '0', s[2] - '0');
    throw Error("cannot parse label '" + s + "'");
}

std::string ABCLabel::str() const {
    std::string s(1, kind);
    s += std::to_string(i);
    if (kind == 'c') s += std::to_string(j);
    return s;
}

ABCLabelling::ABCLabelling(const RootSystem& e8) : e8_(&e8) {
    require_e8(e8);

    // The E7 realization behind the exceptional-curve labels uses a
    // relabelled diagram (chain 1..6 with 7 on the branch) and simple roots
    // alpha'_i = 4(e_i - e_{i+1}) for i <= 6, alpha'_7 as below. tau is the
    // diagram isomorphism between the two labellings; it sends the degree-3
    // vertex 4 to 3 and the branch vertex 2 to 7, which pins it uniquely.
    Eigen::Matrix<int, 8, 1> aprime[8];
    for (int i = 1; i <= 6; ++i) {
        aprime[i].setZero();
        aprime[i][i - 1] = 4;
        aprime[i][i] = -4;
    }
    aprime[7] << -2, -2, -2, 2, 2, 2, 2, -2;
    const int tau_map[8] = {0, 1, 7, 2, 3, 4, 5, 6}; // old node -> new node
    Eigen::Matrix<int, 8, 1> base;
    base << -1, -1, -1, -1, -1, -1, 3, 3;

    for (RootId a = e8.num_positive(); a < e8.num_roots(); ++a) {
        const Coeffs& c = e8.coeffs(a);
        if (c[7] == 1) u56_.push_back(a);
        if (c[7] == 0 && c[6] == 1) u27_.push_back(a);
    }

    for (RootId b : u56_) {
        const Coeffs& d = e8.coeffs(b);
        Eigen::Matrix<int, 8, 1> f = base;
        for (int i = 1; i <= 7; ++i) f += d[i - 1] * aprime[tau_map[i]];
        // f must be +-v_{ij} with v_{ij} = 4(e_i + e_j) - (1,...,1).
        int plus = 0, minus = 0, hi = -1, lo = -1;
        bool ok = true;
        for (int t = 0; t < 8; ++t) {
            if (f[t] == 3) {
                ++plus;
                hi = t + 1;
            } else if (f[t] == -3) {
                ++minus;
                lo = t + 1;
            } else if (f[t] != 1 && f[t] != -1) {
                ok = false;
            }
        }
        std::ostringstream name;
        if (ok && plus == 2 && minus == 0) {
            int first = -1;
            for (int t = 0; t < 8; ++t)
                if (f[t] == 3) {
                    first = t + 1;
                    break;
                }
            name << "X" << first << hi;
        } else if (ok && minus == 2 && plus == 0) {
            int first = -1;
            for (int t = 0; t < 8; ++t)
                if (f[t] == -3) {
                    first = t + 1;
                    break;
                }
            name << "Y" << first << lo;
        } else {
            throw LabellingFailure("f-image of " + coeff_string(e8, b) +
                                   " is not a +-v vector");
        }
        xy_.emplace(b, name.str());
    }

    const RootId s8 = e8.simple_root(8);
    for (RootId g : u27_) {
        const RootId image = e8.reflected(s8, g);
        auto it = xy_.find(image);
        if (it == xy_.end()) throw LabellingFailure("s_8 image escaped U(E8,8)");
        const std::string& xy = it->second;
        const int i = xy[1] - '0', j = xy[2] - '0';
        ABCLabel l;
        if (xy[0] == 'X' && j == 7 && i <= 6) l = ABCLabel::a(i);
        else if (xy[0] == 'X' && j == 8 && i <= 6) l = ABCLabel::b(i);
        else if (xy[0] == 'Y' && i <= 6 && j <= 6) l = ABCLabel::c(i, j);
        else throw LabellingFailure("U(E7,7) image carries label " + xy);
        abc_.emplace(g, l);
        root_of_.emplace(l, g);
    }
    if (abc_.size() != 27 || root_of_.size() != 27)
        throw LabellingFailure("a/b/c labelling is not a bijection");
}

std::string ABCLabelling::xy_label(RootId b) const {
    auto it = xy_.find(b);
    if (it == xy_.end()) throw Error("root is not in U(E8,8)");
    return it->second;
}

ABCLabel ABCLabelling::label(RootId g) const {
    auto it = abc_.find(g);
    if (it == abc_.end()) throw Error("root is not in U(E7,7)");
    return it->second;
}

RootId ABCLabelling::root(const ABCLabel& l) const {
    auto it = root_of_.find(l);
    if (it == root_of_.end()) throw Error("unknown label " + l.str());
    return it->second;
}

std::optional<ABCLabel> ABCLabelling::try_label(RootId b) const {
    auto it = abc_.find(b);
    if (it == abc_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> ABCLabelling::try_xy(RootId b) const {
    auto it = xy_.find(b);
    if (it == xy_.end()) return std::nullopt;
    return it->second;
}

ABCTriple ABCLabelling::to_labels(const KRoot& triple) const {
    ABCTriple out;
    for (RootId g : triple) out.push_back(label(g));
    std::sort(out.begin(), out.end());
    return out;
}

KRoot ABCLabelling::to_roots(const ABCTriple& labels) const {
    KRoot out;
    for (const ABCLabel& l : labels) out.push_back(root(l));
    std::sort(out.begin(), out.end());
    return out;
}

Rothe45 rothe45_closed_form(const ABCTriple& triple) {
    if (triple.size() != 3) throw NotATriple("expected three labels");
    int n_a = 0, n_b = 0, n_c = 0;
    for (const auto& l : triple) {
        if (l.kind == 'a') ++n_a;
        else if (l.kind == 'b') ++n_b;
        else ++n_c;
    }
    Rothe45 out;
    if (n_a == 1 && n_c == 1 && n_b == 1) {
        int i = 0, j = 0, ci = 0, cj = 0;
        for (const auto& l : triple) {
            if (l.kind == 'a') i = l.i;
            else if (l.kind == 'b') j = l.i;
            else ci = l.i, cj = l.j;
        }
        if (i == j || std::min(ci, cj) != std::min(i, j) || std::max(ci, cj) != std::max(i, j))
            throw NotATriple("labels do not form a triple a_i c_ij b_j");
        if (i < j) {
            out.level = 5 + i - j;
            for (int h = 1; h < i; ++h) out.residues.push_back(ABCLabel::a(h));
            for (int k = j + 1; k <= 6; ++k) out.residues.push_back(ABCLabel::c(i, k));
        } else {
            out.level = 4 + i - j;
            for (int h = 1; h < i; ++h) out.residues.push_back(ABCLabel::a(h));
            for (int k = j + 1; k <= 6; ++k)
                if (k != i) out.residues.push_back(ABCLabel::c(k, i));
        }
    } else if (n_c == 3) {
        std::vector<std::pair<int, int>> blocks;
        for (const auto& l : triple) blocks.emplace_back(l.i, l.j);
        const Matching m = Matching::of(blocks); // throws unless a perfect matching of [6]
        const Perm t = tau(m);
        out.level = (perm_length(t) + 9) / 2;
        for (int i = 1; i <= 6; ++i) out.residues.push_back(ABCLabel::a(i));
        for (int p = 1; p <= 6; ++p)
            for (int q = p + 1; q <= 6; ++q)
                if (t[p - 1] < q && t[q - 1] < p) out.residues.push_back(ABCLabel::c(p, q));
    } else {
        throw NotATriple("labels are neither a_i c_ij b_j nor a c-matching");
    }
    std::sort(out.residues.begin(), out.residues.end());
    return out;
}

Rothe45 rothe45(const ABCLabelling& lab, const ABCTriple& triple) {
    Rothe45 closed = rothe45_closed_form(triple);
    const KRoot roots = lab.to_roots(triple);
    ResidueSet direct = residues_wrt(lab.system(), lab.u27(), roots);
    std::vector<ABCLabel> direct_labels;
    for (RootId g : direct.residues) direct_labels.push_back(lab.label(g));
    std::sort(direct_labels.begin(), direct_labels.end());
    if (direct_labels != closed.residues || direct.level() != closed.level) {
        std::ostringstream os;
        os << "closed form disagrees with direct residues for";
        for (const auto& l : triple) os << " " << l.str();
        throw CrossCheckMismatch(os.str());
    }
    return closed;
}

std::vector<CubicTerm> invariant_cubic(const ABCLabelling& lab) {
    const RootSystem& rs = lab.system();
    OmegaSet omega = enumerate_omega(rs, lab.u27());
    if (omega.kappa != 3) throw Error("Omega_{U'} should consist of triples");
    std::vector<CubicTerm> terms;
    for (const KRoot& t : omega.members) {
        CubicTerm term;
        term.level = level_wrt(rs, lab.u27(), t);
        term.monomial = lab.to_labels(t);
        term.coeff = term.level % 2 == 0 ? 1 : -1;
        terms.push_back(std::move(term));
    }
    std::sort(terms.begin(), terms.end(), [](const CubicTerm& x, const CubicTerm& y) {
        if (x.level != y.level) return x.level < y.level;
        return x.monomial < y.monomial;
    });
    return terms;
}

} // namespace nroots
