#include "nroots/root_system.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace nroots {

namespace {

std::string key_of(const Eigen::VectorXi& v) {
    std::string k;
    k.reserve(v.size() * sizeof(int));
    for (int i = 0; i < v.size(); ++i) {
        const int x = v[i];
        k.append(reinterpret_cast<const char*>(&x), sizeof(int));
    }
    return k;
}

// Edges of the Dynkin diagram, 1-based node labels as in the ADE figures.
std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& t) {
    std::vector<std::pair<int, int>> e;
    switch (t.family) {
    case Family::A:
        for (int i = 1; i < t.rank; ++i) e.emplace_back(i, i + 1);
        break;
    case Family::D:
        for (int i = 1; i <= t.rank - 2; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(t.rank - 2, t.rank);
        break;
    case Family::E:
        // chain 1-3-4-...-n with node 2 attached to node 4
        e.emplace_back(1, 3);
        for (int i = 3; i < t.rank; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(2, 4);
        break;
    }
    return e;
}

} // namespace

DynkinType::DynkinType(Family f, int r) : family(f), rank(r) {
    switch (f) {
    case Family::A:
        if (r < 1) throw InvalidType("type A requires rank >= 1");
        break;
    case Family::D:
        if (r < 4) throw InvalidType("type D requires rank >= 4");
        break;
    case Family::E:
        if (r < 6 || r > 8) throw InvalidType("type E requires rank in {6,7,8}");
        break;
    default:
        throw InvalidType("unknown family");
    }
}

DynkinType DynkinType::parse(std::string_view name) {
    if (name.size() < 2) throw InvalidType("cannot parse Dynkin type '" + std::string(name) + "'");
    const char f = name[0];
    if (f != 'A' && f != 'D' && f != 'E')
        throw InvalidType("unknown family '" + std::string(1, f) + "'");
    int rank = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            throw InvalidType("cannot parse Dynkin type '" + std::string(name) + "'");
        rank = rank * 10 + (name[i] - '0');
    }
    return DynkinType(static_cast<Family>(f), rank);
}

std::string DynkinType::name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int RootSystem::check(RootId a) const {
    if (a < 0 || a >= num_roots()) throw Error("root id out of range: " + std::to_string(a));
    return a;
}

RootSystem::RootSystem(DynkinType t) : type_(t), rank_(t.rank) {
    cartan_ = Eigen::MatrixXi::Zero(rank_, rank_);
    for (int i = 0; i < rank_; ++i) cartan_(i, i) = 2;
    for (auto [i, j] : dynkin_edges(type_)) {
        cartan_(i - 1, j - 1) = -1;
        cartan_(j - 1, i - 1) = -1;
    }
    generate();
    build_tables();
    if (has_epsilon()) build_epsilon();
}

void RootSystem::generate() {
    std::unordered_map<std::string, int> seen;
    std::deque<Coeffs> work;
    std::vector<Coeffs> found;
    for (int i = 0; i < rank_; ++i) {
        Coeffs c = Coeffs::Zero(rank_);
        c[i] = 1;
        seen.emplace(key_of(c), 1);
        found.push_back(c);
        work.push_back(c);
    }
    while (!work.empty()) {
        Coeffs b = work.front();
        work.pop_front();
        for (int i = 0; i < rank_; ++i) {
            const int pairing = cartan_.row(i).dot(b);
            Coeffs r = b;
            r[i] -= pairing;
            auto k = key_of(r);
            if (seen.emplace(std::move(k), 1).second) {
                found.push_back(r);
                work.push_back(r);
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Coeffs& x, const Coeffs& y) {
        const int hx = x.sum(), hy = y.sum();
        if (hx != hy) return hx < hy;
        return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(),
                                            y.data() + y.size());
    });
    roots_ = std::move(found);
    heights_.resize(roots_.size());
    for (size_t i = 0; i < roots_.size(); ++i) {
        heights_[i] = roots_[i].sum();
        lookup_.emplace(key_of(roots_[i]), static_cast<RootId>(i));
    }
}

void RootSystem::build_tables() {
    const int n = num_roots();
    const int p = num_positive();
    std::vector<Coeffs> pairing(n); // cartan * coeffs, cached
    for (int a = 0; a < n; ++a) pairing[a] = cartan_ * roots_[a];
    gram_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            gram_[static_cast<size_t>(a) * n + b] = static_cast<int8_t>(roots_[a].dot(pairing[b]));
    refl_.resize(static_cast<size_t>(p) * n);
    for (int a = p; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int g = gram_[static_cast<size_t>(a) * n + b];
            Coeffs r = roots_[b] - g * roots_[a];
            auto it = lookup_.find(key_of(r));
            if (it == lookup_.end()) throw Error("reflection escaped the root system");
            refl_[static_cast<size_t>(a - p) * n + b] = static_cast<int16_t>(it->second);
        }
    }
}

void RootSystem::build_epsilon() {
    const int dim = epsilon_dim();
    std::vector<Eigen::VectorXi> simple(rank_, Eigen::VectorXi::Zero(dim));
    for (int i = 0; i < rank_; ++i) {
        if (type_.family == Family::A) {
            simple[i][i] = 1;
            simple[i][i + 1] = -1;
        } else { // D
            if (i < rank_ - 1) {
                simple[i][i] = 1;
                simple[i][i + 1] = -1;
            } else {
                simple[i][rank_ - 2] = 1;
                simple[i][rank_ - 1] = 1;
            }
        }
    }
    eps_.resize(num_roots());
    for (int a = 0; a < num_roots(); ++a) {
        Eigen::VectorXi v = Eigen::VectorXi::Zero(dim);
        for (int i = 0; i < rank_; ++i) v += roots_[a][i] * simple[i];
        eps_[a] = v;
        eps_lookup_.emplace(key_of(v), a);
    }
}

int RootSystem::epsilon_dim() const {
    if (!has_epsilon()) throw Error("no epsilon realization for type E");
    return type_.family == Family::A ? rank_ + 1 : rank_;
}

Eigen::VectorXi RootSystem::epsilon(RootId a) const {
    if (!has_epsilon()) throw Error("no epsilon realization for type E");
    return eps_[check(a)];
}

std::optional<RootId> RootSystem::from_epsilon(const Eigen::VectorXi& v) const {
    if (!has_epsilon()) throw Error("no epsilon realization for type E");
    auto it = eps_lookup_.find(key_of(v));
    if (it == eps_lookup_.end()) return std::nullopt;
    return it->second;
}

std::vector<RootId> RootSystem::positive_ids() const {
    std::vector<RootId> out(num_positive());
    for (int i = 0; i < num_positive(); ++i) out[i] = num_positive() + i;
    return out;
}

RootId RootSystem::simple_root(int node) const {
    if (node < 1 || node > rank_) throw InvalidNode("node out of range: " + std::to_string(node));
    Coeffs c = Coeffs::Zero(rank_);
    c[node - 1] = 1;
    return id_of(c);
}

std::optional<RootId> RootSystem::find(const Coeffs& c) const {
    if (c.size() != rank_) return std::nullopt;
    auto it = lookup_.find(key_of(c));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

RootId RootSystem::id_of(const Coeffs& c) const {
    auto r = find(c);
    if (!r) throw Error("not a root");
    return *r;
}

RootSystem build_root_system(DynkinType t) { return RootSystem(t); }
RootSystem build_root_system(std::string_view name) {
    return RootSystem(DynkinType::parse(name));
}

HeightProfile heights(const RootSystem& rs, RootId a) {
    return HeightProfile{a, rs.height(a), rs.coeffs(a)};
}

RootId highest_root(const RootSystem& rs) { return rs.num_roots() - 1; }

std::vector<RootId> parabolic_subroots(const RootSystem& rs, const std::vector<int>& nodes) {
    std::vector<bool> in(rs.rank() + 1, false);
    for (int n : nodes) {
        if (n < 1 || n > rs.rank()) throw InvalidNode("node out of range: " + std::to_string(n));
        in[n] = true;
    }
    std::vector<RootId> out;
    for (RootId a = 0; a < rs.num_roots(); ++a) {
        const Coeffs& c = rs.coeffs(a);
        bool supported = true;
        for (int i = 0; i < rs.rank() && supported; ++i)
            if (c[i] != 0 && !in[i + 1]) supported = false;
        if (supported) out.push_back(a);
    }
    return out;
}

RootId parabolic_highest(const RootSystem& rs, const std::vector<int>& nodes) {
    auto sub = parabolic_subroots(rs, nodes);
    if (sub.empty()) throw InvalidNode("empty parabolic subsystem");
    return sub.back(); // ids are sorted by height, so the last one is maximal
}

std::vector<RootId> induced_simple_system(const RootSystem& rs, const std::vector<RootId>& psi) {
    std::vector<bool> in(rs.num_roots(), false);
    for (RootId a : psi) in[a] = true;
    for (RootId a : psi)
        for (RootId b : psi)
            if (!in[rs.reflected(a, b)])
                throw NotASubsystem("set is not closed under its own reflections");
    std::vector<RootId> pos;
    for (RootId a : psi)
        if (rs.is_positive(a)) pos.push_back(a);
    std::sort(pos.begin(), pos.end());
    std::vector<RootId> simple;
    for (RootId g : pos) {
        bool decomposable = false;
        for (RootId d : pos) {
            if (d >= g) break; // heights only grow with id
            Coeffs rest = rs.coeffs(g) - rs.coeffs(d);
            auto other = rs.find(rest);
            if (other && !rs.is_positive(*other)) other.reset();
            if (other && in[*other]) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(g);
    }
    return simple;
}

std::vector<RootId> height_filter(const RootSystem& rs, int node, int value) {
    if (node < 1 || node > rs.rank()) throw InvalidNode("node out of range: " + std::to_string(node));
    std::vector<RootId> out;
    for (RootId a = rs.num_positive(); a < rs.num_roots(); ++a)
        if (rs.coeffs(a)[node - 1] == value) out.push_back(a);
    return out;
}

std::string coeff_string(const RootSystem& rs, RootId a) {
    const Coeffs& c = rs.coeffs(a);
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ")";
    return os.str();
}

} // namespace nroots
