#include "nroots/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "nroots/residue.hpp"

namespace nroots {

QPoly::QPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(long long c) { return QPoly(std::vector<long long>{c}); }

QPoly QPoly::monomial(int power, long long c) {
    std::vector<long long> v(power + 1, 0);
    v[power] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long long QPoly::operator()(long long q) const {
    long long acc = 0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * q + c_[k];
    return acc;
}

QPoly QPoly::negate_q() const {
    QPoly r(*this);
    for (size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<long long> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(out));
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return QPoly();
    if (degree() < divisor.degree()) return std::nullopt;
    const long long lead = divisor.c_.back();
    std::vector<long long> rem = c_;
    std::vector<long long> quot(degree() - divisor.degree() + 1, 0);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        const long long top = rem[k + divisor.degree()];
        if (top % lead != 0) return std::nullopt;
        const long long q = top / lead;
        quot[k] = q;
        for (int j = 0; j <= divisor.degree(); ++j) rem[k + j] -= q * divisor.c_[j];
    }
    for (long long r : rem)
        if (r != 0) return std::nullopt;
    return QPoly(std::move(quot));
}

std::string QPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const long long c = c_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const long long a = c < 0 ? -c : c;
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

QPoly quantum_integer(int d) {
    if (d < 1) throw Error("[d]_q requires d >= 1");
    return QPoly(std::vector<long long>(d, 1));
}

namespace {

bool factor_rec(const QPoly& p, std::vector<int>& acc) {
    if (p.degree() == 0) return p.coeff(0) == 1;
    for (int d = p.degree() + 1; d >= 2; --d) {
        auto q = p.divide_exact(quantum_integer(d));
        if (!q) continue;
        acc.push_back(d);
        if (factor_rec(*q, acc)) return true;
        acc.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> factor_quantum_integers(const QPoly& p) {
    if (p.is_zero() || p.coeff(0) != 1) return std::nullopt;
    for (long long c : p.coeffs())
        if (c < 0) return std::nullopt;
    std::vector<int> acc;
    if (!factor_rec(p, acc)) return std::nullopt;
    std::sort(acc.begin(), acc.end());
    return acc;
}

HafnianPoly quantum_hafnian(const RootSystem& rs, const OmegaSet& omega) {
    HafnianPoly h;
    for (const KRoot& r : omega.members)
        h.terms.emplace(r, QPoly::monomial(level_wrt(rs, omega.universe, r)));
    return h;
}

HafnianPoly quantum_hafnian(const RootSystem& rs, const std::vector<RootId>& universe) {
    return quantum_hafnian(rs, enumerate_omega(rs, universe));
}

HafnianPoly specialize_negate_q(const HafnianPoly& h) {
    HafnianPoly out;
    for (const auto& [m, c] : h.terms) out.terms.emplace(m, c.negate_q());
    return out;
}

HafnianPoly specialize_q(const HafnianPoly& h, long long q) {
    HafnianPoly out;
    for (const auto& [m, c] : h.terms) {
        const long long v = c(q);
        if (v != 0) out.terms.emplace(m, QPoly::constant(v));
    }
    return out;
}

long long evaluate(const HafnianPoly& h, const std::function<long long(RootId)>& value,
                   long long q) {
    long long acc = 0;
    for (const auto& [m, c] : h.terms) {
        long long prod = c(q);
        for (RootId b : m) prod *= value(b);
        acc += prod;
    }
    return acc;
}

QPoly poincare(const HafnianPoly& h) {
    QPoly p;
    for (const auto& [m, c] : h.terms) p += c;
    return p;
}

QPoly poincare(const RootSystem& rs, const std::vector<RootId>& universe) {
    auto omega = enumerate_omega(rs, universe);
    QPoly p;
    for (const KRoot& r : omega.members)
        p += QPoly::monomial(level_wrt(rs, universe, r));
    return p;
}

long long leibniz_determinant(const MatLL& a) {
    const int m = static_cast<int>(a.rows());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    long long acc = 0;
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inv;
        long long prod = (inv % 2 == 0) ? 1 : -1;
        for (int i = 0; i < m; ++i) prod *= a(i, perm[i]);
        acc += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

long long leibniz_permanent(const MatLL& a) {
    const int m = static_cast<int>(a.rows());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    long long acc = 0;
    do {
        long long prod = 1;
        for (int i = 0; i < m; ++i) prod *= a(i, perm[i]);
        acc += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

namespace {

long long hafnian_rec(const MatLL& a, std::vector<int>& live) {
    if (live.empty()) return 1;
    const int i = live.front();
    long long acc = 0;
    for (size_t t = 1; t < live.size(); ++t) {
        const int j = live[t];
        std::vector<int> rest;
        rest.reserve(live.size() - 2);
        for (int v : live)
            if (v != i && v != j) rest.push_back(v);
        acc += a(i, j) * hafnian_rec(a, rest);
    }
    return acc;
}

long long pfaffian_rec(const MatLL& a, std::vector<int>& live) {
    if (live.empty()) return 1;
    const int i = live.front();
    long long acc = 0;
    long long sign = 1;
    for (size_t t = 1; t < live.size(); ++t) {
        const int j = live[t];
        std::vector<int> rest;
        rest.reserve(live.size() - 2);
        for (int v : live)
            if (v != i && v != j) rest.push_back(v);
        acc += sign * a(i, j) * pfaffian_rec(a, rest);
        sign = -sign;
    }
    return acc;
}

} // namespace

long long matrix_hafnian(const MatLL& a) {
    std::vector<int> live(a.rows());
    std::iota(live.begin(), live.end(), 0);
    return hafnian_rec(a, live);
}

long long matrix_pfaffian(const MatLL& a) {
    std::vector<int> live(a.rows());
    std::iota(live.begin(), live.end(), 0);
    return pfaffian_rec(a, live);
}

OracleReport matrix_oracle_compare(const RootSystem& rs, const HafnianPoly& h, OracleModel model,
                                   int k, int trials, uint64_t seed) {
    if (rs.type().family != Family::D || rs.rank() != 2 * k)
        throw Error("oracle comparison requires a root system of type D_{2k}");

    // Map each root appearing in h to its board position via epsilon coords.
    auto position = [&](RootId b) -> std::pair<int, int> {
        Eigen::VectorXi e = rs.epsilon(b);
        int i = -1, j = -1;
        for (int t = 0; t < e.size(); ++t) {
            if (e[t] == 1) (i < 0 ? i : j) = t;
            else if (e[t] != 0) throw Error("root is not of the form e_i + e_j");
        }
        if (j < 0) throw Error("root is not of the form e_i + e_j");
        return {i, j};
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    const int m = 2 * k;

    for (int trial = 0; trial < trials; ++trial) {
        if (model == OracleModel::Matching) {
            MatLL b = MatLL::Zero(m, m);
            if (trial > 0) // trial 0 keeps the all-zero assignment
                for (int i = 0; i < m; ++i)
                    for (int j = i + 1; j < m; ++j) b(i, j) = b(j, i) = dist(rng);
            MatLL skew = MatLL::Zero(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    skew(i, j) = b(i, j);
                    skew(j, i) = -b(i, j);
                }
            auto value = [&](RootId r) {
                auto [i, j] = position(r);
                return b(i, j);
            };
            const long long hf = evaluate(h, value, 1);
            const long long pf = evaluate(h, value, -1);
            const long long hf_oracle = matrix_hafnian(b);
            const long long pf_oracle = matrix_pfaffian(skew);
            const long long det_oracle = leibniz_determinant(skew);
            if (hf != hf_oracle || pf != pf_oracle || pf * pf != det_oracle) {
                std::ostringstream os;
                os << "matching model mismatch at trial " << trial << ": Hf=" << hf
                   << " oracle=" << hf_oracle << ", Pf=" << pf << " oracle=" << pf_oracle
                   << ", Pf^2=" << pf * pf << " det=" << det_oracle << ", entries:";
                for (int i = 0; i < m; ++i)
                    for (int j = i + 1; j < m; ++j) os << " a" << i + 1 << j + 1 << "=" << b(i, j);
                return {false, os.str()};
            }
        } else {
            MatLL a = MatLL::Zero(k, k);
            if (trial > 0)
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) a(i, j) = dist(rng);
            auto value = [&](RootId r) {
                auto [i, j] = position(r);
                return a(i, j - k); // columns live on e_{k+1}..e_{2k}
            };
            const long long hf = evaluate(h, value, 1);
            const long long pf = evaluate(h, value, -1);
            const long long per_oracle = leibniz_permanent(a);
            const long long det_oracle = leibniz_determinant(a);
            if (hf != per_oracle || pf != det_oracle) {
                std::ostringstream os;
                os << "permutation model mismatch at trial " << trial << ": Hf=" << hf
                   << " per=" << per_oracle << ", Pf=" << pf << " det=" << det_oracle
                   << ", entries:";
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) os << " a" << i + 1 << j + 1 << "=" << a(i, j);
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

} // namespace nroots
