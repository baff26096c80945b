#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nroots/ortho.hpp"
#include "nroots/root_system.hpp"

namespace nroots {

/// Integer polynomial in q, dense coefficients, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<long long> coeffs);
    static QPoly constant(long long c);
    static QPoly monomial(int power, long long c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
    }
    const std::vector<long long>& coeffs() const { return c_; }

    long long operator()(long long q) const;
    QPoly negate_q() const; // q -> -q

    QPoly& operator+=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly&) const = default;

    /// Exact division; nullopt when the remainder is nonzero or a quotient
    /// coefficient would be fractional.
    std::optional<QPoly> divide_exact(const QPoly& divisor) const;

    std::string str(std::string_view var = "q") const;

private:
    void trim();
    std::vector<long long> c_;
};

/// [d]_q = 1 + q + ... + q^{d-1}.
QPoly quantum_integer(int d);

/// Factors p as a product of quantum integers [d]_q with d >= 2, returned
/// sorted ascending; nullopt when no such factorization exists. The empty
/// multiset is returned for p == 1.
std::optional<std::vector<int>> factor_quantum_integers(const QPoly& p);

/// Squarefree monomial: a sorted set of root ids.
using Monomial = std::vector<RootId>;

/// Polynomial in commuting indeterminates x_beta and q. Each monomial maps
/// to its q-polynomial coefficient; map order makes iteration deterministic.
struct HafnianPoly {
    std::map<Monomial, QPoly> terms;

    bool operator==(const HafnianPoly&) const = default;
};

/// QHf(U) = sum over Omega_U of q^{rho_U(R)} prod x_beta.
HafnianPoly quantum_hafnian(const RootSystem& rs, const std::vector<RootId>& universe);
HafnianPoly quantum_hafnian(const RootSystem& rs, const OmegaSet& omega);

/// QPf(U) = QHf(U, -q).
HafnianPoly specialize_negate_q(const HafnianPoly& h);
/// Specialize q to a value; Hf(U) at q = 1, Pf(U) at q = -1.
HafnianPoly specialize_q(const HafnianPoly& h, long long q);

/// Substitute values for the x_beta and q.
long long evaluate(const HafnianPoly& h, const std::function<long long(RootId)>& value,
                   long long q);

/// PS_U(q): all indeterminates specialized to 1.
QPoly poincare(const HafnianPoly& h);
QPoly poincare(const RootSystem& rs, const std::vector<RootId>& universe);

// --- independent matrix oracles (Leibniz sums and naive expansions) ---

using MatLL = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

long long leibniz_determinant(const MatLL& a);
long long leibniz_permanent(const MatLL& a);
long long matrix_hafnian(const MatLL& a);  // symmetric, even order
long long matrix_pfaffian(const MatLL& a); // skew-symmetric, even order

enum class OracleModel { Matching, Permutation };

struct OracleReport {
    bool ok = true;
    std::string detail; // offending assignment on mismatch
};

/// Cross-checks h (built from U(D_{2k}, 2k) or from T'(D_{2k}, k)) against
/// the matrix oracles under random small integer substitutions.
OracleReport matrix_oracle_compare(const RootSystem& rs, const HafnianPoly& h, OracleModel model,
                                   int k, int trials = 20, uint64_t seed = 1);

} // namespace nroots
