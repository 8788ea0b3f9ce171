#pragma once

#include "isokit/chern.hpp"
#include "isokit/isotropy_data.hpp"
#include "isokit/rational_matrix.hpp"

#include <vector>

namespace isokit {

/// coefficient * u^exponent, with u the degree-2 generator of H^*(BS^1).
/// Zero is always stored with exponent 0.
class LaurentMonomial {
public:
    LaurentMonomial() = default;
    LaurentMonomial(Integer coefficient, long exponent);

    const Integer& coefficient() const noexcept { return coefficient_; }
    long exponent() const noexcept { return exponent_; }
    bool is_zero() const noexcept { return coefficient_ == 0; }

    friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;

private:
    Integer coefficient_ = 0;
    long exponent_ = 0;
};

/// I_i = sum_p sign_p (-1)^q(p) C_i(q(p)). Valid for every i >= 0; only
/// i <= n-1 are constraints, and I_n is the signed Euler characteristic.
Integer identity_I(const IsotropyData& d, unsigned i);

/// Q_k = sum_p sign_p (-1)^q(p) q(p)^k, with 0^0 = 1.
Integer moment_Q(const IsotropyData& d, unsigned k);

/// Fixed-point sum for the Chern number c_I, after dividing each local
/// contribution by its Euler class sign_p (-1)^q(p) u^n. The result is
/// coefficient * u^(degree(I) - n).
LaurentMonomial localization_value(const IsotropyData& d, const MultiIndex& I);

/// n x n matrix with entry (i, j-1) = (-1)^(j-1) j^i for i = 0..n-1, j = 1..n.
/// Throws std::invalid_argument for n = 0.
RationalMatrix moment_matrix(unsigned n);

/// determinant(moment_matrix(n)); nonzero since it is a signed Vandermonde determinant.
Rational vandermonde_det(unsigned n);

/// Unique (m_1, ..., m_n) with moment_matrix(n) m = (m0, 0, ..., 0).
std::vector<Rational> solve_moments(unsigned n, const Integer& m0);

struct IdentityReport {
    unsigned n = 0;
    /// residuals[i] = I_i for i = 0..n-1.
    std::vector<Integer> residuals;
    bool satisfied = true;
};

/// Evaluates every I_i with 0 <= i <= n-1; no short-circuit.
IdentityReport check_identities(const IsotropyData& d);

} // namespace isokit
