#pragma once

#include "isokit/isotropy_data.hpp"

#include <initializer_list>
#include <vector>

namespace isokit {

/// A Chern multi-index I = (i_1, ..., i_r) with every i_l >= 1.
///
/// degree() is the sum of the entries, i.e. the complex degree of c_I. It is
/// compared against the complex dimension n, not the real dimension 2n.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> entries);
    MultiIndex(std::initializer_list<unsigned> entries)
        : MultiIndex(std::vector<unsigned>(entries)) {}

    const std::vector<unsigned>& entries() const noexcept { return entries_; }
    unsigned degree() const noexcept { return degree_; }
    bool empty() const noexcept { return entries_.empty(); }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> entries_;
    unsigned degree_ = 0;
};

/// Binomial coefficient as the falling-factorial polynomial in j:
/// j (j-1) ... (j-k+1) / k!. Defined for every integer j.
Integer ext_binom(const Integer& j, unsigned k);

/// Non-negative machine integer power with 0^0 = 1.
Integer int_pow(const Integer& base, unsigned exponent);

/// C_i(j): the i-th elementary symmetric polynomial evaluated at
/// (1 repeated n-j times, -1 repeated j times), via the binomial closed form.
/// Zero when i > n. Throws DataError if j > n.
Integer chern_C(unsigned n, unsigned j, unsigned i);

/// Same value as chern_C computed by expanding (1+y)^(n-j) (1-y)^j and
/// reading off the coefficient of y^i.
Integer chern_C_oracle(unsigned n, unsigned j, unsigned i);

/// Product of chern_C(n, j, i_l) over the entries of I; 1 for the empty index.
Integer chern_C_multi(unsigned n, unsigned j, const MultiIndex& I);

/// D_i = sum_j (-1)^j C(n, j) j^i.
Integer binomial_D(unsigned n, unsigned i);

/// i-th derivative of (1+x)^n at x = -1, written as
/// sum_j C(n, j) (-1)^(j-i) j (j-1) ... (j-i+1).
Integer binomial_derivative_residual(unsigned n, unsigned i);

} // namespace isokit
