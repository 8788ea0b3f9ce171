#include "isokit/chern.hpp"

#include <stdexcept>
#include <string>

namespace isokit {

MultiIndex::MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries))
{
    for (std::size_t l = 0; l < entries_.size(); ++l) {
        if (entries_[l] == 0) {
            throw DataError("multi-index entry " + std::to_string(l) + " is 0; entries must be >= 1");
        }
        degree_ += entries_[l];
    }
}

Integer ext_binom(const Integer& j, unsigned k)
{
    Integer falling = 1;
    for (unsigned r = 0; r < k; ++r) falling *= j - r;
    Integer factorial;
    mpz_fac_ui(factorial.get_mpz_t(), k);
    if (!mpz_divisible_p(falling.get_mpz_t(), factorial.get_mpz_t())) {
        throw std::logic_error("falling factorial not divisible by " + std::to_string(k) + "!");
    }
    Integer out;
    mpz_divexact(out.get_mpz_t(), falling.get_mpz_t(), factorial.get_mpz_t());
    return out;
}

Integer int_pow(const Integer& base, unsigned exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

namespace {

void require_j_le_n(unsigned n, unsigned j)
{
    if (j > n) throw DataError("j = " + std::to_string(j) + " exceeds n = " + std::to_string(n));
}

} // namespace

Integer chern_C(unsigned n, unsigned j, unsigned i)
{
    require_j_le_n(n, j);
    if (i > n) return 0;
    const Integer plus_count = n - j;
    const Integer minus_count = j;
    Integer sum = 0;
    for (unsigned k = 0; k <= i; ++k) {
        Integer term = ext_binom(plus_count, i - k) * ext_binom(minus_count, k);
        if (k % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

Integer chern_C_oracle(unsigned n, unsigned j, unsigned i)
{
    require_j_le_n(n, j);
    // Coefficients of the running product, index = power of y.
    std::vector<Integer> poly{1};
    auto multiply_linear = [&poly](int slope) {
        poly.push_back(0);
        for (std::size_t e = poly.size() - 1; e > 0; --e) poly[e] += slope * poly[e - 1];
    };
    for (unsigned a = 0; a < n - j; ++a) multiply_linear(1);
    for (unsigned b = 0; b < j; ++b) multiply_linear(-1);
    return i < poly.size() ? poly[i] : Integer(0);
}

Integer chern_C_multi(unsigned n, unsigned j, const MultiIndex& I)
{
    Integer out = 1;
    for (unsigned i : I.entries()) {
        out *= chern_C(n, j, i);
        if (out == 0) break;
    }
    return out;
}

Integer binomial_D(unsigned n, unsigned i)
{
    Integer sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        Integer term = ext_binom(Integer(n), j) * int_pow(Integer(j), i);
        if (j % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

Integer binomial_derivative_residual(unsigned n, unsigned i)
{
    Integer sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        Integer falling = 1;
        for (unsigned l = 0; l < i; ++l) falling *= Integer(j) - l;
        Integer term = ext_binom(Integer(n), j) * falling;
        // (-1)^(j-i) has the parity of j + i.
        if ((j + i) % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

} // namespace isokit
