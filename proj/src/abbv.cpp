#include "isokit/abbv.hpp"

#include <stdexcept>

namespace isokit {

LaurentMonomial::LaurentMonomial(Integer coefficient, long exponent)
    : coefficient_(std::move(coefficient)), exponent_(coefficient_ == 0 ? 0 : exponent)
{
}

namespace {

// sign_p (-1)^j times the run multiplicity.
Integer local_weight(const PointKey& key, const Integer& count)
{
    const bool negative = (key.sign == Sign::minus) != (key.j % 2 == 1);
    return negative ? Integer(-count) : count;
}

} // namespace

Integer identity_I(const IsotropyData& d, unsigned i)
{
    Integer sum = 0;
    for (const auto& [key, c] : d.runs()) sum += local_weight(key, c) * chern_C(d.n(), key.j, i);
    return sum;
}

Integer moment_Q(const IsotropyData& d, unsigned k)
{
    Integer sum = 0;
    for (const auto& [key, c] : d.runs()) sum += local_weight(key, c) * int_pow(Integer(key.j), k);
    return sum;
}

LaurentMonomial localization_value(const IsotropyData& d, const MultiIndex& I)
{
    Integer sum = 0;
    for (const auto& [key, c] : d.runs()) sum += local_weight(key, c) * chern_C_multi(d.n(), key.j, I);
    return LaurentMonomial(std::move(sum), static_cast<long>(I.degree()) - static_cast<long>(d.n()));
}

RationalMatrix moment_matrix(unsigned n)
{
    if (n == 0) throw std::invalid_argument("moment_matrix requires n >= 1");
    RationalMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            Integer entry = int_pow(Integer(j), i);
            if ((j - 1) % 2 == 1) entry = -entry;
            m(i, j - 1) = Rational(entry);
        }
    }
    return m;
}

Rational vandermonde_det(unsigned n) { return determinant(moment_matrix(n)); }

std::vector<Rational> solve_moments(unsigned n, const Integer& m0)
{
    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = Rational(m0);
    auto solution = solve(moment_matrix(n), rhs);
    if (!solution) throw std::logic_error("moment matrix reported singular");
    return *std::move(solution);
}

IdentityReport check_identities(const IsotropyData& d)
{
    IdentityReport report;
    report.n = d.n();
    report.residuals.reserve(d.n());
    for (unsigned i = 0; i < d.n(); ++i) {
        report.residuals.push_back(identity_I(d, i));
        if (report.residuals.back() != 0) report.satisfied = false;
    }
    return report;
}

} // namespace isokit
