#pragma once

#include "isokit/isotropy_data.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <utility>

namespace isokit {

/// Exponents (a, b) of the monomial t^a tbar^b.
struct Monomial {
    unsigned t = 0;
    unsigned tbar = 0;

    unsigned degree() const noexcept { return t + tbar; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of Z[t, tbar]. No zero coefficients are stored.
class KClass {
public:
    using Terms = std::map<Monomial, Integer>;

    KClass() = default;
    static KClass monomial(Monomial m, const Integer& coeff = 1);
    static KClass t();
    static KClass tbar();

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(Monomial m) const;

    /// Common total degree of all terms; nullopt for zero or inhomogeneous classes.
    std::optional<unsigned> homogeneous_degree() const;
    bool is_homogeneous(unsigned degree) const;

    KClass& operator+=(const KClass& o);
    KClass& operator-=(const KClass& o);
    KClass operator-() const;
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator*(const KClass& a, const KClass& b);
    friend KClass operator*(const Integer& c, const KClass& a);
    KClass pow(unsigned e) const;

    friend bool operator==(const KClass&, const KClass&) = default;

private:
    void accumulate(Monomial m, const Integer& c);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const KClass& k);

/// Image in the K-ring: sum over points of sign * t^(n-j) tbar^j.
KClass k_class(const IsotropyData& d);

} // namespace isokit
