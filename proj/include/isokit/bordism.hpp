#pragma once

#include "isokit/isotropy_data.hpp"
#include "isokit/kclass.hpp"
#include "isokit/realization.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <variant>

namespace isokit {

/// Element of Z[s], s = [S^2]. Sparse by degree; no zero coefficients stored.
class BordismPolynomial {
public:
    using Terms = std::map<unsigned, Integer>;

    BordismPolynomial() = default;
    /// coeff * s^degree
    static BordismPolynomial monomial(unsigned degree, const Integer& coeff = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(unsigned degree) const;

    BordismPolynomial& operator+=(const BordismPolynomial& o);
    BordismPolynomial operator-() const;
    friend BordismPolynomial operator+(BordismPolynomial a, const BordismPolynomial& b) { return a += b; }
    friend BordismPolynomial operator*(const BordismPolynomial& a, const BordismPolynomial& b);

    friend bool operator==(const BordismPolynomial&, const BordismPolynomial&) = default;

private:
    void accumulate(unsigned degree, const Integer& c);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BordismPolynomial& p);

/// A K-class that is not c (t + tbar)^n for any integer c.
struct NotInImage {
    std::string reason;
};

/// A component of a graded union that failed to realize.
struct ComponentNotRealizable {
    std::size_t index = 0;
    NotRealizable defect;
};

/// m0 s^n for realizable data, where m0 comes from the witness.
std::variant<BordismPolynomial, NotRealizable> bordism_class(const IsotropyData& d);

/// Inverts the K-ring map on its image: c (t + tbar)^n  ->  c s^n.
std::variant<BordismPolynomial, NotInImage> kclass_to_bordism(const KClass& k, unsigned n);

/// Sum of bordism_class over components of possibly different dimensions.
/// Reports the first component that does not realize.
std::variant<BordismPolynomial, ComponentNotRealizable>
graded_bordism_class(std::span<const IsotropyData> components);

} // namespace isokit
