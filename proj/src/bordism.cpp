#include "isokit/bordism.hpp"

#include "isokit/chern.hpp"

#include <sstream>

namespace isokit {

BordismPolynomial BordismPolynomial::monomial(unsigned degree, const Integer& coeff)
{
    BordismPolynomial p;
    p.accumulate(degree, coeff);
    return p;
}

Integer BordismPolynomial::coefficient(unsigned degree) const
{
    auto it = terms_.find(degree);
    return it == terms_.end() ? Integer(0) : it->second;
}

void BordismPolynomial::accumulate(unsigned degree, const Integer& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BordismPolynomial& BordismPolynomial::operator+=(const BordismPolynomial& o)
{
    for (const auto& [deg, c] : o.terms_) accumulate(deg, c);
    return *this;
}

BordismPolynomial BordismPolynomial::operator-() const
{
    BordismPolynomial out;
    for (const auto& [deg, c] : terms_) out.terms_.emplace(deg, -c);
    return out;
}

BordismPolynomial operator*(const BordismPolynomial& a, const BordismPolynomial& b)
{
    BordismPolynomial out;
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) out.accumulate(da + db, ca * cb);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BordismPolynomial& p)
{
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [deg, c] : p.terms()) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const Integer mag = abs(c);
        if (deg == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << " ";
        os << "s";
        if (deg > 1) os << "^" << deg;
    }
    return os;
}

std::variant<BordismPolynomial, NotRealizable> bordism_class(const IsotropyData& d)
{
    auto r = realize(d);
    if (auto* defect = std::get_if<NotRealizable>(&r)) return *defect;
    return BordismPolynomial::monomial(d.n(), std::get<Witness>(r).m0);
}

std::variant<BordismPolynomial, NotInImage> kclass_to_bordism(const KClass& k, unsigned n)
{
    if (!k.is_homogeneous(n)) {
        std::ostringstream msg;
        msg << "K-class " << k << " is not homogeneous of degree " << n;
        return NotInImage{msg.str()};
    }
    // (t + tbar)^n has coefficient 1 on t^n, so c is read off there.
    const Integer c = k.coefficient(Monomial{n, 0});
    for (unsigned j = 0; j <= n; ++j) {
        const Integer expected = c * ext_binom(Integer(n), j);
        const Integer actual = k.coefficient(Monomial{n - j, j});
        if (actual != expected) {
            std::ostringstream msg;
            msg << "coefficient of t^" << (n - j) << " tbar^" << j << " is " << actual
                << ", expected " << expected << " = " << c << " * C(" << n << ", " << j << ")";
            return NotInImage{msg.str()};
        }
    }
    return BordismPolynomial::monomial(n, c);
}

std::variant<BordismPolynomial, ComponentNotRealizable>
graded_bordism_class(std::span<const IsotropyData> components)
{
    BordismPolynomial total;
    for (std::size_t idx = 0; idx < components.size(); ++idx) {
        auto r = bordism_class(components[idx]);
        if (auto* defect = std::get_if<NotRealizable>(&r)) {
            return ComponentNotRealizable{idx, *defect};
        }
        total += std::get<BordismPolynomial>(r);
    }
    return total;
}

} // namespace isokit
