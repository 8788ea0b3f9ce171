#include "isokit/kclass.hpp"

#include <string>
#include <vector>

namespace isokit {

KClass KClass::monomial(Monomial m, const Integer& coeff)
{
    KClass k;
    k.accumulate(m, coeff);
    return k;
}

KClass KClass::t() { return monomial({1, 0}); }
KClass KClass::tbar() { return monomial({0, 1}); }

Integer KClass::coefficient(Monomial m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<unsigned> KClass::homogeneous_degree() const
{
    if (terms_.empty()) return std::nullopt;
    const unsigned deg = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        if (m.degree() != deg) return std::nullopt;
    }
    return deg;
}

bool KClass::is_homogeneous(unsigned degree) const
{
    for (const auto& [m, c] : terms_) {
        if (m.degree() != degree) return false;
    }
    return true;
}

void KClass::accumulate(Monomial m, const Integer& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

KClass& KClass::operator+=(const KClass& o)
{
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& o)
{
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
}

KClass KClass::operator-() const
{
    KClass out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

KClass operator*(const KClass& a, const KClass& b)
{
    KClass out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.accumulate(Monomial{ma.t + mb.t, ma.tbar + mb.tbar}, ca * cb);
        }
    }
    return out;
}

KClass operator*(const Integer& c, const KClass& a)
{
    KClass out;
    for (const auto& [m, ca] : a.terms_) out.accumulate(m, c * ca);
    return out;
}

KClass KClass::pow(unsigned e) const
{
    KClass result = monomial({0, 0});
    KClass base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const KClass& k)
{
    if (k.is_zero()) return os << "0";
    bool first = true;
    // Highest power of t first: t^2 + 2 t tbar + tbar^2.
    for (auto it = k.terms().rbegin(); it != k.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        const Integer mag = abs(c);
        if (mag != 1 || m.degree() == 0) factors.push_back(mag.get_str());
        auto power = [&factors](const std::string& sym, unsigned e) {
            if (e == 0) return;
            factors.push_back(e == 1 ? sym : sym + "^" + std::to_string(e));
        };
        power("t", m.t);
        power("tbar", m.tbar);
        for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? " " : "") << factors[f];
    }
    return os;
}

KClass k_class(const IsotropyData& d)
{
    KClass out;
    const unsigned n = d.n();
    for (const auto& [key, c] : d.runs()) {
        Integer coeff = key.sign == Sign::plus ? c : Integer(-c);
        out += KClass::monomial(Monomial{n - key.j, key.j}, coeff);
    }
    return out;
}

} // namespace isokit
