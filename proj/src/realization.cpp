#include "isokit/realization.hpp"

#include "isokit/chern.hpp"

namespace isokit {

IsotropyData sphere_power_data(unsigned n)
{
    IsotropyData d(n);
    for (unsigned j = 0; j <= n; ++j) d.add(j, Sign::plus, ext_binom(Integer(n), j));
    return d;
}

IsotropyData rep_sphere_data(unsigned n, unsigned j)
{
    IsotropyData d(n);
    d.add(SignedPoint{RepClass(n, j), Sign::plus});
    d.add(SignedPoint{RepClass(n, j), Sign::minus});
    return d;
}

std::vector<unsigned> NotRealizable::violated() const
{
    std::vector<unsigned> out;
    for (unsigned j = 0; j < residuals.size(); ++j) {
        if (residuals[j] != 0) out.push_back(j);
    }
    return out;
}

Realization realize(const IsotropyData& d)
{
    const auto table = multiplicities(d);
    const unsigned n = d.n();
    const Integer& m0 = table.m[0];

    NotRealizable defect{n, std::vector<Integer>(std::size_t{n} + 1, 0)};
    bool ok = true;
    for (unsigned j = 0; j <= n; ++j) {
        defect.residuals[j] = table.m[j] - ext_binom(Integer(n), j) * m0;
        if (defect.residuals[j] != 0) ok = false;
    }
    if (!ok) return defect;

    // The sphere powers account for the net count m[j] with the sign of m0;
    // every remaining opposite-sign point pairs off into a representation sphere.
    return Witness{n, m0, m0 >= 0 ? table.m_minus : table.m_plus};
}

IsotropyData witness_to_data(const Witness& w)
{
    IsotropyData d(w.n);
    const Sign orientation = w.m0 < 0 ? Sign::minus : Sign::plus;
    const Integer copies = abs(w.m0);
    for (unsigned j = 0; j <= w.n; ++j) {
        d.add(j, orientation, copies * ext_binom(Integer(w.n), j));
        if (j < w.rep_spheres.size()) {
            d.add(j, Sign::plus, w.rep_spheres[j]);
            d.add(j, Sign::minus, w.rep_spheres[j]);
        }
    }
    return d;
}

bool verify_witness(const IsotropyData& d, const Witness& w)
{
    if (w.n != d.n() || w.rep_spheres.size() != std::size_t{w.n} + 1) return false;
    for (const auto& c : w.rep_spheres) {
        if (c < 0) return false;
    }
    return witness_to_data(w) == d;
}

} // namespace isokit
