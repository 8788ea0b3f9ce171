#include "isokit/isotropy_data.hpp"

#include <sstream>

namespace isokit {

RepClass::RepClass(unsigned n, unsigned j) : n_(n), j_(j)
{
    if (j > n) {
        throw DataError("representation index j = " + std::to_string(j) +
                        " exceeds dimension n = " + std::to_string(n));
    }
}

Integer IsotropyData::count(unsigned j, Sign sign) const
{
    auto it = runs_.find(PointKey{j, sign});
    return it == runs_.end() ? Integer(0) : it->second;
}

Integer IsotropyData::point_count() const
{
    Integer total = 0;
    for (const auto& [key, c] : runs_) total += c;
    return total;
}

void IsotropyData::add(unsigned j, Sign sign, const Integer& copies)
{
    if (j > n_) {
        throw DataError("j = " + std::to_string(j) + " exceeds n = " + std::to_string(n_));
    }
    if (copies < 0) throw DataError("negative multiplicity " + copies.get_str());
    if (copies == 0) return;
    runs_[PointKey{j, sign}] += copies;
}

void IsotropyData::add(const SignedPoint& p, const Integer& copies)
{
    if (p.rep.n() != n_) {
        throw DataError("point of dimension " + std::to_string(p.rep.n()) +
                        " added to data of dimension " + std::to_string(n_));
    }
    add(p.rep.j(), p.sign, copies);
}

std::vector<SignedPoint> IsotropyData::points() const
{
    std::vector<SignedPoint> out;
    for (const auto& [key, c] : runs_) {
        for (Integer k = 0; k < c; ++k) out.push_back(SignedPoint{RepClass(n_, key.j), key.sign});
    }
    return out;
}

std::size_t IsotropyData::hash() const
{
    std::size_t h = std::hash<unsigned>{}(n_);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& [key, c] : runs_) {
        mix(key.j);
        mix(static_cast<std::size_t>(to_int(key.sign) + 1));
        mix(std::hash<std::string>{}(c.get_str(16)));
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const IsotropyData& d)
{
    os << "{n=" << d.n() << ":";
    bool first = true;
    for (const auto& [key, c] : d.runs()) {
        os << (first ? " " : ", ") << c << "x(V" << key.j << (key.sign == Sign::plus ? ",+" : ",-")
           << ")";
        first = false;
    }
    return os << "}";
}

IsotropyData make_data(unsigned n, std::span<const RawPoint> points)
{
    IsotropyData d(n);
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const auto& p = points[idx];
        if (p.j < 0 || p.j > static_cast<std::int64_t>(n)) {
            std::ostringstream msg;
            msg << "points[" << idx << "].j: " << p.j << " is outside [0, " << n << "]";
            throw DataError(msg.str());
        }
        if (p.sign != 1 && p.sign != -1) {
            std::ostringstream msg;
            msg << "points[" << idx << "].sign: " << p.sign << " is not 1 or -1";
            throw DataError(msg.str());
        }
        d.add(static_cast<unsigned>(p.j), p.sign == 1 ? Sign::plus : Sign::minus);
    }
    return d;
}

IsotropyData data_from_multiplicities(unsigned n, std::span<const Integer> m_plus,
                                      std::span<const Integer> m_minus)
{
    auto check = [n](std::span<const Integer> v, const char* name) {
        if (v.size() != std::size_t{n} + 1) {
            throw DataError(std::string(name) + ": expected " + std::to_string(n + 1) +
                            " entries, got " + std::to_string(v.size()));
        }
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] < 0) {
                throw DataError(std::string(name) + "[" + std::to_string(j) +
                                "]: negative multiplicity " + v[j].get_str());
            }
        }
    };
    check(m_plus, "m_plus");
    check(m_minus, "m_minus");

    IsotropyData d(n);
    for (unsigned j = 0; j <= n; ++j) {
        d.add(j, Sign::plus, m_plus[j]);
        d.add(j, Sign::minus, m_minus[j]);
    }
    return d;
}

MultiplicityTable multiplicities(const IsotropyData& d)
{
    const std::size_t len = std::size_t{d.n()} + 1;
    MultiplicityTable t{d.n(), std::vector<Integer>(len, 0), std::vector<Integer>(len, 0),
                        std::vector<Integer>(len, 0)};
    for (const auto& [key, c] : d.runs()) {
        (key.sign == Sign::plus ? t.m_plus : t.m_minus)[key.j] += c;
    }
    for (std::size_t j = 0; j < len; ++j) t.m[j] = t.m_plus[j] - t.m_minus[j];
    return t;
}

IsotropyData disjoint_union(const IsotropyData& a, const IsotropyData& b)
{
    if (a.n() != b.n()) {
        throw DataError("disjoint union of data with different dimensions " +
                        std::to_string(a.n()) + " and " + std::to_string(b.n()));
    }
    IsotropyData out = a;
    for (const auto& [key, c] : b.runs()) out.add(key.j, key.sign, c);
    return out;
}

IsotropyData product(const IsotropyData& a, const IsotropyData& b)
{
    IsotropyData out(a.n() + b.n());
    for (const auto& [ka, ca] : a.runs()) {
        for (const auto& [kb, cb] : b.runs()) {
            out.add(ka.j + kb.j, ka.sign * kb.sign, ca * cb);
        }
    }
    return out;
}

IsotropyData reverse_orientation(const IsotropyData& d)
{
    IsotropyData out(d.n());
    for (const auto& [key, c] : d.runs()) out.add(key.j, -key.sign, c);
    return out;
}

} // namespace isokit
