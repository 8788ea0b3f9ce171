#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace isokit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed isotropy data: out-of-range j, bad signs,
/// mismatched dimensions. The message names the offending entry.
class DataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The semifree representation V_j = t^(n-j) + tbar^j of complex dimension n.
class RepClass {
public:
    RepClass(unsigned n, unsigned j);

    unsigned n() const noexcept { return n_; }
    /// Number of conjugate summands tbar.
    unsigned j() const noexcept { return j_; }

    friend bool operator==(const RepClass&, const RepClass&) = default;
    friend auto operator<=>(const RepClass&, const RepClass&) = default;

private:
    unsigned n_;
    unsigned j_;
};

enum class Sign : int { minus = -1, plus = 1 };

inline Sign operator-(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::plus : Sign::minus; }
inline int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// One fixed point: its tangent representation and orientation sign.
struct SignedPoint {
    RepClass rep;
    Sign sign;

    friend bool operator==(const SignedPoint&, const SignedPoint&) = default;
};

/// Unvalidated (j, sign) pair as it arrives from user input.
struct RawPoint {
    std::int64_t j;
    std::int64_t sign;
};

/// Key of one run in the canonical multiset: (j, sign), ordered by j then sign.
struct PointKey {
    unsigned j;
    Sign sign;

    friend bool operator==(const PointKey&, const PointKey&) = default;
    friend auto operator<=>(const PointKey& a, const PointKey& b) noexcept
    {
        if (auto c = a.j <=> b.j; c != 0) return c;
        return to_int(a.sign) <=> to_int(b.sign);
    }
};

/// Abstract semifree isotropy data at fixed complex dimension n.
///
/// Stored as a multiset in run-length form: a sorted map from (j, sign) to a
/// positive multiplicity. Point labels are never kept, so two values are
/// equal exactly when they agree as multisets.
class IsotropyData {
public:
    using Runs = std::map<PointKey, Integer>;

    explicit IsotropyData(unsigned n = 0) : n_(n) {}

    unsigned n() const noexcept { return n_; }
    const Runs& runs() const noexcept { return runs_; }
    bool empty() const noexcept { return runs_.empty(); }

    /// Multiplicity of (V_j, sign); zero if absent.
    Integer count(unsigned j, Sign sign) const;
    Integer point_count() const;

    /// Adds `copies` instances of (V_j, sign). Throws DataError if j > n or copies < 0.
    void add(unsigned j, Sign sign, const Integer& copies = 1);
    void add(const SignedPoint& p, const Integer& copies = 1);

    /// Expands the multiset into individual points in canonical order.
    /// Intended for small data; the size is the total point count.
    std::vector<SignedPoint> points() const;

    std::size_t hash() const;

    friend bool operator==(const IsotropyData&, const IsotropyData&) = default;

private:
    unsigned n_;
    Runs runs_;
};

std::ostream& operator<<(std::ostream& os, const IsotropyData& d);

/// Per-j signed counts m_plus[j], m_minus[j] and their difference m[j].
struct MultiplicityTable {
    unsigned n = 0;
    std::vector<Integer> m_plus;
    std::vector<Integer> m_minus;
    std::vector<Integer> m;

    friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

/// Validated constructor from raw (j, sign) pairs.
IsotropyData make_data(unsigned n, std::span<const RawPoint> points);

/// Builds data directly from multiplicity counts; both spans must have n + 1 entries.
IsotropyData data_from_multiplicities(unsigned n, std::span<const Integer> m_plus,
                                      std::span<const Integer> m_minus);

MultiplicityTable multiplicities(const IsotropyData& d);

/// Semiring addition. Throws DataError when a.n() != b.n().
IsotropyData disjoint_union(const IsotropyData& a, const IsotropyData& b);

/// Semiring multiplication: (V, s) * (V', s') = (V + V', s s').
IsotropyData product(const IsotropyData& a, const IsotropyData& b);

IsotropyData reverse_orientation(const IsotropyData& d);

} // namespace isokit

template <>
struct std::hash<isokit::IsotropyData> {
    std::size_t operator()(const isokit::IsotropyData& d) const { return d.hash(); }
};
