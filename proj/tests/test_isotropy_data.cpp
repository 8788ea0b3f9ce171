#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isokit/isotropy_data.hpp"
#include "isokit/realization.hpp"
#include "oracle.hpp"

#include <unordered_set>

using namespace isokit;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// All data with n <= 2 and at most three points, from the exhaustive enumerator.
std::vector<IsotropyData> small_population(unsigned n)
{
    std::vector<IsotropyData> out;
    oracle::DataEnumerator e(n, 1);
    while (auto d = e.next()) {
        if (d->point_count() <= 3) out.push_back(*d);
    }
    return out;
}

} // namespace

TEST_CASE("RepClass enforces 0 <= j <= n")
{
    CHECK(RepClass(3, 3).j() == 3);
    CHECK_THROWS_AS(RepClass(1, 2), DataError);
}

TEST_CASE("make_data builds canonical multisets")
{
    const std::vector<RawPoint> s2{{0, 1}, {1, 1}};
    CHECK(make_data(1, s2) == sphere_power_data(1));

    const std::vector<RawPoint> shuffled{{1, -1}, {0, 1}, {1, 1}, {1, -1}};
    const std::vector<RawPoint> sorted{{0, 1}, {1, -1}, {1, -1}, {1, 1}};
    CHECK(make_data(1, shuffled) == make_data(1, sorted));

    SUBCASE("empty data is valid")
    {
        const auto d = make_data(2, {});
        CHECK(d.empty());
        CHECK(d.n() == 2);
        CHECK(d.point_count() == 0);
    }

    SUBCASE("errors name the offending entry")
    {
        const std::vector<RawPoint> bad_j{{0, 1}, {2, 1}};
        CHECK_THROWS_WITH_AS(make_data(1, bad_j), "points[1].j: 2 is outside [0, 1]", DataError);
        const std::vector<RawPoint> negative_j{{-1, 1}};
        CHECK_THROWS_AS(make_data(1, negative_j), DataError);
        const std::vector<RawPoint> bad_sign{{0, 0}};
        CHECK_THROWS_WITH_AS(make_data(1, bad_sign), "points[0].sign: 0 is not 1 or -1", DataError);
    }
}

TEST_CASE("points() lists the multiset in (j, sign) order")
{
    const std::vector<RawPoint> raw{{1, 1}, {0, -1}, {1, -1}, {0, -1}};
    const auto pts = make_data(1, raw).points();
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == SignedPoint{RepClass(1, 0), Sign::minus});
    CHECK(pts[1] == SignedPoint{RepClass(1, 0), Sign::minus});
    CHECK(pts[2] == SignedPoint{RepClass(1, 1), Sign::minus});
    CHECK(pts[3] == SignedPoint{RepClass(1, 1), Sign::plus});
}

TEST_CASE("multiplicities")
{
    const auto s2 = multiplicities(sphere_power_data(2));
    CHECK(s2.m_plus == ints({1, 2, 1}));
    CHECK(s2.m_minus == ints({0, 0, 0}));
    CHECK(s2.m == ints({1, 2, 1}));

    const auto empty = multiplicities(IsotropyData(3));
    CHECK(empty.m_plus == ints({0, 0, 0, 0}));
    CHECK(empty.m == ints({0, 0, 0, 0}));

    const auto rep = multiplicities(rep_sphere_data(2, 1));
    CHECK(rep.m_plus == ints({0, 1, 0}));
    CHECK(rep.m_minus == ints({0, 1, 0}));
    CHECK(rep.m == ints({0, 0, 0}));
}

TEST_CASE("data_from_multiplicities accepts large counts")
{
    const Integer huge("123456789012345678901234567890");
    const auto plus = std::vector<Integer>{huge, 0};
    const auto minus = std::vector<Integer>{0, 1};
    const auto d = data_from_multiplicities(1, plus, minus);
    CHECK(d.count(0, Sign::plus) == huge);
    CHECK(multiplicities(d).m[1] == -1);

    const auto short_plus = std::vector<Integer>{1};
    CHECK_THROWS_AS(data_from_multiplicities(1, short_plus, minus), DataError);
    const auto negative = std::vector<Integer>{-1, 0};
    CHECK_THROWS_AS(data_from_multiplicities(1, negative, minus), DataError);
}

TEST_CASE("disjoint_union")
{
    const auto s2 = sphere_power_data(1);
    CHECK(multiplicities(disjoint_union(s2, s2)).m_plus == ints({2, 2}));
    CHECK(disjoint_union(s2, IsotropyData(1)) == s2);

    const auto u = disjoint_union(rep_sphere_data(1, 0), rep_sphere_data(1, 1));
    CHECK(u.point_count() == 4);
    CHECK(multiplicities(u).m == ints({0, 0}));

    CHECK_THROWS_AS(disjoint_union(sphere_power_data(1), sphere_power_data(2)), DataError);
}

TEST_CASE("product")
{
    CHECK(product(sphere_power_data(1), sphere_power_data(1)) == sphere_power_data(2));
    CHECK(product(sphere_power_data(2), IsotropyData(1)) == IsotropyData(3));

    const std::vector<RawPoint> a{{1, 1}};
    const std::vector<RawPoint> b{{0, -1}};
    const std::vector<RawPoint> ab{{1, -1}};
    CHECK(product(make_data(1, a), make_data(1, b)) == make_data(2, ab));
}

TEST_CASE("product matches brute-force pair enumeration")
{
    for (unsigned na = 0; na <= 2; ++na) {
        for (unsigned nb = 0; nb + na <= 2; ++nb) {
            for (const auto& a : small_population(na)) {
                for (const auto& b : small_population(nb)) {
                    IsotropyData expected(na + nb);
                    for (const auto& p : a.points()) {
                        for (const auto& q : b.points()) {
                            expected.add(p.rep.j() + q.rep.j(), p.sign * q.sign);
                        }
                    }
                    REQUIRE(product(a, b) == expected);
                }
            }
        }
    }
}

TEST_CASE("reverse_orientation")
{
    CHECK(reverse_orientation(rep_sphere_data(3, 1)) == rep_sphere_data(3, 1));
    const std::vector<RawPoint> neg{{0, -1}, {1, -1}};
    CHECK(reverse_orientation(sphere_power_data(1)) == make_data(1, neg));

    oracle::DataEnumerator e(2, 1);
    while (auto d = e.next()) CHECK(reverse_orientation(reverse_orientation(*d)) == *d);
}

TEST_CASE("semiring laws on small data")
{
    const auto p1 = small_population(1);
    const auto p0 = small_population(0);
    for (const auto& a : p1) {
        for (const auto& b : p1) {
            CHECK(disjoint_union(a, b) == disjoint_union(b, a));
            CHECK(product(a, b) == product(b, a));
            const auto ma = multiplicities(a);
            const auto mb = multiplicities(b);
            const auto mu = multiplicities(disjoint_union(a, b));
            for (unsigned j = 0; j <= 1; ++j) {
                CHECK(mu.m_plus[j] == ma.m_plus[j] + mb.m_plus[j]);
                CHECK(mu.m_minus[j] == ma.m_minus[j] + mb.m_minus[j]);
                CHECK(mu.m[j] == ma.m[j] + mb.m[j]);
            }
            for (const auto& c : p0) {
                CHECK(product(product(a, b), c) == product(a, product(b, c)));
            }
        }
        CHECK(disjoint_union(a, IsotropyData(1)) == a);
    }
    for (const auto& a : p0) {
        for (const auto& b : p0) {
            for (const auto& c : p0) {
                CHECK(disjoint_union(disjoint_union(a, b), c) == disjoint_union(a, disjoint_union(b, c)));
            }
        }
    }
}

TEST_CASE("hash agrees with equality")
{
    std::unordered_set<IsotropyData> seen;
    oracle::DataEnumerator e(1, 2);
    while (auto d = e.next()) seen.insert(*d);
    CHECK(seen.size() == 81);
    CHECK(seen.count(sphere_power_data(1)) == 1);
    CHECK(std::hash<IsotropyData>{}(product(sphere_power_data(1), sphere_power_data(1))) ==
          std::hash<IsotropyData>{}(sphere_power_data(2)));
}
