#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isokit/kclass.hpp"
#include "isokit/realization.hpp"
#include "oracle.hpp"

#include <sstream>

using namespace isokit;

namespace {

std::string show(const KClass& k)
{
    std::ostringstream os;
    os << k;
    return os.str();
}

std::vector<IsotropyData> up_to_three_points(unsigned n)
{
    std::vector<IsotropyData> out;
    oracle::DataEnumerator e(n, 1);
    while (auto d = e.next()) {
        if (d->point_count() <= 3) out.push_back(*d);
    }
    return out;
}

} // namespace

TEST_CASE("k_class of the generators")
{
    const KClass t = KClass::t();
    const KClass tbar = KClass::tbar();

    CHECK(k_class(sphere_power_data(1)) == t + tbar);
    CHECK(show(k_class(sphere_power_data(1))) == "t + tbar");
    for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned j = 0; j <= n; ++j) CHECK(k_class(rep_sphere_data(n, j)).is_zero());
    }

    const KClass expected = KClass::monomial({2, 0}) + KClass::monomial({1, 1}, 2) + KClass::monomial({0, 2});
    CHECK(k_class(sphere_power_data(2)) == expected);
    CHECK(k_class(sphere_power_data(2)) == (t + tbar).pow(2));
    CHECK(show(expected) == "t^2 + 2 t tbar + tbar^2");

    // Term-by-term sum over the listed fixed points.
    KClass brute;
    for (const auto& p : sphere_power_data(2).points()) {
        brute += KClass::monomial({2 - p.rep.j(), p.rep.j()}, to_int(p.sign));
    }
    CHECK(brute == expected);
}

TEST_CASE("KClass stores no zero coefficients")
{
    const KClass t = KClass::t();
    CHECK((t - t).is_zero());
    CHECK((t - t).terms().empty());
    CHECK(KClass::monomial({1, 0}, 0).is_zero());
    CHECK(show(-t + KClass::monomial({0, 0}, 3)) == "-t + 3");
}

TEST_CASE("homogeneity")
{
    const auto k = k_class(sphere_power_data(3));
    CHECK(k.homogeneous_degree() == 3u);
    CHECK(k.is_homogeneous(3));
    CHECK_FALSE((k + KClass::t()).homogeneous_degree().has_value());
    CHECK_FALSE(KClass().homogeneous_degree().has_value());
    CHECK(KClass().is_homogeneous(7));
}

TEST_CASE("k_class is a semiring homomorphism into Z[t, tbar]")
{
    for (unsigned n = 0; n <= 2; ++n) {
        const auto pop = up_to_three_points(n);
        for (const auto& a : pop) {
            CHECK(k_class(reverse_orientation(a)) == -k_class(a));
            for (const auto& b : pop) CHECK(k_class(disjoint_union(a, b)) == k_class(a) + k_class(b));
        }
    }
    for (unsigned na = 0; na <= 2; ++na) {
        for (unsigned nb = 0; na + nb <= 2; ++nb) {
            for (const auto& a : up_to_three_points(na)) {
                for (const auto& b : up_to_three_points(nb)) {
                    REQUIRE(k_class(product(a, b)) == k_class(a) * k_class(b));
                }
            }
        }
    }
}
