#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isokit/abbv.hpp"
#include "isokit/realization.hpp"
#include "oracle.hpp"

using namespace isokit;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("sphere_power_data")
{
    CHECK(sphere_power_data(1) == make_data(1, std::vector<RawPoint>{{0, 1}, {1, 1}}));
    const auto zero = sphere_power_data(0);
    CHECK(zero.point_count() == 1);
    CHECK(zero.count(0, Sign::plus) == 1);
    CHECK(multiplicities(sphere_power_data(3)).m_plus == ints({1, 3, 3, 1}));
    for (unsigned n = 0; n <= 12; ++n) CHECK(sphere_power_data(n).point_count() == int_pow(2, n));
}

TEST_CASE("rep_sphere_data")
{
    CHECK(rep_sphere_data(1, 0) == make_data(1, std::vector<RawPoint>{{0, 1}, {0, -1}}));
    CHECK(rep_sphere_data(3, 3) == make_data(3, std::vector<RawPoint>{{3, 1}, {3, -1}}));
    CHECK_THROWS_AS(rep_sphere_data(2, 3), DataError);
}

TEST_CASE("realize examples")
{
    const auto w = realize(sphere_power_data(2));
    REQUIRE(std::holds_alternative<Witness>(w));
    CHECK(std::get<Witness>(w) == Witness{2, 1, ints({0, 0, 0})});

    const auto bad = realize(make_data(1, std::vector<RawPoint>{{0, 1}}));
    REQUIRE(std::holds_alternative<NotRealizable>(bad));
    const auto& nr = std::get<NotRealizable>(bad);
    CHECK(nr.residuals == ints({0, -1}));
    CHECK(nr.violated() == std::vector<unsigned>{1});

    const auto rep = realize(rep_sphere_data(2, 1));
    REQUIRE(std::holds_alternative<Witness>(rep));
    CHECK(std::get<Witness>(rep) == Witness{2, 0, ints({0, 1, 0})});
}

TEST_CASE("realize picks the branch by the sign of m0")
{
    // Two reversed sphere powers plus an extra cancelling pair at j = 1.
    IsotropyData d(2);
    d.add(0, Sign::minus, 2);
    d.add(1, Sign::minus, 4 + 1);
    d.add(1, Sign::plus, 1);
    d.add(2, Sign::minus, 2);
    const auto r = realize(d);
    REQUIRE(std::holds_alternative<Witness>(r));
    CHECK(std::get<Witness>(r) == Witness{2, -2, ints({0, 1, 0})});
    CHECK(verify_witness(d, std::get<Witness>(r)));
}

TEST_CASE("realize at n = 0 always succeeds")
{
    for (long plus = 0; plus <= 3; ++plus) {
        for (long minus = 0; minus <= 3; ++minus) {
            IsotropyData d(0);
            d.add(0, Sign::plus, plus);
            d.add(0, Sign::minus, minus);
            const auto r = realize(d);
            REQUIRE(std::holds_alternative<Witness>(r));
            CHECK(std::get<Witness>(r).m0 == plus - minus);
            CHECK(verify_witness(d, std::get<Witness>(r)));
        }
    }
}

TEST_CASE("witness_to_data")
{
    CHECK(witness_to_data(Witness{1, 1, ints({0, 0})}) == sphere_power_data(1));
    const auto pairs = witness_to_data(Witness{2, 0, ints({0, 2, 0})});
    CHECK(pairs.point_count() == 4);
    CHECK(pairs.count(1, Sign::plus) == 2);
    CHECK(pairs.count(1, Sign::minus) == 2);
    CHECK(witness_to_data(Witness{1, -1, ints({0, 0})}) ==
          make_data(1, std::vector<RawPoint>{{0, -1}, {1, -1}}));
}

TEST_CASE("verify_witness")
{
    const auto d3 = sphere_power_data(3);
    CHECK(verify_witness(d3, std::get<Witness>(realize(d3))));
    CHECK_FALSE(verify_witness(d3, Witness{3, 2, ints({0, 0, 0, 0})}));
    CHECK(verify_witness(rep_sphere_data(2, 0), Witness{2, 0, ints({1, 0, 0})}));
    CHECK_FALSE(verify_witness(rep_sphere_data(2, 0), Witness{2, 0, ints({1, 0})}));
    CHECK_FALSE(verify_witness(rep_sphere_data(2, 0), Witness{2, 0, ints({1, -1, 0})}));
}

TEST_CASE("realization is sound and complete on the exhaustive population")
{
    std::size_t realizable = 0;
    for (unsigned n = 0; n <= 3; ++n) {
        oracle::DataEnumerator e(n, 2);
        while (auto d = e.next()) {
            const auto r = realize(*d);
            const bool ok = std::holds_alternative<Witness>(r);
            REQUIRE(ok == check_identities(*d).satisfied);
            REQUIRE(ok == oracle::multiplicity_criterion(*d));
            if (!ok) continue;
            ++realizable;
            const auto& w = std::get<Witness>(r);
            REQUIRE(verify_witness(*d, w));
            REQUIRE(check_identities(witness_to_data(w)).satisfied);
            const auto again = realize(witness_to_data(w));
            REQUIRE(witness_to_data(std::get<Witness>(again)) == witness_to_data(w));
        }
    }
    CHECK(realizable > 0);
}

TEST_CASE("random realizable data round-trips; perturbations do not realize")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const unsigned n = 1 + static_cast<unsigned>(seed % 6);
        const auto d = oracle::random_realizable_data(n, seed);
        const auto r = realize(d);
        REQUIRE(std::holds_alternative<Witness>(r));
        REQUIRE(verify_witness(d, std::get<Witness>(r)));

        const auto broken = oracle::perturb(d, seed + 1000);
        REQUIRE(std::holds_alternative<NotRealizable>(realize(broken)));
        REQUIRE_FALSE(check_identities(broken).satisfied);
    }
}

TEST_CASE("realizable data is closed under product")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto a = oracle::random_realizable_data(static_cast<unsigned>(seed % 3), seed);
        const auto b = oracle::random_realizable_data(static_cast<unsigned>((seed / 3) % 3), seed + 77);
        const auto r = realize(product(a, b));
        REQUIRE(std::holds_alternative<Witness>(r));
        CHECK(std::get<Witness>(r).m0 == std::get<Witness>(realize(a)).m0 * std::get<Witness>(realize(b)).m0);
    }
}
