#include <doctest.h>

#include <qseries/errors.hpp>
#include <qseries/rational.hpp>

#include "test_support.hpp"

using namespace qseries;

TEST_CASE("rationals are kept in lowest terms")
{
    const auto c = make_rational(6, -4);
    CHECK(c.get_num() == -3);
    CHECK(c.get_den() == 2);
    CHECK(make_rational(0, 7) == 0);
    CHECK(make_rational(0, 7).get_den() == 1);
    CHECK_THROWS_AS(make_rational(1, 0), domain_error);
}

TEST_CASE("rendering omits a unit denominator")
{
    CHECK(to_string(make_rational(-233, 720)) == "-233/720");
    CHECK(to_string(make_rational(14, 7)) == "2");
    CHECK(to_string(Coefficient(0)) == "0");
}

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("43/120") == make_rational(43, 120));
    CHECK(parse_rational("-2/4") == make_rational(-1, 2));
    CHECK(parse_rational("+5") == 5);
    CHECK(parse_rational("123456789012345678901234567890")
          == Coefficient(Integer("123456789012345678901234567890")));
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational(""), domain_error);
    CHECK_THROWS_AS(parse_rational("1.5"), domain_error);
    CHECK_THROWS_AS(parse_rational("3/"), domain_error);
    CHECK_THROWS_AS(parse_rational("/3"), domain_error);
}

TEST_CASE("to_string and parse_rational round-trip")
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Coefficient c = test::random_small_rational(rng) * test::random_small_rational(rng)
                        + make_rational(Integer("98765432109876543210"), 3);
        CHECK(parse_rational(to_string(c)) == c);
    }
}
