#include <doctest.h>

#include <qseries/arith.hpp>
#include <qseries/errors.hpp>
#include <qseries/partitions.hpp>

#include <map>
#include <numeric>
#include <random>

using namespace qseries;

namespace
{

// mu(n) from a full trial-division factorization.
int naive_mobius(std::int64_t n)
{
    int sign = 1;
    for (std::int64_t p = 2; p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 1) {
            return 0;
        }
        if (e == 1) {
            sign = -sign;
        }
    }
    return sign;
}

ArithmeticFunction integers(std::vector<long> values)
{
    std::vector<Coefficient> c(values.begin(), values.end());
    return ArithmeticFunction(std::move(c));
}

} // namespace

TEST_CASE("mobius")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), domain_error);
    CHECK_THROWS_AS(mobius(-3), domain_error);
    for (std::int64_t n = 1; n <= 2000; ++n) {
        CHECK(mobius(n) == naive_mobius(n));
    }
    // Beyond the sieve table.
    CHECK(mobius(65537) == -1);
    CHECK(mobius(2LL * 3 * 65537) == -1);
    CHECK(mobius(70000) == 0);
    CHECK(mobius(1000003LL * 1000033LL) == 1);
}

TEST_CASE("mobius is multiplicative on coprime pairs")
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::int64_t> dist(1, 1000);
    int checked = 0;
    while (checked < 2000) {
        const auto m = dist(rng);
        const auto n = dist(rng);
        if (std::gcd(m, n) != 1) {
            continue;
        }
        CHECK(mobius(m * n) == mobius(m) * mobius(n));
        ++checked;
    }
}

TEST_CASE("divisors")
{
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
    CHECK(divisors(49) == std::vector<std::int64_t>{1, 7, 49});
    CHECK_THROWS_AS(divisors(0), domain_error);
    for (std::int64_t n = 1; n <= 300; ++n) {
        std::vector<std::int64_t> brute;
        for (std::int64_t d = 1; d <= n; ++d) {
            if (n % d == 0) {
                brute.push_back(d);
            }
        }
        CHECK(divisors(n) == brute);
    }
}

TEST_CASE("mobius divisor sum is the indicator of 1")
{
    CHECK(mobius_divisor_sum(1) == 1);
    CHECK(mobius_divisor_sum(6) == 0);
    CHECK(mobius_divisor_sum(360) == 0);
    CHECK_THROWS_AS(mobius_divisor_sum(0), domain_error);
    for (std::int64_t n = 1; n <= 10000; ++n) {
        CHECK(mobius_divisor_sum(n) == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("arithmetic function table")
{
    const ArithmeticFunction f([](std::int64_t n) { return Coefficient(n * n); }, 5);
    CHECK(f.bound() == 5);
    CHECK(f(4) == 16);
    CHECK_THROWS_AS(f(0), domain_error);
    CHECK_THROWS_AS(f(6), domain_error);
}

TEST_CASE("divisor_transform")
{
    const auto q = integers({1, 1, 2, 2, 3, 4});
    CHECK(divisor_transform(q, 6) == integers({1, 2, 3, 4, 4, 8}));
    CHECK(divisor_transform(integers({1, 0, 0, 0, 0, 0, 0}), 7) == integers({1, 1, 1, 1, 1, 1, 1}));
    // Number of divisors, counted directly.
    std::vector<long> tau;
    for (std::int64_t n = 1; n <= 6; ++n) {
        tau.push_back(static_cast<long>(divisors(n).size()));
    }
    CHECK(tau == std::vector<long>{1, 2, 2, 3, 2, 4});
    CHECK(divisor_transform(integers({1, 1, 1, 1, 1, 1}), 6) == integers(tau));
}

TEST_CASE("mobius_invert")
{
    CHECK(mobius_invert(integers({1, 2, 3, 4, 4, 8}), 6) == integers({1, 1, 2, 2, 3, 4}));
    CHECK(mobius_invert(integers({1, 1, 1, 1, 1}), 5) == integers({1, 0, 0, 0, 0}));
}

TEST_CASE("divisor_transform and mobius_invert are mutually inverse at bound 200")
{
    std::mt19937 rng(2);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<long> values(200);
        for (auto &v : values) {
            v = dist(rng);
        }
        const auto g = integers(values);
        CHECK(divisor_transform(mobius_invert(g, 200), 200) == g);
        CHECK(mobius_invert(divisor_transform(g, 200), 200) == g);
    }
}

TEST_CASE("indexed family enforces the vanishing threshold")
{
    int calls_above = 0;
    const IndexedFamily f([&](std::int64_t a, std::int64_t n) {
        if (a > n) {
            ++calls_above;
        }
        return Integer(7);
    });
    CHECK(f(5, 4) == 0);
    CHECK(f(4, 4) == 7);
    CHECK(calls_above == 0);
}

TEST_CASE("family_hat and family_invert on partitions by number of parts")
{
    const IndexedFamily parts([](std::int64_t a, std::int64_t n) { return count_by_parts(a, n); });
    CHECK(family_hat(parts, 1, 5) == 7);
    CHECK(family_hat(parts, 2, 6) == 6);
    CHECK(family_hat(parts, 9, 4) == 0);
    CHECK(family_invert(parts, 9, 4) == 0);

    const IndexedFamily hats([&](std::int64_t a, std::int64_t n) { return family_hat(parts, a, n); });
    for (std::int64_t n = 1; n <= 50; ++n) {
        CHECK(family_invert(hats, 1, n) == 1);
    }
}

TEST_CASE("family_invert undoes family_hat on random families")
{
    std::mt19937 rng(4);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (int trial = 0; trial < 5; ++trial) {
        std::map<std::pair<std::int64_t, std::int64_t>, long> table;
        const IndexedFamily f([&](std::int64_t a, std::int64_t n) {
            auto [it, inserted] = table.try_emplace({a, n}, 0);
            if (inserted) {
                it->second = dist(rng);
            }
            return Integer(it->second);
        });
        const IndexedFamily fhat([&](std::int64_t a, std::int64_t n) { return family_hat(f, a, n); });
        for (std::int64_t a = 1; a <= 10; ++a) {
            for (std::int64_t n = 1; n <= 30; ++n) {
                CHECK(family_invert(fhat, a, n) == f(a, n));
            }
        }
        // Also for a > n.
        CHECK(family_invert(fhat, 31, 30) == 0);
    }
}
