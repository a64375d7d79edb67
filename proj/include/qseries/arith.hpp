#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <qseries/rational.hpp>

namespace qseries
{

// Moebius function. Throws domain_error for n < 1.
int mobius(std::int64_t n);

// Divisors of n in ascending order. Throws domain_error for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// sum_{d|n} mu(d), which is 1 for n == 1 and 0 otherwise.
int mobius_divisor_sum(std::int64_t n);

// An arithmetic function tabulated on 1..bound.
class ArithmeticFunction
{
public:
    ArithmeticFunction() = default;
    // values[i] holds f(i + 1).
    explicit ArithmeticFunction(std::vector<Coefficient> values);
    // Tabulates fn on 1..bound.
    ArithmeticFunction(const std::function<Coefficient(std::int64_t)> &fn, std::int64_t bound);

    std::int64_t bound() const noexcept
    {
        return static_cast<std::int64_t>(values_.size());
    }
    // f(n) for 1 <= n <= bound(); domain_error otherwise.
    const Coefficient &operator()(std::int64_t n) const;
    const std::vector<Coefficient> &values() const noexcept
    {
        return values_;
    }

    friend bool operator==(const ArithmeticFunction &, const ArithmeticFunction &) = default;

private:
    std::vector<Coefficient> values_;
};

// g(n) = sum_{d|n} f(d) on 1..bound.
ArithmeticFunction divisor_transform(const ArithmeticFunction &f, std::int64_t bound);
// f(n) = sum_{d|n} mu(d) g(n/d) on 1..bound; inverse of divisor_transform.
ArithmeticFunction mobius_invert(const ArithmeticFunction &g, std::int64_t bound);

// Two-index integer family f(a; n) with f(a; n) = 0 whenever a > n. The
// threshold is enforced here, so the wrapped callable is never asked for a > n.
class IndexedFamily
{
public:
    using function_type = std::function<Integer(std::int64_t a, std::int64_t n)>;

    explicit IndexedFamily(function_type fn) : fn_(std::move(fn)) {}

    Integer operator()(std::int64_t a, std::int64_t n) const;

private:
    function_type fn_;
};

// fhat(a; n) = sum_{j>=1} f(aj; n); the sum stops at j = floor(n / a).
Integer family_hat(const IndexedFamily &f, std::int64_t a, std::int64_t n);
// f(a; n) = sum_{j>=1} mu(j) fhat(aj; n); inverse of family_hat.
Integer family_invert(const IndexedFamily &fhat, std::int64_t a, std::int64_t n);

} // namespace qseries
