#include <qseries/arith.hpp>

#include <qseries/errors.hpp>

#include <string>

namespace qseries
{

namespace
{

constexpr std::int64_t sieve_bound = 1 << 16;

// mu(0..sieve_bound) by a linear sieve.
const std::vector<signed char> &mobius_table()
{
    static const std::vector<signed char> table = [] {
        std::vector<signed char> mu(sieve_bound + 1, 0);
        std::vector<std::int64_t> primes;
        std::vector<bool> composite(sieve_bound + 1, false);
        mu[1] = 1;
        for (std::int64_t i = 2; i <= sieve_bound; ++i) {
            if (!composite[i]) {
                primes.push_back(i);
                mu[i] = -1;
            }
            for (auto p : primes) {
                if (i * p > sieve_bound) {
                    break;
                }
                composite[i * p] = true;
                if (i % p == 0) {
                    mu[i * p] = 0;
                    break;
                }
                mu[i * p] = static_cast<signed char>(-mu[i]);
            }
        }
        return mu;
    }();
    return table;
}

int mobius_trial_division(std::int64_t n)
{
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

void require_positive(std::int64_t n, const char *what)
{
    if (n < 1) {
        throw domain_error(std::string(what) + " requires n >= 1, got " + std::to_string(n));
    }
}

} // namespace

int mobius(std::int64_t n)
{
    require_positive(n, "mobius");
    if (n <= sieve_bound) {
        return mobius_table()[static_cast<std::size_t>(n)];
    }
    return mobius_trial_division(n);
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    require_positive(n, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius_divisor_sum(std::int64_t n)
{
    require_positive(n, "mobius_divisor_sum");
    int sum = 0;
    for (auto d : divisors(n)) {
        sum += mobius(d);
    }
    return sum;
}

ArithmeticFunction::ArithmeticFunction(std::vector<Coefficient> values) : values_(std::move(values)) {}

ArithmeticFunction::ArithmeticFunction(const std::function<Coefficient(std::int64_t)> &fn, std::int64_t bound)
{
    values_.reserve(static_cast<std::size_t>(bound > 0 ? bound : 0));
    for (std::int64_t n = 1; n <= bound; ++n) {
        values_.push_back(fn(n));
    }
}

const Coefficient &ArithmeticFunction::operator()(std::int64_t n) const
{
    if (n < 1 || n > bound()) {
        throw domain_error("arithmetic function evaluated at " + std::to_string(n) + " outside 1.."
                           + std::to_string(bound()));
    }
    return values_[static_cast<std::size_t>(n - 1)];
}

ArithmeticFunction divisor_transform(const ArithmeticFunction &f, std::int64_t bound)
{
    std::vector<Coefficient> g(static_cast<std::size_t>(bound));
    for (std::int64_t d = 1; d <= bound; ++d) {
        const auto &fd = f(d);
        for (std::int64_t n = d; n <= bound; n += d) {
            g[static_cast<std::size_t>(n - 1)] += fd;
        }
    }
    return ArithmeticFunction(std::move(g));
}

ArithmeticFunction mobius_invert(const ArithmeticFunction &g, std::int64_t bound)
{
    std::vector<Coefficient> f(static_cast<std::size_t>(bound));
    for (std::int64_t n = 1; n <= bound; ++n) {
        auto &fn = f[static_cast<std::size_t>(n - 1)];
        for (auto d : divisors(n)) {
            switch (mobius(d)) {
                case 1:
                    fn += g(n / d);
                    break;
                case -1:
                    fn -= g(n / d);
                    break;
                default:
                    break;
            }
        }
    }
    return ArithmeticFunction(std::move(f));
}

Integer IndexedFamily::operator()(std::int64_t a, std::int64_t n) const
{
    if (a > n) {
        return 0;
    }
    return fn_(a, n);
}

Integer family_hat(const IndexedFamily &f, std::int64_t a, std::int64_t n)
{
    require_positive(a, "family_hat");
    require_positive(n, "family_hat");
    Integer sum = 0;
    for (std::int64_t j = 1; a * j <= n; ++j) {
        sum += f(a * j, n);
    }
    return sum;
}

Integer family_invert(const IndexedFamily &fhat, std::int64_t a, std::int64_t n)
{
    require_positive(a, "family_invert");
    require_positive(n, "family_invert");
    Integer sum = 0;
    for (std::int64_t j = 1; a * j <= n; ++j) {
        const int mu = mobius(j);
        if (mu != 0) {
            sum += mu * fhat(a * j, n);
        }
    }
    return sum;
}

} // namespace qseries
