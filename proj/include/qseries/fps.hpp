#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include <qseries/rational.hpp>

namespace qseries
{

// Dense truncated power series in one formal variable q with exact rational
// coefficients. A series of order N holds the coefficients of q^0 .. q^N.
// Values are immutable once built.
class Series
{
public:
    // The zero series of order 0.
    Series();

    // Takes ownership of the coefficients; order() == coeffs.size() - 1.
    // Throws domain_error if coeffs is empty.
    explicit Series(std::vector<Coefficient> coeffs);
    Series(std::initializer_list<Coefficient> coeffs);

    static Series zero(std::size_t order);
    static Series constant(const Coefficient &c, std::size_t order);
    // c * q^power truncated at order (the zero series if power > order).
    static Series monomial(std::size_t power, const Coefficient &c, std::size_t order);
    // Coefficients from integer literals, constant term first.
    static Series from_integers(std::initializer_list<long> coeffs);

    std::size_t order() const noexcept
    {
        return coeffs_.size() - 1u;
    }

    // Coefficient of q^k for k <= order().
    const Coefficient &operator[](std::size_t k) const
    {
        return coeffs_[k];
    }
    // Coefficient of q^k; throws domain_error when k > order().
    const Coefficient &at(std::size_t k) const;

    std::span<const Coefficient> coefficients() const noexcept
    {
        return coeffs_;
    }

    Series truncated(std::size_t order) const;
    bool is_zero() const;

    friend bool operator==(const Series &, const Series &) = default;

private:
    std::vector<Coefficient> coeffs_;
};

// Map n -> a(n) for n >= 1, used as the exponents of prod (1 - q^n)^{a(n)}.
using ExponentSequence = std::function<Coefficient(std::size_t)>;

// Binary operations truncate to the smaller operand order.
Series add(const Series &f, const Series &g);
Series sub(const Series &f, const Series &g);
Series negate(const Series &f);
Series scale(const Series &f, const Coefficient &c);
Series mul(const Series &f, const Series &g);
// h with h * g == f. Throws division_by_non_unit if g[0] == 0.
Series div(const Series &f, const Series &g);

inline Series operator+(const Series &f, const Series &g)
{
    return add(f, g);
}
inline Series operator-(const Series &f, const Series &g)
{
    return sub(f, g);
}
inline Series operator-(const Series &f)
{
    return negate(f);
}
inline Series operator*(const Series &f, const Series &g)
{
    return mul(f, g);
}
inline Series operator*(const Coefficient &c, const Series &f)
{
    return scale(f, c);
}
inline Series operator/(const Series &f, const Series &g)
{
    return div(f, g);
}

// f(q^m) truncated at f.order(). m must be >= 1.
Series dilate(const Series &f, std::size_t m);

// The operator q d/dq: coefficient k becomes k * f[k].
Series q_derivative(const Series &f);
// q f'(q) / f(q). Throws division_by_non_unit if f[0] == 0.
Series log_derivative(const Series &f);
// Requires f[0] == 1 (log_of_non_one otherwise).
Series log(const Series &f);
// Requires f[0] == 0 (exp_of_non_zero otherwise).
Series exp(const Series &f);

// log(1 - q^n) = -sum_{m>=1} q^{mn}/m, truncated at order.
Series log_one_minus_q_power(std::size_t n, std::size_t order);

// prod_{n=1}^{order} (1 - q^n)^{a(n)} truncated at order, evaluated as
// exp(sum_n a(n) log(1 - q^n)). Factors with n > order are identically 1.
Series prod_pow(const ExponentSequence &a, std::size_t order);

// -sum_{n>=1} (sum_{d|n} d a(d)) q^n, evaluated by divisor sums without any
// series division. Agrees with log_derivative(prod_pow(a, order)).
Series log_deriv_of_product(const ExponentSequence &a, std::size_t order);

// (q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1.
Series pochhammer(std::size_t n, std::size_t order);

std::ostream &operator<<(std::ostream &os, const Series &f);

} // namespace qseries
