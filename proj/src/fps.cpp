#include <qseries/fps.hpp>

#include <qseries/errors.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace qseries
{

namespace
{

std::vector<std::size_t> nonzero_indices(const Series &f, std::size_t order)
{
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k <= std::min(order, f.order()); ++k) {
        if (f[k] != 0) {
            idx.push_back(k);
        }
    }
    return idx;
}

} // namespace

Series::Series() : coeffs_(1) {}

Series::Series(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw domain_error("a series needs at least the constant coefficient");
    }
}

Series::Series(std::initializer_list<Coefficient> coeffs) : Series(std::vector<Coefficient>(coeffs)) {}

Series Series::zero(std::size_t order)
{
    return Series(std::vector<Coefficient>(order + 1u));
}

Series Series::constant(const Coefficient &c, std::size_t order)
{
    std::vector<Coefficient> v(order + 1u);
    v[0] = c;
    return Series(std::move(v));
}

Series Series::monomial(std::size_t power, const Coefficient &c, std::size_t order)
{
    std::vector<Coefficient> v(order + 1u);
    if (power <= order) {
        v[power] = c;
    }
    return Series(std::move(v));
}

Series Series::from_integers(std::initializer_list<long> coeffs)
{
    std::vector<Coefficient> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) {
        v.emplace_back(c);
    }
    return Series(std::move(v));
}

const Coefficient &Series::at(std::size_t k) const
{
    if (k > order()) {
        throw domain_error("coefficient index " + std::to_string(k) + " beyond order "
                           + std::to_string(order()));
    }
    return coeffs_[k];
}

Series Series::truncated(std::size_t order) const
{
    const auto n = std::min(order, this->order()) + 1u;
    return Series(std::vector<Coefficient>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient &c) { return c == 0; });
}

Series add(const Series &f, const Series &g)
{
    const auto n = std::min(f.order(), g.order());
    std::vector<Coefficient> out(n + 1u);
    for (std::size_t k = 0; k <= n; ++k) {
        out[k] = f[k] + g[k];
    }
    return Series(std::move(out));
}

Series sub(const Series &f, const Series &g)
{
    const auto n = std::min(f.order(), g.order());
    std::vector<Coefficient> out(n + 1u);
    for (std::size_t k = 0; k <= n; ++k) {
        out[k] = f[k] - g[k];
    }
    return Series(std::move(out));
}

Series negate(const Series &f)
{
    std::vector<Coefficient> out(f.order() + 1u);
    for (std::size_t k = 0; k <= f.order(); ++k) {
        out[k] = -f[k];
    }
    return Series(std::move(out));
}

Series scale(const Series &f, const Coefficient &c)
{
    std::vector<Coefficient> out(f.order() + 1u);
    if (c != 0) {
        for (std::size_t k = 0; k <= f.order(); ++k) {
            if (f[k] != 0) {
                out[k] = f[k] * c;
            }
        }
    }
    return Series(std::move(out));
}

Series mul(const Series &f, const Series &g)
{
    const auto n = std::min(f.order(), g.order());
    const auto fi = nonzero_indices(f, n);
    const auto gi = nonzero_indices(g, n);
    std::vector<Coefficient> out(n + 1u);
    for (auto i : fi) {
        for (auto j : gi) {
            if (i + j > n) {
                break;
            }
            out[i + j] += f[i] * g[j];
        }
    }
    return Series(std::move(out));
}

Series div(const Series &f, const Series &g)
{
    if (g[0] == 0) {
        throw division_by_non_unit("divisor has zero constant term");
    }
    const auto n = std::min(f.order(), g.order());
    // h_k = (f_k - sum_{j>=1} g_j h_{k-j}) / g_0
    std::vector<std::size_t> gi;
    for (auto j : nonzero_indices(g, n)) {
        if (j > 0) {
            gi.push_back(j);
        }
    }
    const Coefficient inv0 = 1 / g[0];
    std::vector<Coefficient> h(n + 1u);
    Coefficient acc;
    for (std::size_t k = 0; k <= n; ++k) {
        acc = f[k];
        for (auto j : gi) {
            if (j > k) {
                break;
            }
            if (h[k - j] != 0) {
                acc -= g[j] * h[k - j];
            }
        }
        h[k] = acc * inv0;
    }
    return Series(std::move(h));
}

Series dilate(const Series &f, std::size_t m)
{
    if (m == 0) {
        throw domain_error("dilation factor must be positive");
    }
    std::vector<Coefficient> out(f.order() + 1u);
    for (std::size_t k = 0; k * m <= f.order(); ++k) {
        out[k * m] = f[k];
    }
    return Series(std::move(out));
}

Series q_derivative(const Series &f)
{
    std::vector<Coefficient> out(f.order() + 1u);
    for (std::size_t k = 1; k <= f.order(); ++k) {
        if (f[k] != 0) {
            out[k] = f[k] * static_cast<unsigned long>(k);
        }
    }
    return Series(std::move(out));
}

Series log_derivative(const Series &f)
{
    if (f[0] == 0) {
        throw division_by_non_unit("logarithmic derivative of a series with zero constant term");
    }
    return div(q_derivative(f), f);
}

Series log(const Series &f)
{
    if (f[0] != 1) {
        throw log_of_non_one("log requires constant term 1, got " + to_string(f[0]));
    }
    // q g' = q f'/f, so g_k = (log_derivative f)_k / k.
    const auto d = log_derivative(f);
    std::vector<Coefficient> out(f.order() + 1u);
    for (std::size_t k = 1; k <= f.order(); ++k) {
        if (d[k] != 0) {
            out[k] = d[k] / static_cast<unsigned long>(k);
        }
    }
    return Series(std::move(out));
}

Series exp(const Series &f)
{
    if (f[0] != 0) {
        throw exp_of_non_zero("exp requires constant term 0, got " + to_string(f[0]));
    }
    const auto n = f.order();
    // From g' = f' g: g_k = (1/k) sum_{j=1}^{k} j f_j g_{k-j}.
    std::vector<std::size_t> wi;
    std::vector<Coefficient> w(n + 1u);
    for (std::size_t j = 1; j <= n; ++j) {
        if (f[j] != 0) {
            w[j] = f[j] * static_cast<unsigned long>(j);
            wi.push_back(j);
        }
    }
    std::vector<Coefficient> g(n + 1u);
    g[0] = 1;
    Coefficient acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (auto j : wi) {
            if (j > k) {
                break;
            }
            if (g[k - j] != 0) {
                acc += w[j] * g[k - j];
            }
        }
        if (acc != 0) {
            g[k] = acc / static_cast<unsigned long>(k);
        }
    }
    return Series(std::move(g));
}

Series log_one_minus_q_power(std::size_t n, std::size_t order)
{
    if (n == 0) {
        throw domain_error("log(1 - q^0) is undefined");
    }
    std::vector<Coefficient> out(order + 1u);
    for (std::size_t m = 1; m * n <= order; ++m) {
        out[m * n] = Coefficient(-1, static_cast<unsigned long>(m));
    }
    return Series(std::move(out));
}

Series prod_pow(const ExponentSequence &a, std::size_t order)
{
    auto sum = Series::zero(order);
    for (std::size_t n = 1; n <= order; ++n) {
        const auto an = a(n);
        if (an != 0) {
            sum = add(sum, scale(log_one_minus_q_power(n, order), an));
        }
    }
    return exp(sum);
}

Series log_deriv_of_product(const ExponentSequence &a, std::size_t order)
{
    std::vector<Coefficient> out(order + 1u);
    for (std::size_t d = 1; d <= order; ++d) {
        const Coefficient term = a(d) * static_cast<unsigned long>(d);
        if (term == 0) {
            continue;
        }
        for (std::size_t n = d; n <= order; n += d) {
            out[n] -= term;
        }
    }
    return Series(std::move(out));
}

Series pochhammer(std::size_t n, std::size_t order)
{
    auto result = Series::constant(1, order);
    for (std::size_t k = 1; k <= n && k <= order; ++k) {
        std::vector<Coefficient> factor(order + 1u);
        factor[0] = 1;
        factor[k] = -1;
        result = mul(result, Series(std::move(factor)));
    }
    return result;
}

std::ostream &operator<<(std::ostream &os, const Series &f)
{
    for (std::size_t k = 0; k <= f.order(); ++k) {
        if (k != 0) {
            os << ", ";
        }
        os << to_string(f[k]);
    }
    return os;
}

} // namespace qseries
