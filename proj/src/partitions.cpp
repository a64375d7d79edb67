#include <qseries/partitions.hpp>

#include <qseries/errors.hpp>

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>

namespace qseries
{

namespace
{

void require_parameter(std::int64_t a)
{
    if (a < 1) {
        throw domain_error("parameter a must be >= 1, got " + std::to_string(a));
    }
}

void check_oracle(std::int64_t n, std::size_t limit)
{
    if (n < 0) {
        throw domain_error("partition weight must be >= 0, got " + std::to_string(n));
    }
    if (static_cast<std::size_t>(n) > limit) {
        throw oracle_limit_exceeded("enumeration of weight " + std::to_string(n) + " exceeds oracle limit "
                                    + std::to_string(limit));
    }
}

void visit_partitions(std::vector<int> &buf, int remaining, int max_part,
                      const std::function<void(std::span<const int>)> &visit)
{
    if (remaining == 0) {
        visit(buf);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        buf.push_back(part);
        visit_partitions(buf, remaining - part, part, visit);
        buf.pop_back();
    }
}

bool has_distinct_parts(std::span<const int> parts)
{
    return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

bool has_uniform_multiplicity(std::span<const int> parts)
{
    std::size_t run = 0;
    std::size_t expected = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ++run;
        if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
            if (expected == 0) {
                expected = run;
            } else if (run != expected) {
                return false;
            }
            run = 0;
        }
    }
    return true;
}

// Series with 1 at q^0 and -1 at q^k.
Series one_minus_q_power(std::size_t k, std::size_t order)
{
    return sub(Series::constant(1, order), Series::monomial(k, 1, order));
}

Series distinct_parts_product(std::size_t order)
{
    auto result = Series::constant(1, order);
    for (std::size_t k = 1; k <= order; ++k) {
        result = mul(result, add(Series::constant(1, order), Series::monomial(k, 1, order)));
    }
    return result;
}

// 1 / (q)_n^2 for n = 0, 1, ... while the caller asks for more.
class InversePochhammerSquares
{
public:
    explicit InversePochhammerSquares(std::size_t order) : order_(order), current_(Series::constant(1, order)) {}

    const Series &next()
    {
        ++n_;
        const auto factor = one_minus_q_power(n_, order_);
        current_ = div(div(current_, factor), factor);
        return current_;
    }

private:
    std::size_t order_;
    std::size_t n_ = 0;
    Series current_;
};

// p_a(n) rows, row n holding a = 0..n, grown on demand.
class PartsTable
{
public:
    Integer get(std::int64_t a, std::int64_t n)
    {
        std::lock_guard lock(mutex_);
        grow(static_cast<std::size_t>(n));
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)];
    }

private:
    void grow(std::size_t n)
    {
        if (rows_.empty()) {
            rows_.push_back({Integer{1}});
        }
        while (rows_.size() <= n) {
            const auto m = rows_.size();
            std::vector<Integer> row(m + 1);
            for (std::size_t a = 1; a <= m; ++a) {
                row[a] = rows_[m - 1][a - 1];
                if (m - a >= a) {
                    row[a] += rows_[m - a][a];
                }
            }
            rows_.push_back(std::move(row));
        }
    }

    std::mutex mutex_;
    std::vector<std::vector<Integer>> rows_;
};

PartsTable &parts_table()
{
    static PartsTable table;
    return table;
}

class CensusCache
{
public:
    std::vector<WeightCensus> get(std::size_t n_max)
    {
        std::lock_guard lock(mutex_);
        while (rows_.size() <= n_max) {
            rows_.push_back(tally(static_cast<int>(rows_.size())));
        }
        return {rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
    }

private:
    static WeightCensus tally(int n)
    {
        WeightCensus c;
        std::vector<unsigned long> heights;
        unsigned long total = 0, distinct = 0, uniform = 0;
        for_each_partition(n, [&](std::span<const int> parts) {
            ++total;
            distinct += has_distinct_parts(parts) ? 1u : 0u;
            uniform += has_uniform_multiplicity(parts) ? 1u : 0u;
            const auto profile = durfee_profile(parts);
            if (profile.square >= 1) {
                const auto m = static_cast<std::size_t>(profile.max_rectangle_height);
                if (heights.size() <= m) {
                    heights.resize(m + 1, 0);
                }
                ++heights[m];
            }
        });
        c.total = total;
        c.distinct = distinct;
        c.uniform_multiplicity = uniform;
        c.rectangle_heights.assign(heights.begin(), heights.end());
        return c;
    }

    std::mutex mutex_;
    std::vector<WeightCensus> rows_;
};

} // namespace

std::size_t oracle_limit_from_env()
{
    const char *value = std::getenv("QSERIES_ORACLE_LIMIT");
    if (value == nullptr || *value == '\0') {
        return default_oracle_limit;
    }
    char *end = nullptr;
    const auto parsed = std::strtoull(value, &end, 10);
    if (*end != '\0' || value[0] == '-') {
        return default_oracle_limit;
    }
    return static_cast<std::size_t>(parsed);
}

Partition Partition::from_parts(std::vector<int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) {
            throw domain_error("partition parts must be positive and weakly decreasing");
        }
    }
    return Partition{std::move(parts)};
}

int Partition::weight() const
{
    int w = 0;
    for (int p : parts) {
        w += p;
    }
    return w;
}

DurfeeProfile durfee_profile(std::span<const int> parts)
{
    DurfeeProfile profile;
    while (static_cast<std::size_t>(profile.square) < parts.size()
           && parts[static_cast<std::size_t>(profile.square)] >= profile.square + 1) {
        ++profile.square;
    }
    if (profile.square == 0) {
        return profile;
    }
    for (auto i = static_cast<std::size_t>(profile.square); i < parts.size() && parts[i] >= profile.square; ++i) {
        ++profile.max_rectangle_height;
    }
    return profile;
}

void for_each_partition(int n, const std::function<void(std::span<const int>)> &visit)
{
    if (n < 0) {
        throw domain_error("partition weight must be >= 0, got " + std::to_string(n));
    }
    std::vector<int> buf;
    buf.reserve(static_cast<std::size_t>(n));
    visit_partitions(buf, n, n, visit);
}

std::vector<Partition> enumerate_partitions(int n, std::size_t limit)
{
    check_oracle(n, limit);
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) { out.push_back(Partition{{parts.begin(), parts.end()}}); });
    return out;
}

std::vector<Integer> partition_numbers(std::size_t n_max)
{
    // p(n) = sum_{k>=1} (-1)^{k+1} (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))
    std::vector<Integer> p(n_max + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Integer acc = 0;
        for (std::size_t k = 1;; ++k) {
            const auto g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const auto g2 = k * (3 * k + 1) / 2;
            Integer term = p[n - g1];
            if (g2 <= n) {
                term += p[n - g2];
            }
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    return p;
}

Integer count_partitions(std::int64_t n)
{
    if (n < 0) {
        return 0;
    }
    return partition_numbers(static_cast<std::size_t>(n)).back();
}

Integer count_by_parts(std::int64_t a, std::int64_t n)
{
    require_parameter(a);
    if (n < 1) {
        throw domain_error("count_by_parts requires n >= 1");
    }
    if (a > n) {
        return 0;
    }
    return parts_table().get(a, n);
}

Integer count_by_parts_hat(std::int64_t a, std::int64_t n)
{
    require_parameter(a);
    Integer sum = 0;
    for (std::int64_t j = 1; a * j <= n; ++j) {
        sum += count_by_parts(a * j, n);
    }
    return sum;
}

Integer count_distinct(std::int64_t n)
{
    if (n < 0) {
        throw domain_error("count_distinct requires n >= 0");
    }
    const auto q = distinct_parts_product(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
    return q.get_num();
}

Integer count_uniform_multiplicity(std::int64_t n, std::size_t limit)
{
    check_oracle(n, limit);
    unsigned long count = 0;
    for_each_partition(static_cast<int>(n), [&](std::span<const int> parts) {
        count += has_uniform_multiplicity(parts) ? 1u : 0u;
    });
    return count;
}

Integer count_durfee(std::int64_t a, std::int64_t weight, std::size_t limit)
{
    require_parameter(a);
    check_oracle(weight, limit);
    unsigned long count = 0;
    for_each_partition(static_cast<int>(weight), [&](std::span<const int> parts) {
        const auto profile = durfee_profile(parts);
        if (profile.square >= 1 && profile.max_rectangle_height >= a) {
            ++count;
        }
    });
    return count;
}

Integer count_durfee_hat(std::int64_t a, std::int64_t weight, std::size_t limit)
{
    require_parameter(a);
    check_oracle(weight, limit);
    unsigned long count = 0;
    for_each_partition(static_cast<int>(weight), [&](std::span<const int> parts) {
        const auto profile = durfee_profile(parts);
        if (profile.square >= 1) {
            count += static_cast<unsigned long>(profile.max_rectangle_height / a);
        }
    });
    return count;
}

Integer WeightCensus::durfee(std::int64_t a) const
{
    require_parameter(a);
    Integer sum = 0;
    for (auto m = static_cast<std::size_t>(a); m < rectangle_heights.size(); ++m) {
        sum += rectangle_heights[m];
    }
    return sum;
}

Integer WeightCensus::durfee_hat(std::int64_t a) const
{
    require_parameter(a);
    Integer sum = 0;
    for (std::size_t m = 0; m < rectangle_heights.size(); ++m) {
        sum += rectangle_heights[m] * static_cast<unsigned long>(m / static_cast<std::size_t>(a));
    }
    return sum;
}

std::vector<WeightCensus> partition_census(std::size_t n_max, std::size_t limit)
{
    check_oracle(static_cast<std::int64_t>(n_max), limit);
    static CensusCache cache;
    return cache.get(n_max);
}

Series series_p(std::size_t order)
{
    auto result = Series::constant(1, order);
    InversePochhammerSquares inverse(order);
    for (std::size_t n = 1; n * n <= order; ++n) {
        result = add(result, mul(Series::monomial(n * n, 1, order), inverse.next()));
    }
    return result;
}

Series series_pa(std::int64_t a, std::size_t order)
{
    require_parameter(a);
    const auto parts = static_cast<std::size_t>(a);
    if (parts > order) {
        return Series::zero(order);
    }
    return div(Series::monomial(parts, 1, order), pochhammer(parts, order));
}

Series series_pa_hat(std::int64_t a, std::size_t order)
{
    require_parameter(a);
    auto result = Series::zero(order);
    for (auto b = static_cast<std::size_t>(a); b <= order; b += static_cast<std::size_t>(a)) {
        result = add(result, series_pa(static_cast<std::int64_t>(b), order));
    }
    return result;
}

Series series_fq(std::size_t order)
{
    return sub(distinct_parts_product(order), Series::constant(1, order));
}

Series series_fq_hat(std::size_t order)
{
    // Each part of a distinct-parts partition repeated m times.
    const auto distinct = series_fq(order);
    auto result = Series::zero(order);
    for (std::size_t m = 1; m <= order; ++m) {
        result = add(result, dilate(distinct, m));
    }
    return result;
}

Series series_psi_q(std::size_t order)
{
    const auto fq = series_fq(order);
    return prod_pow([&](std::size_t n) -> Coefficient { return n <= order ? Coefficient(fq[n] / n) : Coefficient(0); },
                    order);
}

Series series_b(std::int64_t a, std::size_t order)
{
    require_parameter(a);
    const auto shift = static_cast<std::size_t>(a);
    auto result = Series::zero(order);
    InversePochhammerSquares inverse(order);
    for (std::size_t n = 1; n * n + shift * n <= order; ++n) {
        result = add(result, mul(Series::monomial(n * n + shift * n, 1, order), inverse.next()));
    }
    return result;
}

Series series_b_hat(std::int64_t a, std::size_t order)
{
    require_parameter(a);
    const auto shift = static_cast<std::size_t>(a);
    auto result = Series::zero(order);
    InversePochhammerSquares inverse(order);
    for (std::size_t n = 1; n * n + shift * n <= order; ++n) {
        const auto term = mul(Series::monomial(n * n + shift * n, 1, order), inverse.next());
        result = add(result, div(term, one_minus_q_power(shift * n, order)));
    }
    return result;
}

} // namespace qseries
