#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <qseries/fps.hpp>
#include <qseries/rational.hpp>

namespace qseries
{

// Default cap on the weight handed to brute-force enumeration. p(60) is
// just under a million partitions.
inline constexpr std::size_t default_oracle_limit = 60;

// default_oracle_limit unless QSERIES_ORACLE_LIMIT holds a nonnegative integer.
std::size_t oracle_limit_from_env();

struct Partition {
    // Weakly decreasing, all >= 1.
    std::vector<int> parts;

    // Checks the invariants; throws domain_error on violation.
    static Partition from_parts(std::vector<int> parts);

    int weight() const;

    friend bool operator==(const Partition &, const Partition &) = default;
};

struct DurfeeProfile {
    int square = 0;
    // Largest m such that an square x m rectangle sits below the square.
    int max_rectangle_height = 0;

    friend bool operator==(const DurfeeProfile &, const DurfeeProfile &) = default;
};

DurfeeProfile durfee_profile(std::span<const int> parts);
inline DurfeeProfile durfee_profile(const Partition &p)
{
    return durfee_profile(p.parts);
}

// Visits every partition of n in lexicographically decreasing order, reusing
// one buffer. No oracle limit is applied here.
void for_each_partition(int n, const std::function<void(std::span<const int>)> &visit);

// Throws oracle_limit_exceeded when n > limit, domain_error when n < 0.
std::vector<Partition> enumerate_partitions(int n, std::size_t limit = default_oracle_limit);

// p(0..n_max) by the pentagonal-number recurrence.
std::vector<Integer> partition_numbers(std::size_t n_max);
Integer count_partitions(std::int64_t n);

// p_a(n), partitions of n into exactly a parts, from the recurrence
// p_a(n) = p_{a-1}(n-1) + p_a(n-a). Zero when a > n.
Integer count_by_parts(std::int64_t a, std::int64_t n);
// sum_{j>=1} p_{aj}(n).
Integer count_by_parts_hat(std::int64_t a, std::int64_t n);

// Q(n): partitions into distinct parts, read off prod_{k>=1} (1 + q^k).
Integer count_distinct(std::int64_t n);
// Q-hat(n): partitions whose distinct part values all occur equally often.
// Brute-force enumeration, so n must be within the oracle limit.
Integer count_uniform_multiplicity(std::int64_t n, std::size_t limit = default_oracle_limit);

// b_a(N): partitions of N with a nonempty Durfee square and at least an
// n x a Durfee rectangle. Enumeration; N within the oracle limit.
Integer count_durfee(std::int64_t a, std::int64_t weight, std::size_t limit = default_oracle_limit);
// b-hat_a(N): as above, counting floor(M/a) per partition where M is the
// height of the largest Durfee rectangle.
Integer count_durfee_hat(std::int64_t a, std::int64_t weight, std::size_t limit = default_oracle_limit);

// Per-weight statistics gathered in one enumeration pass.
struct WeightCensus {
    Integer total;
    Integer distinct;
    Integer uniform_multiplicity;
    // rectangle_heights[m] = number of partitions with square >= 1 and
    // max_rectangle_height == m.
    std::vector<Integer> rectangle_heights;

    Integer durfee(std::int64_t a) const;
    Integer durfee_hat(std::int64_t a) const;
};

// Census of every weight 0..n_max. Results are cached; repeated calls with
// n_max below the cached bound are lookups. Throws oracle_limit_exceeded
// when n_max > limit.
std::vector<WeightCensus> partition_census(std::size_t n_max, std::size_t limit = default_oracle_limit);

// Generating functions truncated at order N. Parameterized builders throw
// domain_error for a < 1.
Series series_p(std::size_t order);                     // sum q^{n^2} / (q)_n^2
Series series_pa(std::int64_t a, std::size_t order);    // q^a / (q)_a
Series series_pa_hat(std::int64_t a, std::size_t order); // sum_j P_{aj}
Series series_fq(std::size_t order);                    // prod (1 + q^n) - 1
Series series_fq_hat(std::size_t order);                // sum_m (prod (1 + q^{mn}) - 1)
Series series_psi_q(std::size_t order);                 // prod (1 - q^n)^{Q(n)/n}
Series series_b(std::int64_t a, std::size_t order);
Series series_b_hat(std::int64_t a, std::size_t order);

} // namespace qseries
