#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qseries
{

// Exact rational scalar. gmpxx keeps results of arithmetic in lowest terms
// with a positive denominator, so structural equality is value equality.
using Coefficient = mpq_class;

// Arbitrary-precision integer used for counts (p(500) does not fit in 64 bits).
using Integer = mpz_class;

// num/den in lowest terms. Throws domain_error when den == 0.
Coefficient make_rational(std::int64_t num, std::int64_t den = 1);
Coefficient make_rational(const Integer &num, const Integer &den = 1);

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Coefficient &c);
std::string to_string(const Integer &z);

// Inverse of to_string; accepts optional sign and an optional "/den".
// Throws domain_error on malformed input or a zero denominator.
Coefficient parse_rational(std::string_view text);

inline bool is_integer(const Coefficient &c)
{
    return c.get_den() == 1;
}

} // namespace qseries
