#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <qseries/identities.hpp>

namespace qseries::cli
{

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_resource_limit = 3;

// Runs the qseries command line. args excludes the program name. Data goes
// to out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// "3", "1..5", "1,2,7" or combinations such as "1..3,7". Throws
// std::invalid_argument on malformed text or values below 1.
std::vector<std::int64_t> parse_parameter_range(std::string_view text);

// "TABLE:INDEX", "TABLE@A:INDEX" or either with a trailing ":DELTA".
Fault parse_fault(std::string_view text);

} // namespace qseries::cli
