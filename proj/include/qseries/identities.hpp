#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <qseries/fps.hpp>
#include <qseries/partitions.hpp>
#include <qseries/rational.hpp>

namespace qseries
{

// A single corrupted entry in one of the input tables the verifiers consume.
// Tables: "Q", "Qhat", "p" (indexed by n) and "pa", "paHat", "b", "bHat"
// (indexed by parameter and n). The entry is shifted by delta.
struct Fault {
    std::string table;
    std::optional<std::int64_t> parameter;
    std::size_t index = 0;
    Integer delta = 1;
};

struct VerifyOptions {
    std::size_t oracle_limit = default_oracle_limit;
    std::optional<Fault> fault;
    // Record every mismatching power, not only the first.
    bool full_diff = false;
};

struct Mismatch {
    std::string claim;
    std::size_t power = 0;
    Coefficient lhs;
    Coefficient rhs;

    friend bool operator==(const Mismatch &, const Mismatch &) = default;
};

enum class Status { pass, fail };

struct VerificationReport {
    std::string identity;
    std::optional<std::int64_t> parameter;
    std::size_t order = 0;
    Status status = Status::pass;
    std::optional<Mismatch> first_mismatch;
    // Filled only with VerifyOptions::full_diff.
    std::vector<Mismatch> mismatches;
    // Claims checked, in order.
    std::vector<std::string> claims;
    std::vector<std::string> notes;
    // Set when the check aborted with an exception; status is then fail.
    std::optional<std::string> error;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const noexcept
    {
        return status == Status::pass;
    }
};

// prod (1 - q^n)^{a(n)}: log_derivative(prod_pow) against the divisor-sum form.
VerificationReport verify_lemma1(const std::string &name, const ExponentSequence &a, std::size_t order,
                                 const VerifyOptions &opts = {});
VerificationReport verify_theorem1(std::size_t order, const VerifyOptions &opts = {});
VerificationReport verify_theorem2(std::int64_t a, std::size_t order, const VerifyOptions &opts = {});
VerificationReport verify_theorem3(std::int64_t a, std::size_t order, const VerifyOptions &opts = {});
VerificationReport verify_euler_pentagonal(std::size_t order, const VerifyOptions &opts = {});
VerificationReport verify_jacobi(std::size_t order, const VerifyOptions &opts = {});
VerificationReport verify_euler_durfee(std::size_t order, const VerifyOptions &opts = {});
// Pentagonal recurrence for p(n) against 1 / prod (1 - q^n).
VerificationReport verify_partition_dual(std::size_t order, const VerifyOptions &opts = {});

struct IdentityCheck {
    std::string name;
    bool parameterized = false;
    std::function<VerificationReport(std::int64_t a, std::size_t order, const VerifyOptions &)> run;
};

// Every registered identity in registry order.
const std::vector<IdentityCheck> &identity_registry();
const IdentityCheck *find_identity(const std::string &name);

// Runs one identity (once per a for parameterized ones). Exceptions become
// failed reports.
std::vector<VerificationReport> run_identity(const IdentityCheck &check, std::size_t order,
                                             const std::vector<std::int64_t> &parameters,
                                             const VerifyOptions &opts = {});

// Runs the whole registry, concurrently when threads > 1. Reports come back
// in registry order, parameterized checks expanded in the order of params.
std::vector<VerificationReport> run_all(std::size_t order, const std::vector<std::int64_t> &parameters,
                                        const VerifyOptions &opts = {}, unsigned threads = 0);

} // namespace qseries
