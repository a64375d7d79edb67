#include <qseries/identities.hpp>

#include <qseries/arith.hpp>
#include <qseries/errors.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <utility>

namespace qseries
{

namespace
{

class Checker
{
public:
    Checker(VerificationReport &report, const VerifyOptions &opts) : report_(report), opts_(opts) {}

    // Compares lhs[k] and rhs[k] for first <= k <= last.
    template <typename Lhs, typename Rhs>
    void compare(const std::string &claim, std::size_t first, std::size_t last, Lhs &&lhs, Rhs &&rhs)
    {
        report_.claims.push_back(claim);
        for (std::size_t k = first; k <= last; ++k) {
            if (report_.first_mismatch && !opts_.full_diff) {
                return;
            }
            Coefficient l = lhs(k);
            Coefficient r = rhs(k);
            if (l != r) {
                record(Mismatch{claim, k, std::move(l), std::move(r)});
            }
        }
    }

    void compare_series(const std::string &claim, const Series &lhs, const Series &rhs)
    {
        const auto last = std::min(lhs.order(), rhs.order());
        compare(
            claim, 0, last, [&](std::size_t k) { return lhs[k]; }, [&](std::size_t k) { return rhs[k]; });
    }

private:
    void record(Mismatch m)
    {
        report_.status = Status::fail;
        if (!report_.first_mismatch) {
            report_.first_mismatch = m;
        }
        if (opts_.full_diff) {
            report_.mismatches.push_back(std::move(m));
        }
    }

    VerificationReport &report_;
    const VerifyOptions &opts_;
};

VerificationReport make_report(std::string name, std::optional<std::int64_t> parameter, std::size_t order)
{
    VerificationReport r;
    r.identity = std::move(name);
    r.parameter = parameter;
    r.order = order;
    return r;
}

// Applies the configured fault, if it targets this table entry.
Integer perturbed(const VerifyOptions &opts, const char *table, std::optional<std::int64_t> parameter,
                  std::size_t index, Integer value)
{
    if (opts.fault && opts.fault->table == table && opts.fault->index == index
        && opts.fault->parameter == parameter) {
        value += opts.fault->delta;
    }
    return value;
}

// Q(0..order) from the distinct-parts product.
std::vector<Integer> distinct_table(std::size_t order, const VerifyOptions &opts)
{
    const auto fq = series_fq(order);
    std::vector<Integer> q(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        q[n] = perturbed(opts, "Q", std::nullopt, n, fq[n].get_num());
    }
    return q;
}

// Q-hat(0..order): enumeration within the oracle limit, the repeated
// distinct-parts series above it.
std::vector<Integer> uniform_table(std::size_t order, const VerifyOptions &opts, VerificationReport &report)
{
    std::vector<Integer> q(order + 1);
    const auto enumerated = std::min(order, opts.oracle_limit);
    const auto census = partition_census(enumerated, opts.oracle_limit);
    for (std::size_t n = 1; n <= enumerated; ++n) {
        q[n] = census[n].uniform_multiplicity;
    }
    if (enumerated < order) {
        const auto hat = series_fq_hat(order);
        for (std::size_t n = enumerated + 1; n <= order; ++n) {
            q[n] = hat[n].get_num();
        }
        report.notes.push_back("Qhat enumerated to " + std::to_string(enumerated) + ", series above");
    }
    for (std::size_t n = 1; n <= order; ++n) {
        q[n] = perturbed(opts, "Qhat", std::nullopt, n, q[n]);
    }
    return q;
}

Series series_from_integers(const std::vector<Integer> &values)
{
    std::vector<Coefficient> c(values.begin(), values.end());
    return Series(std::move(c));
}

// Memoized two-index table lookups, f(parameter, n).
class FamilyTable
{
public:
    FamilyTable(const VerifyOptions &opts, const char *table, std::function<Integer(std::int64_t, std::int64_t)> fn)
        : opts_(opts), table_(table), fn_(std::move(fn))
    {
    }

    const Integer &operator()(std::int64_t parameter, std::int64_t n)
    {
        const auto key = std::make_pair(parameter, n);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            auto value = perturbed(opts_, table_, parameter, static_cast<std::size_t>(n), fn_(parameter, n));
            it = cache_.emplace(key, std::move(value)).first;
        }
        return it->second;
    }

private:
    const VerifyOptions &opts_;
    const char *table_;
    std::function<Integer(std::int64_t, std::int64_t)> fn_;
    std::map<std::pair<std::int64_t, std::int64_t>, Integer> cache_;
};

Series geometric_tail(std::size_t order)
{
    // q / (1 - q)
    return div(Series::monomial(1, 1, order), sub(Series::constant(1, order), Series::monomial(1, 1, order)));
}

Series pentagonal_series(std::size_t order)
{
    std::vector<Coefficient> c(order + 1);
    c[0] = 1;
    for (std::int64_t k = 1;; ++k) {
        const auto minus = static_cast<std::size_t>(k * (3 * k - 1) / 2);
        if (minus > order) {
            break;
        }
        const long sign = (k % 2 == 0) ? 1 : -1;
        c[minus] = sign;
        const auto plus = static_cast<std::size_t>(k * (3 * k + 1) / 2);
        if (plus <= order) {
            c[plus] = sign;
        }
    }
    return Series(std::move(c));
}

Series jacobi_series(std::size_t order)
{
    std::vector<Coefficient> c(order + 1);
    for (std::size_t n = 0; n * (n + 1) / 2 <= order; ++n) {
        const long value = static_cast<long>(2 * n + 1);
        c[n * (n + 1) / 2] = (n % 2 == 0) ? value : -value;
    }
    return Series(std::move(c));
}

} // namespace

VerificationReport verify_lemma1(const std::string &name, const ExponentSequence &a, std::size_t order,
                                 const VerifyOptions &opts)
{
    auto report = make_report(name, std::nullopt, order);
    Checker check(report, opts);
    check.compare_series("log-derivative", log_derivative(prod_pow(a, order)), log_deriv_of_product(a, order));
    return report;
}

VerificationReport verify_theorem1(std::size_t order, const VerifyOptions &opts)
{
    auto report = make_report("theorem1", std::nullopt, order);
    Checker check(report, opts);
    const auto q = distinct_table(order, opts);
    const auto qhat = uniform_table(order, opts, report);

    const auto psi = prod_pow([&](std::size_t n) -> Coefficient { return Coefficient(q[n]) / n; }, order);
    const auto lhs = log_derivative(psi);
    const auto rhs = negate(series_from_integers(qhat));
    check.compare_series("log-derivative", lhs, rhs);

    const auto bound = static_cast<std::int64_t>(order);
    const ArithmeticFunction qhat_fn([&](std::int64_t n) { return Coefficient(qhat[static_cast<std::size_t>(n)]); },
                                     bound);
    const auto inverted = mobius_invert(qhat_fn, bound);
    check.compare(
        "mobius-inversion", 1, order, [&](std::size_t n) { return inverted(static_cast<std::int64_t>(n)); },
        [&](std::size_t n) { return Coefficient(q[n]); });
    return report;
}

VerificationReport verify_theorem2(std::int64_t a, std::size_t order, const VerifyOptions &opts)
{
    auto report = make_report("theorem2", a, order);
    if (a < 1) {
        throw domain_error("theorem2 requires a >= 1");
    }
    Checker check(report, opts);
    FamilyTable pa(opts, "pa", [](std::int64_t b, std::int64_t n) { return count_by_parts(b, n); });
    FamilyTable pa_hat(opts, "paHat", [](std::int64_t b, std::int64_t n) { return count_by_parts_hat(b, n); });
    const auto last = static_cast<std::int64_t>(order);

    // P_a(q) against sum_n mu(n) Phat_{an}(q), the hat series read from the
    // recurrence tables.
    auto rhs = Series::zero(order);
    for (std::int64_t n = 1; a * n <= last; ++n) {
        const int mu = mobius(n);
        if (mu == 0) {
            continue;
        }
        std::vector<Coefficient> c(order + 1);
        for (std::int64_t k = a * n; k <= last; ++k) {
            c[static_cast<std::size_t>(k)] = pa_hat(a * n, k);
        }
        rhs = add(rhs, scale(Series(std::move(c)), mu));
    }
    check.compare_series("series", series_pa(a, order), rhs);

    const IndexedFamily hat_family([&](std::int64_t b, std::int64_t n) { return pa_hat(b, n); });
    std::vector<Integer> recovered(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        recovered[n] = family_invert(hat_family, a, static_cast<std::int64_t>(n));
    }
    check.compare(
        "scalar", 1, order, [&](std::size_t n) { return Coefficient(pa(a, static_cast<std::int64_t>(n))); },
        [&](std::size_t n) { return Coefficient(recovered[n]); });

    if (a == 1) {
        check.compare_series("closed-form", series_pa(1, order), geometric_tail(order));
        check.compare(
            "corollary", 1, order, [&](std::size_t n) { return Coefficient(recovered[n]); },
            [](std::size_t) { return Coefficient(1); });
    }
    return report;
}

VerificationReport verify_theorem3(std::int64_t a, std::size_t order, const VerifyOptions &opts)
{
    auto report = make_report("theorem3", a, order);
    if (a < 1) {
        throw domain_error("theorem3 requires a >= 1");
    }
    Checker check(report, opts);
    const auto last = static_cast<std::int64_t>(order);
    const auto b = series_b(a, order);
    const auto b_hat = series_b_hat(a, order);

    // B_{aj} and Bhat_{an} have no terms below q^{1+aj}, q^{1+an}.
    auto hat_sum = Series::zero(order);
    for (std::int64_t j = 1; 1 + a * j <= last; ++j) {
        hat_sum = add(hat_sum, series_b(a * j, order));
    }
    check.compare_series("hat-sum", b_hat, hat_sum);

    auto inverted = Series::zero(order);
    for (std::int64_t n = 1; 1 + a * n <= last; ++n) {
        const int mu = mobius(n);
        if (mu != 0) {
            inverted = add(inverted, scale(series_b_hat(a * n, order), mu));
        }
    }
    check.compare_series("mobius-series", b, inverted);

    const auto enumerated = std::min(order, opts.oracle_limit);
    const auto census = partition_census(enumerated, opts.oracle_limit);
    if (enumerated < order) {
        report.notes.push_back("combinatorial cross-check limited to order " + std::to_string(enumerated));
    }
    check.compare(
        "combinatorial-b", 1, enumerated, [&](std::size_t k) { return b[k]; },
        [&](std::size_t k) { return Coefficient(perturbed(opts, "b", a, k, census[k].durfee(a))); });
    check.compare(
        "combinatorial-bhat", 1, enumerated, [&](std::size_t k) { return b_hat[k]; },
        [&](std::size_t k) { return Coefficient(perturbed(opts, "bHat", a, k, census[k].durfee_hat(a))); });
    return report;
}

VerificationReport verify_euler_pentagonal(std::size_t order, const VerifyOptions &opts)
{
    auto report = make_report("euler-pentagonal", std::nullopt, order);
    Checker check(report, opts);
    check.compare_series("product", prod_pow([](std::size_t) { return Coefficient(1); }, order),
                         pentagonal_series(order));
    return report;
}

VerificationReport verify_jacobi(std::size_t order, const VerifyOptions &opts)
{
    auto report = make_report("jacobi", std::nullopt, order);
    Checker check(report, opts);
    check.compare_series("product", prod_pow([](std::size_t) { return Coefficient(3); }, order),
                         jacobi_series(order));
    return report;
}

VerificationReport verify_euler_durfee(std::size_t order, const VerifyOptions &opts)
{
    auto report = make_report("euler-durfee", std::nullopt, order);
    Checker check(report, opts);
    const auto euler = prod_pow([](std::size_t) { return Coefficient(1); }, order);
    check.compare_series("durfee-squares", div(Series::constant(1, order), euler), series_p(order));
    return report;
}

VerificationReport verify_partition_dual(std::size_t order, const VerifyOptions &opts)
{
    auto report = make_report("partition-dual", std::nullopt, order);
    Checker check(report, opts);
    auto p = partition_numbers(order);
    for (std::size_t n = 0; n <= order; ++n) {
        p[n] = perturbed(opts, "p", std::nullopt, n, p[n]);
    }
    const auto euler = prod_pow([](std::size_t) { return Coefficient(1); }, order);
    check.compare_series("pentagonal-recurrence", series_from_integers(p), div(Series::constant(1, order), euler));
    return report;
}

const std::vector<IdentityCheck> &identity_registry()
{
    static const std::vector<IdentityCheck> registry = {
        {"lemma1-sigma", false,
         [](std::int64_t, std::size_t n, const VerifyOptions &o) {
             return verify_lemma1("lemma1-sigma", [](std::size_t) { return Coefficient(1); }, n, o);
         }},
        {"lemma1-psiq", false,
         [](std::int64_t, std::size_t n, const VerifyOptions &o) {
             const auto q = distinct_table(n, o);
             return verify_lemma1("lemma1-psiq", [&](std::size_t k) -> Coefficient { return Coefficient(q[k]) / k; }, n, o);
         }},
        {"lemma1-mobius", false,
         [](std::int64_t, std::size_t n, const VerifyOptions &o) {
             return verify_lemma1(
                 "lemma1-mobius", [](std::size_t k) { return Coefficient(mobius(static_cast<std::int64_t>(k))); }, n,
                 o);
         }},
        {"theorem1", false, [](std::int64_t, std::size_t n, const VerifyOptions &o) { return verify_theorem1(n, o); }},
        {"theorem2", true, [](std::int64_t a, std::size_t n, const VerifyOptions &o) { return verify_theorem2(a, n, o); }},
        {"theorem3", true, [](std::int64_t a, std::size_t n, const VerifyOptions &o) { return verify_theorem3(a, n, o); }},
        {"euler-pentagonal", false,
         [](std::int64_t, std::size_t n, const VerifyOptions &o) { return verify_euler_pentagonal(n, o); }},
        {"jacobi", false, [](std::int64_t, std::size_t n, const VerifyOptions &o) { return verify_jacobi(n, o); }},
        {"euler-durfee", false,
         [](std::int64_t, std::size_t n, const VerifyOptions &o) { return verify_euler_durfee(n, o); }},
        {"partition-dual", false,
         [](std::int64_t, std::size_t n, const VerifyOptions &o) { return verify_partition_dual(n, o); }},
    };
    return registry;
}

const IdentityCheck *find_identity(const std::string &name)
{
    for (const auto &check : identity_registry()) {
        if (check.name == name) {
            return &check;
        }
    }
    return nullptr;
}

namespace
{

struct Task {
    const IdentityCheck *check;
    std::optional<std::int64_t> parameter;
};

VerificationReport run_task(const Task &task, std::size_t order, const VerifyOptions &opts)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    try {
        report = task.check->run(task.parameter.value_or(0), order, opts);
    } catch (const std::exception &e) {
        report = make_report(task.check->name, task.parameter, order);
        report.status = Status::fail;
        report.error = e.what();
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<Task> expand(const IdentityCheck &check, const std::vector<std::int64_t> &parameters)
{
    std::vector<Task> tasks;
    if (check.parameterized) {
        for (auto a : parameters) {
            tasks.push_back({&check, a});
        }
    } else {
        tasks.push_back({&check, std::nullopt});
    }
    return tasks;
}

std::vector<VerificationReport> run_tasks(const std::vector<Task> &tasks, std::size_t order,
                                          const VerifyOptions &opts, unsigned threads)
{
    std::vector<VerificationReport> reports(tasks.size());
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            reports[i] = run_task(tasks[i], order, opts);
        }
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (auto i = next++; i < tasks.size(); i = next++) {
                reports[i] = run_task(tasks[i], order, opts);
            }
        });
    }
    workers.clear();
    return reports;
}

} // namespace

std::vector<VerificationReport> run_identity(const IdentityCheck &check, std::size_t order,
                                             const std::vector<std::int64_t> &parameters,
                                             const VerifyOptions &opts)
{
    return run_tasks(expand(check, parameters), order, opts, 1);
}

std::vector<VerificationReport> run_all(std::size_t order, const std::vector<std::int64_t> &parameters,
                                        const VerifyOptions &opts, unsigned threads)
{
    std::vector<Task> tasks;
    for (const auto &check : identity_registry()) {
        auto expanded = expand(check, parameters);
        tasks.insert(tasks.end(), expanded.begin(), expanded.end());
    }
    return run_tasks(tasks, order, opts, threads);
}

} // namespace qseries
