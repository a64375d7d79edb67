#include <qseries/cli.hpp>

#include <qseries/errors.hpp>
#include <qseries/partitions.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

namespace qseries::cli
{

namespace
{

using json = nlohmann::ordered_json;

enum class Format { text, json };

// Thrown for usage errors detected after CLI11 parsing.
class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::int64_t parse_int(std::string_view text)
{
    std::int64_t value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

json rational_array(std::span<const Coefficient> coeffs)
{
    auto arr = json::array();
    for (const auto &c : coeffs) {
        arr.push_back(to_string(c));
    }
    return arr;
}

void write_json(std::ostream &out, const json &doc)
{
    out << doc.dump(2) << '\n';
}

struct SeriesBuilder {
    bool parameterized;
    std::function<Series(std::int64_t, std::size_t)> build;
};

const std::map<std::string, SeriesBuilder> &series_builders()
{
    static const std::map<std::string, SeriesBuilder> builders = {
        {"psiQ", {false, [](std::int64_t, std::size_t n) { return series_psi_q(n); }}},
        {"FQ", {false, [](std::int64_t, std::size_t n) { return series_fq(n); }}},
        {"FQhat", {false, [](std::int64_t, std::size_t n) { return series_fq_hat(n); }}},
        {"P", {false, [](std::int64_t, std::size_t n) { return series_p(n); }}},
        {"Pa", {true, [](std::int64_t a, std::size_t n) { return series_pa(a, n); }}},
        {"PaHat", {true, [](std::int64_t a, std::size_t n) { return series_pa_hat(a, n); }}},
        {"Ba", {true, [](std::int64_t a, std::size_t n) { return series_b(a, n); }}},
        {"BaHat", {true, [](std::int64_t a, std::size_t n) { return series_b_hat(a, n); }}},
        {"pentagonal", {false, [](std::int64_t, std::size_t n) {
                            return prod_pow([](std::size_t) { return Coefficient(1); }, n);
                        }}},
        {"jacobi", {false, [](std::int64_t, std::size_t n) {
                        return prod_pow([](std::size_t) { return Coefficient(3); }, n);
                    }}},
    };
    return builders;
}

struct StatBuilder {
    bool parameterized;
    std::function<Integer(std::int64_t a, std::int64_t n, std::size_t limit)> value;
};

const std::map<std::string, StatBuilder> &stat_builders()
{
    static const std::map<std::string, StatBuilder> builders = {
        {"p", {false, [](std::int64_t, std::int64_t n, std::size_t) { return count_partitions(n); }}},
        {"pa", {true, [](std::int64_t a, std::int64_t n, std::size_t) { return count_by_parts(a, n); }}},
        {"paHat", {true, [](std::int64_t a, std::int64_t n, std::size_t) { return count_by_parts_hat(a, n); }}},
        {"Q", {false, [](std::int64_t, std::int64_t n, std::size_t) { return count_distinct(n); }}},
        {"Qhat", {false, [](std::int64_t, std::int64_t n, std::size_t limit) {
                      return count_uniform_multiplicity(n, limit);
                  }}},
        {"ba", {true, [](std::int64_t a, std::int64_t n, std::size_t limit) { return count_durfee(a, n, limit); }}},
        {"baHat", {true, [](std::int64_t a, std::int64_t n, std::size_t limit) {
                       return count_durfee_hat(a, n, limit);
                   }}},
    };
    return builders;
}

template <typename Map>
std::string known_names(const Map &map)
{
    std::string names;
    for (const auto &[name, _] : map) {
        names += names.empty() ? "" : ", ";
        names += name;
    }
    return names;
}

void require_parameter(bool parameterized, const std::optional<std::int64_t> &a, const std::string &name)
{
    if (parameterized && !a) {
        throw usage_error(name + " requires --a");
    }
    if (!parameterized && a) {
        throw usage_error(name + " does not take --a");
    }
    if (a && *a < 1) {
        throw usage_error("--a must be >= 1");
    }
}

int cmd_series(const std::string &name, const std::optional<std::int64_t> &a, std::size_t order, Format format,
               std::ostream &out)
{
    const auto &builders = series_builders();
    const auto it = builders.find(name);
    if (it == builders.end()) {
        throw usage_error("unknown series '" + name + "' (known: " + known_names(builders) + ")");
    }
    require_parameter(it->second.parameterized, a, name);
    const auto series = it->second.build(a.value_or(0), order);
    if (format == Format::text) {
        out << series << '\n';
        return exit_ok;
    }
    json doc;
    doc["kind"] = "series";
    doc["name"] = name;
    if (a) {
        doc["a"] = *a;
    }
    doc["order"] = order;
    doc["coefficients"] = rational_array(series.coefficients());
    write_json(out, doc);
    return exit_ok;
}

int cmd_durfee_profiles(std::size_t n_max, std::size_t limit, Format format, std::ostream &out)
{
    if (n_max > limit) {
        throw oracle_limit_exceeded("enumeration of weight " + std::to_string(n_max) + " exceeds oracle limit "
                                    + std::to_string(limit));
    }
    json values = json::array();
    std::ostringstream text;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::map<std::pair<int, int>, unsigned long> histogram;
        for_each_partition(static_cast<int>(n), [&](std::span<const int> parts) {
            const auto profile = durfee_profile(parts);
            ++histogram[{profile.square, profile.max_rectangle_height}];
        });
        json profiles = json::array();
        text << n << '\t';
        bool first = true;
        for (const auto &[key, count] : histogram) {
            profiles.push_back({{"square", key.first}, {"max_rectangle_height", key.second},
                                {"count", std::to_string(count)}});
            text << (first ? "" : " ") << key.first << 'x' << key.second << ':' << count;
            first = false;
        }
        text << '\n';
        values.push_back({{"n", n}, {"profiles", profiles}});
    }
    if (format == Format::text) {
        out << text.str();
        return exit_ok;
    }
    json doc;
    doc["kind"] = "table";
    doc["stat"] = "durfeeProfile";
    doc["n_max"] = n_max;
    doc["values"] = values;
    write_json(out, doc);
    return exit_ok;
}

int cmd_table(const std::string &stat, const std::optional<std::int64_t> &a, std::size_t n_max, std::size_t limit,
              Format format, std::ostream &out)
{
    if (stat == "durfeeProfile") {
        require_parameter(false, a, stat);
        return cmd_durfee_profiles(n_max, limit, format, out);
    }
    const auto &builders = stat_builders();
    const auto it = builders.find(stat);
    if (it == builders.end()) {
        throw usage_error("unknown statistic '" + stat + "' (known: " + known_names(builders) + ", durfeeProfile)");
    }
    require_parameter(it->second.parameterized, a, stat);
    std::vector<Integer> values;
    for (std::size_t n = 1; n <= n_max; ++n) {
        values.push_back(it->second.value(a.value_or(0), static_cast<std::int64_t>(n), limit));
    }
    if (format == Format::text) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            out << n << '\t' << to_string(values[n - 1]) << '\n';
        }
        return exit_ok;
    }
    json doc;
    doc["kind"] = "table";
    doc["stat"] = stat;
    if (a) {
        doc["a"] = *a;
    }
    doc["n_max"] = n_max;
    auto arr = json::array();
    for (std::size_t n = 1; n <= n_max; ++n) {
        arr.push_back({{"n", n}, {"value", to_string(values[n - 1])}});
    }
    doc["values"] = arr;
    write_json(out, doc);
    return exit_ok;
}

json mismatch_json(const Mismatch &m)
{
    return {{"claim", m.claim}, {"power", m.power}, {"lhs", to_string(m.lhs)}, {"rhs", to_string(m.rhs)}};
}

std::string mismatch_text(const Mismatch &m)
{
    return "claim=" + m.claim + " power=" + std::to_string(m.power) + " lhs=" + to_string(m.lhs)
           + " rhs=" + to_string(m.rhs);
}

std::string seconds(std::chrono::nanoseconds ns)
{
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << std::chrono::duration<double>(ns).count() << 's';
    return os.str();
}

int cmd_verify(const std::string &identity, const std::vector<std::int64_t> &params, std::size_t order,
               const VerifyOptions &opts, bool timings, unsigned threads, Format format, std::ostream &out)
{
    std::vector<VerificationReport> reports;
    if (identity == "all") {
        reports = run_all(order, params, opts, threads);
    } else {
        const auto *check = find_identity(identity);
        if (check == nullptr) {
            std::string names;
            for (const auto &c : identity_registry()) {
                names += ", " + c.name;
            }
            throw usage_error("unknown identity '" + identity + "' (known: all" + names + ")");
        }
        reports = run_identity(*check, order, params, opts);
    }
    const auto failed = static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const auto &r) { return !r.passed(); }));

    if (format == Format::text) {
        for (const auto &r : reports) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.identity;
            if (r.parameter) {
                out << " a=" << *r.parameter;
            }
            out << " order=" << r.order;
            if (r.first_mismatch) {
                out << ' ' << mismatch_text(*r.first_mismatch);
            }
            if (r.error) {
                out << " error: " << *r.error;
            }
            if (timings) {
                out << " (" << seconds(r.elapsed) << ')';
            }
            out << '\n';
            for (const auto &note : r.notes) {
                out << "  note: " << note << '\n';
            }
            if (opts.full_diff) {
                for (const auto &m : r.mismatches) {
                    out << "  mismatch " << mismatch_text(m) << '\n';
                }
            }
        }
        out << "summary: " << reports.size() - failed << " passed, " << failed << " failed\n";
    } else {
        json doc;
        doc["kind"] = "report";
        doc["order"] = order;
        auto arr = json::array();
        for (const auto &r : reports) {
            json item;
            item["identity"] = r.identity;
            if (r.parameter) {
                item["a"] = *r.parameter;
            }
            item["order"] = r.order;
            item["status"] = r.passed() ? "pass" : "fail";
            item["claims"] = r.claims;
            item["first_mismatch"] = r.first_mismatch ? mismatch_json(*r.first_mismatch) : json(nullptr);
            if (opts.full_diff) {
                auto diffs = json::array();
                for (const auto &m : r.mismatches) {
                    diffs.push_back(mismatch_json(m));
                }
                item["mismatches"] = diffs;
            }
            item["notes"] = r.notes;
            if (r.error) {
                item["error"] = *r.error;
            }
            if (timings) {
                item["elapsed_seconds"] = seconds(r.elapsed);
            }
            arr.push_back(item);
        }
        doc["reports"] = arr;
        doc["passed"] = reports.size() - failed;
        doc["failed"] = failed;
        write_json(out, doc);
    }
    return failed == 0 ? exit_ok : exit_verification_failed;
}

} // namespace

std::vector<std::int64_t> parse_parameter_range(std::string_view text)
{
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const auto piece = text.substr(pos, comma - pos);
        const auto dots = piece.find("..");
        std::int64_t lo = 0, hi = 0;
        if (dots == std::string_view::npos) {
            lo = hi = parse_int(piece);
        } else {
            lo = parse_int(piece.substr(0, dots));
            hi = parse_int(piece.substr(dots + 2));
        }
        if (lo < 1 || hi < lo) {
            throw std::invalid_argument("bad parameter range '" + std::string(piece) + "'");
        }
        for (auto a = lo; a <= hi; ++a) {
            if (std::find(values.begin(), values.end(), a) == values.end()) {
                values.push_back(a);
            }
        }
        pos = comma + 1;
    }
    return values;
}

Fault parse_fault(std::string_view text)
{
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto colon = text.find(':', pos);
        fields.push_back(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
        if (colon == std::string_view::npos) {
            break;
        }
        pos = colon + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
        throw std::invalid_argument("fault must look like TABLE[@A]:INDEX[:DELTA]");
    }
    Fault fault;
    auto table = fields[0];
    if (const auto at = table.find('@'); at != std::string_view::npos) {
        fault.parameter = parse_int(table.substr(at + 1));
        table = table.substr(0, at);
    }
    fault.table = std::string(table);
    static const std::vector<std::string> one_index = {"Q", "Qhat", "p"};
    static const std::vector<std::string> two_index = {"pa", "paHat", "b", "bHat"};
    const bool known_single = std::find(one_index.begin(), one_index.end(), fault.table) != one_index.end();
    const bool known_double = std::find(two_index.begin(), two_index.end(), fault.table) != two_index.end();
    if (!(known_single && !fault.parameter) && !(known_double && fault.parameter)) {
        throw std::invalid_argument("unknown fault table '" + std::string(fields[0])
                                    + "' (Q, Qhat, p take no @A; pa, paHat, b, bHat require @A)");
    }
    const auto index = parse_int(fields[1]);
    if (index < 0) {
        throw std::invalid_argument("fault index must be >= 0");
    }
    fault.index = static_cast<std::size_t>(index);
    if (fields.size() == 3) {
        fault.delta = Integer{std::string(fields[2].substr(fields[2].starts_with('+') ? 1 : 0)), 10};
    }
    return fault;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Truncated q-series over exact rationals and Moebius-inversion identity checks", "qseries"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::size_t order = 10;
    std::optional<std::int64_t> a;
    std::size_t n_max = 10;
    std::size_t oracle_limit = oracle_limit_from_env();

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto *series = app.add_subcommand("series", "Print coefficients 0..N of a generating function");
    std::string series_name;
    series->add_option("name", series_name, "psiQ, FQ, FQhat, P, Pa, PaHat, Ba, BaHat, pentagonal, jacobi")
        ->required();
    series->add_option("-N,--order", order, "Truncation order")->required();
    series->add_option("--a", a, "Family parameter");
    add_format(series);

    auto *table = app.add_subcommand("table", "Print a statistic for n = 1..n-max");
    std::string stat_name;
    table->add_option("stat", stat_name, "p, pa, paHat, Q, Qhat, ba, baHat, durfeeProfile")->required();
    table->add_option("--n-max", n_max, "Largest n")->required();
    table->add_option("--a", a, "Family parameter");
    table->add_option("--oracle-limit", oracle_limit, "Largest weight handed to brute-force enumeration");
    add_format(table);

    auto *verify = app.add_subcommand("verify", "Check identities coefficientwise");
    std::string identity_name;
    std::string range_text = "1";
    bool full_diff = false;
    bool timings = false;
    unsigned threads = 1;
    std::string fault_text;
    verify->add_option("identity", identity_name, "Registered identity name or 'all'")->required();
    verify->add_option("-N,--order", order, "Truncation order")->required();
    verify->add_option("--a", range_text, "Parameter values, e.g. 3, 1..5 or 1,2,7");
    verify->add_option("--oracle-limit", oracle_limit, "Largest weight handed to brute-force enumeration");
    verify->add_flag("--full-diff", full_diff, "List every mismatching power");
    verify->add_flag("--timings", timings, "Include elapsed time per report");
    verify->add_option("--threads", threads, "Worker threads for 'all' (0 = hardware)");
    verify->add_option("--inject-fault", fault_text, "Corrupt one input entry: TABLE[@A]:INDEX[:DELTA]");
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "qseries: " << e.what() << '\n';
        return exit_usage;
    }

    const Format format = formats.at(format_name);
    try {
        if (series->parsed()) {
            return cmd_series(series_name, a, order, format, out);
        }
        if (table->parsed()) {
            return cmd_table(stat_name, a, n_max, oracle_limit, format, out);
        }
        VerifyOptions opts;
        opts.oracle_limit = oracle_limit;
        opts.full_diff = full_diff;
        if (!fault_text.empty()) {
            opts.fault = parse_fault(fault_text);
        }
        return cmd_verify(identity_name, parse_parameter_range(range_text), order, opts, timings, threads, format,
                          out);
    } catch (const oracle_limit_exceeded &e) {
        err << "qseries: " << e.what() << '\n';
        return exit_resource_limit;
    } catch (const usage_error &e) {
        err << "qseries: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "qseries: " << e.what() << '\n';
        return exit_usage;
    } catch (const domain_error &e) {
        err << "qseries: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace qseries::cli
