#include <doctest.h>

#include <qseries/cli.hpp>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace qseries;

namespace
{

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("series command, text")
{
    auto res = run({"series", "psiQ", "--order", "6", "--format", "text"});
    CHECK(res.code == 0);
    CHECK(res.out == "1, -1, -1/2, -1/6, 1/24, 43/120, -233/720\n");

    CHECK(run({"series", "FQhat", "--order", "6"}).out == "0, 1, 2, 3, 4, 4, 8\n");
    CHECK(run({"series", "Pa", "--a", "1", "--order", "4"}).out == "0, 1, 1, 1, 1\n");
    CHECK(run({"series", "pentagonal", "-N", "7"}).out == "1, -1, -1, 0, 0, 1, 0, 1\n");
    CHECK(run({"series", "jacobi", "-N", "6"}).out == "1, -3, 0, 5, 0, 0, -7\n");
    CHECK(run({"series", "P", "-N", "6"}).out == "1, 1, 2, 3, 5, 7, 11\n");
    CHECK(run({"series", "BaHat", "--a", "1", "-N", "6"}).out == "0, 0, 1, 3, 6, 10, 16\n");
}

TEST_CASE("series command, usage errors")
{
    CHECK(run({"series", "nosuch", "--order", "3"}).code == cli::exit_usage);
    CHECK(run({"series", "Pa", "--order", "3"}).code == cli::exit_usage);
    CHECK(run({"series", "psiQ", "--a", "2", "--order", "3"}).code == cli::exit_usage);
    CHECK(run({"series", "Pa", "--a", "0", "--order", "3"}).code == cli::exit_usage);
    CHECK(run({"series", "psiQ"}).code == cli::exit_usage);
    CHECK(run({"series", "psiQ", "-N", "3", "--format", "xml"}).code == cli::exit_usage);
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"frobnicate"}).code == cli::exit_usage);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("series command, json")
{
    const auto res = run({"series", "psiQ", "--order", "6", "--format", "json"});
    REQUIRE(res.code == 0);
    const auto doc = nlohmann::ordered_json::parse(res.out);
    CHECK(doc["kind"] == "series");
    CHECK(doc["name"] == "psiQ");
    CHECK(doc["order"] == 6);
    CHECK(doc["coefficients"]
          == nlohmann::ordered_json::array({"1", "-1", "-1/2", "-1/6", "1/24", "43/120", "-233/720"}));
    CHECK(doc.dump(2) + "\n" == res.out);

    const auto pa = nlohmann::ordered_json::parse(run({"series", "PaHat", "--a", "2", "-N", "4", "--format", "json"}).out);
    CHECK(pa["a"] == 2);
}

TEST_CASE("table command")
{
    CHECK(run({"table", "Qhat", "--n-max", "6"}).out == "1\t1\n2\t2\n3\t3\n4\t4\n5\t4\n6\t8\n");
    CHECK(run({"table", "Q", "--n-max", "6"}).out == "1\t1\n2\t1\n3\t2\n4\t2\n5\t3\n6\t4\n");
    CHECK(run({"table", "ba", "--a", "1", "--n-max", "6"}).out == "1\t0\n2\t1\n3\t2\n4\t3\n5\t4\n6\t6\n");
    CHECK(run({"table", "baHat", "--a", "1", "--n-max", "6"}).out == "1\t0\n2\t1\n3\t3\n4\t6\n5\t10\n6\t16\n");
    CHECK(run({"table", "p", "--n-max", "5"}).out == "1\t1\n2\t2\n3\t3\n4\t5\n5\t7\n");
    CHECK(run({"table", "pa", "--a", "2", "--n-max", "4"}).out == "1\t0\n2\t1\n3\t1\n4\t2\n");
    CHECK(run({"table", "paHat", "--a", "1", "--n-max", "5"}).out == "1\t1\n2\t2\n3\t3\n4\t5\n5\t7\n");
    CHECK(run({"table", "durfeeProfile", "--n-max", "3"}).out == "1\t1x0:1\n2\t1x0:1 1x1:1\n3\t1x0:1 1x1:1 1x2:1\n");

    const auto doc = nlohmann::ordered_json::parse(run({"table", "Qhat", "--n-max", "3", "--format", "json"}).out);
    CHECK(doc["kind"] == "table");
    CHECK(doc["values"][2]["n"] == 3);
    CHECK(doc["values"][2]["value"] == "3");
}

TEST_CASE("table command limits and usage errors")
{
    CHECK(run({"table", "Qhat", "--n-max", "61"}).code == cli::exit_resource_limit);
    CHECK(run({"table", "ba", "--a", "1", "--n-max", "12", "--oracle-limit", "10"}).code == cli::exit_resource_limit);
    CHECK(run({"table", "durfeeProfile", "--n-max", "12", "--oracle-limit", "10"}).code == cli::exit_resource_limit);
    // Recurrence and product paths have no enumeration cap.
    CHECK(run({"table", "p", "--n-max", "80"}).code == 0);
    CHECK(run({"table", "Q", "--n-max", "80"}).code == 0);
    CHECK(run({"table", "pa", "--n-max", "4"}).code == cli::exit_usage);
    CHECK(run({"table", "nosuch", "--n-max", "4"}).code == cli::exit_usage);

    ::setenv("QSERIES_ORACLE_LIMIT", "5", 1);
    CHECK(run({"table", "Qhat", "--n-max", "6"}).code == cli::exit_resource_limit);
    CHECK(run({"table", "Qhat", "--n-max", "6", "--oracle-limit", "6"}).code == 0);
    ::unsetenv("QSERIES_ORACLE_LIMIT");
}

TEST_CASE("verify command")
{
    auto res = run({"verify", "theorem1", "--order", "200"});
    CHECK(res.code == 0);
    CHECK(res.out.starts_with("PASS theorem1 order=200\n"));

    res = run({"verify", "all", "--order", "100", "--a", "1..5"});
    CHECK(res.code == 0);
    CHECK(res.out.find("summary: 18 passed, 0 failed") != std::string::npos);

    CHECK(run({"verify", "nosuch", "--order", "5"}).code == cli::exit_usage);
    CHECK(run({"verify", "theorem2", "--order", "5", "--a", "0"}).code == cli::exit_usage);
    CHECK(run({"verify", "theorem2", "--order", "5", "--inject-fault", "zz:3"}).code == cli::exit_usage);
}

TEST_CASE("verify with an injected fault")
{
    const auto res = run({"verify", "all", "--order", "30", "--a", "1..3", "--inject-fault", "pa@2:9"});
    CHECK(res.code == cli::exit_verification_failed);
    CHECK(res.out.find("FAIL theorem2 a=2 order=30 claim=scalar power=9 lhs=5 rhs=4\n") != std::string::npos);
    CHECK(res.out.find("summary: 13 passed, 1 failed") != std::string::npos);

    const auto diff = run({"verify", "theorem1", "--order", "12", "--inject-fault", "Qhat:6", "--full-diff"});
    CHECK(diff.code == 1);
    CHECK(diff.out.find("  mismatch claim=mobius-inversion power=12 lhs=14 rhs=15\n") != std::string::npos);

    const auto json = run({"verify", "theorem1", "--order", "12", "--inject-fault", "Q:5", "--format", "json"});
    CHECK(json.code == 1);
    const auto doc = nlohmann::ordered_json::parse(json.out);
    CHECK(doc["failed"] == 1);
    CHECK(doc["reports"][0]["first_mismatch"]["power"] == 5);
    CHECK(doc["reports"][0]["first_mismatch"]["lhs"] == "-5");
    CHECK(doc["reports"][0]["first_mismatch"]["rhs"] == "-4");
}

TEST_CASE("json output round-trips byte for byte and is deterministic")
{
    const std::vector<std::vector<std::string>> invocations = {
        {"series", "psiQ", "-N", "12", "--format", "json"},
        {"table", "durfeeProfile", "--n-max", "7", "--format", "json"},
        {"table", "baHat", "--a", "2", "--n-max", "9", "--format", "json"},
        {"verify", "all", "-N", "20", "--a", "1..2", "--format", "json"},
        {"verify", "theorem3", "-N", "20", "--a", "2", "--format", "json", "--inject-fault", "bHat@2:11",
         "--full-diff"},
    };
    for (const auto &args : invocations) {
        const auto first = run(args);
        const auto second = run(args);
        CHECK(first.out == second.out);
        CHECK(nlohmann::ordered_json::parse(first.out).dump(2) + "\n" == first.out);
    }
}

TEST_CASE("parameter ranges")
{
    CHECK(cli::parse_parameter_range("3") == std::vector<std::int64_t>{3});
    CHECK(cli::parse_parameter_range("1..5") == std::vector<std::int64_t>{1, 2, 3, 4, 5});
    CHECK(cli::parse_parameter_range("1..3,7,2") == std::vector<std::int64_t>{1, 2, 3, 7});
    CHECK_THROWS_AS(cli::parse_parameter_range("0"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_parameter_range("5..1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_parameter_range("x"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_parameter_range(""), std::invalid_argument);
}

TEST_CASE("fault specs")
{
    const auto f = cli::parse_fault("paHat@4:20:-3");
    CHECK(f.table == "paHat");
    CHECK(f.parameter == 4);
    CHECK(f.index == 20);
    CHECK(f.delta == -3);
    const auto g = cli::parse_fault("Qhat:7");
    CHECK(g.table == "Qhat");
    CHECK_FALSE(g.parameter.has_value());
    CHECK(g.delta == 1);
    CHECK_THROWS_AS(cli::parse_fault("Q@2:7"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_fault("pa:7"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_fault("Q"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_fault("Q:-1"), std::invalid_argument);
}
