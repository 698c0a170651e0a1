#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <altinv/cli.hpp>

using namespace altinv;
using namespace altinv::cli;

namespace {

int run_main(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::vector<std::string> full = {"altinv"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : full) argv.push_back(s.data());
    std::ostringstream out, err;
    int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    return code;
}

} // namespace

TEST_CASE("command parsing") {
    Command c = parse_command({"ztable", "--n", "7"});
    REQUIRE(std::holds_alternative<ZTableCmd>(c));
    CHECK(std::get<ZTableCmd>(c).n == 7);

    Command s = parse_command({"sweep", "--field", "f:5", "--max-n", "8"});
    REQUIRE(std::holds_alternative<SweepCmd>(s));
    CHECK(std::get<SweepCmd>(s).max_n == 8);

    CHECK_THROWS_AS(parse_command({"sweep", "--field", "f:2", "--max-n", "4"}), UsageError);
    CHECK_THROWS_AS(parse_command({"ztable", "--n", "99"}), UsageError);
    CHECK_THROWS_AS(parse_command({"nonsense"}), UsageError);
    CHECK_THROWS_AS(parse_command({}), UsageError);
    CHECK_THROWS_AS(parse_command({"factorize", "--element", "x1*x1", "--generators", "2"}),
                    UsageError);
    CHECK_THROWS_AS(parse_command({"torsors", "--field", "real", "--n", "4"}), UsageError);
    CHECK_THROWS_AS(parse_command({"verify", "--suite", "bogus"}), UsageError);
}

TEST_CASE("ztable output") {
    Report rep = run_command(parse_command({"ztable", "--n", "7"}));
    CHECK(rep.ok);
    CHECK(rep.text.find("lambda2 = 5*lambda1 - 14") != std::string::npos);
    CHECK(rep.text.find("lambda3 = 10*lambda1 - 35") != std::string::npos);
    CHECK(rep.text.find("lambda7 = 1") != std::string::npos);

    Report rep4 = run_command(parse_command({"ztable", "--n", "4", "--json"}));
    CHECK(rep4.data["z"][2][0] == "-2");
    CHECK(rep4.data["z"][2][1] == "2");
}

TEST_CASE("traceform output") {
    Report rep = run_command(parse_command({"traceform", "--field", "f:7", "--poly", "X^2-3"}));
    CHECK(rep.ok);
    CHECK(rep.text.find("<2,6>") != std::string::npos);
    CHECK(rep.data["rank"] == 2);
    CHECK(rep.data["disc"] == "u");
}

TEST_CASE("factorize outcomes") {
    Report good = run_command(parse_command(
        {"factorize", "--element", "1 + x1 + x2 + x1*x2", "--generators", "2"}));
    CHECK(good.ok);
    CHECK(good.data["factors"].size() == 2);

    Report bad = run_command(parse_command(
        {"factorize", "--element", "1 + e + e^2", "--generators", "1"}));
    CHECK_FALSE(bad.ok);
}

TEST_CASE("sw command") {
    Report rep = run_command(parse_command(
        {"sw", "--generators", "2", "--classes", "0", "--classes", "x1", "--classes", "x2",
         "--classes", "x1+x2"}));
    CHECK(rep.ok);
    CHECK(rep.data["components"][2] == "e*x1 + e*x2 + x1*x2");
}

TEST_CASE("fixedmodule command") {
    Report rep = run_command(parse_command(
        {"fixedmodule", "--rank", "2", "--action", "a3", "--cutoff", "6", "--json"}));
    CHECK(rep.ok);
    CHECK(rep.data["generators"].size() == 2);
    CHECK(rep.data["generators"][1] == "e*x1 + e*x2 + x1*x2");

    Report viamat = run_command(parse_command(
        {"fixedmodule", "--rank", "2", "--matrix", "01;11", "--cutoff", "6"}));
    CHECK(viamat.data["generators"] == rep.data["generators"]);
}

TEST_CASE("torsors command") {
    Report rep = run_command(parse_command({"torsors", "--field", "f:5", "--n", "4", "--json"}));
    CHECK(rep.ok);
    REQUIRE(rep.data["rows"].size() == 3);
    for (const auto& row : rep.data["rows"]) {
        CHECK(row.contains("cycle_type"));
        CHECK(row.contains("split"));
        CHECK(row.contains("rank"));
        CHECK(row.contains("disc"));
        CHECK(row.contains("witt"));
        CHECK(row.contains("lambdas"));
        CHECK(row["disc"] == "1");
    }
}

TEST_CASE("verify command") {
    Report rep = run_command(parse_command({"verify", "--suite", "lambda-table"}));
    CHECK(rep.ok);
    CHECK(rep.text.find("[PASS]") != std::string::npos);
    CHECK(rep.text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("exit codes") {
    std::string text;
    CHECK(run_main({"ztable", "--n", "7"}, &text) == 0);
    CHECK(text.find("lambda2 = 5*lambda1 - 14") != std::string::npos);
    CHECK(run_main({"ztable", "--bogus"}) == 2);
    CHECK(run_main({"sweep", "--field", "f:2", "--max-n", "4"}) == 2);
    CHECK(run_main({"factorize", "--element", "1 + e + e^2", "--generators", "1"}) == 1);
    CHECK(run_main({"--help"}) == 0);
    CHECK(run_main({"sweep", "--field", "f:3", "--max-n", "3"}) == 0);
}
