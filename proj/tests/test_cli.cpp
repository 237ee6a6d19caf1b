#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cctype>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "lrec/catalog.hpp"
#include "lrec/expansion_core.hpp"
#include "lrec/serialize.hpp"

using namespace lrec;

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    RunResult r;
    const std::string cmd = std::string(LREC_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), p))
        r.output.append(buf.data(), got);
    const int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("exit-code contract") {
    CHECK(run("definitely_not_a_subcommand").status == 2);   // usage
    CHECK(run("expand").status == 2);                        // missing argument
    CHECK(run("expand zeta_minus_1 --threshold nonsense").status == 2);
    CHECK(run("expand no_such_series").status == 1);         // computational
    CHECK(run("limits cloitre --x 64").status == 0);
    CHECK(run("audit zeta_minus_1 --law V").status == 0);
    CHECK(run("fixtures").status == 0);
}

TEST_CASE("computational failures print the module error name") {
    CHECK(run("limits no_such_probe --x 1/10").output.find("UnknownProbe") !=
          std::string::npos);
    CHECK(run("limits pole_linear --x 1/10").output.find("OutOfDomain") !=
          std::string::npos);
    RunResult r = run("limits cloitre_extended --x 64 --bits 64");
    CHECK(r.status == 1);
    CHECK(r.output.find("PrecisionInsufficient") != std::string::npos);
}

TEST_CASE("expand emits the documented JSON schema") {
    RunResult r = run("expand zeta_minus_1 --threshold 1/4 --format json");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("series") == "zeta_minus_1");
    CHECK(j.at("threshold") == "1/4");
    CHECK(j.at("terms").front().at("base") == "2/1");
    CHECK(j.at("terms").front().at("coeff") == "1/1");
}

TEST_CASE("expand JSON round-trips to the in-memory expansion") {
    RunResult r = run("expand chi_6 --threshold 1/2 --format json");
    REQUIRE(r.status == 0);
    Expansion back = expansion_from_json(nlohmann::json::parse(r.output));
    Expansion direct =
        reciprocal_expansion(make_series(parse_series_id("chi_6")), Rational(1, 2));
    CHECK(back == direct);
}

TEST_CASE("byte-identical output on identical inputs") {
    const std::string args = "limits gh_gamma --x 32 --n 2";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("deviation") != std::string::npos);
}

TEST_CASE("probe text output renders 40 significant digits") {
    RunResult r = run("limits cloitre --x 64");
    REQUIRE(r.status == 0);
    auto pos = r.output.find("target    ");
    REQUIRE(pos != std::string::npos);
    std::string digits;
    for (pos += 10; pos < r.output.size() && r.output[pos] != '\n'; ++pos)
        if (std::isdigit(static_cast<unsigned char>(r.output[pos]))) digits += r.output[pos];
    // mantissa digits plus two exponent digits
    CHECK(digits.size() >= 40);
    CHECK(r.output.find("5.772156649015328606") != std::string::npos);
}

TEST_CASE("oracle and validate subcommands") {
    CHECK(run("oracle zeta_minus_1 4/9").output == "-2/1\n");
    RunResult v = run("validate zeta_minus_1 --s 40 --threshold 2/5");
    CHECK(v.status == 0);
    CHECK(v.output.find("PASS") != std::string::npos);
    RunResult j = run("validate zeta_minus_1 --s 40 --threshold 2/5 --format json");
    CHECK(nlohmann::json::parse(j.output).at("pass") == true);
}

TEST_CASE("acceptance subcommand reports per-criterion status") {
    RunResult r = run("acceptance");
    CHECK(r.status == 0);
    for (int i = 1; i <= 9; ++i)
        CHECK(r.output.find("criterion " + std::to_string(i)) != std::string::npos);
    CHECK(r.output.find("ALL CRITERIA PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}
