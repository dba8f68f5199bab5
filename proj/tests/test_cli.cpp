#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ribbon/batch.hpp"
#include "ribbon/certificate.hpp"

using namespace ribbon;

namespace {

std::string run_cli(const std::string& args, int expect_exit) {
    std::string cmd = std::string(RIBBON_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[512];
    while (size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
    int st = pclose(p);
    CHECK(WEXITSTATUS(st) == expect_exit);
    return out;
}

}  // namespace

TEST_CASE("single DT code: stevedore") {
    auto out = run_cli("--input '4 8 12 10 2 6' --format dt", 0);
    CHECK(out.find("AlgorithmicallyRibbon, 1 band") != std::string::npos);
}

TEST_CASE("single DT code: figure-eight is NonSlice") {
    auto out = run_cli("--input '4 6 8 2' --format dt", 0);
    CHECK(out.find("NonSlice") != std::string::npos);
}

TEST_CASE("bad code exits 1 with a message") {
    auto out = run_cli("--input '4 4 4' --format dt", 1);
    CHECK(out.find("ERROR") != std::string::npos);
}

TEST_CASE("missing csv exits 1") {
    run_cli("--input /nonexistent.csv --format csv", 1);
}

TEST_CASE("batch over a small table, with summary and certificates") {
    std::string dir = "cli_test_out";
    std::remove((dir + "/6_1.cert").c_str());
    std::string csv = dir + "/table.csv";
    system(("mkdir -p " + dir).c_str());
    {
        std::ofstream f(csv);
        f << "name,dt_code\n3_1,4 6 2\n4_1,4 6 8 2\n6_1,4 8 12 10 2 6\n";
    }
    auto out = run_cli("--input " + csv + " --format csv --certificates " + dir +
                           " --verify --render svg --summary " + dir + "/summary.csv --jobs 2",
                       0);
    CHECK(out.find("6_1: AlgorithmicallyRibbon") != std::string::npos);
    // emitted certificate verifies and the svg exists
    std::ifstream c(dir + "/6_1.cert");
    REQUIRE(c.good());
    std::string text((std::istreambuf_iterator<char>(c)), std::istreambuf_iterator<char>());
    CHECK(verify_certificate(parse_certificate(text)).ok);
    CHECK(std::ifstream(dir + "/6_1.svg").good());
    // summary: one 3-crossing, one 4-crossing, one 6-crossing row
    std::ifstream s(dir + "/summary.csv");
    REQUIRE(s.good());
    std::string summary((std::istreambuf_iterator<char>(s)), std::istreambuf_iterator<char>());
    CHECK(summary.find("6,1,1,1,1,1^1") != std::string::npos);
}

TEST_CASE("empty table gives an empty summary and exit 0") {
    std::string csv = "cli_test_out/empty.csv";
    system("mkdir -p cli_test_out");
    { std::ofstream f(csv); f << "name,dt_code\n"; }
    run_cli("--input " + csv + " --format csv", 0);
}

TEST_CASE("summary counts independent of parallelism") {
    KnotEntry e61{"6_1", {4, 8, 12, 10, 2, 6}}, e31{"3_1", {4, 6, 2}};
    RunConfig one, four;
    four.jobs = 4;
    auto a = summary_csv(summarise(run_batch({e61, e31}, one)));
    auto b = summary_csv(summarise(run_batch({e61, e31}, four)));
    CHECK(a == b);
}
