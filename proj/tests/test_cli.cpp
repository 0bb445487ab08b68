#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef RAMO_CLI_PATH
#error "RAMO_CLI_PATH must point at the ramo executable"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "ramo_cli_out.txt";
    std::string cmd = std::string(RAMO_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::ostringstream ss;
    ss << in.rdbuf();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, ss.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

const std::string kF2x2 = R"({"type":"poly_quotient","p":2,"vars":["x"],"caps":{"x":"x^2 = 0"}})";

} // namespace

TEST_CASE("analyze reports the K-number of F2[x]/(x^2)") {
    auto ring = write_temp("cli_f2x2.json", kF2x2);
    auto res = run("analyze " + ring.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("K-number: 7") != std::string::npos);
    CHECK(res.out.find("catalog: EX1-7") != std::string::npos);
}

TEST_CASE("analyze rejects missing and corrupted input with exit code 1") {
    auto res = run("analyze /no/such/file.json");
    CHECK(res.exit_code == 1);

    auto bad = write_temp("cli_bad.json", "{not json");
    res = run("analyze " + bad.string());
    CHECK(res.exit_code == 1);

    auto wrong = write_temp("cli_wrong.json", R"({"type":"martian"})");
    res = run("analyze " + wrong.string());
    CHECK(res.exit_code == 1);
}

TEST_CASE("analyze signals exhausted budgets with exit code 2") {
    auto ring = write_temp("cli_z36.json", R"({"type":"cyclic","n":36})");
    CHECK(run("analyze " + ring.string() + " --max-elements 10").exit_code == 2);
    CHECK(run("analyze " + ring.string() + " --max-ideals 3").exit_code == 2);
    CHECK(run("analyze " + ring.string() + " --max-monoid 2").exit_code == 2);
}

TEST_CASE("analyze --json output is byte identical across runs") {
    auto ring = write_temp("cli_f2x2.json", kF2x2);
    fs::path j1 = fs::temp_directory_path() / "cli_rep1.json";
    fs::path j2 = fs::temp_directory_path() / "cli_rep2.json";
    CHECK(run("analyze " + ring.string() + " --json " + j1.string()).exit_code == 0);
    CHECK(run("analyze " + ring.string() + " --json " + j2.string()).exit_code == 0);
    std::ostringstream s1, s2;
    s1 << std::ifstream(j1).rdbuf();
    s2 << std::ifstream(j2).rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(!s1.str().empty());
}

TEST_CASE("analyze --dot writes a Hasse diagram") {
    auto ring = write_temp("cli_f2x2.json", kF2x2);
    fs::path dot = fs::temp_directory_path() / "cli_monoid.dot";
    CHECK(run("analyze " + ring.string() + " --dot " + dot.string()).exit_code == 0);
    std::ostringstream ss;
    ss << std::ifstream(dot).rdbuf();
    CHECK(ss.str().find("digraph") != std::string::npos);
}

TEST_CASE("odot multiplies catalog entries") {
    auto res = run("odot field ZD-b");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("elements: 11") != std::string::npos);

    res = run("odot field ZD-c");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("elements: 12") != std::string::npos);

    res = run("odot ZD-b ZD-c");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("elements: 13") != std::string::npos);

    res = run("odot field ZD-b ZD-c");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("elements: 16") != std::string::npos);
    CHECK(res.out.find("catalog: ZDR-16") != std::string::npos);
}

TEST_CASE("odot accepts a monoid JSON file and round trips through --json") {
    fs::path dump = fs::temp_directory_path() / "cli_zdb.json";
    auto res = run("odot ZD-b --json " + dump.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("elements: 9") != std::string::npos);

    res = run("odot " + dump.string() + " ZD-c");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("elements: 13") != std::string::npos);
}

TEST_CASE("odot rejects unknown names with exit code 1") {
    CHECK(run("odot NOPE").exit_code == 1);
}

TEST_CASE("catalog lists entries and dumps one") {
    auto res = run("catalog");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("KURA-14 (14 elements)") != std::string::npos);
    CHECK(res.out.find("ZDR-16 (16 elements)") != std::string::npos);

    res = run("catalog LOCDUAL-i");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"elements\"") != std::string::npos);
    CHECK(res.out.find("digraph") != std::string::npos);

    CHECK(run("catalog NOPE").exit_code == 1);
}

TEST_CASE("verify over an empty corpus directory succeeds") {
    fs::path dir = fs::temp_directory_path() / "ramo_empty_corpus";
    fs::create_directories(dir);
    auto res = run("verify --corpus " + dir.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("FAIL") == std::string::npos);
}

TEST_CASE("bad arguments exit with code 1, help with 0") {
    CHECK(run("").exit_code == 1);
    CHECK(run("bogus-subcommand").exit_code == 1);
    CHECK(run("analyze").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
}
