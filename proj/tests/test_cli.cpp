#include "cli_commands.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace heisenfock;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

const std::string config_dir = HEISENFOCK_CONFIG_DIR;

// Runs the installed binary through the shell; returns (exit code, stdout).
std::pair<int, std::string> run_binary(const std::string& args) {
    std::string cmd = std::string(HEISENFOCK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 256> buf{};
    while (pipe && fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    int status = pipe ? pclose(pipe) : -1;
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, VerifyDefaultConfig) {
    auto r = run({"verify", "--max-degree", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "OK, 49 relation instances verified\n");
}

TEST(Cli, VerifyVariantsOnAsymmetricPairing) {
    for (const char* v : {"plain", "transposed", "mixed"}) {
        auto r = run({"--config", config_dir + "/asymmetric_d2.json", "verify", "--max-degree", "3",
                      "--variant", v});
        EXPECT_EQ(r.code, 0) << v << r.out;
        EXPECT_EQ(r.out, "OK, 64 relation instances verified\n");
    }
}

TEST(Cli, NormalForm) {
    auto r = run({"--config", config_dir + "/point_chi2.json", "normal-form", "a(0,1) a(0,-1)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "a(0,-1) a(0,1) + 2\n");
    auto q = run({"normal-form", "[q(0,2), p(0,2)]"});
    EXPECT_EQ(q.out, "a(0,-1) a(0,1) + 1\n");
}

TEST(Cli, NormalFormJson) {
    auto r = run({"--json", "--config", config_dir + "/point_chi2.json", "normal-form",
                  "a(0,1) a(0,-1)"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["text"], "a(0,-1) a(0,1) + 2");
    EXPECT_EQ(j["terms"].size(), 2u);
}

TEST(Cli, DimsTable) {
    auto r = run({"dims", "--d", "2", "--max-level", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "level  fock  vistoli  status\n"
              "    0     1        1   equal\n"
              "    1     2        2   equal\n"
              "    2     5        5   equal\n"
              "    3    10       10   equal\n"
              "    4    20       20   equal\n");
}

TEST(Cli, FockAct) {
    auto r = run({"fock-act", "a(0,1)", "--on", "a(0,-1)^2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2 a(0,-1)\n");
    auto p = run({"fock-act", "p(0,2)"});
    EXPECT_EQ(p.out, "1/2 a(0,-1)^2 + 1/2 a(0,-2)\n");
    auto q = run({"fock-act", "q(0,3)"});
    EXPECT_EQ(q.out, "0\n");
}

TEST(Cli, SymEuler) {
    auto r = run({"sym-euler", "--space", "0:2,1:1", "--k", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "space: {0:2, 1:1}\n"
              "euler: 1\n"
              "S^2: {0:3, 1:2}\n"
              "euler(S^2): 1\n"
              "s^2(1): 1\n"
              "OK\n");
    auto e = run({"--config", config_dir + "/asymmetric_d2.json", "sym-euler", "--space", "odd_line",
                  "--k", "3", "--ext"});
    EXPECT_EQ(e.code, 0);
    EXPECT_NE(e.out.find("ext^3: {3:1}"), std::string::npos) << e.out;
    EXPECT_EQ(e.out,
              "space: {1:1}\n"
              "euler: -1\n"
              "ext^3: {3:1}\n"
              "euler(ext^3): -1\n"
              "s^3(1): 1\n"
              "(-1)^3 s^3(1): -1\n"
              "OK\n");
}

TEST(Cli, Triangularity) {
    auto r = run({"triangularity", "--weight", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("OK, triangular with nonzero diagonal", 0), 0u) << r.out;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::exit_usage);
    EXPECT_EQ(run({"bogus"}).code, cli::exit_usage);
    EXPECT_EQ(run({"normal-form", "a(0,0)"}).code, cli::exit_usage);
    EXPECT_EQ(run({"normal-form", "(a(0,1)"}).code, cli::exit_usage);
    EXPECT_EQ(run({"normal-form", "a(1,1)"}).code, cli::exit_usage);
    EXPECT_EQ(run({"--config", "/nonexistent.json", "dims"}).code, cli::exit_usage);
    EXPECT_EQ(run({"verify", "--variant", "sideways"}).code, cli::exit_usage);
    auto err = run({"normal-form", "a(0,0)"});
    EXPECT_NE(err.err.find("line 1, column 5"), std::string::npos) << err.err;
}

TEST(Cli, BinaryAndEnvironmentConfig) {
    auto [code, out] = run_binary("normal-form 'a(0,1) a(0,-1)'");
    EXPECT_EQ(code, 0);
    EXPECT_EQ(out, "a(0,-1) a(0,1) + 1\n");
    auto [code2, out2] = run_binary("normal-form 'a(0,1) a(0,-1)' --config " + config_dir +
                                    "/point_chi2.json");
    EXPECT_EQ(code2, 0);
    EXPECT_EQ(out2, "a(0,-1) a(0,1) + 2\n");
    setenv("HEISENFOCK_CONFIG", (config_dir + "/point_chi2.json").c_str(), 1);
    auto env = run({"normal-form", "a(0,2) a(0,-2)"});
    unsetenv("HEISENFOCK_CONFIG");
    EXPECT_EQ(env.out, "a(0,-2) a(0,2) + 4\n");
    auto [code3, out3] = run_binary("normal-form 'a(0,'");
    EXPECT_EQ(code3, 2);
}
