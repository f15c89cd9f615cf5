#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "cli_runner.hpp"

#ifndef BVRING_CLI
#error "BVRING_CLI must name the command-line executable"
#endif

using bvring::testing::run_cli;
using nlohmann::json;

namespace {

const std::string kCli = BVRING_CLI;

}  // namespace

TEST(Cli, KernelGenReport) {
  const auto r = run_cli(kCli, {"verify", "--check", "kernel-gen", "--d", "4", "--x", "1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"kernel_dim\":2,\"slice_rank\":2,\"equal\":true}\n");
}

TEST(Cli, GramMatrix) {
  const auto r = run_cli(kCli, {"gram", "--d", "4", "--x", "3", "--format", "json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "[[9,3,3],[3,9,3],[3,3,9]]\n");
  const auto e = run_cli(kCli, {"gram", "--d", "4", "--x", "3", "--exponents"});
  EXPECT_EQ(e.out, "[[2,1,1],[1,2,1],[1,1,2]]\n");
}

TEST(Cli, NormalizeAgreesWithExpandedRelation) {
  const auto lhs = run_cli(kCli, {"normalize", "--n", "3", "--k3", "1", "--deg", "2", "delta(1,2)*delta(1,3)"});
  const auto rhs = run_cli(kCli, {"normalize", "--n", "3", "--k3", "1", "--deg", "2",
                                  "delta(1,2)*o(3) + delta(1,3)*o(2) + delta(2,3)*o(1) - o(1)*o(2) - o(1)*o(3) - o(2)*o(3)"});
  EXPECT_EQ(lhs.status, 0);
  EXPECT_EQ(lhs.out, rhs.out);
  const auto doc = json::parse(lhs.out);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["terms"].size(), 9u);
}

TEST(Cli, NormalizeFormatsAndStdin) {
  const auto text = run_cli(kCli, {"normalize", "--n", "3", "--x", "5", "--format", "text", "tau(1,2)*tau(1,3)"});
  EXPECT_EQ(text.status, 0);
  EXPECT_EQ(text.out, "τ_{2,3}·o_1\n");
  const auto expr = run_cli(kCli, {"normalize", "--n", "3", "--x", "5", "--format", "expr", "-"}, {}, "tau(1,2)^2");
  EXPECT_EQ(expr.status, 0);
  EXPECT_EQ(expr.out, "5*o(1)*o(2)\n");
  const auto sq = run_cli(kCli, {"normalize", "--n", "2", "--k3", "1", "--deg", "2", "--format", "expr", "delta(1,2)*delta(1,2)"});
  EXPECT_EQ(sq.out, "24*o(1)*o(2)\n");
}

TEST(Cli, Pair) {
  const auto r = run_cli(kCli, {"pair", "--n", "2", "--k3", "1", "--deg", "2", "l(1,1)*l(1,2)", "l(1,1)*l(1,2)"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["pair"], "4/1");
}

TEST(Cli, VerifyChecksPass) {
  const std::vector<std::vector<std::string>> cases = {
      {"verify", "--check", "bv-relations", "--n", "3", "--k3", "1", "--deg", "2"},
      {"verify", "--check", "delta-closure", "--n", "3", "--k3", "2", "--deg", "2", "--deg", "-2"},
      {"verify", "--check", "block-structure", "--n", "3", "--x", "2"},
      {"verify", "--check", "eigen", "--d", "6", "--x", "2"},
      {"verify", "--check", "kimura-identity", "--x", "2"},
      {"verify", "--check", "perfect-pairing", "--n", "4", "--x", "1"},
  };
  for (const auto& args : cases) {
    const auto r = run_cli(kCli, args);
    EXPECT_EQ(r.status, 0) << args[2] << ": " << r.out;
    EXPECT_NO_THROW(json::parse(r.out)) << args[2];
  }
}

TEST(Cli, FailingCheckExitsOne) {
  // delta^2 = 24 o o only on the K3 line x = 22 - rho
  const auto r = run_cli(kCli, {"verify", "--check", "delta-closure", "--n", "2", "--x", "3"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json::parse(r.out)["passed"], false);
}

TEST(Cli, ErrorsExitTwo) {
  const auto range = run_cli(kCli, {"normalize", "--n", "4", "o(5)"});
  EXPECT_EQ(range.status, 2);
  EXPECT_TRUE(json::parse(range.out).contains("error"));

  const auto syntax = run_cli(kCli, {"normalize", "--n", "4", "tau(1)"});
  EXPECT_EQ(syntax.status, 2);
  EXPECT_EQ(json::parse(syntax.out)["offset"], 5);

  EXPECT_EQ(run_cli(kCli, {"gram", "--d", "6", "--x", "1"}, "BVRING_MAX_DIM=10").status, 2);
  EXPECT_EQ(run_cli(kCli, {"gram", "--d", "5", "--x", "1"}).status, 2);
  EXPECT_EQ(run_cli(kCli, {"verify", "--check", "nonsense"}).status, 2);
  EXPECT_EQ(run_cli(kCli, {"normalize", "--n", "3", "--k3", "1", "o(1)"}).status, 2);
  EXPECT_EQ(run_cli(kCli, {"frobnicate"}).status, 2);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"specht", "--d", "6", "--x", "2", "--threads", "3"};
  const auto a = run_cli(kCli, args);
  const auto b = run_cli(kCli, {"specht", "--d", "6", "--x", "2"});
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}
