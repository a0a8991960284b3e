#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cubiclab/app/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int status;
  json report;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cubiclab::app::run_cli(args, out, err);
  json report = out.str().empty() ? json() : json::parse(out.str(), nullptr, false);
  return {status, report, err.str()};
}

}  // namespace

TEST(Cli, DiscriminantForBetaTwo) {
  const CliRun r = run({"lattice", "disc", "--beta", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.report["schema"], 1);
  EXPECT_EQ(r.report["results"]["discriminant"], 37);
  EXPECT_FALSE(r.report.contains("timings"));
}

TEST(Cli, SkewPlanesDiscriminant) {
  EXPECT_EQ(run({"lattice", "disc"}).report["results"]["discriminant"], 21);
}

TEST(Cli, FixtureDpB) {
  const CliRun r = run({"fixture", "dp-b"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.report["passed"].get<bool>());
  EXPECT_EQ(r.report["results"]["section_class"], "empty");
  for (const auto& c : r.report["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c.dump();
}

TEST(Cli, EmptySearchExitsZero) {
  const CliRun r = run({"lattice", "search", "--degree", "5", "--selfint", "13"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.report["results"]["solutions"].empty());
  EXPECT_NE(r.err.find("a in [2, 2], b in [0, 0], c in [0, 0]"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"no-such-command"}).status, 2);
  EXPECT_EQ(run({"gb"}).status, 2);
  EXPECT_EQ(run({"--field", "fp:10", "dim", "x_0"}).status, 2);
  EXPECT_EQ(run({"dim", "x_0+"}).status, 2);
  EXPECT_EQ(run({"catalog", "no-such-entry"}).status, 2);
}

TEST(Cli, FailedCheckExitsOne) {
  const CliRun r = run({"section", "delpezzo", "plane:a", "--expect", "empty"});
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.report["passed"].get<bool>());
  EXPECT_NE(r.err.find("FAILED: section-class"), std::string::npos);
}

TEST(Cli, TimingsOnlyOnRequest) {
  const CliRun r = run({"--timings", "dim", "x_0"});
  EXPECT_TRUE(r.report.contains("timings"));
  EXPECT_EQ(r.report["results"]["dimension"], 4);
}

TEST(Cli, InlineAndCatalogIdeals) {
  EXPECT_EQ(run({"degree", "scroll:s22"}).report["results"]["degree"], 4);
  EXPECT_EQ(run({"--ring", "y:2", "degree", "y_0^3+y_1^3+y_2^3"}).report["results"]["degree"], 3);
  const CliRun k = run({"kernel", "--map", "psi:s22"});
  EXPECT_EQ(k.report["results"]["kernel"].size(), 1u);
}

TEST(Cli, SeededCommandsAreReproducible) {
  const std::vector<std::string> args = {"--seed", "7", "rsci", "scroll:s22", "--degree", "2"};
  std::ostringstream a, b, sink;
  ASSERT_EQ(cubiclab::app::run_cli(args, a, sink), 0);
  ASSERT_EQ(cubiclab::app::run_cli(args, b, sink), 0);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Cli, CatalogList) {
  const CliRun r = run({"catalog", "--list"});
  EXPECT_EQ(r.status, 0);
  EXPECT_GE(r.report["results"]["names"].size(), 10u);
}
