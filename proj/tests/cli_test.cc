// Copyright 2026 The xeq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "xeq_cli/cli.h"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/fixtures.h"
#include "xeq/io.h"

namespace xeq::cli {
namespace {

using nlohmann::json;

std::string data(const char* name) { return (std::filesystem::path(XEQ_DATA_DIR) / name).string(); }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--json");
  const CliRun r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

Rational frac(const json& v) { return parse_rational(v.get<std::string>()); }

TEST(CliAnalyze, Chicken) {
  const json r = run_json({"analyze", data("chicken.json")}, kExitOk);
  EXPECT_EQ(r["schema_version"], kSchemaVersion);
  EXPECT_EQ(r["tool"], "xeq");
  EXPECT_EQ(r["seed"], 0);
  EXPECT_EQ(r["tol"], 1e-8);
  ASSERT_EQ(r["nash_sym"]["strategies"].size(), 1u);
  EXPECT_EQ(r["nash_sym"]["strategies"][0]["x"], json({"1/2", "1/2"}));
  EXPECT_EQ(r["ce_vertices"]["count"], 4);
  const json& xe = r["max_utility"]["xe_sym"];
  EXPECT_NEAR(xe["value"].get<double>(), 2.5, 1e-6);
  EXPECT_EQ(frac(xe["certified_lower_bound"]), Rational(5, 2));
  EXPECT_EQ(r["hierarchy"]["xe_max_equals_ce_max"], false);
  EXPECT_EQ(r["hierarchy"]["conv_nash_max_equals_xe_max"], true);
}

TEST(CliAnalyze, CoordinationSetsCoincide) {
  const json r = run_json({"analyze", data("coord.json")}, kExitOk);
  EXPECT_EQ(r["hierarchy"]["xe_max_equals_ce_max"], true);
  EXPECT_EQ(r["max_utility"]["xe_sym"]["exact"], r["max_utility"]["ce_sym"]["exact"]);
}

TEST(CliAnalyze, PayoffSeparationTable) {
  const json r = run_json({"analyze", data("payoffsep.json")}, kExitOk);
  const json& t = r["max_utility"];
  EXPECT_EQ(frac(t["ce_sym"]["exact"]), Rational(3, 2));
  EXPECT_EQ(frac(t["conv_nash_sym"]["exact"]), Rational(1));
  const double v = t["xe_sym"]["value"];
  EXPECT_GE(v, 17.0 / 16 - 1e-6);
  EXPECT_LE(v, 1.5 - 1e-3);
}

TEST(CliAnalyze, GameEchoRoundTrips) {
  const json r = run_json({"analyze", data("exeqsep.json")}, kExitOk);
  EXPECT_EQ(parse_game(r["game"].dump()).payoff(), load_game(data("exeqsep.json")).payoff());
  EXPECT_EQ(parse_game(r["game"].dump()).labels(), load_game(data("exeqsep.json")).labels());
}

TEST(CliAnalyze, SkipsVerticesAboveFourUnlessForced) {
  const auto p = temp_file("xeq_cli_m5.json",
                           R"({"m": 5, "A": [[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]})");
  const json r = run_json({"analyze", p.string()}, kExitOk);
  EXPECT_TRUE(r["ce_vertices"].contains("skipped"));
  EXPECT_EQ(r["max_utility"]["xe_sym"]["upper_bound_only"], true);
}

TEST(CliCheck, ExeqsepVerdicts) {
  json r = run_json({"check", data("exeqsep.json"), data("exeqsep_w1.json"), "--set", "xe"}, kExitNegative);
  EXPECT_EQ(r["verdict"]["answer"], "out");
  EXPECT_EQ(r["verdict"]["certificate"]["kind"], "zero_pattern");
  EXPECT_EQ(r["verdict"]["certificate_verified"], true);

  r = run_json({"check", data("exeqsep.json"), data("exeqsep_w1.json"), "--set", "ce"}, kExitOk);
  EXPECT_EQ(r["verdict"]["answer"], "in");

  r = run_json({"check", data("exeqsep.json"), data("exeqsep_w2.json"), "--set", "conv-nash"},
               kExitNegative);
  EXPECT_EQ(r["verdict"]["answer"], "out");
  EXPECT_TRUE(r["verdict"].contains("certificate"));

  r = run_json({"check", data("exeqsep.json"), data("exeqsep_w2.json"), "--set", "xe"}, kExitOk);
  EXPECT_EQ(r["verdict"]["certificate"]["kind"], "factorization");
}

TEST(CliCheck, SymmetricNashOuterProductIsIn) {
  const json r = run_json({"check", data("chicken.json"), data("uniform_2x2.json"), "--set", "xe"}, kExitOk);
  EXPECT_EQ(r["verdict"]["answer"], "in");
}

TEST(CliCheck, IncentiveCertificateUsesOneBasedIndices) {
  // Off-diagonal mass on coordination: both players gain by switching.
  const json r =
      run_json({"check", data("coord.json"), data("off_diagonal_2x2.json"), "--set", "ce"}, kExitNegative);
  const json& c = r["verdict"]["certificate"];
  EXPECT_EQ(c["kind"], "incentive");
  EXPECT_GE(c["recommended"].get<int>(), 1);
  EXPECT_LE(c["recommended"].get<int>(), 2);
  EXPECT_GE(c["deviation"].get<int>(), 1);
  EXPECT_GT(frac(c["gain"]), 0);
}

TEST(CliExtend, GoldenVerdicts) {
  json r = run_json({"extend", data("exeqsep.json"), data("exeqsep_w1.json"), "--n", "3"}, kExitNegative);
  EXPECT_EQ(r["result"], "infeasible");
  EXPECT_EQ(r["certificate_verified"], true);

  r = run_json({"extend", data("anticoord.json"), data("off_diagonal_2x2.json"), "--n", "3"}, kExitNegative);
  EXPECT_EQ(r["result"], "infeasible");
  EXPECT_EQ(r["certificate_verified"], true);
}

TEST(CliExtend, WritesOrbitFileThatRoundTrips) {
  const auto out = std::filesystem::temp_directory_path() / "xeq_cli_orbit.json";
  std::filesystem::remove(out);
  const json r = run_json(
      {"extend", data("anticoord.json"), data("uniform_2x2.json"), "--n", "10", "--out", out.string()}, kExitOk);
  EXPECT_EQ(r["result"], "feasible");
  const OrbitDistribution d = load_orbit_distribution(out);
  EXPECT_EQ(d.num_players(), 10);
  EXPECT_EQ(bivariate_marginal(d), load_distribution(data("uniform_2x2.json")));
  EXPECT_EQ(parse_orbit_distribution(r["extension"].dump()), d);
}

TEST(CliMinority, ParityTable) {
  const json r = run_json({"minority", "--n-max", "6"}, kExitOk);
  ASSERT_EQ(r["rows"].size(), 5u);
  for (const json& row : r["rows"]) {
    const int n = row["N"];
    if (n % 2 == 0) {
      EXPECT_EQ(row["result"], "infeasible") << n;
      EXPECT_EQ(row["certificate_verified"], true) << n;
    } else {
      EXPECT_EQ(row["result"], "feasible") << n;
      EXPECT_EQ(row["unique"], true) << n;
    }
  }
  EXPECT_EQ(run_json({"minority", "--n-max", "2"}, kExitOk)["rows"].size(), 1u);
}

TEST(CliExitCodes, Errors) {
  EXPECT_EQ(run({"minority", "--n-max", "65"}).code, kExitBudget);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"check", data("chicken.json"), data("uniform_2x2.json"), "--set", "nash"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "/nonexistent/game.json"}).code, kExitUsage);
  const auto bad = temp_file("xeq_cli_bad.json", R"({"m": 2, "A": [[1, "x/y"], [0, 1]]})");
  EXPECT_EQ(run({"analyze", bad.string()}).code, kExitUsage);
  // 3-strategy distribution against a 2-strategy game.
  EXPECT_EQ(run({"check", data("chicken.json"), data("exeqsep_w1.json")}).code, kExitUsage);
}

// Every scalar in the JSON report shows up in the text report.
void collect(const json& v, std::vector<std::string>& out) {
  if (v.is_object() || v.is_array()) {
    for (const auto& e : v) collect(e, out);
  } else if (v.is_string()) {
    out.push_back(v.get<std::string>());
  } else if (!v.is_null()) {
    out.push_back(v.dump());
  }
}

TEST(CliOutput, TextAndJsonCarrySameValues) {
  const std::vector<std::vector<std::string>> commands = {
      {"analyze", data("chicken.json")},
      {"check", data("exeqsep.json"), data("exeqsep_w1.json"), "--set", "xe"},
      {"extend", data("anticoord.json"), data("off_diagonal_2x2.json"), "--n", "3"},
      {"minority", "--n-max", "4"},
  };
  for (const auto& cmd : commands) {
    const CliRun text = run(cmd);
    auto with_json = cmd;
    with_json.push_back("--json");
    const CliRun js = run(with_json);
    EXPECT_EQ(text.code, js.code);
    std::vector<std::string> leaves;
    collect(json::parse(js.out), leaves);
    for (const auto& leaf : leaves) EXPECT_NE(text.out.find(leaf), std::string::npos) << cmd[0] << ": " << leaf;
  }
}

TEST(CliOutput, SeedAndTolAreEchoed) {
  const json r = run_json({"analyze", data("chicken.json"), "--seed", "7", "--tol", "1e-7"}, kExitOk);
  EXPECT_EQ(r["seed"], 7);
  EXPECT_EQ(r["tol"], 1e-7);
}

}  // namespace
}  // namespace xeq::cli
