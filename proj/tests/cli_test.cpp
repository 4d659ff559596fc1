// Copyright 2026 The causal-switch-teleport Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "cst");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = cst::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  }
  return "<missing " + key + ">";
}

double number(const std::string& text, const std::string& key) { return std::stod(value(text, key)); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("cst_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST(cli, fidelity_worst_case_plus) {
  const Outcome o = run({"--p", "0.3333333333", "--q0", "0.5", "--theta", "1.5707963268", "--phi", "0"});
  ASSERT_EQ(o.code, 0) << o.err;
  // Ten-digit p leaves p0 = 1e-10, so fidelity sits 4e-10 below one.
  EXPECT_NEAR(number(o.out, "fidelity"), 1.0, 1e-9);
  EXPECT_NEAR(number(o.out, "prob"), 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(number(o.out, "orthogonal_prob"), 2.0 / 3.0, 1e-9);

  const Outcome exact =
      run({"--p", "0.33333333333333333", "--q0", "0.5", "--theta", "1.5707963267948966", "--phi", "0"});
  ASSERT_EQ(exact.code, 0) << exact.err;
  EXPECT_EQ(value(exact.out, "fidelity"), "1.000000000000");
  EXPECT_EQ(value(exact.out, "prob"), "0.333333333333");
}

TEST(cli, fidelity_noiseless_zero_angle) {
  const Outcome o =
      run({"fidelity", "--p0", "1", "--p1", "0", "--p2", "0", "--p3", "0", "--q0", "0.7", "--theta", "0", "--phi", "0"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(value(o.out, "fidelity"), "1.000000000000");
  EXPECT_EQ(value(o.out, "prob"), "0.700000000000");
  EXPECT_EQ(value(o.out, "orthogonal_prob"), "0.300000000000");
}

TEST(cli, isotropic_zero_matches_explicit_noiseless) {
  const Outcome iso = run({"--p", "0", "--q0", "0.4", "--theta", "1.1", "--phi", "0.3"});
  const Outcome expl = run({"--p0", "1", "--p1", "0", "--p2", "0", "--p3", "0", "--q0", "0.4", "--theta", "1.1",
                            "--phi", "0.3"});
  ASSERT_EQ(iso.code, 0);
  EXPECT_EQ(iso.out, expl.out);
}

TEST(cli, degenerate_measurement_exits_3) {
  const Outcome o = run({"--p", "0.2", "--q0", "1", "--theta", "3.141592653589793"});
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.err.find("degenerate"), std::string::npos);
}

TEST(cli, usage_errors_exit_2) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--p", "0.1", "--p0", "1", "--q0", "0.5", "--theta", "1"}).code, 2);
  EXPECT_EQ(run({"--p0", "1", "--q0", "0.5", "--theta", "1"}).code, 2);
  EXPECT_EQ(run({"--p0", "0.5", "--p1", "0.5", "--p2", "0.5", "--p3", "0", "--q0", "0.5", "--theta", "1"}).code, 2);
  EXPECT_EQ(run({"--p", "0.5", "--q0", "0.5", "--theta", "1"}).code, 2);
  EXPECT_EQ(run({"--p", "0.1", "--theta", "1"}).code, 2);
  EXPECT_EQ(run({"--p", "0.1", "--q0", "0.5", "--theta", "4"}).code, 2);
  EXPECT_EQ(run({"fidelity", "--p", "0.1", "--q0", "0.5"}).code, 2);
  EXPECT_EQ(run({"--p", "0.1", "--q0", "0.5", "--theta", "1", "optimize"}).code, 2);
  EXPECT_EQ(run({"--p", "0.1", "--q0", "0.5", "--grid", "16", "optimize"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "verify"}).code, 2);
  EXPECT_EQ(run({"sweep", "spiral", "--p", "0.1"}).code, 2);
  EXPECT_EQ(run({"sweep", "contour", "--p", "0.1", "--q0", "0.5", "--resolution", "8"}).code, 2);
  EXPECT_EQ(run({"sweep", "theta-curve", "--p", "0.1", "--q0-samples", "0.2,1.0"}).code, 2);
  EXPECT_EQ(run({"sweep", "theta-curve", "--p", "0.1", "--q0-samples", "0.5,0.2"}).code, 2);
  EXPECT_EQ(run({"sweep", "surface", "--p-samples", "0,0.5"}).code, 2);
  EXPECT_EQ(run({"verify", "--draws", "0"}).code, 2);
}

TEST(cli, help_exits_0) {
  const Outcome o = run({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("radians"), std::string::npos);
}

TEST(cli, optimize_worst_case_even_control) {
  const Outcome o = run({"--p", "0.3333333333", "--q0", "0.5", "optimize"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(number(o.out, "theta_star"), 1.5708, 1e-4);
  EXPECT_NEAR(number(o.out, "phi_star"), 0.0, 1e-12);
  EXPECT_NEAR(number(o.out, "f_star"), 1.0, 1e-9);
  EXPECT_NEAR(number(o.out, "closed_form_theta"), 1.5708, 1e-4);
}

TEST(cli, optimize_sixth_noise) {
  const Outcome o = run({"--p", "0.1666666667", "--q0", "0.25", "optimize"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(number(o.out, "f_star"), 0.60, 1e-6);
}

TEST(cli, optimize_worst_case_high_control) {
  const Outcome o = run({"--p", "0.3333333333", "--q0", "0.9", "optimize"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(number(o.out, "p_star"), 0.12, 1e-6);
}

TEST_F(CliFiles, optimize_writes_record) {
  const Outcome o = run({"--p", "0.25", "--q0", "0.3", "--format", "json", "--out", path("opt.json"), "optimize"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = nlohmann::json::parse(slurp(path("opt.json")));
  EXPECT_NEAR(doc["optimum"]["fidelity"].get<double>(), 0.6, 1e-9);
  EXPECT_EQ(doc["meta"]["seed"], 42);
  EXPECT_EQ(doc["meta"]["command"], "optimize");
}

TEST_F(CliFiles, fidelity_writes_record_with_provenance) {
  const Outcome o = run({"--p", "0.1", "--q0", "0.5", "--theta", "1", "--out", path("f.csv")});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string csv = slurp(path("f.csv"));
  EXPECT_NE(csv.find("# noise: [0.7"), std::string::npos);
  EXPECT_NE(csv.find("branch,f_un,prob,fidelity\nmeasured,"), std::string::npos);
}

TEST_F(CliFiles, sweep_contour_summary_and_determinism) {
  const Outcome a = run({"sweep", "contour", "--p", "0.3333333333", "--q0", "0.3", "--out", path("a.csv")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(value(a.out, "rows"), std::to_string(181 * 360));
  EXPECT_NEAR(number(a.out, "max_fidelity"), 1.0, 1e-3);
  EXPECT_NEAR(number(a.out, "argmax_theta"), std::acos(0.4), 0.5 * M_PI / 180);
  EXPECT_NEAR(number(a.out, "argmax_phi"), 0.0, 1e-12);

  const Outcome b = run({"sweep", "contour", "--p", "0.3333333333", "--q0", "0.3", "--out", path("b.csv")});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_FALSE(std::filesystem::exists(path("a.csv.tmp")));

  const std::string csv = slurp(path("a.csv"));
  EXPECT_NE(csv.find("# seed: 42\n"), std::string::npos);
  EXPECT_NE(csv.find("\ntheta,phi,fidelity,prob\n"), std::string::npos);
}

TEST_F(CliFiles, sweep_contour_json) {
  const Outcome o = run({"sweep", "contour", "--p", "0.1", "--q0", "1", "--resolution", "32", "--format", "json",
                         "--out", path("c.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = nlohmann::json::parse(slurp(path("c.json")));
  EXPECT_EQ(doc["axes"]["theta"].size(), 32u);
  EXPECT_EQ(doc["axes"]["phi"].size(), 62u);
  EXPECT_TRUE(doc["values"][31][0].is_null());
  EXPECT_EQ(doc["meta"]["resolution"], 32);
  EXPECT_EQ(doc["meta"]["version"], "0.1.0");
  EXPECT_EQ(number(o.out, "null_cells"), 62);
}

TEST_F(CliFiles, sweep_theta_curve_default_rows) {
  const Outcome o = run({"sweep", "theta-curve", "--p", "0.3333333333", "--out", path("t.csv")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(value(o.out, "rows"), "19");
  const std::string csv = slurp(path("t.csv"));
  EXPECT_NE(csv.find("\nq0,theta_star,prob\n0.05,"), std::string::npos);
}

TEST_F(CliFiles, sweep_surface) {
  const Outcome o = run({"sweep", "surface", "--p-samples", "0.1,0.2,0.3333333333333333", "--q0-samples", "0.2,0.7",
                         "--out", path("s.csv")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(value(o.out, "rows"), "6");
  EXPECT_NEAR(number(o.out, "max_f_star"), 1.0, 1e-9);
  const std::string csv = slurp(path("s.csv"));
  EXPECT_NE(csv.find("\np,q0,f_star,theta_star,prob\n"), std::string::npos);
}

TEST_F(CliFiles, sweep_bad_output_directory) {
  const Outcome o =
      run({"sweep", "contour", "--p", "0.1", "--q0", "0.5", "--resolution", "32", "--out", path("no/such/dir.csv")});
  EXPECT_EQ(o.code, 2);
}

TEST(cli, verify_is_deterministic) {
  const Outcome a = run({"verify", "--draws", "1", "--seed", "7"});
  const Outcome b = run({"verify", "--draws", "1", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(value(a.out, "seed"), "7");
}

TEST(cli, verify_default_battery_passes) {
  const Outcome o = run({"verify"});
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(value(o.out, "draws"), "1000");
  EXPECT_EQ(value(o.out, "result"), "pass");
  EXPECT_LT(number(o.out, "max_deviation"), 1e-10);
  EXPECT_NE(o.out.find("trace_same_order_table (rows i, columns j)\n  +1 +1 +1 +1\n  +1 +1 -1 -1\n  +1 -1 +1 -1\n  +1 -1 -1 +1\n"),
            std::string::npos)
      << o.out;
}
