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

#ifndef CST_TOOLS_CLI_HPP
#define CST_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cst/model.hpp"

namespace cst::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDegenerate = 3,
};

/// Parsed and validated command line.
struct RunConfig {
  std::string command;  // fidelity | optimize | sweep | verify
  std::string sweep_kind;
  std::optional<NoiseSpec> noise;
  std::optional<double> q0;
  std::optional<MeasurementSpec> measurement;
  PureQubit input{0.0, 0.0};
  std::optional<std::string> out_path;
  std::string format = "csv";
  std::uint64_t seed = 42;
  std::size_t draws = 1000;
  std::size_t resolution = 181;
  std::size_t grid_density = 65;
  std::vector<double> q0_samples;
  std::vector<double> p_samples;
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_fidelity(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace cst::cli

#endif  // CST_TOOLS_CLI_HPP
