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

#ifndef CST_EXPERIMENTS_HPP
#define CST_EXPERIMENTS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cst/model.hpp"
#include "cst/optimizer.hpp"

namespace cst {

struct Axis {
  std::string name;
  std::vector<double> samples;
};

/// Values over the Cartesian product of the axes, row-major (last axis fastest).
/// A missing value marks a null-probability cell. `prob`, when non-empty, has
/// the same layout as `values`.
struct SweepGrid {
  std::vector<Axis> axes;
  std::string value_name;
  std::vector<std::optional<double>> values;
  std::vector<std::optional<double>> prob;

  std::size_t cell_count() const noexcept;
  /// Sample of every axis at a flat row-major index.
  std::vector<double> coordinates(std::size_t flat) const;
  /// Throws InvalidArgument on size mismatch or non-increasing axes.
  void validate() const;
};

struct SweepOptions {
  std::size_t threads = 1;
  OptimizerConfig optimizer{};
};

/// Uniform samples of [lo, hi] (inclusive) or [lo, hi) when `include_hi` is false.
std::vector<double> linspace(double lo, double hi, std::size_t count, bool include_hi = true);

/// theta: `resolution` samples of [0, pi]; phi: 2 * (resolution - 1) samples of [-pi, pi).
/// Fidelity per cell plus the probability channel; prob < 1e-9 cells are null.
SweepGrid contour_theta_phi(const NoiseSpec& n, const ControlSpec& c, const PureQubit& s,
                            std::size_t resolution = 181, const SweepOptions& opts = {});

/// theta_star per q0 sample (value), p_star in the probability channel.
SweepGrid optimal_theta_curve(const NoiseSpec& n, const PureQubit& s,
                              const std::vector<double>& q0_samples,
                              const SweepOptions& opts = {});

struct SurfacePair {
  SweepGrid f_star;
  SweepGrid theta_star;
};

/// Optimizer results over isotropic p (first axis) and q0 (second axis).
SurfacePair surface_p_q0(const PureQubit& s, const std::vector<double>& p_samples,
                         const std::vector<double>& q0_samples, const SweepOptions& opts = {});

/// 0.05, 0.10, ..., 0.95.
std::vector<double> default_q0_samples();
/// 21 samples on [0, 1/3].
std::vector<double> default_p_samples();

/// Default input (theta0 = pi/3, phi0 = pi/4): asymmetric on purpose.
PureQubit default_input();

}  // namespace cst

#endif  // CST_EXPERIMENTS_HPP
