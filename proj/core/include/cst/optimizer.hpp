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

#ifndef CST_OPTIMIZER_HPP
#define CST_OPTIMIZER_HPP

#include <cstddef>

#include "cst/analytic.hpp"
#include "cst/model.hpp"

namespace cst {

/// Candidates whose success probability falls below this are never optima.
inline constexpr double kCandidateProbabilityFloor = 1e-9;

struct OptimizerConfig {
  /// Grid points on theta in [0, pi]; phi gets 2 * (density - 1) points on [-pi, pi).
  std::size_t grid_density = 65;
  /// Stop refining once a full sweep changes the fidelity by less than this.
  double tolerance = 1e-12;
  std::size_t max_sweeps = 3;
  /// Golden-section bracket width at which a line search stops.
  double line_tolerance = 1e-10;
};

struct OptimumReport {
  double theta_star = 0.0;
  double phi_star = 0.0;
  double f_star = 0.0;
  double p_star = 0.0;
  std::size_t grid_points = 0;
  std::size_t refinement_iterations = 0;
};

/// Maximizes normalized fidelity over the measurement angles for fixed noise,
/// control weight and input: a full grid scan, then coordinate-wise golden
/// section refinement. Plateaus resolve to the smallest theta, then the
/// smallest phi taken in [0, 2 pi).
///
/// Throws InvalidArgument for grid_density < 32 and AllPointsNull when no grid
/// point reaches kCandidateProbabilityFloor.
OptimumReport optimize_measurement(const NoiseSpec& n, const ControlSpec& c, const PureQubit& s,
                                   const OptimizerConfig& cfg = {});

struct ClosedFormCandidate {
  MeasurementSpec measurement;
  /// q0 in {0, 1}: the control is a basis state and every theta is equivalent.
  bool degenerate = false;
};

/// theta = arccos(1 - 2 q0), phi = 0: where the two switch weights coincide.
ClosedFormCandidate closed_form_candidate(const ControlSpec& c);

}  // namespace cst

#endif  // CST_OPTIMIZER_HPP
