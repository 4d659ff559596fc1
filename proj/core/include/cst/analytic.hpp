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

#ifndef CST_ANALYTIC_HPP
#define CST_ANALYTIC_HPP

#include "cst/model.hpp"
#include "cst/qmath.hpp"

namespace cst {

/// Below this post-selection probability the normalized fidelity is undefined.
inline constexpr double kNullProbability = 1e-12;

/// f_un = Tr(out rho), prob = Tr(out), fidelity = f_un / prob.
struct TeleportResult {
  double f_un = 0.0;
  double prob = 0.0;
  double fidelity = 0.0;
};

/// Coefficients of the two orderings in the post-selected switch output:
/// direct  = 1/2 + (q0 - 1/2) cos(theta)        weights sigma_i sigma_j rho sigma_j sigma_i
/// cross   = sqrt(q0 q1) sin(theta) cos(phi)    weights sigma_i sigma_j rho sigma_i sigma_j
struct SwitchWeights {
  double direct = 0.0;
  double cross = 0.0;
};

SwitchWeights switch_weights(const ControlSpec& c, const MeasurementSpec& m);

/// Unnormalized post-selected output
///   sum_{i,j} p_i p_j (direct * s_i s_j rho s_j s_i + cross * s_i s_j rho s_i s_j)
/// by explicit 2x2 products. rho must be Hermitian with unit trace (1e-10).
CMatrix unnormalized_output(const NoiseSpec& n, const SwitchWeights& w, const CMatrix& rho);

/// The four noise-weighted trace sums that f_un and prob are linear in:
///   f_un = direct * fid_direct + cross * fid_cross
///   prob = direct * prob_direct + cross * prob_cross
/// They depend only on the noise and the input state, so one instance serves a
/// whole sweep over control weights and measurement angles.
struct TraceSums {
  double fid_direct = 0.0;
  double fid_cross = 0.0;
  double prob_direct = 0.0;
  double prob_cross = 0.0;
};

TraceSums trace_sums(const NoiseSpec& n, const CMatrix& rho);

/// Combines trace sums with switch weights. Never throws; fidelity is left at
/// zero when prob < kNullProbability, so callers must check prob first.
TeleportResult combine(const TraceSums& t, const SwitchWeights& w) noexcept;

/// Closed-form result. Throws NullProbability when prob < kNullProbability.
TeleportResult evaluate(const NoiseSpec& n, const ControlSpec& c, const MeasurementSpec& m,
                        const PureQubit& s);

/// Direct evaluation of Tr(s_i s_j rho s_j s_i) and Tr(s_i s_j rho s_i s_j).
Complex trace_reversed_order(std::size_t i, std::size_t j, const CMatrix& rho);
Complex trace_same_order(std::size_t i, std::size_t j, const CMatrix& rho);

}  // namespace cst

#endif  // CST_ANALYTIC_HPP
