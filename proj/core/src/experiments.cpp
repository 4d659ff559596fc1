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

#include "cst/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cst/analytic.hpp"
#include "cst/error.hpp"
#include "cst/parallel.hpp"

namespace cst {
namespace {

void require_open_unit(const std::vector<double>& q0_samples) {
  for (double q0 : q0_samples) {
    if (!(q0 > 0.0 && q0 < 1.0)) throw InvalidArgument("q0 samples must lie in (0, 1), got " + std::to_string(q0));
  }
}

}  // namespace

std::size_t SweepGrid::cell_count() const noexcept {
  std::size_t n = axes.empty() ? 0 : 1;
  for (const auto& a : axes) n *= a.samples.size();
  return n;
}

std::vector<double> SweepGrid::coordinates(std::size_t flat) const {
  std::vector<double> out(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    const std::size_t len = axes[k].samples.size();
    out[k] = axes[k].samples[flat % len];
    flat /= len;
  }
  return out;
}

void SweepGrid::validate() const {
  if (axes.empty()) throw InvalidArgument("SweepGrid: no axes");
  for (const auto& a : axes) {
    if (a.samples.empty()) throw InvalidArgument("SweepGrid: axis '" + a.name + "' is empty");
    for (std::size_t i = 1; i < a.samples.size(); ++i) {
      if (!(a.samples[i] > a.samples[i - 1])) {
        throw InvalidArgument("SweepGrid: axis '" + a.name + "' is not strictly increasing");
      }
    }
  }
  if (values.size() != cell_count()) throw InvalidArgument("SweepGrid: value count does not match axes");
  if (!prob.empty() && prob.size() != values.size()) {
    throw InvalidArgument("SweepGrid: probability channel does not match axes");
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t count, bool include_hi) {
  std::vector<double> out(count);
  if (count == 0) return out;
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double divisions = static_cast<double>(include_hi ? count - 1 : count);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / divisions;
  if (include_hi) out.back() = hi;
  return out;
}

SweepGrid contour_theta_phi(const NoiseSpec& n, const ControlSpec& c, const PureQubit& s, std::size_t resolution,
                            const SweepOptions& opts) {
  if (resolution < 32) throw InvalidArgument("contour_theta_phi: resolution must be at least 32");
  SweepGrid grid;
  grid.axes = {{"theta", linspace(0.0, std::numbers::pi, resolution)},
               {"phi", linspace(-std::numbers::pi, std::numbers::pi, 2 * (resolution - 1), false)}};
  grid.value_name = "fidelity";
  grid.values.resize(grid.cell_count());
  grid.prob.resize(grid.cell_count());

  const TraceSums sums = trace_sums(n, input_density(s));
  const auto& thetas = grid.axes[0].samples;
  parallel_for(thetas.size(), opts.threads, [&](std::size_t row) {
    const auto& phis = grid.axes[1].samples;
    for (std::size_t col = 0; col < phis.size(); ++col) {
      const TeleportResult r = combine(sums, switch_weights(c, MeasurementSpec(thetas[row], phis[col])));
      const std::size_t flat = row * phis.size() + col;
      grid.prob[flat] = r.prob;
      if (r.prob >= kCandidateProbabilityFloor) grid.values[flat] = r.fidelity;
    }
  });
  return grid;
}

SweepGrid optimal_theta_curve(const NoiseSpec& n, const PureQubit& s, const std::vector<double>& q0_samples,
                              const SweepOptions& opts) {
  require_open_unit(q0_samples);
  SweepGrid grid;
  grid.axes = {{"q0", q0_samples}};
  grid.value_name = "theta_star";
  grid.values.resize(q0_samples.size());
  grid.prob.resize(q0_samples.size());
  grid.validate();
  parallel_for(q0_samples.size(), opts.threads, [&](std::size_t i) {
    const OptimumReport r = optimize_measurement(n, ControlSpec(q0_samples[i]), s, opts.optimizer);
    grid.values[i] = r.theta_star;
    grid.prob[i] = r.p_star;
  });
  return grid;
}

SurfacePair surface_p_q0(const PureQubit& s, const std::vector<double>& p_samples,
                         const std::vector<double>& q0_samples, const SweepOptions& opts) {
  require_open_unit(q0_samples);
  SurfacePair out;
  out.f_star.axes = {{"p", p_samples}, {"q0", q0_samples}};
  out.f_star.value_name = "f_star";
  out.f_star.values.resize(out.f_star.cell_count());
  out.f_star.prob.resize(out.f_star.cell_count());
  out.f_star.validate();
  std::vector<NoiseSpec> noises;
  noises.reserve(p_samples.size());
  for (double p : p_samples) noises.push_back(NoiseSpec::from_p(p));

  out.theta_star.axes = out.f_star.axes;
  out.theta_star.value_name = "theta_star";
  out.theta_star.values.resize(out.f_star.cell_count());

  parallel_for(out.f_star.cell_count(), opts.threads, [&](std::size_t flat) {
    const std::size_t row = flat / q0_samples.size();
    const std::size_t col = flat % q0_samples.size();
    const OptimumReport r = optimize_measurement(noises[row], ControlSpec(q0_samples[col]), s, opts.optimizer);
    out.f_star.values[flat] = r.f_star;
    out.f_star.prob[flat] = r.p_star;
    out.theta_star.values[flat] = r.theta_star;
  });
  return out;
}

std::vector<double> default_q0_samples() {
  std::vector<double> out(19);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(i + 1) / 20.0;
  return out;
}

std::vector<double> default_p_samples() { return linspace(0.0, 1.0 / 3.0, 21); }

PureQubit default_input() { return PureQubit(std::numbers::pi / 3.0, std::numbers::pi / 4.0); }

}  // namespace cst
