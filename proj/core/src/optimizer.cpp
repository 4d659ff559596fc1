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

#include "cst/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cst/error.hpp"

namespace cst {
namespace {

constexpr double kTieTolerance = 1e-12;
// A refinement step must beat the incumbent by more than rounding noise of a
// value near one, otherwise plateaus would drift away from the tie-break point.
constexpr double kImprovement = 4 * std::numeric_limits<double>::epsilon();

struct Candidate {
  double theta = 0.0;
  double phi = 0.0;
  double fidelity = -std::numeric_limits<double>::infinity();
};

double phi_key(double phi) { return phi >= 0.0 ? phi : phi + 2.0 * std::numbers::pi; }

bool preferred(const Candidate& a, const Candidate& b) {
  if (a.fidelity > b.fidelity + kTieTolerance) return true;
  if (a.fidelity < b.fidelity - kTieTolerance) return false;
  if (a.theta != b.theta) return a.theta < b.theta;
  return phi_key(a.phi) < phi_key(b.phi);
}

class Objective {
 public:
  Objective(const NoiseSpec& n, const ControlSpec& c, const PureQubit& s)
      : sums_(trace_sums(n, input_density(s))), q0_(c.q0()), root_q0q1_(std::sqrt(c.q0() * c.q1())) {}

  // Fidelity, or -inf when the post-selection probability is below the floor.
  double operator()(double theta, double phi) const {
    const SwitchWeights w{
        .direct = 0.5 + (q0_ - 0.5) * std::cos(theta),
        .cross = root_q0q1_ * std::sin(theta) * std::cos(phi),
    };
    const TeleportResult r = combine(sums_, w);
    if (r.prob < kCandidateProbabilityFloor) return -std::numeric_limits<double>::infinity();
    return r.fidelity;
  }

 private:
  TraceSums sums_;
  double q0_;
  double root_q0q1_;
};

// Golden-section maximization of f on [lo, hi]; returns the abscissa.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol, std::size_t& iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    ++iterations;
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace

OptimumReport optimize_measurement(const NoiseSpec& n, const ControlSpec& c, const PureQubit& s,
                                   const OptimizerConfig& cfg) {
  if (cfg.grid_density < 32) throw InvalidArgument("optimize_measurement: grid density must be at least 32");
  if (!(cfg.tolerance > 0.0) || !(cfg.line_tolerance > 0.0)) {
    throw InvalidArgument("optimize_measurement: tolerances must be positive");
  }

  const Objective objective(n, c, s);
  const std::size_t n_theta = cfg.grid_density;
  const std::size_t n_phi = 2 * (cfg.grid_density - 1);
  const double theta_step = std::numbers::pi / static_cast<double>(n_theta - 1);
  const double phi_step = 2.0 * std::numbers::pi / static_cast<double>(n_phi);

  Candidate best;
  bool found = false;
  for (std::size_t k = 0; k < n_theta; ++k) {
    const double theta = k + 1 == n_theta ? std::numbers::pi : static_cast<double>(k) * theta_step;
    for (std::size_t l = 0; l < n_phi; ++l) {
      const double phi = -std::numbers::pi + static_cast<double>(l) * phi_step;
      const Candidate cand{theta, phi, objective(theta, phi)};
      if (!std::isfinite(cand.fidelity)) continue;
      if (!found || preferred(cand, best)) best = cand;
      found = true;
    }
  }
  if (!found) throw AllPointsNull("optimize_measurement: every grid point has null success probability");

  OptimumReport report;
  report.grid_points = n_theta * n_phi;

  for (std::size_t sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    const double before = best.fidelity;

    const double theta_lo = std::max(0.0, best.theta - theta_step);
    const double theta_hi = std::min(std::numbers::pi, best.theta + theta_step);
    const double phi_now = best.phi;
    const double theta_new = golden_max([&](double t) { return objective(t, phi_now); }, theta_lo, theta_hi,
                                        cfg.line_tolerance, report.refinement_iterations);
    if (const double f = objective(theta_new, best.phi); f > best.fidelity + kImprovement) {
      best.theta = theta_new;
      best.fidelity = f;
    }

    const double theta_now = best.theta;
    const double phi_new = golden_max([&](double p) { return objective(theta_now, p); }, best.phi - phi_step,
                                      best.phi + phi_step, cfg.line_tolerance, report.refinement_iterations);
    if (const double f = objective(best.theta, phi_new); f > best.fidelity + kImprovement) {
      best.phi = canonical_phase(phi_new);
      best.fidelity = f;
    }

    if (std::abs(best.fidelity - before) < cfg.tolerance) break;
  }

  const MeasurementSpec m(best.theta, best.phi);
  const TeleportResult at_best = evaluate(n, c, m, s);
  report.theta_star = m.theta();
  report.phi_star = m.phi();
  report.f_star = at_best.fidelity;
  report.p_star = at_best.prob;
  return report;
}

ClosedFormCandidate closed_form_candidate(const ControlSpec& c) {
  const double theta = std::acos(std::clamp(1.0 - 2.0 * c.q0(), -1.0, 1.0));
  return {MeasurementSpec(theta, 0.0), c.q0() == 0.0 || c.q0() == 1.0};
}

}  // namespace cst
