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

#include "cst/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cst/error.hpp"

namespace cst {
namespace {

constexpr double kSumTolerance = 1e-12;
constexpr double kAngleSlack = 1e-12;

double checked_polar(double theta, const char* what) {
  if (!std::isfinite(theta) || theta < -kAngleSlack || theta > std::numbers::pi + kAngleSlack) {
    throw InvalidArgument(std::string(what) + " must lie in [0, pi], got " + std::to_string(theta));
  }
  return std::clamp(theta, 0.0, std::numbers::pi);
}

double checked_azimuth(double phi, const char* what) {
  if (!std::isfinite(phi)) throw InvalidArgument(std::string(what) + " must be finite");
  return canonical_phase(phi);
}

CMatrix bloch_ket(double theta, double phi) {
  return CMatrix::ket({std::cos(theta / 2), std::sin(theta / 2) * std::polar(1.0, phi)});
}

}  // namespace

NoiseSpec::NoiseSpec(double p0, double p1, double p2, double p3) : probs_{p0, p1, p2, p3} {
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw InvalidArgument("NoiseSpec: component " + std::to_string(p) + " outside [0, 1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InvalidArgument("NoiseSpec: components sum to " + std::to_string(sum) + ", not 1");
  }
}

NoiseSpec NoiseSpec::from_p(double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0 / 3.0 + kSumTolerance) {
    throw InvalidArgument("NoiseSpec::from_p: p must lie in [0, 1/3], got " + std::to_string(p));
  }
  return NoiseSpec(std::max(0.0, 1.0 - 3.0 * p), p, p, p);
}

bool NoiseSpec::is_isotropic(double tol) const noexcept {
  return std::abs(probs_[1] - probs_[2]) <= tol && std::abs(probs_[2] - probs_[3]) <= tol;
}

ControlSpec::ControlSpec(double q0) : q0_(q0) {
  if (!std::isfinite(q0) || q0 < 0.0 || q0 > 1.0) {
    throw InvalidArgument("ControlSpec: q0 must lie in [0, 1], got " + std::to_string(q0));
  }
}

MeasurementSpec::MeasurementSpec(double theta, double phi)
    : theta_(checked_polar(theta, "measurement theta")), phi_(checked_azimuth(phi, "measurement phi")) {}

PureQubit::PureQubit(double theta0, double phi0)
    : theta0_(checked_polar(theta0, "input theta0")), phi0_(checked_azimuth(phi0, "input phi0")) {}

double canonical_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (phi >= -std::numbers::pi && phi < std::numbers::pi) return phi;
  double r = std::fmod(phi + std::numbers::pi, two_pi);
  if (r < 0.0) r += two_pi;
  r -= std::numbers::pi;
  // fmod can round up onto the excluded endpoint.
  return r >= std::numbers::pi ? -std::numbers::pi : r;
}

const CMatrix& pauli(std::size_t i) {
  static const CMatrix paulis[4] = {
      CMatrix{{1, 0}, {0, 1}},
      CMatrix{{0, 1}, {1, 0}},
      CMatrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}},
      CMatrix{{1, 0}, {0, -1}},
  };
  if (i > 3) throw InvalidArgument("pauli: index " + std::to_string(i) + " outside 0..3");
  return paulis[i];
}

CMatrix bell_state(std::size_t i, std::size_t j) {
  if (i > 1 || j > 1) throw InvalidArgument("bell_state: indices must be 0 or 1");
  const double amp = 1.0 / std::numbers::sqrt2;
  const double sign = i == 0 ? 1.0 : -1.0;
  return amp * CMatrix::basis(4, j) + (sign * amp) * CMatrix::basis(4, 2 + (j ^ 1));
}

CMatrix control_density(const ControlSpec& c) {
  const CMatrix psi = CMatrix::ket({std::sqrt(c.q0()), std::sqrt(c.q1())});
  return outer(psi, psi);
}

CMatrix measurement_ket(const MeasurementSpec& m) { return bloch_ket(m.theta(), m.phi()); }

CMatrix measurement_ket_orthogonal(const MeasurementSpec& m) {
  return CMatrix::ket({std::sin(m.theta() / 2), -std::cos(m.theta() / 2) * std::polar(1.0, m.phi())});
}

CMatrix measurement_ket_orthogonal_conjugate_phase(const MeasurementSpec& m) {
  return CMatrix::ket({std::sin(m.theta() / 2), -std::cos(m.theta() / 2) * std::polar(1.0, -m.phi())});
}

MeasurementSpec antipodal(const MeasurementSpec& m) {
  return MeasurementSpec(std::numbers::pi - m.theta(), m.phi() + std::numbers::pi);
}

CMatrix input_ket(const PureQubit& s) { return bloch_ket(s.theta0(), s.phi0()); }

CMatrix input_density(const PureQubit& s) {
  const CMatrix psi = input_ket(s);
  return outer(psi, psi);
}

}  // namespace cst
