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

#ifndef CST_MODEL_HPP
#define CST_MODEL_HPP

#include <array>
#include <cstddef>

#include "cst/qmath.hpp"

namespace cst {

/// Pauli mixture probabilities (p0, p1, p2, p3) of one teleportation channel.
/// Components are non-negative and sum to one within 1e-12.
class NoiseSpec {
 public:
  NoiseSpec(double p0, double p1, double p2, double p3);

  /// Isotropic channel (1 - 3p, p, p, p), p in [0, 1/3].
  static NoiseSpec from_p(double p);

  double p(std::size_t i) const { return probs_.at(i); }
  const std::array<double, 4>& probs() const noexcept { return probs_; }
  bool is_isotropic(double tol = 1e-12) const noexcept;

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;

 private:
  std::array<double, 4> probs_;
};

/// Weight q0 of the |0> branch of the causal-order control. q1 = 1 - q0.
class ControlSpec {
 public:
  explicit ControlSpec(double q0);

  double q0() const noexcept { return q0_; }
  double q1() const noexcept { return 1.0 - q0_; }

  friend bool operator==(const ControlSpec&, const ControlSpec&) = default;

 private:
  double q0_;
};

/// Bloch angles of the post-selection ket on the control.
/// theta in [0, pi]; phi is canonicalized into [-pi, pi).
class MeasurementSpec {
 public:
  MeasurementSpec(double theta, double phi);

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  friend bool operator==(const MeasurementSpec&, const MeasurementSpec&) = default;

 private:
  double theta_;
  double phi_;
};

/// Bloch angles of the teleported pure input state.
class PureQubit {
 public:
  PureQubit(double theta0, double phi0);

  double theta0() const noexcept { return theta0_; }
  double phi0() const noexcept { return phi0_; }

  friend bool operator==(const PureQubit&, const PureQubit&) = default;

 private:
  double theta0_;
  double phi0_;
};

/// Maps any finite angle into [-pi, pi).
double canonical_phase(double phi);

/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
const CMatrix& pauli(std::size_t i);

/// (|0 j> + (-1)^i |1, j xor 1>) / sqrt(2) as a unit 4-vector, i, j in {0, 1}.
CMatrix bell_state(std::size_t i, std::size_t j);

/// Rank-1 projector onto sqrt(q0)|0> + sqrt(q1)|1>.
CMatrix control_density(const ControlSpec& c);

/// cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>.
CMatrix measurement_ket(const MeasurementSpec& m);

/// sin(theta/2)|0> - cos(theta/2) e^{i phi}|1>, the exact orthogonal partner of
/// measurement_ket(m).
CMatrix measurement_ket_orthogonal(const MeasurementSpec& m);

/// sin(theta/2)|0> - cos(theta/2) e^{-i phi}|1>. Audit helper: it is
/// orthogonal to measurement_ket(m) just when sin(2 phi) sin(theta) == 0.
CMatrix measurement_ket_orthogonal_conjugate_phase(const MeasurementSpec& m);

/// (pi - theta, phi + pi): its measurement ket equals measurement_ket_orthogonal(m).
MeasurementSpec antipodal(const MeasurementSpec& m);

/// cos(theta0/2)|0> + sin(theta0/2) e^{i phi0}|1>.
CMatrix input_ket(const PureQubit& s);
CMatrix input_density(const PureQubit& s);

}  // namespace cst

#endif  // CST_MODEL_HPP
