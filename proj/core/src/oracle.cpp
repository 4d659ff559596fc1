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

#include "cst/oracle.hpp"

#include <cmath>

#include "cst/error.hpp"

namespace cst::oracle {
namespace {

const CMatrix& control_projector(std::size_t k) {
  static const CMatrix projectors[2] = {CMatrix{{1, 0}, {0, 0}}, CMatrix{{0, 0}, {0, 1}}};
  return projectors[k];
}

void require_density(const CMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("oracle: rho must be 2x2");
  if (!is_hermitian(rho) || std::abs(trace(rho) - Complex(1.0)) > kDefaultTolerance) {
    throw InvalidArgument("oracle: rho must be Hermitian with unit trace");
  }
}

CMatrix apply(const KrausSet& k, const CMatrix& state) {
  CMatrix out(state.rows(), state.cols());
  for (const auto& op : k.operators) out = out + matmul(matmul(op, state), dagger(op));
  return out;
}

TeleportResult finish(const CMatrix& unnormalized, const CMatrix& rho) {
  TeleportResult r = measure(unnormalized, rho);
  if (r.prob < kNullProbability) throw NullProbability(r.prob);
  return r;
}

}  // namespace

KrausSet kraus_from_noise(const NoiseSpec& n) {
  KrausSet k;
  k.operators.reserve(4);
  for (std::size_t i = 0; i < 4; ++i) k.operators.push_back(std::sqrt(n.p(i)) * pauli(i));
  return k;
}

CMatrix completeness(const KrausSet& k) {
  if (k.operators.empty()) throw InvalidArgument("completeness: empty Kraus set");
  const std::size_t dim = k.operators.front().cols();
  CMatrix sum(dim, dim);
  for (const auto& op : k.operators) sum = sum + matmul(dagger(op), op);
  return sum;
}

CMatrix single_channel(const NoiseSpec& n, const CMatrix& rho) {
  require_density(rho);
  return apply(kraus_from_noise(n), rho);
}

KrausSet switch_kraus(const NoiseSpec& n) { return switch_kraus(n, n); }

KrausSet switch_kraus(const NoiseSpec& first, const NoiseSpec& second) {
  const KrausSet a = kraus_from_noise(first);
  const KrausSet b = kraus_from_noise(second);
  KrausSet w;
  w.operators.reserve(a.operators.size() * b.operators.size());
  for (const auto& ai : a.operators) {
    for (const auto& bj : b.operators) {
      w.operators.push_back(kron(matmul(bj, ai), control_projector(0)) +
                            kron(matmul(ai, bj), control_projector(1)));
    }
  }
  return w;
}

CMatrix switch_output(const KrausSet& w, const CMatrix& rho, const CMatrix& rho_c) {
  return apply(w, kron(rho, rho_c));
}

TeleportResult measure(const CMatrix& unnormalized, const CMatrix& rho) noexcept {
  TeleportResult r;
  r.f_un = std::real(trace(matmul(unnormalized, rho)));
  r.prob = std::real(trace(unnormalized));
  if (r.prob >= kNullProbability) r.fidelity = r.f_un / r.prob;
  return r;
}

CMatrix post_selected_state(const NoiseSpec& n, const ControlSpec& c, const CMatrix& ket,
                            const PureQubit& s) {
  const CMatrix rho = input_density(s);
  require_density(rho);
  return inner_project_control(switch_output(switch_kraus(n), rho, control_density(c)), ket);
}

TeleportResult simulate(const NoiseSpec& n, const ControlSpec& c, const MeasurementSpec& m,
                        const PureQubit& s) {
  return finish(post_selected_state(n, c, measurement_ket(m), s), input_density(s));
}

TeleportResult simulate(const NoiseSpec& first, const NoiseSpec& second, const ControlSpec& c,
                        const MeasurementSpec& m, const PureQubit& s) {
  const CMatrix rho = input_density(s);
  const CMatrix full = switch_output(switch_kraus(first, second), rho, control_density(c));
  return finish(inner_project_control(full, measurement_ket(m)), rho);
}

TeleportResult simulate_orthogonal(const NoiseSpec& n, const ControlSpec& c,
                                   const MeasurementSpec& m, const PureQubit& s) {
  return finish(post_selected_state(n, c, measurement_ket_orthogonal(m), s), input_density(s));
}

}  // namespace cst::oracle
