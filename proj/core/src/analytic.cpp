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

#include "cst/analytic.hpp"

#include <cmath>
#include <string>

#include "cst/error.hpp"

namespace cst {
namespace {

void require_density(const CMatrix& rho, const char* op) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError(std::string(op) + ": rho must be 2x2");
  if (!is_hermitian(rho, kDefaultTolerance)) throw InvalidArgument(std::string(op) + ": rho is not Hermitian");
  if (std::abs(trace(rho) - Complex(1.0)) > kDefaultTolerance) {
    throw InvalidArgument(std::string(op) + ": rho does not have unit trace");
  }
}

// s_i s_j rho s_j s_i
CMatrix reversed_order(std::size_t i, std::size_t j, const CMatrix& rho) {
  return matmul(matmul(matmul(matmul(pauli(i), pauli(j)), rho), pauli(j)), pauli(i));
}

// s_i s_j rho s_i s_j
CMatrix same_order(std::size_t i, std::size_t j, const CMatrix& rho) {
  return matmul(matmul(matmul(matmul(pauli(i), pauli(j)), rho), pauli(i)), pauli(j));
}

}  // namespace

SwitchWeights switch_weights(const ControlSpec& c, const MeasurementSpec& m) {
  return {
      .direct = 0.5 + (c.q0() - 0.5) * std::cos(m.theta()),
      .cross = std::sqrt(c.q0() * c.q1()) * std::sin(m.theta()) * std::cos(m.phi()),
  };
}

CMatrix unnormalized_output(const NoiseSpec& n, const SwitchWeights& w, const CMatrix& rho) {
  require_density(rho, "unnormalized_output");
  CMatrix out(2, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double pij = n.p(i) * n.p(j);
      if (pij == 0.0) continue;
      out = out + (pij * w.direct) * reversed_order(i, j, rho) + (pij * w.cross) * same_order(i, j, rho);
    }
  }
  return out;
}

Complex trace_reversed_order(std::size_t i, std::size_t j, const CMatrix& rho) {
  return trace(reversed_order(i, j, rho));
}

Complex trace_same_order(std::size_t i, std::size_t j, const CMatrix& rho) {
  return trace(same_order(i, j, rho));
}

TraceSums trace_sums(const NoiseSpec& n, const CMatrix& rho) {
  require_density(rho, "trace_sums");
  TraceSums t;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double pij = n.p(i) * n.p(j);
      if (pij == 0.0) continue;
      const CMatrix direct = reversed_order(i, j, rho);
      const CMatrix cross = same_order(i, j, rho);
      t.fid_direct += pij * std::real(trace(matmul(rho, direct)));
      t.fid_cross += pij * std::real(trace(matmul(rho, cross)));
      t.prob_direct += pij * std::real(trace(direct));
      t.prob_cross += pij * std::real(trace(cross));
    }
  }
  return t;
}

TeleportResult combine(const TraceSums& t, const SwitchWeights& w) noexcept {
  TeleportResult r;
  r.f_un = w.direct * t.fid_direct + w.cross * t.fid_cross;
  r.prob = w.direct * t.prob_direct + w.cross * t.prob_cross;
  if (r.prob >= kNullProbability) r.fidelity = r.f_un / r.prob;
  return r;
}

TeleportResult evaluate(const NoiseSpec& n, const ControlSpec& c, const MeasurementSpec& m,
                        const PureQubit& s) {
  const CMatrix rho = input_density(s);
  const CMatrix out = unnormalized_output(n, switch_weights(c, m), rho);
  TeleportResult r;
  r.f_un = std::real(trace(matmul(out, rho)));
  r.prob = std::real(trace(out));
  if (r.prob < kNullProbability) throw NullProbability(r.prob);
  r.fidelity = r.f_un / r.prob;
  return r;
}

}  // namespace cst
