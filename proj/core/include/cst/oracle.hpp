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

#ifndef CST_ORACLE_HPP
#define CST_ORACLE_HPP

#include <vector>

#include "cst/analytic.hpp"
#include "cst/model.hpp"
#include "cst/qmath.hpp"

// Brute-force reference: the switch is built as explicit Kraus operators on
// system (x) control and the control is projected onto the measurement ket.
// Nothing here shares code with the closed forms in analytic.hpp beyond the
// qmath primitives and the model constructors.
namespace cst::oracle {

/// Operators of a completely positive map; completeness sum K^dag K == I.
struct KrausSet {
  std::vector<CMatrix> operators;
};

/// {sqrt(p_i) sigma_i}, zero-weight operators included.
KrausSet kraus_from_noise(const NoiseSpec& n);

/// Sum K^dag K.
CMatrix completeness(const KrausSet& k);

/// rho -> sum p_i sigma_i rho sigma_i, applied through the Kraus operators.
CMatrix single_channel(const NoiseSpec& n, const CMatrix& rho);

/// 16 operators W_ij = K_i K_j (x) |0><0| + K_j K_i (x) |1><1| for two copies of
/// the same channel.
KrausSet switch_kraus(const NoiseSpec& n);

/// Two distinct channels A (Kraus A_i) and B (Kraus B_j):
/// W_ij = B_j A_i (x) |0><0| + A_i B_j (x) |1><1|, i.e. control |0> runs A then B.
KrausSet switch_kraus(const NoiseSpec& first, const NoiseSpec& second);

/// sum W (rho (x) rho_c) W^dag on system (x) control.
CMatrix switch_output(const KrausSet& w, const CMatrix& rho, const CMatrix& rho_c);

/// Projects the switch output onto measurement_ket(m). Throws NullProbability.
TeleportResult simulate(const NoiseSpec& n, const ControlSpec& c, const MeasurementSpec& m,
                        const PureQubit& s);
TeleportResult simulate(const NoiseSpec& first, const NoiseSpec& second, const ControlSpec& c,
                        const MeasurementSpec& m, const PureQubit& s);

/// Same as simulate but projecting onto measurement_ket_orthogonal(m).
TeleportResult simulate_orthogonal(const NoiseSpec& n, const ControlSpec& c,
                                   const MeasurementSpec& m, const PureQubit& s);

/// Unnormalized 2x2 system state after post-selecting the control on `ket`.
CMatrix post_selected_state(const NoiseSpec& n, const ControlSpec& c, const CMatrix& ket,
                            const PureQubit& s);

/// (f_un, prob, fidelity) of an unnormalized post-selected state; fidelity is
/// only filled when prob >= kNullProbability.
TeleportResult measure(const CMatrix& unnormalized, const CMatrix& rho) noexcept;

}  // namespace cst::oracle

#endif  // CST_ORACLE_HPP
