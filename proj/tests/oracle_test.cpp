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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cst/analytic.hpp"
#include "cst/error.hpp"
#include "test_util.hpp"

using namespace cst;
using std::numbers::pi;

TEST(oracle, kraus_from_noise) {
  const auto noiseless = oracle::kraus_from_noise(NoiseSpec(1, 0, 0, 0));
  ASSERT_EQ(noiseless.operators.size(), 4u);
  EXPECT_EQ(noiseless.operators[0], CMatrix::identity(2));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(noiseless.operators[i], CMatrix(2, 2));

  const auto worst = oracle::kraus_from_noise(NoiseSpec::from_p(1.0 / 3.0));
  EXPECT_TRUE(approx_equal(worst.operators[0], CMatrix(2, 2), 1e-15));
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_TRUE(approx_equal(worst.operators[i], (1 / std::sqrt(3.0)) * pauli(i), 1e-15));
  }
}

TEST(oracle, property_kraus_completeness) {
  test_support::Draws draws(30);
  for (int i = 0; i < 200; ++i) {
    const NoiseSpec n = draws.noise();
    EXPECT_TRUE(approx_equal(oracle::completeness(oracle::kraus_from_noise(n)), CMatrix::identity(2), 1e-10));
    EXPECT_TRUE(approx_equal(oracle::completeness(oracle::switch_kraus(n)), CMatrix::identity(4), 1e-10));
  }
}

TEST(oracle, single_channel) {
  const CMatrix rho = input_density(PureQubit(0.7, -0.4));
  EXPECT_TRUE(approx_equal(oracle::single_channel(NoiseSpec(1, 0, 0, 0), rho), rho, 1e-15));
  const CMatrix ground{{1, 0}, {0, 0}};
  EXPECT_TRUE(approx_equal(oracle::single_channel(NoiseSpec(0, 1, 0, 0), ground), CMatrix{{0, 0}, {0, 1}}, 1e-15));
  // X and Y each flip |0> to |1>, Z leaves it.
  EXPECT_TRUE(approx_equal(oracle::single_channel(NoiseSpec::from_p(1.0 / 3.0), ground),
                           CMatrix{{1.0 / 3, 0}, {0, 2.0 / 3}}, 1e-15));
  EXPECT_THROW(oracle::single_channel(NoiseSpec(1, 0, 0, 0), CMatrix{{1, 0}, {0, 1}}), InvalidArgument);
}

TEST(oracle, phase_of_y_does_not_change_conjugation) {
  const CMatrix iy = Complex(0, 1) * pauli(2);
  test_support::Draws draws(31);
  for (int i = 0; i < 50; ++i) {
    const CMatrix rho = input_density(draws.input());
    EXPECT_TRUE(approx_equal(matmul(matmul(iy, rho), dagger(iy)), matmul(matmul(pauli(2), rho), pauli(2)), 1e-15));
  }
}

TEST(oracle, switch_kraus_noiseless) {
  const auto w = oracle::switch_kraus(NoiseSpec(1, 0, 0, 0));
  ASSERT_EQ(w.operators.size(), 16u);
  EXPECT_EQ(w.operators[0], CMatrix::identity(4));
  for (std::size_t k = 1; k < 16; ++k) EXPECT_EQ(w.operators[k], CMatrix(4, 4));
}

TEST(oracle, property_switch_reproduces_closed_form_output) {
  test_support::Draws draws(32);
  for (int i = 0; i < 500; ++i) {
    const NoiseSpec n = draws.noise();
    const ControlSpec c = draws.control();
    const MeasurementSpec m = draws.measurement();
    const PureQubit s = draws.input();
    const CMatrix brute = oracle::post_selected_state(n, c, measurement_ket(m), s);
    const CMatrix closed = unnormalized_output(n, switch_weights(c, m), input_density(s));
    EXPECT_LT(max_abs_diff(brute, closed), 1e-12);
  }
}

TEST(oracle, simulate_worst_case_plus) {
  test_support::Draws draws(33);
  for (int i = 0; i < 20; ++i) {
    const TeleportResult r =
        oracle::simulate(NoiseSpec::from_p(1.0 / 3.0), ControlSpec(0.5), MeasurementSpec(pi / 2, 0), draws.input());
    EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
    EXPECT_NEAR(r.prob, 1.0 / 3.0, 1e-12);
  }
}

TEST(oracle, simulate_noiseless_is_perfect) {
  test_support::Draws draws(34);
  for (int i = 0; i < 200; ++i) {
    try {
      const TeleportResult r =
          oracle::simulate(NoiseSpec(1, 0, 0, 0), draws.control(), draws.measurement(), draws.input());
      EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
    } catch (const NullProbability&) {
    }
  }
}

TEST(oracle, simulate_sixth_noise_quarter_control) {
  const TeleportResult r = oracle::simulate(NoiseSpec::from_p(1.0 / 6.0), ControlSpec(0.25),
                                            MeasurementSpec(pi / 3, 0), PureQubit(pi / 3, pi / 4));
  EXPECT_NEAR(r.fidelity, 0.60, 1e-12);
  // Frozen from an independent brute-force switch simulation.
  EXPECT_NEAR(r.prob, 0.625, 1e-12);
}

TEST(oracle, simulate_orthogonal_frozen) {
  // Frozen from an independent brute-force switch simulation.
  const TeleportResult r = oracle::simulate_orthogonal(NoiseSpec(0.4, 0.3, 0.2, 0.1), ControlSpec(0.3),
                                                       MeasurementSpec(1.0, 0.7), PureQubit(0.9, -1.2));
  EXPECT_NEAR(r.f_un, 0.2100376673886003, 1e-12);
  EXPECT_NEAR(r.prob, 0.44289902349219046, 1e-12);
  EXPECT_NEAR(r.fidelity, 0.47423375588522571, 1e-12);
}

TEST(oracle, orthogonal_branch_complements) {
  const TeleportResult worst = oracle::simulate_orthogonal(NoiseSpec::from_p(1.0 / 3.0), ControlSpec(0.5),
                                                           MeasurementSpec(pi / 2, 0), PureQubit(1.0, 1.0));
  EXPECT_NEAR(worst.prob, 2.0 / 3.0, 1e-12);

  const TeleportResult noiseless = oracle::simulate_orthogonal(NoiseSpec(1, 0, 0, 0), ControlSpec(0.35),
                                                               MeasurementSpec(0, 0), PureQubit(2.0, -1.0));
  EXPECT_NEAR(noiseless.prob, 0.65, 1e-12);
}

TEST(oracle, property_branch_probabilities_sum_to_one) {
  test_support::Draws draws(35);
  for (int i = 0; i < 1000; ++i) {
    const NoiseSpec n = draws.noise();
    const ControlSpec c = draws.control();
    const MeasurementSpec m = draws.measurement();
    const PureQubit s = draws.input();
    const CMatrix kept = oracle::post_selected_state(n, c, measurement_ket(m), s);
    const CMatrix other = oracle::post_selected_state(n, c, measurement_ket_orthogonal(m), s);
    EXPECT_NEAR(std::real(trace(kept)) + std::real(trace(other)), 1.0, 1e-10);
  }
}

TEST(oracle, property_trace_preservation_and_positivity) {
  test_support::Draws draws(36);
  for (int i = 0; i < 500; ++i) {
    const NoiseSpec n = draws.noise();
    const ControlSpec c = draws.control();
    const MeasurementSpec m = draws.measurement();
    const PureQubit s = draws.input();
    const CMatrix full = oracle::switch_output(oracle::switch_kraus(n), input_density(s), control_density(c));
    EXPECT_NEAR(std::abs(trace(full) - 1.0), 0.0, 1e-10);

    const CMatrix kept = inner_project_control(full, measurement_ket(m));
    EXPECT_GE(min_eigenvalue_2x2(kept), -1e-10);

    // Both outcomes together recover the control-traced state.
    const CMatrix other = inner_project_control(full, measurement_ket_orthogonal(m));
    EXPECT_LT(max_abs_diff(kept + other, partial_trace_control(full)), 1e-10);
  }
}

TEST(oracle, property_two_identical_channels_reduce_to_shared_noise) {
  test_support::Draws draws(37);
  for (int i = 0; i < 200; ++i) {
    const NoiseSpec n = draws.noise();
    const ControlSpec c = draws.control();
    const MeasurementSpec m = draws.measurement();
    const PureQubit s = draws.input();
    const TeleportResult shared = oracle::simulate(n, c, m, s);
    const TeleportResult pair = oracle::simulate(n, n, c, m, s);
    EXPECT_NEAR(shared.f_un, pair.f_un, 1e-12);
    EXPECT_NEAR(shared.prob, pair.prob, 1e-12);
  }
}

TEST(oracle, property_two_channel_switch_is_complete) {
  test_support::Draws draws(38);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(approx_equal(oracle::completeness(oracle::switch_kraus(draws.noise(), draws.noise())),
                             CMatrix::identity(4), 1e-10));
  }
}

TEST(oracle, property_equivalence_with_closed_form) {
  test_support::Draws draws(39);
  for (int i = 0; i < 1000; ++i) {
    const NoiseSpec n = draws.noise();
    const ControlSpec c = draws.control();
    const MeasurementSpec m = draws.measurement();
    const PureQubit s = draws.input();
    const TeleportResult a = evaluate(n, c, m, s);
    const TeleportResult b = oracle::simulate(n, c, m, s);
    EXPECT_NEAR(a.f_un, b.f_un, 1e-10);
    EXPECT_NEAR(a.prob, b.prob, 1e-10);
    EXPECT_NEAR(a.fidelity, b.fidelity, 1e-10);
  }
}

TEST(oracle, degenerate_control_kills_cross_term) {
  test_support::Draws draws(40);
  for (double q0 : {0.0, 1.0}) {
    for (int i = 0; i < 100; ++i) {
      const NoiseSpec n = draws.noise();
      const MeasurementSpec m = draws.measurement();
      const PureQubit s = draws.input();
      EXPECT_EQ(switch_weights(ControlSpec(q0), m).cross, 0.0);
      const CMatrix brute = oracle::post_selected_state(n, ControlSpec(q0), measurement_ket(m), s);
      const CMatrix closed = unnormalized_output(n, switch_weights(ControlSpec(q0), m), input_density(s));
      EXPECT_LT(max_abs_diff(brute, closed), 1e-12);
    }
  }
}
