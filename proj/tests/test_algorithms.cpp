// Copyright 2026 The densim developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "densim/algorithms.hpp"
#include "densim/analysis.hpp"
#include "densim/states.hpp"
#include "oracles.hpp"

using namespace densim;

TEST_SUITE_BEGIN("algorithms");

TEST_CASE("dft equals the transform matrix") {
  CHECK(max_abs_diff(dft(1).matrix(), hadamard().matrix()) <= 1e-12);
  for (int n = 1; n <= 6; ++n) {
    CHECK(isunitary(dft(n).matrix()));
    CHECK(max_abs_diff(dft(n).matrix(), qft(n).matrix()) <= 1e-9);
  }
}

TEST_CASE("deutsch classifies all four oracles") {
  // oracles 1-2 are constant, 3-4 injective
  for (int id : {1, 2}) {
    const ProbabilityDistribution d = deutsch(id);
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(d[1] == doctest::Approx(0.0).epsilon(1e-10));
  }
  for (int id : {3, 4}) {
    const ProbabilityDistribution d = deutsch(id);
    CHECK(d[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(d[1] == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK_THROWS_AS(deutsch(0), std::invalid_argument);
  CHECK_THROWS_AS(deutsch(5), std::invalid_argument);
}

TEST_CASE("grover_oracle") {
  const Gate o = grover_oracle({0, 1});
  CHECK(o.matrix().coeff(0, 0) == cxd{-1.0, 0.0});
  CHECK(o.matrix().coeff(1, 1) == cxd{1.0, 0.0});
  CHECK(approx_equal(o.matrix() * o.matrix(), CMatrix::identity(2)));

  const Gate o5 = grover_oracle({5, 3});
  for (Eigen::Index i = 0; i < 8; ++i) {
    const double expected = i == 5 ? -1.0 : 1.0;
    CHECK(o5.matrix().coeff(i, i) == cxd{expected, 0.0});
  }

  CHECK_THROWS_AS(grover_oracle({8, 3}), std::invalid_argument);
}

TEST_CASE("ancilla oracle equals the phase oracle after trace-out") {
  // phase-oracle route on 2 qubits vs the 3-qubit ancilla construction with
  // the ancilla prepared in H|1>
  const OracleSpec spec{2, 2};

  Eigen::VectorXcd direct = Eigen::VectorXcd::Zero(4);
  direct.setConstant(0.5);
  direct = grover_oracle(spec).matrix().dense() * direct;
  const DensityMatrix direct_rho = state(Ket(direct));

  Session s;
  s.newregister(2);
  const RegisterId ancilla = s.newregister(1);
  s.evolve(productgate(pauli(Axis::x), {3}, 3));
  s.evolve(productgate(hadamard(), {1, 2, 3}, 3));
  s.evolve(grover_oracle_ancilla(spec));
  s.clearregister(ancilla);
  CHECK(max_abs_diff(s.getstate().matrix(), direct_rho.matrix()) <= 1e-12);
}

TEST_CASE("grover_diffusion") {
  for (int n = 1; n <= 5; ++n) {
    const Gate d = grover_diffusion(n);
    CHECK(isunitary(d.matrix()));

    // the flat superposition is a +1 eigenvector in this construction
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd flat(dim);
    flat.setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
    const Eigen::VectorXcd mapped = d.matrix().dense() * flat;
    CHECK((mapped - flat).cwiseAbs().maxCoeff() <= 1e-10);
  }

  // inversion about the mean on a random real vector
  std::mt19937 rng(199);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  Eigen::VectorXcd v(8);
  for (Eigen::Index i = 0; i < 8; ++i) v(i) = coeff(rng);
  v.normalize();
  const Eigen::VectorXcd out = grover_diffusion(3).matrix().dense() * v;
  const cxd mean = v.sum() / 8.0;
  for (Eigen::Index i = 0; i < 8; ++i) {
    CHECK(std::abs(out(i) - (2.0 * mean - v(i))) <= 1e-10);
  }
}

TEST_CASE("noiseless grover matches the state-vector reference") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t marked = (std::uint64_t{1} << n) - 1;
    Session s;
    const ProbabilityDistribution d = grover({marked, n}, std::nullopt, s);
    const std::vector<double> ref = densim::testing::grover_statevector(n, marked);
    REQUIRE(d.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(d[i] == doctest::Approx(ref[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("grover n=3 anchor") {
  Session s;
  const ProbabilityDistribution d = grover({5, 3}, std::nullopt, s);
  CHECK(d[5] == doctest::Approx(0.9453125).epsilon(1e-9));
  for (std::size_t i = 0; i < 8; ++i) {
    if (i != 5) CHECK(d[i] == doctest::Approx(0.0078125).epsilon(1e-9));
  }
}

TEST_CASE("grover n=1 runs one iteration and lands at one half") {
  Session s;
  const ProbabilityDistribution d = grover({0, 1}, std::nullopt, s);
  const std::vector<double> ref = densim::testing::grover_statevector(1, 0);
  CHECK(d[0] == doctest::Approx(ref[0]).epsilon(1e-12));
  CHECK(ref[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("grover success probability is symmetric in the marked element") {
  for (std::uint64_t marked = 0; marked < 8; ++marked) {
    Session s;
    const ProbabilityDistribution d = grover({marked, 3}, std::nullopt, s);
    CHECK(d[static_cast<std::size_t>(marked)] ==
          doctest::Approx(0.9453125).epsilon(1e-9));
  }
}

TEST_CASE("grover with full depolarizing noise is uniform") {
  for (int n : {2, 3}) {
    Session s;
    const ProbabilityDistribution d =
        grover({1, n}, NoiseSpec{ChannelKind::depolarizing, 1.0}, s);
    const double uniform = 1.0 / static_cast<double>(std::uint64_t{1} << n);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d[i] == doctest::Approx(uniform).epsilon(1e-9));
    }
  }
}

TEST_CASE("every channel at p=0 reproduces the noiseless run") {
  Session clean;
  const ProbabilityDistribution base = grover({3, 3}, std::nullopt, clean);
  for (ChannelKind kind :
       {ChannelKind::depolarizing, ChannelKind::amplitudedamping,
        ChannelKind::phasedamping, ChannelKind::bitflip, ChannelKind::phaseflip,
        ChannelKind::bitphaseflip}) {
    Session s;
    const ProbabilityDistribution noisy = grover({3, 3}, NoiseSpec{kind, 0.0}, s);
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(std::abs(noisy[i] - base[i]) <= 1e-12);
    }
  }
}

TEST_CASE("grover rejects bad input") {
  Session s;
  CHECK_THROWS_AS(grover({4, 2}, std::nullopt, s), std::invalid_argument);
  s.newregister(1);
  CHECK_THROWS_AS(grover({0, 2}, std::nullopt, s), std::invalid_argument);
}

TEST_CASE("grover_prediction") {
  const GroverPrediction p3 = grover_prediction(3);
  CHECK(p3.num_states == 8);
  CHECK(p3.iterations == 2);
  CHECK(p3.beta_k * p3.beta_k == doctest::Approx(0.9453125).epsilon(1e-9));

  for (int n = 1; n <= 6; ++n) {
    const GroverPrediction p = grover_prediction(n);
    CHECK(std::sin(p.theta) ==
          doctest::Approx(1.0 / std::sqrt(static_cast<double>(p.num_states)))
              .epsilon(1e-12));
    CHECK(p.iterations ==
          static_cast<int>(std::floor(M_PI / 4.0 *
                                      std::sqrt(static_cast<double>(p.num_states)))));
    const double norm = (static_cast<double>(p.num_states) - 1.0) * p.alpha_k *
                            p.alpha_k +
                        p.beta_k * p.beta_k;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("prediction matches simulation") {
  for (int n = 2; n <= 5; ++n) {
    const GroverPrediction p = grover_prediction(n);
    Session s;
    const ProbabilityDistribution d = grover({0, n}, std::nullopt, s);
    CHECK(d[0] == doctest::Approx(p.beta_k * p.beta_k).epsilon(1e-9));
    CHECK(d[1] == doctest::Approx(p.alpha_k * p.alpha_k).epsilon(1e-9));
  }
}

TEST_SUITE_END();
