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

#include "densim/algorithms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "densim/qcond.hpp"
#include "densim/states.hpp"

namespace densim {

namespace {

void check_spec(const OracleSpec& spec, const char* what) {
  if (spec.n_qubits < 1 || spec.n_qubits > 20) {
    throw std::invalid_argument(std::string(what) + ": unsupported qubit count " +
                                std::to_string(spec.n_qubits));
  }
  if (spec.marked >= (std::uint64_t{1} << spec.n_qubits)) {
    throw std::invalid_argument(std::string(what) + ": marked element " +
                                std::to_string(spec.marked) + " out of range");
  }
}

}  // namespace

Gate dft(int n) {
  if (n < 1) throw std::invalid_argument("dft: n must be positive");
  Gate cir = identity(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i - 1; ++j) {
      cir = circuit({cir, cphase(std::numbers::pi / (1 << (i - j)), j, i, n)});
    }
    cir = circuit({cir, productgate(hadamard(), QuantumRegister{i}, n)});
  }
  return circuit({cir, flip(n)});
}

ProbabilityDistribution deutsch(int oracle_id, bool sparse) {
  if (oracle_id < 1 || oracle_id > 4) {
    throw std::invalid_argument("deutsch: oracle id must be in 1..4");
  }
  const ScopedBackend guard(sparse ? Backend::sparse : Backend::dense);
  Session session(sparse);
  const RegisterId r1 = session.newregister(1);
  const RegisterId r2 = session.newregister(1);
  const QuantumRegister in = session.qureg(r1);
  const QuantumRegister out = session.qureg(r2);

  Gate oracle = [&] {
    switch (oracle_id) {
      case 1:
        return identity(2);
      case 2:
        return productgate(pauli(Axis::x), out, 2);
      case 3:
        return qif(qrel(Rel::eq, in, 1), {pauli(Axis::x), out},
                   {identity(1), out}, 2);
      default:
        return qif(qrel(Rel::eq, in, 0), {pauli(Axis::x), out},
                   {identity(1), out}, 2);
    }
  }();

  session.evolve(productgate(pauli(Axis::x), out, 2));
  session.evolve(productgate(hadamard(), merge_disjoint(in, out), 2));
  session.evolve(oracle);
  session.evolve(productgate(hadamard(), in, 2));
  session.clearregister(r2);
  return session.measurecompbasis();
}

Gate grover_oracle(const OracleSpec& spec) {
  check_spec(spec, "grover_oracle");
  const Eigen::Index dim = Eigen::Index{1} << spec.n_qubits;
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double sign = static_cast<std::uint64_t>(i) == spec.marked ? -1.0 : 1.0;
    trips.emplace_back(i, i, cxd{sign, 0.0});
  }
  return Gate(CMatrix::from_triplets(dim, dim, trips));
}

Gate grover_oracle_ancilla(const OracleSpec& spec) {
  check_spec(spec, "grover_oracle_ancilla");
  // |x>|q> -> |x>|q XOR f(x)>; the ancilla is the extra least significant qubit.
  const Eigen::Index dim = Eigen::Index{1} << (spec.n_qubits + 1);
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto x = static_cast<std::uint64_t>(i) >> 1;
    const std::uint64_t out =
        x == spec.marked ? static_cast<std::uint64_t>(i) ^ 1u
                         : static_cast<std::uint64_t>(i);
    trips.emplace_back(static_cast<Eigen::Index>(out), i, cxd{1.0, 0.0});
  }
  return Gate(CMatrix::from_triplets(dim, dim, trips));
}

Gate grover_diffusion(int n) {
  if (n < 1) throw std::invalid_argument("grover_diffusion: n must be positive");
  const QuantumRegister all = QuantumRegister::range(1, n);
  const Gate spread = productgate(hadamard(), all, n);
  const CMatrix reflect = outer(ketn(0, n), bran(0, n)) * cxd{2.0, 0.0} -
                          CMatrix::identity(Eigen::Index{1} << n);
  return circuit({spread, Gate(reflect), spread});
}

ProbabilityDistribution grover(const OracleSpec& spec,
                               const std::optional<NoiseSpec>& noise,
                               Session& session) {
  check_spec(spec, "grover");
  if (session.qubit_count() != 0) {
    throw std::invalid_argument("grover: session must be empty");
  }
  const ScopedBackend guard(session.backend());
  const int n = spec.n_qubits;
  const RegisterId rid = session.newregister(n);
  const QuantumRegister reg = session.qureg(rid);
  const auto num_states = static_cast<double>(std::uint64_t{1} << n);
  const int iterations = static_cast<int>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(num_states)));

  session.evolve(productgate(hadamard(), reg, n));
  const Gate oracle = grover_oracle(spec);
  const Gate diffusion = grover_diffusion(n);
  std::optional<KrausSet> one_qubit_noise;
  if (noise) one_qubit_noise = channel(noise->kind, noise->p);

  for (int i = 0; i < iterations; ++i) {
    session.evolve(oracle);
    session.evolve(diffusion);
    if (one_qubit_noise) {
      // The register-wide local channel factors into independent per-qubit
      // channels; applying them in sequence avoids materializing the
      // |k|^n-element product set.
      for (int q : reg.qubits()) {
        session.applychannel(localchannel(*one_qubit_noise, QuantumRegister{q}, n));
      }
    }
  }
  return session.measurecompbasis();
}

GroverPrediction grover_prediction(int n) {
  if (n < 1 || n > 20) {
    throw std::invalid_argument("grover_prediction: unsupported qubit count");
  }
  GroverPrediction out;
  out.n_qubits = n;
  out.num_states = std::uint64_t{1} << n;
  const auto num_states = static_cast<double>(out.num_states);
  out.theta = std::asin(1.0 / std::sqrt(num_states));
  out.iterations = static_cast<int>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(num_states)));
  const double phase = (2.0 * out.iterations + 1.0) * out.theta;
  out.beta_k = std::sin(phase);
  out.alpha_k = std::cos(phase) / std::sqrt(num_states - 1.0);
  return out;
}

}  // namespace densim
