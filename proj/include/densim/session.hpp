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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "densim/channels.hpp"
#include "densim/gates.hpp"
#include "densim/matrix.hpp"
#include "densim/registers.hpp"
#include "densim/states.hpp"

namespace densim {

/// Handle into a session's register table. Stays valid until the register is
/// cleared, even when other registers come and go.
struct RegisterId {
  std::uint64_t value = 0;
  friend bool operator==(RegisterId, RegisterId) = default;
};

/// Probability distribution over computational basis states. Entries below
/// -1e-12 or a total away from 1 by more than 1e-9 are rejected; small
/// negative roundoff is clamped to zero.
class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> probabilities);

  std::size_t size() const { return probabilities_.size(); }
  double operator[](std::size_t i) const { return probabilities_[i]; }
  const std::vector<double>& probabilities() const { return probabilities_; }

 private:
  std::vector<double> probabilities_;
};

/// Reduced density matrix with the `target` qubits traced out. Remaining
/// qubits keep their relative order and are renumbered contiguously.
DensityMatrix ptrace(const DensityMatrix& rho, const QuantumRegister& target);

/// Draws a basis index distributed according to d, consuming one value from
/// the generator. Deterministic given the generator state.
std::uint64_t collapse(const ProbabilityDistribution& d, std::mt19937_64& rng);

/// The quantum heap: owns the global density matrix over all allocated
/// qubits together with the register table mapping RegisterIds to qubit
/// indices. Registers are allocated at the highest indices (the state is
/// extended by rho (x) |0..0><0..0|) and deallocated by partial trace.
///
/// A session is single-owner: mutate from one thread at a time.
class Session {
 public:
  explicit Session(bool sparse = false,
                   std::optional<std::uint64_t> seed = std::nullopt);

  /// Allocates `size` fresh qubits in |0..0> and returns the register handle.
  RegisterId newregister(int size);

  /// Traces the register's qubits out of the state and removes it from the
  /// table; remaining qubits are renumbered contiguously.
  void clearregister(RegisterId id);

  /// Unitary evolution of the whole heap: rho -> U rho U^dagger.
  void evolve(const Gate& u);

  /// Non-unitary evolution by a Kraus set on the whole heap.
  void applychannel(const KrausSet& k);

  /// Computational-basis measurement: returns P(i) = <i|rho|i> and replaces
  /// the state by its dephased (diagonal) version.
  ProbabilityDistribution measurecompbasis();

  /// Draws a basis index from d using the session generator.
  std::uint64_t collapse(const ProbabilityDistribution& d);

  DensityMatrix getstate() const;
  QuantumRegister qureg(RegisterId id) const;

  /// Switches the storage backend of the state and later allocations.
  void set_sparse(bool on);
  bool sparse_enabled() const { return sparse_; }
  Backend backend() const {
    return sparse_ ? Backend::sparse : Backend::dense;
  }

  int qubit_count() const { return qubit_count_; }

  /// Checks every session invariant (register table consistency and the
  /// density-matrix invariants of the state); throws on violation.
  void validate() const;

 private:
  const QuantumRegister& find(RegisterId id) const;

  CMatrix state_;
  std::vector<std::pair<RegisterId, QuantumRegister>> registers_;
  std::uint64_t next_id_ = 1;
  int qubit_count_ = 0;
  bool sparse_ = false;
  std::mt19937_64 rng_;
};

}  // namespace densim
