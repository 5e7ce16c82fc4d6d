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

#include "densim/channels.hpp"
#include "densim/gates.hpp"
#include "densim/session.hpp"

namespace densim {

/// Quantum Fourier transform built as a circuit of Hadamards and controlled
/// phases followed by a qubit-order reversal; equals qft(n) as a matrix.
Gate dft(int n);

/// Runs the two-qubit Deutsch circuit for one of the four oracles
/// (1: constant f=0, 2: constant f=1, 3: identity f(x)=x, 4: negation
/// f(x)=!x) and returns the distribution of the first qubit: (1,0) for a
/// constant oracle, (0,1) for an injective one.
ProbabilityDistribution deutsch(int oracle_id, bool sparse = false);

/// Search problem instance: f(x) = 1 exactly at the marked element.
struct OracleSpec {
  std::uint64_t marked = 0;
  int n_qubits = 1;
};

/// Phase oracle: diagonal +-1 gate flipping the amplitude sign of the marked
/// basis state.
Gate grover_oracle(const OracleSpec& spec);

/// Ancilla-form oracle on n_qubits + 1 qubits: |x>|q> -> |x>|q XOR f(x)>.
/// With the ancilla prepared in H|1> it acts like the phase oracle.
Gate grover_oracle_ancilla(const OracleSpec& spec);

/// Inversion about the mean, 2|psi><psi| - I for the flat superposition
/// |psi>, built by conjugating 2|0..0><0..0| - I with Hadamards.
Gate grover_diffusion(int n);

/// Per-iteration noise: a one-qubit channel applied to every working qubit.
struct NoiseSpec {
  ChannelKind kind = ChannelKind::depolarizing;
  double p = 0.0;
};

/// Runs Grover's search on an empty session: allocates the working register,
/// prepares the flat superposition, performs floor(pi/4 * sqrt(N)) iterations
/// of oracle-then-diffusion (applying the noise channel to each qubit after
/// every iteration when given), and measures in the computational basis.
ProbabilityDistribution grover(const OracleSpec& spec,
                               const std::optional<NoiseSpec>& noise,
                               Session& session);

/// Closed-form description of the noiseless run: after k iterations the
/// amplitudes are alpha_k = cos((2k+1) theta)/sqrt(N-1) on unmarked states
/// and beta_k = sin((2k+1) theta) on the marked one, with sin(theta)=1/sqrt(N).
struct GroverPrediction {
  int n_qubits = 0;
  std::uint64_t num_states = 0;  // N = 2^n
  double theta = 0.0;
  int iterations = 0;            // k = floor(pi/4 * sqrt(N))
  double alpha_k = 0.0;
  double beta_k = 0.0;
};

GroverPrediction grover_prediction(int n);

}  // namespace densim
