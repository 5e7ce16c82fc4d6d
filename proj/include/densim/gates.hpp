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

#include <vector>

#include "densim/matrix.hpp"
#include "densim/registers.hpp"

namespace densim {

/// True iff ||U*U^dagger - I||_max <= tol; throws for non-square input.
bool isunitary(const CMatrix& u, double tol = kSpectralTol);

/// Unitary gate on s qubits (2^s x 2^s matrix, unitarity checked within
/// kSpectralTol on construction).
class Gate {
 public:
  explicit Gate(CMatrix m);

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }

 private:
  CMatrix matrix_;
  int qubits_;
};

inline bool isunitary(const Gate&) { return true; }

enum class Axis { x, y, z };

/// One-qubit Pauli operators.
Gate pauli(Axis which);

/// Identity gate on n qubits.
Gate identity(int n);

/// One-qubit Hadamard gate.
Gate hadamard();

/// Rotation by angle `a` around the given axis: exp(-i*a*sigma/2).
Gate rot(Axis axis, double a);

/// One-qubit phase gate diag(e^{i*p0}, e^{i*p1}).
Gate phase2(double p0, double p1);

/// Quantum Fourier transform matrix on n qubits:
/// F[j,k] = omega^{jk} / sqrt(2^n) with omega = e^{i*2*pi/2^n}.
Gate qft(int n);

/// Swap gate of the given size exchanging the two qubits in `qubits`.
Gate swap(int size, const QuantumRegister& qubits);

/// Unitary performing the given permutation of qubit positions: the bit at
/// position i moves to position perm[i-1] (1-based, perm a bijection on {1..n}).
Gate qubitpermutation(const std::vector<int>& perm);

/// Full reversal of qubit order on n qubits.
Gate flip(int n);

/// Composed gate applying the one-qubit gate g to every qubit in `target`
/// and identity elsewhere.
Gate productgate(const Gate& g, const QuantumRegister& target, int size);

/// Controlled gate: applies g to every qubit of `target` on the subspace
/// where all `control` qubits are |1>, identity elsewhere. Control and
/// target registers must be disjoint.
Gate controlledgate(const Gate& g, const QuantumRegister& control,
                    const QuantumRegister& target, int size);

/// Controlled phase gate: phase e^{i*phi} on basis states where both
/// `control` and `target` qubits are |1>.
Gate cphase(double phi, int control, int target, int size);

/// Sequential circuit: the first listed gate acts first on states, so the
/// combined matrix is gates[k-1] * ... * gates[0].
Gate circuit(const std::vector<Gate>& gates);

}  // namespace densim
