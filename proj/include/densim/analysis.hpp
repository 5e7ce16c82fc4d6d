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

#include "densim/matrix.hpp"
#include "densim/registers.hpp"
#include "densim/states.hpp"

namespace densim {

/// Partial transposition of the state with respect to the target qubits.
CMatrix partialtranspose(const DensityMatrix& rho, const QuantumRegister& target);

/// Negativity: absolute sum of the negative eigenvalues of the partial
/// transpose, equivalently (||rho^{T_B}||_1 - 1) / 2.
double negativity(const DensityMatrix& rho, const QuantumRegister& qubits);

/// Von Neumann entropy in bits: -sum_i lambda_i log2(lambda_i).
double entropy(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit state via the spin-flipped spectrum.
double concurrence(const DensityMatrix& rho);

/// Fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0,1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Fidelity sqrt(<psi|rho|psi>) between a pure and a mixed state.
double fidelitypuremixed(const Ket& psi, const DensityMatrix& rho);

/// Trace norm: the sum of singular values.
double tracenorm(const CMatrix& a);

}  // namespace densim
