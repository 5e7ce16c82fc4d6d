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
#include <utility>
#include <vector>

#include "densim/matrix.hpp"

namespace densim {

/// Binary string, most significant bit first.
using BinaryString = std::vector<int>;

/// Pure state: complex column vector of length 2^n with unit Euclidean norm.
class Ket {
 public:
  explicit Ket(Eigen::VectorXcd amplitudes);

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  cxd operator[](Eigen::Index i) const { return amplitudes_(i); }

 private:
  Eigen::VectorXcd amplitudes_;
  int qubits_;
};

/// Dual (row) vector of a pure state.
class Bra {
 public:
  explicit Bra(Eigen::RowVectorXcd amplitudes);

  int qubits() const { return qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Eigen::RowVectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::RowVectorXcd amplitudes_;
  int qubits_;
};

Bra dagger(const Ket& k);
Ket dagger(const Bra& b);

/// Outer product |k><b| as a matrix in the default backend.
CMatrix outer(const Ket& k, const Bra& b);

/// Mixed state: Hermitian, trace-one, positive-semidefinite complex matrix.
///
/// Hermiticity and unit trace are checked on construction (within
/// kSpectralTol); positive semidefiniteness is checked by validate().
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  Eigen::Index dim() const { return matrix_.rows(); }
  /// Number of qubits; throws when the dimension is not a power of two.
  int qubits() const;
  const CMatrix& matrix() const { return matrix_; }

  /// Full invariant sweep including the spectrum; throws on violation.
  void validate() const;

 private:
  CMatrix matrix_;
};

// --- constructors -----------------------------------------------------------

/// Computational basis ket |b1...bn> for an MSB-first binary string.
Ket ket(const BinaryString& binvec);

/// Basis ket of `size` qubits encoding `value` (MSB-first, zero-padded).
Ket ketn(std::uint64_t value, int size);

/// Dual of ketn.
Bra bran(std::uint64_t value, int size);

/// Rank-one density matrix |psi><psi| of a pure state.
DensityMatrix state(const Ket& pure);

/// Convex combination sum_i a_i * rho_i; weights must be nonnegative and sum to one.
DensityMatrix mixstates(const std::vector<std::pair<double, DensityMatrix>>& parts);

/// Greenberger-Horne-Zeilinger state (|0...0> + |1...1>)/sqrt(2) on n qubits.
Ket ghz(int n);

enum class BellState { phip, phim, psip, psim };

/// The four Bell states (|00> +- |11>)/sqrt(2) and (|01> +- |10>)/sqrt(2).
Ket bell(BellState which);

/// Maximally mixed state (1/n) * I_n.
DensityMatrix maximallymixed(int n);

/// Two-qubit Werner state a*|Phi-><Phi-| + (1-a)*I/4 for a in [0,1].
DensityMatrix wernersinglet(double a);

}  // namespace densim
