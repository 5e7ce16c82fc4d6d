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

#include "densim/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace densim {

namespace {

constexpr double kNormTol = 1e-8;

int qubits_for_dim(Eigen::Index dim, const char* what) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument(std::string(what) + ": dimension " +
                                std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

}  // namespace

Ket::Ket(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  qubits_ = qubits_for_dim(amplitudes_.size(), "Ket");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw std::invalid_argument("Ket: vector norm " + std::to_string(norm) +
                                " is not 1");
  }
}

Bra::Bra(Eigen::RowVectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  qubits_ = qubits_for_dim(amplitudes_.size(), "Bra");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw std::invalid_argument("Bra: vector norm " + std::to_string(norm) +
                                " is not 1");
  }
}

Bra dagger(const Ket& k) { return Bra(k.amplitudes().adjoint()); }
Ket dagger(const Bra& b) { return Ket(b.amplitudes().adjoint()); }

CMatrix outer(const Ket& k, const Bra& b) {
  Eigen::MatrixXcd m = k.amplitudes() * b.amplitudes();
  return CMatrix(std::move(m));
}

DensityMatrix::DensityMatrix(CMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square() || matrix_.rows() < 1) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
  }
  if (!is_hermitian(matrix_, kSpectralTol)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  const cxd tr = trace(matrix_);
  if (std::abs(tr - cxd{1.0, 0.0}) > kSpectralTol) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) +
                                " is not 1");
  }
}

int DensityMatrix::qubits() const {
  return qubits_for_dim(dim(), "DensityMatrix::qubits");
}

void DensityMatrix::validate() const {
  HermitianEig eig = hermitian_eig(matrix_);
  if (eig.values.minCoeff() < -kPsdClampTol) {
    throw std::domain_error("DensityMatrix: eigenvalue " +
                            std::to_string(eig.values.minCoeff()) +
                            " below PSD tolerance");
  }
}

Ket ket(const BinaryString& binvec) {
  if (binvec.empty()) throw std::invalid_argument("ket: empty binary string");
  std::uint64_t index = 0;
  for (int b : binvec) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("ket: binary string entry " + std::to_string(b));
    }
    index = (index << 1) | static_cast<std::uint64_t>(b);
  }
  return ketn(index, static_cast<int>(binvec.size()));
}

Ket ketn(std::uint64_t value, int size) {
  if (size < 1) throw std::invalid_argument("ketn: size must be positive");
  if (size > 20) throw std::invalid_argument("ketn: size above supported range");
  const Eigen::Index dim = Eigen::Index{1} << size;
  if (value >= static_cast<std::uint64_t>(dim)) {
    throw std::invalid_argument("ketn: value " + std::to_string(value) +
                                " out of range for " + std::to_string(size) +
                                " qubits");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps(static_cast<Eigen::Index>(value)) = cxd{1.0, 0.0};
  return Ket(std::move(amps));
}

Bra bran(std::uint64_t value, int size) { return dagger(ketn(value, size)); }

DensityMatrix state(const Ket& pure) {
  Eigen::MatrixXcd m = pure.amplitudes() * pure.amplitudes().adjoint();
  return DensityMatrix(CMatrix(std::move(m)));
}

DensityMatrix mixstates(const std::vector<std::pair<double, DensityMatrix>>& parts) {
  if (parts.empty()) throw std::invalid_argument("mixstates: empty mixture");
  const Eigen::Index dim = parts.front().second.dim();
  double weight_sum = 0.0;
  for (const auto& [weight, rho] : parts) {
    if (weight < 0.0) {
      throw std::invalid_argument("mixstates: negative weight " +
                                  std::to_string(weight));
    }
    if (rho.dim() != dim) {
      throw std::invalid_argument("mixstates: dimension mismatch");
    }
    weight_sum += weight;
  }
  if (std::abs(weight_sum - 1.0) > 1e-10) {
    throw std::invalid_argument("mixstates: weights sum to " +
                                std::to_string(weight_sum));
  }
  CMatrix acc = CMatrix::zero(dim, dim);
  for (const auto& [weight, rho] : parts) {
    acc = acc + rho.matrix() * cxd{weight, 0.0};
  }
  return DensityMatrix(std::move(acc));
}

Ket ghz(int n) {
  if (n < 1) throw std::invalid_argument("ghz: n must be positive");
  if (n > 20) throw std::invalid_argument("ghz: n above supported range");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps(0) = cxd{M_SQRT1_2, 0.0};
  amps(dim - 1) = cxd{M_SQRT1_2, 0.0};
  return Ket(std::move(amps));
}

Ket bell(BellState which) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
  switch (which) {
    case BellState::phip:
      amps(0) = M_SQRT1_2;
      amps(3) = M_SQRT1_2;
      break;
    case BellState::phim:
      amps(0) = M_SQRT1_2;
      amps(3) = -M_SQRT1_2;
      break;
    case BellState::psip:
      amps(1) = M_SQRT1_2;
      amps(2) = M_SQRT1_2;
      break;
    case BellState::psim:
      amps(1) = M_SQRT1_2;
      amps(2) = -M_SQRT1_2;
      break;
  }
  return Ket(std::move(amps));
}

DensityMatrix maximallymixed(int n) {
  if (n < 1) throw std::invalid_argument("maximallymixed: n must be positive");
  CMatrix m = CMatrix::identity(n) * cxd{1.0 / n, 0.0};
  return DensityMatrix(std::move(m));
}

DensityMatrix wernersinglet(double a) {
  if (a < 0.0 || a > 1.0) {
    throw std::invalid_argument("wernersinglet: parameter " + std::to_string(a) +
                                " outside [0,1]");
  }
  const DensityMatrix projector = state(bell(BellState::phim));
  CMatrix m = projector.matrix() * cxd{a, 0.0} +
              CMatrix::identity(4) * cxd{(1.0 - a) / 4.0, 0.0};
  return DensityMatrix(std::move(m));
}

}  // namespace densim
