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

#include "densim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace densim {

namespace {

/// Swaps the target-qubit components between row and column index.
std::uint64_t exchange_bits(std::uint64_t take_from, std::uint64_t keep_in,
                            const std::vector<int>& targets, int n) {
  std::uint64_t out = keep_in;
  for (int q : targets) {
    const std::uint64_t mask = std::uint64_t{1} << (n - q);
    out = (out & ~mask) | (take_from & mask);
  }
  return out;
}

}  // namespace

CMatrix partialtranspose(const DensityMatrix& rho, const QuantumRegister& target) {
  const int n = rho.qubits();
  if (!target.within(n)) {
    throw std::invalid_argument("partialtranspose: target register out of range");
  }
  if (target.empty()) return rho.matrix();

  const std::vector<int> targets = target.ascending();
  const Eigen::MatrixXcd in = rho.matrix().dense();
  Eigen::MatrixXcd out(in.rows(), in.cols());
  for (Eigen::Index r = 0; r < in.rows(); ++r) {
    for (Eigen::Index c = 0; c < in.cols(); ++c) {
      const auto row = static_cast<std::uint64_t>(r);
      const auto col = static_cast<std::uint64_t>(c);
      const auto pr = exchange_bits(col, row, targets, n);
      const auto pc = exchange_bits(row, col, targets, n);
      out(static_cast<Eigen::Index>(pr), static_cast<Eigen::Index>(pc)) = in(r, c);
    }
  }
  return CMatrix(std::move(out), rho.matrix().backend());
}

double negativity(const DensityMatrix& rho, const QuantumRegister& qubits) {
  const CMatrix pt = partialtranspose(rho, qubits);
  const HermitianEig eig = hermitian_eig(pt);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) < 0.0) sum += -eig.values(i);
  }
  return sum;
}

double entropy(const DensityMatrix& rho) {
  const HermitianEig eig = hermitian_eig(rho.matrix());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = std::clamp(eig.values(i), 0.0, 1.0);
    if (lambda > 0.0) sum -= lambda * std::log2(lambda);
  }
  return sum;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("concurrence: expected a two-qubit state");
  }
  Eigen::MatrixXcd yy = Eigen::MatrixXcd::Zero(4, 4);
  yy(0, 3) = cxd{-1, 0};
  yy(1, 2) = cxd{1, 0};
  yy(2, 1) = cxd{1, 0};
  yy(3, 0) = cxd{-1, 0};

  const Eigen::MatrixXcd r = rho.matrix().dense();
  const Eigen::MatrixXcd flipped = yy * r.conjugate() * yy;
  // Eigenvalues of rho * flipped via the Hermitian similarity
  // sqrt(rho) * flipped * sqrt(rho).
  const Eigen::MatrixXcd root = psd_sqrt(rho.matrix()).dense();
  const HermitianEig eig = hermitian_eig(CMatrix(root * flipped * root));
  double c = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double mu = std::sqrt(std::max(eig.values(i), 0.0));
    c += (i == eig.values.size() - 1) ? mu : -mu;
  }
  return std::max(0.0, c);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const CMatrix root = psd_sqrt(rho.matrix());
  const CMatrix inner = root * sigma.matrix() * root;
  const double f = trace(psd_sqrt(inner)).real();
  return std::clamp(f, 0.0, 1.0);
}

double fidelitypuremixed(const Ket& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) {
    throw std::invalid_argument("fidelitypuremixed: dimension mismatch");
  }
  const Eigen::VectorXcd v = psi.amplitudes();
  const cxd overlap = (v.adjoint() * rho.matrix().dense() * v)(0);
  const double f = std::sqrt(std::max(overlap.real(), 0.0));
  return std::clamp(f, 0.0, 1.0);
}

double tracenorm(const CMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("tracenorm: matrix is not square");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.dense());
  return svd.singularValues().sum();
}

}  // namespace densim
