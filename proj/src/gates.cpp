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

#include "densim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace densim {

namespace {

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("Gate: dimension " + std::to_string(dim) +
                                " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

Eigen::MatrixXcd pauli_matrix(Axis which) {
  Eigen::MatrixXcd m(2, 2);
  switch (which) {
    case Axis::x:
      m << cxd{0, 0}, cxd{1, 0}, cxd{1, 0}, cxd{0, 0};
      break;
    case Axis::y:
      m << cxd{0, 0}, cxd{0, -1}, cxd{0, 1}, cxd{0, 0};
      break;
    case Axis::z:
      m << cxd{1, 0}, cxd{0, 0}, cxd{0, 0}, cxd{-1, 0};
      break;
  }
  return m;
}

void check_register(const QuantumRegister& reg, int size, const char* what) {
  if (size < 1) {
    throw std::invalid_argument(std::string(what) + ": size must be positive");
  }
  if (!reg.within(size)) {
    throw std::invalid_argument(std::string(what) +
                                ": register index out of range for size " +
                                std::to_string(size));
  }
}

/// Tensor chain over qubits 1..size; factor(i) must return a 2x2 matrix.
template <typename FactorFn>
CMatrix tensor_chain(int size, FactorFn&& factor) {
  CMatrix out = CMatrix::identity(1);
  for (int i = 1; i <= size; ++i) {
    out = kron(out, factor(i));
  }
  return out;
}

// Bit of qubit q (1-based, MSB first) in an n-qubit basis index.
inline int bit_of(std::uint64_t index, int q, int n) {
  return static_cast<int>((index >> (n - q)) & 1u);
}

}  // namespace

bool isunitary(const CMatrix& u, double tol) {
  if (!u.is_square()) {
    throw std::invalid_argument("isunitary: matrix is not square");
  }
  const CMatrix product = u * dagger(u);
  return approx_equal(product, CMatrix::identity(u.rows(), u.backend()), tol);
}

Gate::Gate(CMatrix m) : matrix_(std::move(m)) {
  qubits_ = qubits_for_dim(matrix_.rows());
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("Gate: matrix is not square");
  }
  if (!isunitary(matrix_)) {
    throw std::invalid_argument("Gate: matrix is not unitary");
  }
}

Gate pauli(Axis which) { return Gate(CMatrix(pauli_matrix(which))); }

Gate identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: n must be positive");
  return Gate(CMatrix::identity(Eigen::Index{1} << n));
}

Gate hadamard() {
  Eigen::MatrixXcd m(2, 2);
  m << cxd{M_SQRT1_2, 0}, cxd{M_SQRT1_2, 0}, cxd{M_SQRT1_2, 0}, cxd{-M_SQRT1_2, 0};
  return Gate(CMatrix(std::move(m)));
}

Gate rot(Axis axis, double a) {
  const double c = std::cos(a / 2.0);
  const double s = std::sin(a / 2.0);
  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Identity(2, 2) * cxd{c, 0} - cxd{0, s} * pauli_matrix(axis);
  return Gate(CMatrix(std::move(m)));
}

Gate phase2(double p0, double p1) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = std::polar(1.0, p0);
  m(1, 1) = std::polar(1.0, p1);
  return Gate(CMatrix(std::move(m)));
}

Gate qft(int n) {
  if (n < 1) throw std::invalid_argument("qft: n must be positive");
  if (n > 20) throw std::invalid_argument("qft: n above supported range");
  const Eigen::Index dim = Eigen::Index{1} << n;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      // reduce j*k modulo 2^n before forming the angle to keep full precision
      const std::int64_t e = (j * k) & (dim - 1);
      m(j, k) = std::polar(norm, 2.0 * std::numbers::pi * e / dim);
    }
  }
  return Gate(CMatrix(std::move(m)));
}

Gate swap(int size, const QuantumRegister& qubits) {
  check_register(qubits, size, "swap");
  if (qubits.size() != 2) {
    throw std::invalid_argument("swap: register must name exactly two qubits");
  }
  const int a = qubits[0];
  const int b = qubits[1];
  const Eigen::Index dim = Eigen::Index{1} << size;
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto idx = static_cast<std::uint64_t>(j);
    const int ba = bit_of(idx, a, size);
    const int bb = bit_of(idx, b, size);
    std::uint64_t out = idx;
    out &= ~((std::uint64_t{1} << (size - a)) | (std::uint64_t{1} << (size - b)));
    out |= static_cast<std::uint64_t>(bb) << (size - a);
    out |= static_cast<std::uint64_t>(ba) << (size - b);
    trips.emplace_back(static_cast<Eigen::Index>(out), j, cxd{1.0, 0.0});
  }
  return Gate(CMatrix::from_triplets(dim, dim, trips));
}

Gate qubitpermutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1) throw std::invalid_argument("qubitpermutation: empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)]) {
      throw std::invalid_argument("qubitpermutation: not a bijection on {1..n}");
    }
    seen[static_cast<std::size_t>(p - 1)] = true;
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto idx = static_cast<std::uint64_t>(j);
    std::uint64_t out = 0;
    for (int i = 1; i <= n; ++i) {
      if (bit_of(idx, i, n)) {
        out |= std::uint64_t{1} << (n - perm[static_cast<std::size_t>(i - 1)]);
      }
    }
    trips.emplace_back(static_cast<Eigen::Index>(out), j, cxd{1.0, 0.0});
  }
  return Gate(CMatrix::from_triplets(dim, dim, trips));
}

Gate flip(int n) {
  if (n < 1) throw std::invalid_argument("flip: n must be positive");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) perm[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return qubitpermutation(perm);
}

Gate productgate(const Gate& g, const QuantumRegister& target, int size) {
  check_register(target, size, "productgate");
  if (g.qubits() != 1) {
    throw std::invalid_argument("productgate: gate must act on one qubit");
  }
  const CMatrix one = CMatrix::identity(2);
  CMatrix out = tensor_chain(size, [&](int i) -> const CMatrix& {
    return target.contains(i) ? g.matrix() : one;
  });
  return Gate(std::move(out));
}

Gate controlledgate(const Gate& g, const QuantumRegister& control,
                    const QuantumRegister& target, int size) {
  check_register(control, size, "controlledgate");
  check_register(target, size, "controlledgate");
  if (!control.disjoint_with(target)) {
    throw std::invalid_argument("controlledgate: control and target overlap");
  }
  if (g.qubits() != 1) {
    throw std::invalid_argument("controlledgate: gate must act on one qubit");
  }
  if (control.empty()) return productgate(g, target, size);

  const CMatrix one = CMatrix::identity(2);
  CMatrix project1 = CMatrix::from_triplets(2, 2, {{1, 1, cxd{1.0, 0.0}}});

  // Projector onto the all-controls-|1> subspace.
  CMatrix all_ones = tensor_chain(size, [&](int i) -> const CMatrix& {
    return control.contains(i) ? project1 : one;
  });
  // Same projector with g applied to each target qubit.
  CMatrix applied = tensor_chain(size, [&](int i) -> const CMatrix& {
    if (target.contains(i)) return g.matrix();
    return control.contains(i) ? project1 : one;
  });
  CMatrix out = CMatrix::identity(Eigen::Index{1} << size) - all_ones + applied;
  return Gate(std::move(out));
}

Gate cphase(double phi, int control, int target, int size) {
  if (control == target) {
    throw std::invalid_argument("cphase: control and target must differ");
  }
  return controlledgate(phase2(0.0, phi), QuantumRegister{control},
                        QuantumRegister{target}, size);
}

Gate circuit(const std::vector<Gate>& gates) {
  if (gates.empty()) throw std::invalid_argument("circuit: empty gate list");
  CMatrix total = gates.front().matrix();
  for (std::size_t i = 1; i < gates.size(); ++i) {
    if (gates[i].dim() != total.rows()) {
      throw std::invalid_argument("circuit: gate size mismatch");
    }
    total = gates[i].matrix() * total;
  }
  return Gate(std::move(total));
}

}  // namespace densim
