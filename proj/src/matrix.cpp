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

#include "densim/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace densim {

namespace {

thread_local Backend g_default_backend = Backend::dense;

void check_dims(Eigen::Index rows, Eigen::Index cols) {
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim) {
    throw std::length_error("matrix dimensions out of supported range: " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
}

SparseXcd canonicalized(SparseXcd m) {
  m.prune([](const Eigen::Index&, const Eigen::Index&, const cxd& v) {
    return v != cxd{0.0, 0.0};
  });
  m.makeCompressed();
  return m;
}

SparseXcd to_sparse_eigen(const CMatrix& m) {
  SparseXcd sp(m.rows(), m.cols());
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(static_cast<std::size_t>(m.stored_nonzeros()));
  m.for_each_nonzero([&](Eigen::Index i, Eigen::Index j, const cxd& v) {
    trips.emplace_back(i, j, v);
  });
  sp.setFromTriplets(trips.begin(), trips.end());
  return canonicalized(std::move(sp));
}

}  // namespace

Backend default_backend() { return g_default_backend; }
void set_default_backend(Backend b) { g_default_backend = b; }

CMatrix::CMatrix(Eigen::MatrixXcd m, std::optional<Backend> backend)
    : storage_(Eigen::MatrixXcd(0, 0)) {
  check_dims(m.rows(), m.cols());
  if (backend.value_or(default_backend()) == Backend::sparse) {
    storage_ = canonicalized(m.sparseView());
  } else {
    storage_ = std::move(m);
  }
}

CMatrix::CMatrix(SparseXcd m, std::optional<Backend> backend)
    : storage_(Eigen::MatrixXcd(0, 0)) {
  check_dims(m.rows(), m.cols());
  if (backend.value_or(Backend::sparse) == Backend::sparse) {
    storage_ = canonicalized(std::move(m));
  } else {
    storage_ = Eigen::MatrixXcd(m);
  }
}

CMatrix CMatrix::zero(Eigen::Index rows, Eigen::Index cols,
                      std::optional<Backend> backend) {
  check_dims(rows, cols);
  if (backend.value_or(default_backend()) == Backend::sparse) {
    return CMatrix(SparseXcd(rows, cols));
  }
  return CMatrix(Eigen::MatrixXcd::Zero(rows, cols), Backend::dense);
}

CMatrix CMatrix::identity(Eigen::Index dim, std::optional<Backend> backend) {
  check_dims(dim, dim);
  if (backend.value_or(default_backend()) == Backend::sparse) {
    SparseXcd sp(dim, dim);
    sp.setIdentity();
    return CMatrix(std::move(sp));
  }
  return CMatrix(Eigen::MatrixXcd::Identity(dim, dim), Backend::dense);
}

CMatrix CMatrix::from_triplets(Eigen::Index rows, Eigen::Index cols,
                               const std::vector<Eigen::Triplet<cxd>>& entries,
                               std::optional<Backend> backend) {
  check_dims(rows, cols);
  SparseXcd sp(rows, cols);
  sp.setFromTriplets(entries.begin(), entries.end());
  if (backend.value_or(default_backend()) == Backend::sparse) {
    return CMatrix(std::move(sp));
  }
  return CMatrix(Eigen::MatrixXcd(sp), Backend::dense);
}

Eigen::Index CMatrix::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, storage_);
}

Eigen::Index CMatrix::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, storage_);
}

CMatrix CMatrix::to_backend(Backend b) const {
  if (b == backend()) return *this;
  if (b == Backend::sparse) return CMatrix(to_sparse_eigen(*this));
  return CMatrix(dense(), Backend::dense);
}

Eigen::MatrixXcd CMatrix::dense() const {
  if (const auto* sp = std::get_if<SparseXcd>(&storage_)) {
    return Eigen::MatrixXcd(*sp);
  }
  return std::get<Eigen::MatrixXcd>(storage_);
}

std::int64_t CMatrix::stored_nonzeros() const {
  if (const auto* sp = std::get_if<SparseXcd>(&storage_)) {
    return sp->nonZeros();
  }
  const auto& d = std::get<Eigen::MatrixXcd>(storage_);
  std::int64_t count = 0;
  for (Eigen::Index j = 0; j < d.cols(); ++j) {
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
      if (d(i, j) != cxd{0.0, 0.0}) ++count;
    }
  }
  return count;
}

cxd CMatrix::coeff(Eigen::Index i, Eigen::Index j) const {
  return std::visit([&](const auto& m) -> cxd { return m.coeff(i, j); }, storage_);
}

Eigen::VectorXcd CMatrix::diagonal() const {
  if (!is_square()) throw std::invalid_argument("diagonal: matrix is not square");
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(rows());
  for_each_nonzero([&](Eigen::Index i, Eigen::Index j, const cxd& v) {
    if (i == j) d(i) = v;
  });
  return d;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw std::invalid_argument("operator+: dimension mismatch");
  }
  if (is_sparse() || rhs.is_sparse()) {
    SparseXcd a = to_sparse_eigen(*this);
    SparseXcd b = to_sparse_eigen(rhs);
    return CMatrix(canonicalized(SparseXcd(a + b)));
  }
  return CMatrix(Eigen::MatrixXcd(dense() + rhs.dense()), Backend::dense);
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw std::invalid_argument("operator-: dimension mismatch");
  }
  if (is_sparse() || rhs.is_sparse()) {
    SparseXcd a = to_sparse_eigen(*this);
    SparseXcd b = to_sparse_eigen(rhs);
    return CMatrix(canonicalized(SparseXcd(a - b)));
  }
  return CMatrix(Eigen::MatrixXcd(dense() - rhs.dense()), Backend::dense);
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols() != rhs.rows()) {
    throw std::invalid_argument(
        "matmul: inner dimension mismatch " + std::to_string(rows()) + "x" +
        std::to_string(cols()) + " * " + std::to_string(rhs.rows()) + "x" +
        std::to_string(rhs.cols()));
  }
  if (is_sparse() || rhs.is_sparse()) {
    SparseXcd a = to_sparse_eigen(*this);
    SparseXcd b = to_sparse_eigen(rhs);
    return CMatrix(canonicalized(SparseXcd(a * b)));
  }
  return CMatrix(Eigen::MatrixXcd(dense() * rhs.dense()), Backend::dense);
}

CMatrix CMatrix::operator*(cxd scalar) const {
  if (is_sparse()) {
    return CMatrix(canonicalized(SparseXcd(to_sparse_eigen(*this) * scalar)));
  }
  return CMatrix(Eigen::MatrixXcd(dense() * scalar), Backend::dense);
}

CMatrix CMatrix::conjugate() const {
  if (is_sparse()) {
    return CMatrix(canonicalized(SparseXcd(to_sparse_eigen(*this).conjugate())));
  }
  return CMatrix(Eigen::MatrixXcd(dense().conjugate()), Backend::dense);
}

CMatrix CMatrix::transpose() const {
  if (is_sparse()) {
    return CMatrix(canonicalized(SparseXcd(to_sparse_eigen(*this).transpose())));
  }
  return CMatrix(Eigen::MatrixXcd(dense().transpose()), Backend::dense);
}

CMatrix CMatrix::adjoint() const {
  if (is_sparse()) {
    return CMatrix(canonicalized(SparseXcd(to_sparse_eigen(*this).adjoint())));
  }
  return CMatrix(Eigen::MatrixXcd(dense().adjoint()), Backend::dense);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  check_dims(a.rows() * b.rows(), a.cols() * b.cols());
  if (a.is_sparse() || b.is_sparse()) {
    SparseXcd as = to_sparse_eigen(a);
    SparseXcd bs = to_sparse_eigen(b);
    SparseXcd out = Eigen::kroneckerProduct(as, bs);
    return CMatrix(canonicalized(std::move(out)));
  }
  Eigen::MatrixXcd out = Eigen::kroneckerProduct(a.dense(), b.dense());
  return CMatrix(std::move(out), Backend::dense);
}

CMatrix dagger(const CMatrix& a) { return a.adjoint(); }

CMatrix matmul(const CMatrix& a, const CMatrix& b) { return a * b; }

cxd trace(const CMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("trace: matrix is not square");
  cxd sum{0.0, 0.0};
  a.for_each_nonzero([&](Eigen::Index i, Eigen::Index j, const cxd& v) {
    if (i == j) sum += v;
  });
  return sum;
}

HermitianEig hermitian_eig(const CMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("hermitian_eig: matrix is not square");
  }
  if (!is_hermitian(a, kSpectralTol)) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.dense());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix psd_sqrt(const CMatrix& a) {
  HermitianEig eig = hermitian_eig(a);
  Eigen::VectorXd lambda = eig.values;
  // Eigenvalues at the solver's noise floor are treated as exact zeros;
  // taking their square root would otherwise blow 1e-17 noise up to 1e-9.
  const double noise_floor = std::max(lambda.maxCoeff(), 0.0) * 1e-14;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -kPsdClampTol) {
      throw std::domain_error("psd_sqrt: eigenvalue " + std::to_string(lambda(i)) +
                              " below PSD tolerance");
    }
    lambda(i) = lambda(i) <= noise_floor ? 0.0 : std::sqrt(lambda(i));
  }
  Eigen::MatrixXcd root =
      eig.vectors * lambda.asDiagonal() * eig.vectors.adjoint();
  return CMatrix(std::move(root), a.backend());
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  return (a.dense() - b.dense()).cwiseAbs().maxCoeff();
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const CMatrix& a, double tol) {
  if (!a.is_square()) return false;
  Eigen::MatrixXcd d = a.dense();
  return (d - d.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace densim
