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

#include <complex>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace densim {

using cxd = std::complex<double>;
using SparseXcd = Eigen::SparseMatrix<cxd>;

/// Absolute tolerance for construction identities (kron/dagger/product algebra).
inline constexpr double kConstructionTol = 1e-12;
/// Absolute tolerance for spectral routines and unitarity/channel checks.
inline constexpr double kSpectralTol = 1e-10;
/// Eigenvalues in [-kPsdClampTol, 0) are treated as exact zeros by PSD routines.
inline constexpr double kPsdClampTol = 1e-10;
/// Hard cap on matrix dimensions; anything larger is outside the simulator's scope.
inline constexpr Eigen::Index kMaxDim = Eigen::Index{1} << 20;

enum class Backend { dense, sparse };

/// Thread-local backend used by matrix and gate constructors that are not
/// given an explicit one. Mirrors the library-wide dense/sparse switch.
Backend default_backend();
void set_default_backend(Backend b);

/// RAII guard that sets the thread-local default backend for a scope.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend b) : previous_(default_backend()) {
    set_default_backend(b);
  }
  ~ScopedBackend() { set_default_backend(previous_); }
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend previous_;
};

/// Complex matrix with a dense or sparse storage backend.
///
/// Both backends represent the same logical matrix; every operation yields
/// entrywise-equal results (within kConstructionTol) regardless of storage.
/// Binary operations produce a sparse result when either operand is sparse,
/// and a dense result otherwise. Construction from a dense Eigen matrix lands
/// in the thread-local default backend unless told otherwise; construction
/// from a sparse Eigen matrix stays sparse. Sparse storage is kept compressed
/// with no explicit zeros.
class CMatrix {
 public:
  CMatrix() : storage_(Eigen::MatrixXcd(0, 0)) {}
  explicit CMatrix(Eigen::MatrixXcd m, std::optional<Backend> backend = std::nullopt);
  explicit CMatrix(SparseXcd m, std::optional<Backend> backend = std::nullopt);

  static CMatrix zero(Eigen::Index rows, Eigen::Index cols,
                      std::optional<Backend> backend = std::nullopt);
  static CMatrix identity(Eigen::Index dim,
                          std::optional<Backend> backend = std::nullopt);
  static CMatrix from_triplets(Eigen::Index rows, Eigen::Index cols,
                               const std::vector<Eigen::Triplet<cxd>>& entries,
                               std::optional<Backend> backend = std::nullopt);

  Eigen::Index rows() const;
  Eigen::Index cols() const;
  bool is_square() const { return rows() == cols(); }
  Backend backend() const {
    return std::holds_alternative<SparseXcd>(storage_) ? Backend::sparse
                                                       : Backend::dense;
  }
  bool is_sparse() const { return backend() == Backend::sparse; }

  CMatrix to_backend(Backend b) const;
  /// Materializes the entries densely (copies when already dense).
  Eigen::MatrixXcd dense() const;
  /// Stored entry count: structural nonzeros for sparse, nonzero entries for dense.
  std::int64_t stored_nonzeros() const;

  cxd coeff(Eigen::Index i, Eigen::Index j) const;
  Eigen::VectorXcd diagonal() const;

  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator-(const CMatrix& rhs) const;
  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator*(cxd scalar) const;
  friend CMatrix operator*(cxd scalar, const CMatrix& m) { return m * scalar; }

  CMatrix conjugate() const;
  CMatrix transpose() const;
  CMatrix adjoint() const;

  /// Invokes f(row, col, value) for every stored entry.
  template <typename F>
  void for_each_nonzero(F&& f) const {
    if (const auto* sp = std::get_if<SparseXcd>(&storage_)) {
      for (int k = 0; k < sp->outerSize(); ++k) {
        for (SparseXcd::InnerIterator it(*sp, k); it; ++it) {
          f(it.row(), it.col(), it.value());
        }
      }
    } else {
      const auto& d = std::get<Eigen::MatrixXcd>(storage_);
      for (Eigen::Index j = 0; j < d.cols(); ++j) {
        for (Eigen::Index i = 0; i < d.rows(); ++i) {
          if (d(i, j) != cxd{0.0, 0.0}) f(i, j, d(i, j));
        }
      }
    }
  }

 private:
  std::variant<Eigen::MatrixXcd, SparseXcd> storage_;
};

/// Tensor (Kronecker) product: block (i,j) of the result equals a(i,j) * b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Conjugate transpose.
CMatrix dagger(const CMatrix& a);

/// Matrix product; throws std::invalid_argument on inner-dimension mismatch.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Sum of diagonal entries; throws std::invalid_argument for non-square input.
cxd trace(const CMatrix& a);

struct HermitianEig {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // orthonormal columns, vectors.col(i) <-> values(i)
};

/// Eigendecomposition of a Hermitian matrix (checked within kSpectralTol).
HermitianEig hermitian_eig(const CMatrix& a);

/// Hermitian PSD square root B with B*B == a. Eigenvalues in
/// [-kPsdClampTol, 0) are clamped to zero; anything more negative throws.
CMatrix psd_sqrt(const CMatrix& a);

double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = kConstructionTol);
bool is_hermitian(const CMatrix& a, double tol = kSpectralTol);

}  // namespace densim
