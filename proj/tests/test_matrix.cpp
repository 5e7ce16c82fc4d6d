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

#include <doctest.h>

#include <random>

#include "densim/matrix.hpp"
#include "oracles.hpp"

using namespace densim;

namespace {

Eigen::MatrixXcd sigma_x() {
  Eigen::MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Eigen::MatrixXcd sigma_y() {
  Eigen::MatrixXcd m(2, 2);
  m << cxd{0, 0}, cxd{0, -1}, cxd{0, 1}, cxd{0, 0};
  return m;
}

Eigen::MatrixXcd sigma_z() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Eigen::MatrixXcd hadamard2() {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

CMatrix random_cmatrix(Eigen::Index rows, Eigen::Index cols, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cxd{gauss(rng), gauss(rng)};
  }
  return CMatrix(std::move(m), Backend::dense);
}

}  // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("kron identities and block structure") {
  const CMatrix i2 = CMatrix::identity(2);
  CHECK(approx_equal(kron(i2, i2), CMatrix::identity(4)));

  // sigma_x (x) sigma_x maps |00> to |11>
  const CMatrix xx = kron(CMatrix(sigma_x()), CMatrix(sigma_x()));
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(4);
  e0(0) = 1.0;
  const Eigen::VectorXcd mapped = xx.dense() * e0;
  CHECK(std::abs(mapped(3) - cxd{1.0, 0.0}) < 1e-15);
  CHECK(mapped.head(3).norm() < 1e-15);

  // |0><0| (x) G carries G in the upper-left 2x2 block, zeros elsewhere.
  std::mt19937 rng(7);
  const CMatrix g = random_cmatrix(2, 2, rng);
  Eigen::MatrixXcd proj0 = Eigen::MatrixXcd::Zero(2, 2);
  proj0(0, 0) = 1.0;
  const Eigen::MatrixXcd got = kron(CMatrix(proj0), g).dense();
  CHECK((got.topLeftCorner(2, 2) - g.dense()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(got.bottomRows(2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(got.topRightCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dagger") {
  CHECK(approx_equal(dagger(CMatrix::identity(4)), CMatrix::identity(4)));
  CHECK(approx_equal(dagger(CMatrix(sigma_y())), CMatrix(sigma_y())));

  // dagger of the phase gate R(phi) is R(-phi)
  const double phi = 0.731;
  Eigen::MatrixXcd r(2, 2), r_neg(2, 2);
  r << 1, 0, 0, std::polar(1.0, phi);
  r_neg << 1, 0, 0, std::polar(1.0, -phi);
  CHECK(approx_equal(dagger(CMatrix(r)), CMatrix(r_neg)));
}

TEST_CASE("matmul") {
  CHECK(approx_equal(matmul(CMatrix(sigma_x()), CMatrix(sigma_x())),
                     CMatrix::identity(2)));
  CHECK(approx_equal(matmul(CMatrix(hadamard2()), CMatrix(hadamard2())),
                     CMatrix::identity(2)));
  CHECK(approx_equal(matmul(CMatrix(sigma_x()), CMatrix(sigma_y())),
                     CMatrix(Eigen::MatrixXcd(cxd{0, 1} * sigma_z()))));
  CHECK_THROWS_AS(matmul(CMatrix::identity(2), CMatrix::identity(4)),
                  std::invalid_argument);
}

TEST_CASE("trace") {
  CHECK(trace(CMatrix::identity(4)) == cxd{4.0, 0.0});
  CHECK(std::abs(trace(CMatrix(sigma_z()))) == 0.0);
  CHECK_THROWS_AS(trace(CMatrix::zero(2, 3)), std::invalid_argument);
}

TEST_CASE("hermitian_eig anchors") {
  const HermitianEig ez = hermitian_eig(CMatrix(sigma_z()));
  CHECK(ez.values(0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ez.values(1) == doctest::Approx(1.0).epsilon(1e-12));

  const HermitianEig emix = hermitian_eig(
      CMatrix(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(2, 2) * 0.5)));
  CHECK(emix.values(0) == doctest::Approx(0.5));
  CHECK(emix.values(1) == doctest::Approx(0.5));

  const HermitianEig eh = hermitian_eig(CMatrix(hadamard2()));
  CHECK(eh.values(0) == doctest::Approx(-1.0));
  CHECK(eh.values(1) == doctest::Approx(1.0));

  Eigen::MatrixXcd nonherm(2, 2);
  nonherm << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eig(CMatrix(nonherm)), std::invalid_argument);
}

TEST_CASE("hermitian_eig reconstruction") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const Eigen::Index dim = 1 << (1 + trial % 3);
    Eigen::MatrixXcd h = random_cmatrix(dim, dim, rng).dense();
    h = (h + h.adjoint()).eval();
    const CMatrix a(h);
    const HermitianEig eig = hermitian_eig(a);
    const Eigen::MatrixXcd rebuilt =
        eig.vectors * eig.values.cast<cxd>().asDiagonal() * eig.vectors.adjoint();
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-10);
    for (Eigen::Index i = 1; i < eig.values.size(); ++i) {
      CHECK(eig.values(i - 1) <= eig.values(i));
    }
  }
}

TEST_CASE("psd_sqrt") {
  CHECK(approx_equal(psd_sqrt(CMatrix::identity(4)), CMatrix::identity(4), 1e-12));
  CHECK(approx_equal(psd_sqrt(CMatrix::identity(2) * cxd{4.0, 0.0}),
                     CMatrix::identity(2) * cxd{2.0, 0.0}, 1e-12));

  Eigen::MatrixXcd proj0 = Eigen::MatrixXcd::Zero(2, 2);
  proj0(0, 0) = 1.0;
  CHECK(approx_equal(psd_sqrt(CMatrix(proj0)), CMatrix(proj0), 1e-12));

  std::mt19937 rng(3);
  const Eigen::MatrixXcd rho = densim::testing::random_density(8, rng);
  const CMatrix root = psd_sqrt(CMatrix(rho));
  CHECK(max_abs_diff(root * root, CMatrix(rho)) < 1e-9);

  CHECK_THROWS_AS(psd_sqrt(CMatrix(sigma_z())), std::domain_error);
}

TEST_CASE("kron algebra properties") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = random_cmatrix(2, 3, rng);
    const CMatrix b = random_cmatrix(3, 2, rng);
    const CMatrix c = random_cmatrix(2, 2, rng);
    CHECK(max_abs_diff(dagger(kron(a, b)), kron(dagger(a), dagger(b))) <= 1e-12);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
  }
}

TEST_CASE("backend parity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const CMatrix a = random_cmatrix(4, 4, rng);
    const CMatrix b = random_cmatrix(4, 4, rng);
    const CMatrix as = a.to_backend(Backend::sparse);
    const CMatrix bs = b.to_backend(Backend::sparse);
    CHECK(as.is_sparse());

    CHECK(max_abs_diff(a * b, as * bs) <= 1e-12);
    CHECK(max_abs_diff(a + b, as + bs) <= 1e-12);
    CHECK(max_abs_diff(a - b, as - bs) <= 1e-12);
    CHECK(max_abs_diff(kron(a, b), kron(as, bs)) <= 1e-12);
    CHECK(max_abs_diff(dagger(a), dagger(as)) <= 1e-12);
    CHECK(std::abs(trace(a) - trace(as)) <= 1e-12);

    // mixed operands promote to sparse
    CHECK((a * bs).is_sparse());
    CHECK(!(a * b).is_sparse());

    Eigen::MatrixXcd h = (a.dense() + a.dense().adjoint()).eval();
    const HermitianEig ed = hermitian_eig(CMatrix(h));
    const HermitianEig es = hermitian_eig(CMatrix(h).to_backend(Backend::sparse));
    CHECK((ed.values - es.values).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("sparse storage is canonical") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 1.0;
  m(2, 3) = cxd{0.0, -2.0};
  const CMatrix sp(m, Backend::sparse);
  CHECK(sp.is_sparse());
  CHECK(sp.stored_nonzeros() == 2);

  // explicit zeros introduced by arithmetic are pruned
  const CMatrix diff = sp - sp;
  CHECK(diff.stored_nonzeros() == 0);
  CHECK(max_abs_diff(diff, CMatrix::zero(4, 4)) == 0.0);
}

TEST_CASE("default backend switch") {
  CHECK(default_backend() == Backend::dense);
  {
    ScopedBackend guard(Backend::sparse);
    CHECK(default_backend() == Backend::sparse);
    CHECK(CMatrix::identity(4).is_sparse());
    CHECK(CMatrix(Eigen::MatrixXcd::Identity(2, 2)).is_sparse());
  }
  CHECK(default_backend() == Backend::dense);
  CHECK(!CMatrix::identity(4).is_sparse());
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(CMatrix::zero(kMaxDim + 1, 1), std::length_error);
}

TEST_SUITE_END();
