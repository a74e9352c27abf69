// Copyright 2026 The skewlib Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "skewlib/linalg.hpp"
#include "skewlib/random.hpp"

using namespace skew;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("eigenvalues of diagonal and maximally mixed qubits") {
  const auto e = hermitian_eig(diag2(0.75, 0.25));
  CHECK(e.eigenvalues(0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(e.eigenvalues(1) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(e.rank == 2);
  CHECK(max_abs(e.eigenvectors.cwiseAbs().cast<Complex>() -
                ComplexMatrix::Identity(2, 2)) < 1e-15);

  const auto half = hermitian_eig(diag2(0.5, 0.5));
  CHECK(half.eigenvalues(0) == 0.5);
  CHECK(half.eigenvalues(1) == 0.5);
  CHECK(half.rank == 2);
}

TEST_CASE("off-diagonal qubit matches the characteristic polynomial") {
  ComplexMatrix m(2, 2);
  m << 0.75, 0.25, 0.25, 0.25;
  const auto e = hermitian_eig(m);
  CHECK(std::abs(e.eigenvalues(0) - (1.0 + 1.0 / std::sqrt(2.0)) / 2.0) < 1e-14);
  CHECK(std::abs(e.eigenvalues(1) - (1.0 - 1.0 / std::sqrt(2.0)) / 2.0) < 1e-14);
  const ComplexMatrix back = e.eigenvectors *
                             e.eigenvalues.cast<Complex>().asDiagonal() *
                             e.eigenvectors.adjoint();
  CHECK(max_abs(back - m) < 1e-14);
}

TEST_CASE("Jacobi agrees with quadratic roots on random qubits") {
  Rng rng(2024);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const ComplexMatrix h = random_hermitian(2, rng);
    const double a = h(0, 0).real();
    const double c = h(1, 1).real();
    const double disc = std::hypot((a - c) / 2.0, std::abs(h(0, 1)));
    const auto e = hermitian_eig(h, 0.0);
    worst = std::max(worst, std::abs(e.eigenvalues(0) - ((a + c) / 2.0 + disc)));
    worst = std::max(worst, std::abs(e.eigenvalues(1) - ((a + c) / 2.0 - disc)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("Jacobi agrees with Eigen's self-adjoint solver") {
  Rng rng(99);
  for (int d = 1; d <= 8; ++d) {
    for (int k = 0; k < 50; ++k) {
      const ComplexMatrix h = random_hermitian(d, rng);
      const auto e = hermitian_eig(h, 0.0);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(h);
      RealVector expected = oracle.eigenvalues().reverse();
      CHECK((e.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-11);
      CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors -
                    ComplexMatrix::Identity(d, d)) < 1e-12);
      const ComplexMatrix back = e.eigenvectors *
                                 e.eigenvalues.cast<Complex>().asDiagonal() *
                                 e.eigenvectors.adjoint();
      CHECK(max_abs(back - h) < 1e-11);
    }
  }
}

TEST_CASE("eigensolver rejects bad input") {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.5, 0.2, 1.0;
  CHECK_THROWS_AS(hermitian_eig(m), Error);
  try {
    hermitian_eig(m);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }

  const ComplexMatrix neg = diag2(1.2, -0.2);
  CHECK_NOTHROW(hermitian_eig(neg));
  try {
    hermitian_eig(neg, kDefaultRankTol, SpectrumPolicy::PositiveSemidefinite);
    FAIL("expected NegativeSpectrum");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeSpectrum);
  }
}

TEST_CASE("tiny eigenvalues clamp to zero") {
  const auto e = hermitian_eig(diag2(1.0, -5e-13), kDefaultRankTol,
                               SpectrumPolicy::PositiveSemidefinite);
  CHECK(e.eigenvalues(1) == 0.0);
  CHECK(e.rank == 1);
  CHECK_THROWS(hermitian_eig(diag2(1.0, -1e-7), kDefaultRankTol,
                             SpectrumPolicy::PositiveSemidefinite));
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix::from_matrix(diag2(0.7, 0.2)), Error);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(ComplexMatrix::Identity(2, 3)), Error);
  const auto rho = DensityMatrix::from_matrix(diag2(0.75, 0.25));
  CHECK(rho.purity() == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("Bloch vectors map to states with the right purity") {
  const auto centre = bloch_to_density({{0.0, 0.0, 0.0}});
  CHECK(max_abs(centre.matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);

  const auto pole = bloch_to_density({{0.0, 0.0, 1.0}});
  CHECK(max_abs(pole.matrix() - diag2(1.0, 0.0)) < 1e-15);
  CHECK(pole.rank() == 1);

  const double s3 = std::sqrt(3.0);
  const auto tilted = bloch_to_density({{0.8 * s3 / 4.0, 0.8 / 4.0, 0.8 * s3 / 2.0}});
  CHECK(std::abs(tilted.purity() - 0.82) < 1e-12);

  CHECK_THROWS_AS(bloch_to_density({{0.0, 0.6, 0.81}}), Error);
  CHECK_NOTHROW(bloch_to_density({{0.0, 0.0, 1.0 + 5e-13}}));
}

TEST_CASE("matrix powers") {
  const auto half = bloch_to_density({{0.0, 0.0, 0.0}});
  CHECK(max_abs(matrix_power(half, 0.5) -
                ComplexMatrix::Identity(2, 2) / std::sqrt(2.0)) < 1e-15);
  const auto d34 = DensityMatrix::from_matrix(diag2(0.75, 0.25));
  CHECK(max_abs(matrix_power(d34, 0.5) - diag2(std::sqrt(3.0) / 2.0, 0.5)) < 1e-15);

  Rng rng(5);
  for (int d = 2; d <= 6; ++d) {
    for (int rank = 1; rank <= d; ++rank) {
      const auto rho = random_density_matrix(d, rank, rng);
      const ComplexMatrix root = matrix_power(rho, 0.5);
      CHECK(max_abs(root * root - rho.matrix()) < 1e-10);
      CHECK(max_abs(matrix_power(rho, 1.0) - rho.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("unitary conjugation preserves the spectrum") {
  Rng rng(77);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int d = 2 + k % 5;
    const auto rho = random_density_matrix(d, rng.uniform_int(1, d), rng);
    const ComplexMatrix u = random_unitary(d, rng);
    const auto rotated = DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
    worst = std::max(worst,
                     (rotated.eigenvalues() - rho.eigenvalues()).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("Pauli algebra and matrix helpers") {
  const Complex i(0.0, 1.0);
  CHECK(max_abs(commutator(pauli::x(), pauli::y()) - 2.0 * i * pauli::z()) < 1e-15);
  CHECK(max_abs(anticommutator(pauli::x(), pauli::x()) -
                2.0 * ComplexMatrix::Identity(2, 2)) < 1e-15);
  const auto rho = bloch_to_density({{0.1, 0.2, 0.3}});
  CHECK(max_abs(commutator(rho.matrix(), ComplexMatrix::Identity(2, 2))) == 0.0);

  Rng rng(3);
  for (int d = 2; d <= 6; ++d) {
    ComplexMatrix a(d, d), b(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        a(r, c) = rng.complex_normal();
        b(r, c) = rng.complex_normal();
      }
    CHECK(std::abs(trace(commutator(a, b))) < 1e-12);
    CHECK(max_abs(adjoint(mat_mul(a, b)) - mat_mul(adjoint(b), adjoint(a))) < 1e-13);
    CHECK(max_abs(mat_add(a, scalar_mul(-1.0, a))) == 0.0);
  }
  CHECK_THROWS_AS(mat_mul(pauli::x(), ComplexMatrix::Identity(3, 3)), Error);
  CHECK_THROWS_AS(commutator(pauli::x(), ComplexMatrix::Identity(3, 3)), Error);

  const ComplexMatrix xz = pauli::from_string("XZ");
  CHECK(max_abs(xz - kron(pauli::x(), pauli::z())) == 0.0);
  CHECK(xz.rows() == 4);
  CHECK_THROWS_AS(pauli::from_string("XQ"), Error);
  CHECK(hermiticity_defect(xz) == 0.0);
  CHECK(normality_defect(Complex(1.0, 2.0) * pauli::z()) < 1e-15);
  CHECK(normality_defect(pauli::x() + i * pauli::z()) > 1.0);
}
