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

/**
 * @file
 * Dense complex matrices, the Hermitian eigensolver, and density matrices
 * with cached spectral data.
 */

#pragma once

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "skewlib/error.hpp"

namespace skew {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kNegativeSpectrumTol = 1e-8;

/// Spectral data of a Hermitian matrix. Eigenvalues are sorted descending and
/// eigenvectors are the matching columns of a unitary matrix.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
  int rank = 0;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

enum class SpectrumPolicy {
  General,
  /// Reject eigenvalues below -1e-8 (NegativeSpectrum).
  PositiveSemidefinite,
};

/// Cyclic complex Jacobi eigensolver. Eigenvalues with magnitude at most
/// `rank_tol` are set to exactly zero; `rank` counts the remaining positive
/// ones.
EigenDecomposition hermitian_eig(const ComplexMatrix& h,
                                 double rank_tol = kDefaultRankTol,
                                 SpectrumPolicy policy = SpectrumPolicy::General);

/// Positive semidefinite, unit-trace matrix together with its eigenbasis.
class DensityMatrix {
 public:
  /// Validates hermiticity, trace and spectrum.
  static DensityMatrix from_matrix(const ComplexMatrix& m,
                                   double rank_tol = kDefaultRankTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  const EigenDecomposition& eig() const { return eig_; }
  const RealVector& eigenvalues() const { return eig_.eigenvalues; }
  const ComplexMatrix& eigenvectors() const { return eig_.eigenvectors; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  int rank() const { return eig_.rank; }
  double rank_tol() const { return rank_tol_; }

  /// Tr[rho^2]
  double purity() const;

 private:
  DensityMatrix(ComplexMatrix m, EigenDecomposition e, double rank_tol)
      : matrix_(std::move(m)), eig_(std::move(e)), rank_tol_(rank_tol) {}

  ComplexMatrix matrix_;
  EigenDecomposition eig_;
  double rank_tol_;
};

struct BlochVector {
  std::array<double, 3> r{0.0, 0.0, 0.0};

  double norm() const;
};

/// rho = (1 + r.sigma) / 2
DensityMatrix bloch_to_density(const BlochVector& r);

/// U diag(lambda^p) U^dagger with 0^p = 0, for p in (0, 1].
ComplexMatrix matrix_power(const DensityMatrix& rho, double p);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scalar_mul(Complex c, const ComplexMatrix& a);

/// Largest entry of |A - A^dagger|.
double hermiticity_defect(const ComplexMatrix& a);
/// Frobenius norm of A A^dagger - A^dagger A.
double normality_defect(const ComplexMatrix& a);

void require_square(const ComplexMatrix& a, std::string_view what);
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// Tensor product of single-qubit Paulis, e.g. "XZ" or "IY".
ComplexMatrix from_string(std::string_view word);
}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace skew
