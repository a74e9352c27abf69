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

#include "skewlib/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace skew {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NegativeSpectrum: return "NegativeSpectrum";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::OutOfBall: return "OutOfBall";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::DimUnsupported: return "DimUnsupported";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::BadSpectrum: return "BadSpectrum";
    case ErrorCode::BadPurity: return "BadPurity";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalRelTol = 1e-13;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the unitary J = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on the (p,q) plane, where a(p,q) = |a(p,q)| e^{i phi}.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p,
                   Eigen::Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) /
        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex conj_phase = std::conj(phase);

  const Eigen::Index n = a.rows();
  // A <- A J
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * conj_phase * akq;
    a(k, q) = s * akp + c * conj_phase * akq;
  }
  // A <- J^dagger A
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  // V <- V J
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * conj_phase * vkq;
    v(k, q) = s * vkp + c * conj_phase * vkq;
  }
}

}  // namespace

void require_square(const ComplexMatrix& a, std::string_view what) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw Error(ErrorCode::DimMismatch,
                std::string(what) + " must be a non-empty square matrix");
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
}

double hermiticity_defect(const ComplexMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double normality_defect(const ComplexMatrix& a) {
  return (a * a.adjoint() - a.adjoint() * a).norm();
}

EigenDecomposition hermitian_eig(const ComplexMatrix& h, double rank_tol,
                                 SpectrumPolicy policy) {
  require_square(h, "hermitian_eig input");
  if (!h.allFinite())
    throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
  if (hermiticity_defect(h) > kHermitianTol)
    throw Error(ErrorCode::NotHermitian,
                "max |H - H^dagger| = " + std::to_string(hermiticity_defect(h)));

  const Eigen::Index n = h.rows();
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = a.norm();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffDiagonalRelTol * scale) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    double lambda = a(src, src).real();
    if (policy == SpectrumPolicy::PositiveSemidefinite &&
        lambda < -kNegativeSpectrumTol)
      throw Error(ErrorCode::NegativeSpectrum,
                  "eigenvalue " + std::to_string(lambda));
    if (std::abs(lambda) <= rank_tol ||
        (policy == SpectrumPolicy::PositiveSemidefinite && lambda < 0.0))
      lambda = 0.0;
    out.eigenvalues(k) = lambda;
    out.eigenvectors.col(k) = v.col(src);
    if (lambda > rank_tol) ++out.rank;
  }
  return out;
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m,
                                         double rank_tol) {
  require_square(m, "density matrix");
  const Complex tr = m.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kTraceTol)
    throw Error(ErrorCode::NotDensityMatrix,
                "trace must be 1, got " + std::to_string(tr.real()));
  auto eig = hermitian_eig(m, rank_tol, SpectrumPolicy::PositiveSemidefinite);
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(sym), std::move(eig), rank_tol);
}

double DensityMatrix::purity() const {
  return eig_.eigenvalues.squaredNorm();
}

double BlochVector::norm() const {
  return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
}

DensityMatrix bloch_to_density(const BlochVector& b) {
  if (!(b.norm() <= 1.0 + 1e-12))
    throw Error(ErrorCode::OutOfBall,
                "|r| = " + std::to_string(b.norm()) + " exceeds 1");
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + b.r[2]);
  m(1, 1) = 0.5 * (1.0 - b.r[2]);
  m(0, 1) = Complex(0.5 * b.r[0], -0.5 * b.r[1]);
  m(1, 0) = Complex(0.5 * b.r[0], 0.5 * b.r[1]);
  return DensityMatrix::from_matrix(m);
}

ComplexMatrix matrix_power(const DensityMatrix& rho, double p) {
  if (!(p > 0.0 && p <= 1.0))
    throw Error(ErrorCode::BadConfig, "matrix_power exponent must lie in (0,1]");
  const auto& lambda = rho.eigenvalues();
  RealVector powered(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    powered(i) = lambda(i) > 0.0 ? std::pow(lambda(i), p) : 0.0;
  const auto& u = rho.eigenvectors();
  return u * powered.cast<Complex>().asDiagonal() * u.adjoint();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return a * b + b * a;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace argument");
  return a.trace();
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimMismatch, "inner dimensions differ");
  return a * b;
}

ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return a + b;
}

ComplexMatrix scalar_mul(Complex c, const ComplexMatrix& a) { return c * a; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

ComplexMatrix from_string(std::string_view word) {
  if (word.empty()) throw Error(ErrorCode::Parse, "empty Pauli string");
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (char ch : word) {
    ComplexMatrix factor;
    switch (ch) {
      case 'I': case 'i': factor = identity(); break;
      case 'X': case 'x': factor = x(); break;
      case 'Y': case 'y': factor = y(); break;
      case 'Z': case 'z': factor = z(); break;
      default:
        throw Error(ErrorCode::Parse,
                    "invalid Pauli letter '" + std::string(1, ch) + "'");
    }
    out = kron(out, factor);
  }
  return out;
}

}  // namespace pauli
}  // namespace skew
