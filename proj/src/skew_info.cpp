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

#include "skewlib/skew_info.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace skew {

namespace {

void require_observable(const DensityMatrix& rho, const ComplexMatrix& x) {
  if (x.rows() != rho.dim() || x.cols() != rho.dim())
    throw Error(ErrorCode::DimMismatch,
                "observable is " + std::to_string(x.rows()) + "x" +
                    std::to_string(x.cols()) + ", state is " +
                    std::to_string(rho.dim()) + "-dimensional");
}

void require_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw Error(ErrorCode::DimUnsupported, "qubit (d = 2) state required");
}

// Sum over i != j of coeff(i, j) * conj(xt(j, i)) * yt(j, i), where coeff is
// lambda_i - m_s(lambda_i, lambda_j).
Complex zeta_in_eigenbasis(const RealVector& lambda, const MeanOrder& order,
                           const ComplexMatrix& xt, const ComplexMatrix& yt) {
  Complex sum = 0.0;
  const auto n = lambda.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j || lambda(i) == lambda(j)) continue;
      const double coeff = mean_gap(order, lambda(i), lambda(j));
      sum += coeff * std::conj(xt(j, i)) * yt(j, i);
    }
  }
  return sum;
}

}  // namespace

ComplexMatrix to_eigenbasis(const DensityMatrix& rho, const ComplexMatrix& x) {
  require_observable(rho, x);
  const auto& u = rho.eigenvectors();
  return u.adjoint() * x * u;
}

Complex zeta(const DensityMatrix& rho, const MeanOrder& order,
             const ComplexMatrix& x, const ComplexMatrix& y) {
  require_observable(rho, x);
  require_observable(rho, y);
  return zeta_in_eigenbasis(rho.eigenvalues(), order, to_eigenbasis(rho, x),
                            to_eigenbasis(rho, y));
}

double skew_information(const DensityMatrix& rho, const MeanOrder& order,
                        const ComplexMatrix& x, NormalCheck check) {
  require_observable(rho, x);
  const ComplexMatrix xt = to_eigenbasis(rho, x);
  const auto& lambda = rho.eigenvalues();

  if (normality_defect(x) > kNormalityTol) {
    if (check == NormalCheck::Strict)
      throw Error(ErrorCode::NotNormal,
                  "||XX^dagger - X^dagger X||_F = " +
                      std::to_string(normality_defect(x)));
    return zeta_in_eigenbasis(lambda, order, xt, xt).real();
  }

  double sum = 0.0;
  const auto n = lambda.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j || lambda(i) == lambda(j)) continue;
      sum += kernel_weight(order, lambda(i), lambda(j)) * std::norm(xt(j, i));
    }
  }
  return std::max(sum, 0.0);
}

double wy_skew_information_direct(const DensityMatrix& rho,
                                  const ComplexMatrix& x) {
  require_observable(rho, x);
  const ComplexMatrix root = matrix_power(rho, 0.5);
  const ComplexMatrix c = commutator(root, x);
  return -0.5 * (c * c).trace().real();
}

ComplexMatrix symmetric_log_derivative(const DensityMatrix& rho,
                                       const ComplexMatrix& x) {
  const ComplexMatrix xt = to_eigenbasis(rho, x);
  const auto& lambda = rho.eigenvalues();
  const auto n = lambda.size();
  ComplexMatrix lt = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const double total = lambda(k) + lambda(l);
      if (total <= rho.rank_tol()) continue;
      lt(k, l) = Complex(0.0, 2.0) * ((lambda(k) - lambda(l)) / total) * xt(k, l);
    }
  }
  const auto& u = rho.eigenvectors();
  return u * lt * u.adjoint();
}

double qfi_sld(const DensityMatrix& rho, const ComplexMatrix& x) {
  const ComplexMatrix l = symmetric_log_derivative(rho, x);
  return 0.25 * (rho.matrix() * l * l).trace().real();
}

double wyd_skew_information(const DensityMatrix& rho, double w,
                            const ComplexMatrix& x) {
  if (!(w > 0.0 && w < 1.0))
    throw Error(ErrorCode::BadWeight, "WYD weight must lie in (0,1)");
  require_observable(rho, x);
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix xd = x.adjoint();
  const ComplexMatrix rw = matrix_power(rho, w);
  const ComplexMatrix rw_comp = matrix_power(rho, 1.0 - w);
  return (r * xd * x).trace().real() - (rw * xd * rw_comp * x).trace().real();
}

double variance(const DensityMatrix& rho, const ComplexMatrix& x) {
  require_observable(rho, x);
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix xd = x.adjoint();
  return (r * xd * x).trace().real() - std::norm((r * xd).trace());
}

Complex covariance(const DensityMatrix& rho, const ComplexMatrix& x,
                   const ComplexMatrix& y) {
  require_observable(rho, x);
  require_observable(rho, y);
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix xd = x.adjoint();
  return (r * xd * y).trace() - (r * xd).trace() * (r * y).trace();
}

double re_zeta_polarization(const DensityMatrix& rho, const MeanOrder& order,
                            const ComplexMatrix& x, const ComplexMatrix& y) {
  require_observable(rho, x);
  require_observable(rho, y);
  return 0.25 * (skew_information(rho, order, x + y) -
                 skew_information(rho, order, x - y));
}

Complex zeta_polarization(const DensityMatrix& rho, const MeanOrder& order,
                          const ComplexMatrix& x, const ComplexMatrix& y) {
  require_observable(rho, x);
  require_observable(rho, y);
  const Complex i(0.0, 1.0);
  auto q = [&](const ComplexMatrix& z) { return zeta(rho, order, z, z); };
  return 0.25 * ((q(x + y) - q(x - y)) + i * (q(x - i * y) - q(x + i * y)));
}

double im_zeta(const DensityMatrix& rho, const ComplexMatrix& x,
               const ComplexMatrix& y) {
  require_observable(rho, x);
  require_observable(rho, y);
  const Complex t = (rho.matrix() * commutator(x, y)).trace();
  return (t / Complex(0.0, 2.0)).real();
}

double qubit_closed_form(double lambda1, double lambda2, Complex x12,
                         const MeanOrder& order) {
  if (!(lambda1 >= lambda2 && lambda2 >= 0.0) ||
      std::abs(lambda1 + lambda2 - 1.0) > kTraceTol)
    throw Error(ErrorCode::BadSpectrum,
                "need lambda1 >= lambda2 >= 0 with unit sum");
  if (lambda1 == lambda2) return 0.0;
  const double coeff = 1.0 - power_mean(order, lambda1, lambda2) -
                       power_mean(order, lambda2, lambda1);
  return std::max(coeff, 0.0) * std::norm(x12);
}

Complex qubit_off_diagonal(const DensityMatrix& rho, const ComplexMatrix& x) {
  require_qubit(rho);
  return to_eigenbasis(rho, x)(0, 1);
}

double purity_ratio_eta(const DensityMatrix& rho, const ComplexMatrix& x,
                        const DensityMatrix& rho_prime,
                        const ComplexMatrix& x_prime) {
  const double num = std::norm(qubit_off_diagonal(rho, x));
  const double den = std::norm(qubit_off_diagonal(rho_prime, x_prime));
  if (den < 1e-12)
    throw Error(ErrorCode::BadSpectrum,
                "reference observable commutes with its state");
  return num / den;
}

}  // namespace skew
