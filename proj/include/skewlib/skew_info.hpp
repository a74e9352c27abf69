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
 * Generalized skew information.
 *
 * For rho = sum_i lambda_i |psi_i><psi_i| and a power-mean order s,
 *
 *   zeta(X, Y) = sum_{i != j} [lambda_i - m_s(lambda_i, lambda_j)]
 *                <psi_i|X^dagger|psi_j> <psi_j|Y|psi_i>,
 *
 * and I^s(rho, X) = zeta(X, X). s = 0 is the Wigner-Yanase skew information,
 * s = -1 the quantum Fisher information (normalized as Tr[rho L^2] / 4), and
 * the weighted s = 0 kernel gives the Wigner-Yanase-Dyson family.
 *
 * The kernel routines work in the eigenbasis of rho. The *_direct, qfi_sld
 * and wyd_skew_information routines use trace formulas instead and serve as
 * independent cross-checks.
 */

#pragma once

#include "skewlib/linalg.hpp"
#include "skewlib/mean_kernel.hpp"

namespace skew {

/// Strict mode rejects non-normal X with NotNormal.
enum class NormalCheck { Strict, Lenient };

inline constexpr double kNormalityTol = 1e-10;

/// U^dagger X U in the eigenbasis of rho.
ComplexMatrix to_eigenbasis(const DensityMatrix& rho, const ComplexMatrix& x);

Complex zeta(const DensityMatrix& rho, const MeanOrder& order,
             const ComplexMatrix& x, const ComplexMatrix& y);

/// I^s(rho, X), clamped at zero. For normal X the symmetrized coefficient
/// (lambda_i + lambda_j)/2 - m_s is used. In Lenient mode a non-normal X
/// falls back to Re zeta(X, X), unclamped.
double skew_information(const DensityMatrix& rho, const MeanOrder& order,
                        const ComplexMatrix& x,
                        NormalCheck check = NormalCheck::Strict);

/// -1/2 Tr[[sqrt(rho), X]^2]
double wy_skew_information_direct(const DensityMatrix& rho,
                                  const ComplexMatrix& x);

/// 1/4 Tr[rho L^2] with the symmetric logarithmic derivative
/// L = 2i sum (lambda_k - lambda_l)/(lambda_k + lambda_l) X_kl |k><l|,
/// over pairs with lambda_k + lambda_l > rank_tol.
double qfi_sld(const DensityMatrix& rho, const ComplexMatrix& x);

/// Symmetric logarithmic derivative used by qfi_sld.
ComplexMatrix symmetric_log_derivative(const DensityMatrix& rho,
                                       const ComplexMatrix& x);

/// Tr[rho X^dagger X] - Tr[rho^w X^dagger rho^(1-w) X], 0 < w < 1.
double wyd_skew_information(const DensityMatrix& rho, double w,
                            const ComplexMatrix& x);

/// Tr[rho X^dagger X] - |Tr[rho X^dagger]|^2
double variance(const DensityMatrix& rho, const ComplexMatrix& x);

/// Tr[rho X^dagger Y] - Tr[rho X^dagger] Tr[rho Y]
Complex covariance(const DensityMatrix& rho, const ComplexMatrix& x,
                   const ComplexMatrix& y);

/// (I^s(X+Y) - I^s(X-Y)) / 4
double re_zeta_polarization(const DensityMatrix& rho, const MeanOrder& order,
                            const ComplexMatrix& x, const ComplexMatrix& y);

/// Full sesquilinear polarization
/// [(q(X+Y) - q(X-Y)) + i (q(X-iY) - q(X+iY))] / 4 with q(Z) = zeta(Z, Z).
Complex zeta_polarization(const DensityMatrix& rho, const MeanOrder& order,
                          const ComplexMatrix& x, const ComplexMatrix& y);

/// Tr[rho [X, Y]] / (2i). Equals Im zeta for qubits.
double im_zeta(const DensityMatrix& rho, const ComplexMatrix& x,
               const ComplexMatrix& y);

/// Qubit form (1 - m_s(l1, l2) - m_s(l2, l1)) |x12|^2, which is
/// (1 - 2 m_s(l1, l2)) |x12|^2 for symmetric orders.
double qubit_closed_form(double lambda1, double lambda2, Complex x12,
                         const MeanOrder& order);

/// <psi_1|X|psi_2> for a qubit state.
Complex qubit_off_diagonal(const DensityMatrix& rho, const ComplexMatrix& x);

/// |<psi_1|X|psi_2>|^2 / |<psi'_1|X'|psi'_2>|^2 for two qubit instances.
double purity_ratio_eta(const DensityMatrix& rho, const ComplexMatrix& x,
                        const DensityMatrix& rho_prime,
                        const ComplexMatrix& x_prime);

}  // namespace skew
