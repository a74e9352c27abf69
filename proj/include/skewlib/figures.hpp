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
 * Qubit datasets: I^s versus s at fixed purity, and the skew-information
 * bounds along a ray of the Bloch ball.
 */

#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "skewlib/linalg.hpp"
#include "skewlib/mean_kernel.hpp"

namespace skew {

struct PurityCurveConfig {
  std::vector<double> purities{0.55, 0.7, 0.85, 1.0};
  /// Finite negative orders; -inf and 0 rows are always added.
  std::vector<double> s_grid;
  ComplexMatrix observable;
};

struct PurityCurveRow {
  double purity;
  /// "-inf", "0", or the finite order.
  std::string s_label;
  MeanOrder order;
  double info;
};

/// Evenly spaced finite orders from s_min to s_max (both < 0).
std::vector<double> linear_s_grid(double s_min, double s_max, int count);

/// Rows per purity: -inf first, then s_grid ascending, then 0. The state is
/// (1 + r sigma_z)/2 with r = sqrt(2 P - 1). Throws BadPurity outside (1/2, 1].
std::vector<PurityCurveRow> purity_curves(const PurityCurveConfig& cfg);

struct BlochRayConfig {
  double theta = std::numbers::pi / 3.0;
  double phi = std::numbers::pi / 3.0;
  std::vector<double> radii;
  ComplexMatrix x;
  ComplexMatrix y;
  std::vector<MeanOrder> orders{MeanOrder::qfi(), MeanOrder::wy()};
};

struct BlochRayRow {
  double r;
  std::string order;
  double product;
  double corollary_lhs;
  double corollary_rhs;
  double lower_bound_rhs;
};

/// r (cos t sin p, cos t cos p, sin t) for t = theta, p = phi.
BlochVector bloch_ray_point(double theta, double phi, double r);

std::vector<double> linear_radii(int count);

std::vector<BlochRayRow> bloch_ray(const BlochRayConfig& cfg);

/// Locale-independent shortest form with at most 12 significant digits.
std::string format_sig12(double v);

std::string purity_curves_csv(const std::vector<PurityCurveRow>& rows);
std::string bloch_ray_csv(const std::vector<BlochRayRow>& rows);

}  // namespace skew
