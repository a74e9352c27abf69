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

#include "skewlib/figures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "skewlib/skew_info.hpp"
#include "skewlib/theorems.hpp"

namespace skew {

std::string format_sig12(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::vector<double> linear_s_grid(double s_min, double s_max, int count) {
  if (!(s_min < 0.0 && s_max < 0.0) || s_min > s_max || count < 1)
    throw Error(ErrorCode::BadConfig, "s grid needs s_min <= s_max < 0 and count >= 1");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double t = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    grid.push_back(s_min + t * (s_max - s_min));
  }
  return grid;
}

std::vector<PurityCurveRow> purity_curves(const PurityCurveConfig& cfg) {
  std::vector<double> grid = cfg.s_grid;
  for (double s : grid)
    if (!(s < 0.0) || !std::isfinite(s))
      throw Error(ErrorCode::BadOrder, "s grid must hold finite negative values");
  std::sort(grid.begin(), grid.end());

  const ComplexMatrix x =
      cfg.observable.size() == 0 ? pauli::x() : cfg.observable;
  std::vector<PurityCurveRow> rows;
  for (double purity : cfg.purities) {
    if (!(purity > 0.5 && purity <= 1.0))
      throw Error(ErrorCode::BadPurity, "purity must lie in (1/2, 1], got " +
                                            format_sig12(purity));
    const double r = std::min(1.0, std::sqrt(2.0 * purity - 1.0));
    const DensityMatrix rho = bloch_to_density({{0.0, 0.0, r}});
    auto push = [&](std::string label, const MeanOrder& order) {
      rows.push_back({purity, std::move(label), order,
                      skew_information(rho, order, x)});
    };
    push("-inf", MeanOrder::neg_infinity());
    for (double s : grid) push(format_sig12(s), MeanOrder::finite(s));
    push("0", MeanOrder::zero());
  }
  return rows;
}

BlochVector bloch_ray_point(double theta, double phi, double r) {
  return {{r * std::cos(theta) * std::sin(phi), r * std::cos(theta) * std::cos(phi),
           r * std::sin(theta)}};
}

std::vector<double> linear_radii(int count) {
  if (count < 2) throw Error(ErrorCode::BadConfig, "need at least two radii");
  std::vector<double> radii;
  for (int k = 0; k < count; ++k)
    radii.push_back(static_cast<double>(k) / (count - 1));
  return radii;
}

std::vector<BlochRayRow> bloch_ray(const BlochRayConfig& cfg) {
  const ComplexMatrix x = cfg.x.size() == 0 ? pauli::x() : cfg.x;
  const ComplexMatrix y = cfg.y.size() == 0 ? pauli::y() : cfg.y;
  std::vector<BlochRayRow> rows;
  for (double r : cfg.radii) {
    if (!(r >= 0.0 && r <= 1.0))
      throw Error(ErrorCode::OutOfBall, "radius must lie in [0, 1]");
    BlochVector b = bloch_ray_point(cfg.theta, cfg.phi, r);
    // Keep r = 1 on the sphere despite rounding in the trigonometric factors.
    if (const double n = b.norm(); n > 1.0)
      for (auto& c : b.r) c /= n;
    const DensityMatrix rho = bloch_to_density(b);
    for (const auto& order : cfg.orders) {
      const double product =
          skew_information(rho, order, x) * skew_information(rho, order, y);
      const double lower = lower_bound_rhs(rho, order, x, y);
      rows.push_back({r, order_token(order), product, product - lower,
                      commutator_bound(rho, x, y), lower});
    }
  }
  return rows;
}

std::string purity_curves_csv(const std::vector<PurityCurveRow>& rows) {
  std::string out = "purity,s,I_s\n";
  for (const auto& row : rows)
    out += format_sig12(row.purity) + "," + row.s_label + "," +
           format_sig12(row.info) + "\n";
  return out;
}

std::string bloch_ray_csv(const std::vector<BlochRayRow>& rows) {
  std::string out =
      "r,order,product,corollary_lhs,corollary_rhs,lower_bound_rhs\n";
  for (const auto& row : rows)
    out += format_sig12(row.r) + "," + row.order + "," +
           format_sig12(row.product) + "," + format_sig12(row.corollary_lhs) +
           "," + format_sig12(row.corollary_rhs) + "," +
           format_sig12(row.lower_bound_rhs) + "\n";
  return out;
}

}  // namespace skew
