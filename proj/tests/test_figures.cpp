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


#include <clocale>
#include <cmath>

#include <doctest.h>

#include "skewlib/figures.hpp"
#include "skewlib/skew_info.hpp"

using namespace skew;

TEST_CASE("twelve significant digits") {
  CHECK(format_sig12(0.0) == "0");
  CHECK(format_sig12(1.0 - std::sqrt(3.0) / 2.0) == "0.133974596216");
  CHECK(format_sig12(0.25) == "0.25");
  CHECK(format_sig12(-20.0) == "-20");
  CHECK(format_sig12(1.5e-13) == "1.5e-13");
}

TEST_CASE("purity curves") {
  PurityCurveConfig cfg;
  cfg.purities = {0.625, 1.0};
  cfg.s_grid = {-1.0, -50.0};
  const auto rows = purity_curves(cfg);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].s_label == "-inf");
  CHECK(rows[1].s_label == "-50");
  CHECK(rows[2].s_label == "-1");
  CHECK(rows[3].s_label == "0");

  const double i_min = rows[0].info, i_50 = rows[1].info, i_1 = rows[2].info;
  CHECK(i_1 <= i_50);
  CHECK(i_50 <= i_min);
  // 2 (m_{-50} - min) with m_{-50}(3/4, 1/4) ~ 2^{1/50} / 4.
  CHECK(std::abs((i_min - i_50) - 0.5 * (std::pow(2.0, 0.02) - 1.0)) <= 1e-8);
  CHECK(std::abs(i_min - 0.5) < 1e-12);

  for (std::size_t k = 4; k < 8; ++k) CHECK(std::abs(rows[k].info - 1.0) <= 1e-9);

  cfg.purities = {0.5 + 1e-9};
  for (const auto& row : purity_curves(cfg)) CHECK(row.info < 1e-4);

  cfg.purities = {0.5};
  CHECK_THROWS_AS(purity_curves(cfg), Error);
  cfg.purities = {1.01};
  CHECK_THROWS_AS(purity_curves(cfg), Error);
  cfg.purities = {0.7};
  cfg.s_grid = {0.5};
  CHECK_THROWS_AS(purity_curves(cfg), Error);
}

TEST_CASE("linear grids") {
  const auto grid = linear_s_grid(-10.0, -1.0, 10);
  REQUIRE(grid.size() == 10);
  CHECK(grid.front() == -10.0);
  CHECK(grid.back() == -1.0);
  CHECK_THROWS_AS(linear_s_grid(-1.0, 0.0, 3), Error);
  const auto radii = linear_radii(5);
  CHECK(radii == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
}

TEST_CASE("Bloch ray rows") {
  const double s3 = std::sqrt(3.0);
  const BlochVector p = bloch_ray_point(std::acos(-1.0) / 3.0, std::acos(-1.0) / 3.0, 0.8);
  CHECK(std::abs(p.r[0] - 0.8 * s3 / 4.0) < 1e-15);
  CHECK(std::abs(p.r[1] - 0.8 / 4.0) < 1e-15);
  CHECK(std::abs(p.r[2] - 0.8 * s3 / 2.0) < 1e-15);

  BlochRayConfig cfg;
  cfg.radii = linear_radii(11);
  const auto rows = bloch_ray(cfg);
  REQUIRE(rows.size() == 22);
  CHECK(rows[0].order == "qfi");
  CHECK(rows[1].order == "wy");
  for (int k = 0; k < 2; ++k) {
    CHECK(rows[k].product == 0.0);
    CHECK(rows[k].corollary_lhs == 0.0);
    CHECK(rows[k].corollary_rhs == 0.0);
  }
  for (const auto& row : rows) {
    CHECK(row.corollary_lhs >= -1e-12);
    CHECK(row.corollary_lhs <= row.corollary_rhs + 1e-12);
  }
  CHECK(std::abs(rows[20].corollary_lhs - rows[20].corollary_rhs) < 1e-12);
  CHECK(std::abs(rows[21].corollary_lhs - rows[21].corollary_rhs) < 1e-12);

  cfg.radii = {1.2};
  CHECK_THROWS_AS(bloch_ray(cfg), Error);
}

TEST_CASE("CSV layout ignores the C locale") {
  PurityCurveConfig cfg;
  cfg.purities = {0.7};
  cfg.s_grid = {-2.5};
  std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  const std::string csv = purity_curves_csv(purity_curves(cfg));
  std::setlocale(LC_NUMERIC, "C");
  CHECK(csv.rfind("purity,s,I_s\n0.7,-inf,", 0) == 0);
  CHECK(csv.find("0.7,-2.5,") != std::string::npos);

  BlochRayConfig ray;
  ray.radii = {0.0, 1.0};
  CHECK(bloch_ray_csv(bloch_ray(ray)).rfind(
            "r,order,product,corollary_lhs,corollary_rhs,lower_bound_rhs\n0,qfi,0,0,0,0\n",
            0) == 0);
}
