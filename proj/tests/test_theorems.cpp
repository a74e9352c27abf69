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


#include <cmath>

#include <doctest.h>

#include "skewlib/random.hpp"
#include "skewlib/skew_info.hpp"
#include "skewlib/theorems.hpp"

using namespace skew;

namespace {

SweepConfig small(std::vector<int> dims, std::int64_t samples, std::uint64_t seed) {
  SweepConfig cfg;
  cfg.dims = std::move(dims);
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.threads = 1;
  return cfg;
}

double convexity_margin(const std::vector<double>& p,
                        const std::vector<DensityMatrix>& parts,
                        const MeanOrder& order, const ComplexMatrix& x) {
  ComplexMatrix mix = ComplexMatrix::Zero(parts[0].dim(), parts[0].dim());
  double average = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mix += p[i] * parts[i].matrix();
    average += p[i] * skew_information(parts[i], order, x);
  }
  return average - skew_information(DensityMatrix::from_matrix(mix), order, x);
}

}  // namespace

TEST_CASE("configuration validation") {
  SweepConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = SweepConfig{};
  cfg.dims = {1};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = SweepConfig{};
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = SweepConfig{};
  cfg.orders.clear();
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("suite names") {
  for (Suite s : cli_suites()) CHECK(suite_from_name(suite_name(s)) == s);
  CHECK(cli_suites().size() == 9);
  CHECK_FALSE(suite_from_name("bogus").has_value());
  CHECK_FALSE(suite_asserts(Suite::Search3d));
  CHECK(suite_asserts(Suite::Convexity));
}

TEST_CASE("convexity of a two-state mixture") {
  const auto zero = bloch_to_density({{0.0, 0.0, 1.0}});
  const auto plus = bloch_to_density({{1.0, 0.0, 0.0}});
  const ComplexMatrix z = pauli::z();
  CHECK(skew_information(zero, MeanOrder::wy(), z) < 1e-15);
  CHECK(std::abs(skew_information(plus, MeanOrder::wy(), z) - 1.0) < 1e-14);

  // The mixture is [[3/4, 1/4], [1/4, 1/4]].
  const double lp = (1.0 + 1.0 / std::sqrt(2.0)) / 2.0, lm = 1.0 - lp;
  const double oracle = (1.0 - 2.0 * std::sqrt(lp * lm)) * 0.5;
  const double margin = convexity_margin({0.5, 0.5}, {zero, plus}, MeanOrder::wy(), z);
  CHECK(std::abs(margin - (0.5 - oracle)) < 1e-12);
  CHECK(margin > 0.0);

  Rng rng(1);
  const auto rho = random_density_matrix(3, 2, rng);
  const ComplexMatrix x = random_hermitian(3, rng);
  CHECK(std::abs(convexity_margin({0.3, 0.7}, {rho, rho}, MeanOrder::qfi(), x)) < 1e-12);

  const auto a = DensityMatrix::from_matrix(ComplexMatrix(ComplexMatrix::Identity(2, 2) * 0.5));
  CHECK(convexity_margin({0.5, 0.5}, {zero, a}, MeanOrder::min(), z) == 0.0);
}

TEST_CASE("convexity fails for the minimum order on a qubit") {
  // I^{-inf}(rho, sigma_z) = (1 - 2 min(l1, l2)) |x12|^2 is not convex.
  const auto r1 = bloch_to_density({{0.7, 0.0, 0.5}});
  const auto r2 = bloch_to_density({{0.86, 0.0, 0.5}});
  const double margin =
      convexity_margin({0.5, 0.5}, {r1, r2}, MeanOrder::min(), pauli::z());
  CHECK(margin == doctest::Approx(-1.209e-4).epsilon(1e-3));
  // The geometric and harmonic means keep it convex.
  CHECK(convexity_margin({0.5, 0.5}, {r1, r2}, MeanOrder::wy(), pauli::z()) > 0.0);
  CHECK(convexity_margin({0.5, 0.5}, {r1, r2}, MeanOrder::qfi(), pauli::z()) > 0.0);
}

TEST_CASE("lower bound equality cases") {
  Rng rng(2);
  for (int d = 2; d <= 6; ++d) {
    const auto rho = random_density_matrix(d, rng.uniform_int(1, d), rng);
    const ComplexMatrix x = random_hermitian(d, rng);
    for (const auto& o : default_order_chain()) {
      const double info = skew_information(rho, o, x);
      CHECK(std::abs(info * info - lower_bound_rhs(rho, o, x, x)) <= 1e-10);
      CHECK(lower_bound_rhs(rho, o, x, ComplexMatrix::Identity(d, d)) < 1e-20);
    }
  }
}

TEST_CASE("pencil matrix") {
  const auto half = bloch_to_density({{0.0, 0.0, 0.0}});
  CHECK(pencil_det(half, MeanOrder::wy(), pauli::x(), pauli::y()) == 0.0);

  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto pure = bloch_to_density({{0.0, 0.6, 0.8}});
    const ComplexMatrix x = random_hermitian(2, rng), y = random_hermitian(2, rng);
    for (const auto& o : default_order_chain()) {
      CHECK(std::abs(pencil_det(pure, o, x, y)) < 1e-12);
      const auto rho = bloch_to_density(random_bloch_vector(rng));
      const PencilMatrix p = pencil_matrix(rho, o, x, y);
      CHECK(std::abs(p.xy - std::conj(p.yx)) < 1e-14);
      CHECK(pencil_det(rho, o, x, y) <= 1e-12);
    }
  }
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  CHECK(pencil_det(DensityMatrix::from_matrix(m), MeanOrder::wy(), pauli::x(), pauli::y()) <=
        0.0);
  CHECK_THROWS_AS(pencil_det(random_density_matrix(3, 3, rng), MeanOrder::wy(),
                             random_hermitian(3, rng), random_hermitian(3, rng)),
                  Error);
}

TEST_CASE("corollary and baseline examples") {
  const auto half = bloch_to_density({{0.0, 0.0, 0.0}});
  CHECK(corollary_lhs(half, MeanOrder::wy(), pauli::x(), pauli::y()) == 0.0);
  CHECK(commutator_bound(half, pauli::x(), pauli::y()) == 0.0);
  CHECK(std::abs(variance(half, pauli::x()) * variance(half, pauli::y()) - 1.0) < 1e-15);

  const auto pure = bloch_to_density({{0.0, 0.0, 1.0}});
  for (const auto& o : default_order_chain()) {
    const double im = zeta(pure, o, pauli::x(), pauli::y()).imag();
    CHECK(std::abs(corollary_lhs(pure, o, pauli::x(), pauli::y()) - im * im) < 1e-14);
    CHECK(std::abs(commutator_bound(pure, pauli::x(), pauli::y()) - im * im) < 1e-14);
  }

  Rng rng(4);
  const auto rho = random_density_matrix(3, 3, rng);
  const ComplexMatrix x = random_hermitian(3, rng);
  CHECK(std::abs(variance(rho, x) * variance(rho, x) - std::norm(covariance(rho, x, x))) <
        1e-12);
}

TEST_CASE("upper bound holds for an embedded qubit") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto q = bloch_to_density(random_bloch_vector(rng));
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m.topLeftCorner(2, 2) = q.matrix();
    const auto rho = DensityMatrix::from_matrix(m);
    ComplexMatrix x = ComplexMatrix::Zero(3, 3), y = ComplexMatrix::Zero(3, 3);
    x.topLeftCorner(2, 2) = random_hermitian(2, rng);
    y.topLeftCorner(2, 2) = random_hermitian(2, rng);
    for (const auto& o : default_order_chain()) {
      const double margin = std::norm(zeta(rho, o, x, y)) -
                            skew_information(rho, o, x) * skew_information(rho, o, y);
      CHECK(margin >= -1e-9);
      CHECK(std::abs(std::norm(zeta(rho, o, x, x)) -
                     std::pow(skew_information(rho, o, x), 2)) < 1e-12);
    }
  }
}

TEST_CASE("sweeps are deterministic and independent of thread count") {
  SweepConfig cfg = small({2, 3}, 200, 7);
  const auto a = check_lower_bound(cfg);
  cfg.threads = 3;
  const auto b = check_lower_bound(cfg);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a.checked == 2 * 7 * 200);
  cfg.seed = 8;
  CHECK(to_json(check_lower_bound(cfg)).dump() != to_json(a).dump());
}

TEST_CASE("the worst instance replays exactly") {
  for (Suite suite : {Suite::Nonnegativity, Suite::Convexity, Suite::LowerBound,
                      Suite::Baselines, Suite::Monotonicity}) {
    const SweepConfig cfg = small({2, 4}, 100, 11);
    const auto report = run_suite(suite, cfg);
    REQUIRE(report.worst_instance.has_value());
    const auto& w = *report.worst_instance;
    CHECK(w.margin == report.max_slack);
    CHECK(std::abs(replay_margin(suite, cfg, w.index, w.relation) - w.margin) <= 1e-12);
    const auto j = to_json(report);
    CHECK(j["worst_instance"]["seed"] == 11);
    CHECK(j["worst_instance"]["rho"].size() == static_cast<std::size_t>(w.d));
  }
  const SweepConfig search = small({3}, 200, 12);
  const auto report = search_upper_bound_violations(search);
  REQUIRE(report.worst_instance.has_value());
  CHECK(std::abs(replay_margin(Suite::Search3d, search, report.worst_instance->index,
                               "upper_bound") -
                 report.max_slack) <= 1e-12);
}

TEST_CASE("qubit sweeps include the equality strata") {
  SweepConfig cfg = small({2}, 2000, 13);
  cfg.orders = {MeanOrder::wy()};
  int equality = 0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    double margin = 0.0;
    try {
      margin = replay_margin(Suite::Sandwich, cfg, i, "upper_equality");
    } catch (const Error&) {
      continue;
    }
    CHECK(margin >= -1e-9);
    ++equality;
  }
  // Pure states (20%) plus proportional observables (10%).
  CHECK(equality > 500);
  CHECK(equality < 700);
}

TEST_CASE("qubit suites reject other dimensions") {
  CHECK_THROWS_AS(check_qubit_sandwich(small({3}, 10, 1)), Error);
  CHECK_THROWS_AS(check_corollary(small({2, 3}, 10, 1)), Error);
  CHECK_THROWS_AS(check_purity_scaling(small({4}, 10, 1)), Error);
  CHECK_THROWS_AS(search_upper_bound_violations(small({2}, 10, 1)), Error);
}

TEST_CASE("proven relations hold on small sweeps") {
  const SweepConfig cfg = small({2, 3, 4}, 300, 21);
  SweepConfig proven = cfg;
  proven.orders = {MeanOrder::qfi(), MeanOrder::finite(-0.5), MeanOrder::wy(),
                   MeanOrder::wyd(0.25)};
  CHECK(check_nonnegativity(cfg).violations == 0);
  CHECK(check_monotonicity(cfg).violations == 0);
  CHECK(check_variance_bound(cfg).violations == 0);
  CHECK(check_convexity(proven).violations == 0);
  CHECK(check_lower_bound(cfg).violations == 0);
  CHECK(check_uncertainty_baselines(cfg).violations == 0);
  const SweepConfig qubit = small({2}, 1000, 22);
  CHECK(check_qubit_sandwich(qubit).violations == 0);
  CHECK(check_corollary(qubit).violations == 0);
  CHECK(check_purity_scaling(qubit).violations == 0);
}
