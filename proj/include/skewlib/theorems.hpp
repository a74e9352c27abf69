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
 * Seeded randomized sweeps over the skew-information inequalities.
 *
 * Each sample evaluates one or more signed margins (how much slack an
 * inequality has; equalities use -|lhs - rhs|). A margin below -tolerance is
 * a violation. Sample `i` draws from the stream derive_seed(seed, i), so the
 * result is independent of thread count and every sample can be replayed.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skewlib/linalg.hpp"
#include "skewlib/mean_kernel.hpp"

namespace skew {

struct SweepConfig {
  std::vector<int> dims{2, 3, 4, 5, 6};
  std::vector<MeanOrder> orders = default_order_chain();
  /// Samples per (dim, order) cell.
  std::int64_t samples = 10000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  /// 0 means std::thread::hardware_concurrency().
  int threads = 1;

  /// Throws BadConfig when samples < 1, a dim < 2, orders is empty or
  /// tolerance <= 0.
  void validate() const;
};

struct WorstInstance {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  int d = 0;
  std::string order;
  std::string relation;
  ComplexMatrix rho;
  ComplexMatrix x;
  ComplexMatrix y;
  double margin = 0.0;
};

struct SweepReport {
  std::string suite;
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  /// Most negative margin seen.
  double max_slack = 0.0;
  double tolerance = 0.0;
  std::optional<WorstInstance> worst_instance;
};

enum class Suite {
  Nonnegativity,
  Monotonicity,
  Variance,
  Convexity,
  LowerBound,
  Sandwich,
  Corollary,
  Baselines,
  Search3d,
  PurityScaling,
};

std::string_view suite_name(Suite suite);
std::optional<Suite> suite_from_name(std::string_view name);
/// The suites surfaced by the CLI, in report order.
std::vector<Suite> cli_suites();
/// Search3d never gates.
bool suite_asserts(Suite suite);

/// Nonnegativity (Hermitian and normal X), zero on commuting X,
/// trace-shift invariance, unitary covariance.
SweepReport check_nonnegativity(const SweepConfig& cfg);
/// I^s non-increasing along cfg.orders sorted by exponent.
SweepReport check_monotonicity(const SweepConfig& cfg);
/// I^s <= V, with equality on pure states.
SweepReport check_variance_bound(const SweepConfig& cfg);
/// I^s(sum p_i rho_i) <= sum p_i I^s(rho_i), over independent mixtures and
/// over pure-state ensembles unitarily mixed from the eigen-ensemble.
SweepReport check_convexity(const SweepConfig& cfg);
/// I^s(X) I^s(Y) >= (I^s(X+Y) - I^s(X-Y))^2 / 16
SweepReport check_lower_bound(const SweepConfig& cfg);
/// Qubit only: |Re zeta|^2 <= I^s(X) I^s(Y) <= |zeta|^2.
SweepReport check_qubit_sandwich(const SweepConfig& cfg);
/// Qubit only: 0 <= I_rho(X,Y) <= |Tr rho[X,Y]|^2 / 4.
SweepReport check_corollary(const SweepConfig& cfg);
/// Schrodinger, reformulated Schrodinger and Robertson relations.
SweepReport check_uncertainty_baselines(const SweepConfig& cfg);
/// Report-only: |zeta|^2 - I^s(X) I^s(Y) on d >= 3 instances.
SweepReport search_upper_bound_violations(const SweepConfig& cfg);
/// Qubit pairs of equal purity: equal spectra and I^s(rho,X) = eta I^s(rho',X').
SweepReport check_purity_scaling(const SweepConfig& cfg);

SweepReport run_suite(Suite suite, const SweepConfig& cfg);

/// Re-evaluates one margin of sample `index`.
double replay_margin(Suite suite, const SweepConfig& cfg, std::uint64_t index,
                     std::string_view relation);

nlohmann::json to_json(const SweepReport& report);

/// 2x2 Hermitian matrix of zeta values for the pair (X, Y).
struct PencilMatrix {
  Complex xx;
  Complex xy;
  Complex yx;
  Complex yy;

  double det() const { return (xx * yy - xy * yx).real(); }
};

PencilMatrix pencil_matrix(const DensityMatrix& rho, const MeanOrder& order,
                           const ComplexMatrix& x, const ComplexMatrix& y);
double pencil_det(const DensityMatrix& rho, const MeanOrder& order,
                  const ComplexMatrix& x, const ComplexMatrix& y);

/// (I^s(X+Y) - I^s(X-Y))^2 / 16
double lower_bound_rhs(const DensityMatrix& rho, const MeanOrder& order,
                       const ComplexMatrix& x, const ComplexMatrix& y);
/// I^s(X) I^s(Y) - (I^s(X+Y) - I^s(X-Y))^2 / 16
double corollary_lhs(const DensityMatrix& rho, const MeanOrder& order,
                     const ComplexMatrix& x, const ComplexMatrix& y);
/// |Tr rho[X,Y]|^2 / 4
double commutator_bound(const DensityMatrix& rho, const ComplexMatrix& x,
                        const ComplexMatrix& y);
/// V(X) V(Y) - (V(X+Y) - V(X-Y))^2 / 16
double schrodinger_reformulated_lhs(const DensityMatrix& rho,
                                    const ComplexMatrix& x,
                                    const ComplexMatrix& y);

}  // namespace skew
