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

#include "skewlib/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "skewlib/matrix_io.hpp"
#include "skewlib/random.hpp"
#include "skewlib/skew_info.hpp"

namespace skew {

namespace {

struct Cell {
  int d = 2;
  std::optional<MeanOrder> order;
};

struct Margin {
  const char* relation;
  double value;
  /// Violation threshold; negative means "use the configured tolerance".
  double allowed = -1.0;
};

struct Outcome {
  std::vector<Margin> margins;
  ComplexMatrix rho;
  ComplexMatrix x;
  ComplexMatrix y;
};

using SampleFn = std::function<Outcome(const SweepConfig&, const Cell&, Rng&)>;

struct SuitePlan {
  Suite suite;
  std::vector<Cell> cells;
  SampleFn sample;
};

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body) {
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (;;) {
          const std::size_t start = next.fetch_add(kChunk);
          if (start >= n) break;
          const std::size_t stop = std::min(n, start + kChunk);
          for (std::size_t i = start; i < stop; ++i) body(i);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------------------
// Sampling helpers

// 25% pure states; otherwise rank uniform in [2, d].
DensityMatrix draw_state(int d, Rng& rng) {
  const bool pure = rng.uniform() < 0.25;
  const int rank = pure || d == 1 ? 1 : rng.uniform_int(2, d);
  return random_density_matrix(d, rank, rng);
}

Eigen::Vector3d random_direction(Rng& rng) {
  Eigen::Vector3d v(rng.normal(), rng.normal(), rng.normal());
  return v / v.norm();
}

BlochVector to_bloch(const Eigen::Vector3d& v) { return {{v(0), v(1), v(2)}}; }

enum class QubitStratum { Pure, NearMaximallyMixed, Proportional, Generic };

struct QubitInstance {
  DensityMatrix rho;
  ComplexMatrix x;
  ComplexMatrix y;
  QubitStratum stratum;
};

// 20% pure, 5% within 1e-3 of the maximally mixed state, 10% with X = kappa Y,
// the rest uniform in the Bloch ball.
QubitInstance draw_qubit_instance(Rng& rng) {
  const double u = rng.uniform();
  QubitStratum stratum = QubitStratum::Generic;
  BlochVector r;
  if (u < 0.20) {
    stratum = QubitStratum::Pure;
    r = to_bloch(random_direction(rng));
  } else if (u < 0.25) {
    stratum = QubitStratum::NearMaximallyMixed;
    r = to_bloch(random_direction(rng) * rng.uniform(0.0, 1e-3));
  } else {
    if (u < 0.35) stratum = QubitStratum::Proportional;
    r = random_bloch_vector(rng);
  }
  DensityMatrix rho = bloch_to_density(r);
  ComplexMatrix y = random_hermitian(2, rng);
  ComplexMatrix x = stratum == QubitStratum::Proportional
                        ? ComplexMatrix(rng.uniform(-3.0, 3.0) * y)
                        : random_hermitian(2, rng);
  return {std::move(rho), std::move(x), std::move(y), stratum};
}

double product_of_infos(const DensityMatrix& rho, const MeanOrder& order,
                        const ComplexMatrix& x, const ComplexMatrix& y) {
  return skew_information(rho, order, x) * skew_information(rho, order, y);
}

// ---------------------------------------------------------------------------
// Per-suite samples

Outcome sample_nonnegativity(const SweepConfig&, const Cell& cell, Rng& rng) {
  const MeanOrder& order = *cell.order;
  const int d = cell.d;
  DensityMatrix rho = draw_state(d, rng);
  const ComplexMatrix x = random_hermitian(d, rng);
  const ComplexMatrix z = random_normal_matrix(d, rng);
  Outcome out;

  const double raw = zeta(rho, order, x, x).real();
  out.margins.push_back({"nonneg_hermitian", raw});
  // The normal-operator argument needs a symmetric mean.
  if (order.symmetric())
    out.margins.push_back({"nonneg_normal", zeta(rho, order, z, z).real()});

  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix g = rng.normal() * ComplexMatrix::Identity(d, d) +
                          rng.normal() * r + rng.normal() * (r * r);
  out.margins.push_back(
      {"commuting_zero", -std::abs(zeta(rho, order, g, g).real())});
  if (raw < 1e-12)
    out.margins.push_back(
        {"commuting_converse", 1e-5 - commutator(r, x).norm()});

  const double base = skew_information(rho, order, x);
  const double shift = rng.uniform(-5.0, 5.0);
  const ComplexMatrix shifted = x + shift * ComplexMatrix::Identity(d, d);
  out.margins.push_back(
      {"trace_shift", -std::abs(skew_information(rho, order, shifted) - base)});

  const ComplexMatrix u = random_unitary(d, rng);
  const DensityMatrix rotated = DensityMatrix::from_matrix(u * r * u.adjoint());
  const double lhs = skew_information(rotated, order, x);
  const double rhs = skew_information(rho, order, u.adjoint() * x * u);
  out.margins.push_back({"unitary_covariance", -std::abs(lhs - rhs)});

  out.rho = r;
  out.x = x;
  out.y = z;
  return out;
}

Outcome sample_monotonicity(const SweepConfig& cfg, const Cell& cell, Rng& rng) {
  std::vector<MeanOrder> chain = cfg.orders;
  std::stable_sort(chain.begin(), chain.end());
  DensityMatrix rho = draw_state(cell.d, rng);
  const ComplexMatrix x = random_hermitian(cell.d, rng);
  Outcome out;
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const double value = skew_information(rho, chain[k], x);
    if (k > 0) out.margins.push_back({"monotone", previous - value});
    previous = value;
  }
  out.rho = rho.matrix();
  out.x = x;
  return out;
}

Outcome sample_variance(const SweepConfig&, const Cell& cell, Rng& rng) {
  DensityMatrix rho = draw_state(cell.d, rng);
  const ComplexMatrix x = random_hermitian(cell.d, rng);
  const double info = skew_information(rho, *cell.order, x);
  const double var = variance(rho, x);
  Outcome out;
  out.margins.push_back({"variance_bound", var - info});
  if (rho.rank() == 1)
    out.margins.push_back({"pure_equality", -std::abs(var - info)});
  out.rho = rho.matrix();
  out.x = x;
  return out;
}

Outcome sample_convexity(const SweepConfig&, const Cell& cell, Rng& rng) {
  const MeanOrder& order = *cell.order;
  const int d = cell.d;
  const int k = rng.uniform_int(2, 4);
  const bool ensemble = rng.uniform() < 0.5;
  const ComplexMatrix x = random_hermitian(d, rng);
  Outcome out;

  if (!ensemble) {
    std::vector<double> p(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto& w : p) total += (w = rng.exponential());
    for (auto& w : p) w /= total;
    ComplexMatrix mix = ComplexMatrix::Zero(d, d);
    double average = 0.0;
    for (int i = 0; i < k; ++i) {
      const DensityMatrix component = draw_state(d, rng);
      mix += p[static_cast<std::size_t>(i)] * component.matrix();
      average += p[static_cast<std::size_t>(i)] *
                 skew_information(component, order, x);
    }
    const DensityMatrix rho = DensityMatrix::from_matrix(mix);
    out.margins.push_back(
        {"convexity_mixture", average - skew_information(rho, order, x)});
    out.rho = rho.matrix();
  } else {
    // sqrt(p_i)|phi_i> = sum_j W_ij sqrt(lambda_j)|psi_j> for a k x k unitary W
    // reproduces rho for every W.
    const int rank = rng.uniform_int(1, std::min(d, k));
    const DensityMatrix rho = random_density_matrix(d, rank, rng);
    const ComplexMatrix w = random_unitary(k, rng);
    const auto& lambda = rho.eigenvalues();
    const auto& psi = rho.eigenvectors();
    double average = 0.0;
    for (int i = 0; i < k; ++i) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
      for (int j = 0; j < rank; ++j) v += w(i, j) * std::sqrt(lambda(j)) * psi.col(j);
      const double p = v.squaredNorm();
      if (p < 1e-13) continue;
      const DensityMatrix component =
          DensityMatrix::from_matrix(v * v.adjoint() / p);
      average += p * skew_information(component, order, x);
    }
    out.margins.push_back(
        {"convexity_ensemble", average - skew_information(rho, order, x)});
    out.rho = rho.matrix();
  }
  out.x = x;
  return out;
}

Outcome sample_lower_bound(const SweepConfig&, const Cell& cell, Rng& rng) {
  DensityMatrix rho = draw_state(cell.d, rng);
  const ComplexMatrix x = random_hermitian(cell.d, rng);
  const ComplexMatrix y = random_hermitian(cell.d, rng);
  const MeanOrder& order = *cell.order;
  Outcome out;
  out.margins.push_back({"lower_bound", product_of_infos(rho, order, x, y) -
                                            lower_bound_rhs(rho, order, x, y)});
  out.rho = rho.matrix();
  out.x = x;
  out.y = y;
  return out;
}

Outcome sample_sandwich(const SweepConfig&, const Cell& cell, Rng& rng) {
  const MeanOrder& order = *cell.order;
  QubitInstance inst = draw_qubit_instance(rng);
  const double product = product_of_infos(inst.rho, order, inst.x, inst.y);
  const Complex z = zeta(inst.rho, order, inst.x, inst.y);
  const double upper = std::norm(z) - product;
  Outcome out;
  out.margins.push_back({"sandwich_lower", product - z.real() * z.real()});
  out.margins.push_back({"sandwich_upper", upper});
  const bool equality_stratum =
      inst.stratum == QubitStratum::Pure ||
      inst.stratum == QubitStratum::Proportional ||
      (order.kind() == MeanOrder::Kind::NegInfinity && order.symmetric());
  if (equality_stratum) out.margins.push_back({"upper_equality", -std::abs(upper)});
  out.rho = inst.rho.matrix();
  out.x = inst.x;
  out.y = inst.y;
  return out;
}

Outcome sample_corollary(const SweepConfig&, const Cell& cell, Rng& rng) {
  const MeanOrder& order = *cell.order;
  QubitInstance inst = draw_qubit_instance(rng);
  const double lhs = corollary_lhs(inst.rho, order, inst.x, inst.y);
  Outcome out;
  out.margins.push_back({"corollary_nonneg", lhs});
  out.margins.push_back(
      {"corollary_bound", commutator_bound(inst.rho, inst.x, inst.y) - lhs});
  out.rho = inst.rho.matrix();
  out.x = inst.x;
  out.y = inst.y;
  return out;
}

Outcome sample_baselines(const SweepConfig&, const Cell& cell, Rng& rng) {
  DensityMatrix rho = draw_state(cell.d, rng);
  const ComplexMatrix x = random_hermitian(cell.d, rng);
  const ComplexMatrix y = random_hermitian(cell.d, rng);
  const double vv = variance(rho, x) * variance(rho, y);
  const double comm = commutator_bound(rho, x, y);
  Outcome out;
  out.margins.push_back({"schrodinger", vv - std::norm(covariance(rho, x, y))});
  out.margins.push_back(
      {"schrodinger_reformulated", schrodinger_reformulated_lhs(rho, x, y) - comm});
  out.margins.push_back({"robertson", vv - comm});
  out.rho = rho.matrix();
  out.x = x;
  out.y = y;
  return out;
}

Outcome sample_search(const SweepConfig&, const Cell& cell, Rng& rng) {
  DensityMatrix rho = draw_state(cell.d, rng);
  const ComplexMatrix x = random_hermitian(cell.d, rng);
  const ComplexMatrix y = random_hermitian(cell.d, rng);
  const MeanOrder& order = *cell.order;
  Outcome out;
  out.margins.push_back(
      {"upper_bound", std::norm(zeta(rho, order, x, y)) -
                          product_of_infos(rho, order, x, y)});
  out.rho = rho.matrix();
  out.x = x;
  out.y = y;
  return out;
}

Outcome sample_purity_scaling(const SweepConfig&, const Cell& cell, Rng& rng) {
  const MeanOrder& order = *cell.order;
  const double radius = rng.uniform();
  const DensityMatrix rho = bloch_to_density(to_bloch(random_direction(rng) * radius));
  const DensityMatrix rho_prime =
      bloch_to_density(to_bloch(random_direction(rng) * radius));
  const ComplexMatrix x = random_hermitian(2, rng);
  const ComplexMatrix x_prime = random_hermitian(2, rng);
  Outcome out;
  const double spectrum_gap =
      (rho.eigenvalues() - rho_prime.eigenvalues()).cwiseAbs().maxCoeff();
  out.margins.push_back({"equal_spectrum", -spectrum_gap, 1e-10});

  // Undefined when X' commutes with rho' or both sides vanish.
  const double ref = std::norm(qubit_off_diagonal(rho_prime, x_prime));
  const double info = skew_information(rho, order, x);
  const double info_prime = skew_information(rho_prime, order, x_prime);
  if (ref >= 1e-12 && std::max(info, info_prime) > 1e-300) {
    const double eta = purity_ratio_eta(rho, x, rho_prime, x_prime);
    const double scale = std::max(info, eta * info_prime);
    if (scale > 1e-300)
      out.margins.push_back(
          {"eta_ratio", -std::abs(info - eta * info_prime) / scale, 1e-8});
  }
  out.rho = rho.matrix();
  out.x = x;
  out.y = x_prime;
  return out;
}

// ---------------------------------------------------------------------------
// Planning and execution

void require_dims(const SweepConfig& cfg, Suite suite) {
  for (int d : cfg.dims) {
    const bool qubit_only =
        suite == Suite::Sandwich || suite == Suite::Corollary ||
        suite == Suite::PurityScaling;
    if (qubit_only && d != 2)
      throw Error(ErrorCode::DimUnsupported,
                  std::string(suite_name(suite)) + " requires d = 2");
    if (suite == Suite::Search3d && d < 3)
      throw Error(ErrorCode::DimUnsupported, "search3d requires d >= 3");
  }
}

SuitePlan plan(Suite suite, const SweepConfig& cfg) {
  cfg.validate();
  require_dims(cfg, suite);
  SuitePlan p{suite, {}, {}};
  const bool order_free = suite == Suite::Monotonicity || suite == Suite::Baselines;
  for (int d : cfg.dims) {
    if (order_free) {
      p.cells.push_back({d, std::nullopt});
    } else {
      for (const auto& o : cfg.orders) p.cells.push_back({d, o});
    }
  }
  switch (suite) {
    case Suite::Nonnegativity: p.sample = sample_nonnegativity; break;
    case Suite::Monotonicity: p.sample = sample_monotonicity; break;
    case Suite::Variance: p.sample = sample_variance; break;
    case Suite::Convexity: p.sample = sample_convexity; break;
    case Suite::LowerBound: p.sample = sample_lower_bound; break;
    case Suite::Sandwich: p.sample = sample_sandwich; break;
    case Suite::Corollary: p.sample = sample_corollary; break;
    case Suite::Baselines: p.sample = sample_baselines; break;
    case Suite::Search3d: p.sample = sample_search; break;
    case Suite::PurityScaling: p.sample = sample_purity_scaling; break;
  }
  return p;
}

Outcome evaluate(const SuitePlan& p, const SweepConfig& cfg, std::uint64_t index) {
  const auto cell_index = index / static_cast<std::uint64_t>(cfg.samples);
  Rng rng(derive_seed(cfg.seed, index));
  return p.sample(cfg, p.cells.at(cell_index), rng);
}

std::string cell_order_label(const Cell& cell, Suite suite) {
  if (cell.order) return order_token(*cell.order);
  return suite == Suite::Monotonicity ? "chain" : "none";
}

struct SampleSummary {
  double min_margin = std::numeric_limits<double>::infinity();
  std::int32_t min_relation = -1;
  std::int32_t count = 0;
  std::int32_t violations = 0;
};

SweepReport execute(const SuitePlan& p, const SweepConfig& cfg) {
  const auto total = static_cast<std::size_t>(p.cells.size()) *
                     static_cast<std::size_t>(cfg.samples);
  std::vector<SampleSummary> summaries(total);
  parallel_for(total, cfg.threads, [&](std::size_t i) {
    const Outcome out = evaluate(p, cfg, i);
    SampleSummary s;
    for (std::size_t k = 0; k < out.margins.size(); ++k) {
      const Margin& m = out.margins[k];
      const double allowed = m.allowed < 0.0 ? cfg.tolerance : m.allowed;
      const double value = std::isnan(m.value)
                               ? -std::numeric_limits<double>::infinity()
                               : m.value;
      ++s.count;
      if (value < -allowed) ++s.violations;
      if (value < s.min_margin) {
        s.min_margin = value;
        s.min_relation = static_cast<std::int32_t>(k);
      }
    }
    summaries[i] = s;
  });

  SweepReport report;
  report.suite = std::string(suite_name(p.suite));
  report.tolerance = cfg.tolerance;
  report.max_slack = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> worst;
  for (std::size_t i = 0; i < total; ++i) {
    const auto& s = summaries[i];
    report.checked += s.count;
    report.violations += s.violations;
    if (s.min_relation >= 0 && s.min_margin < report.max_slack) {
      report.max_slack = s.min_margin;
      worst = i;
    }
  }
  if (worst) {
    const Outcome out = evaluate(p, cfg, *worst);
    const auto& m = out.margins[static_cast<std::size_t>(summaries[*worst].min_relation)];
    const Cell& cell = p.cells[*worst / static_cast<std::size_t>(cfg.samples)];
    report.worst_instance = WorstInstance{
        cfg.seed, static_cast<std::uint64_t>(*worst), cell.d,
        cell_order_label(cell, p.suite), m.relation, out.rho, out.x, out.y,
        m.value};
  }
  return report;
}

}  // namespace

void SweepConfig::validate() const {
  if (samples < 1) throw Error(ErrorCode::BadConfig, "samples must be >= 1");
  if (dims.empty()) throw Error(ErrorCode::BadConfig, "dims must not be empty");
  for (int d : dims)
    if (d < 2) throw Error(ErrorCode::BadConfig, "dims must be >= 2");
  if (orders.empty()) throw Error(ErrorCode::BadConfig, "orders must not be empty");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::BadConfig, "tolerance must be > 0");
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Nonnegativity: return "nonneg";
    case Suite::Monotonicity: return "monotone";
    case Suite::Variance: return "variance";
    case Suite::Convexity: return "convexity";
    case Suite::LowerBound: return "lower";
    case Suite::Sandwich: return "sandwich";
    case Suite::Corollary: return "corollary";
    case Suite::Baselines: return "baselines";
    case Suite::Search3d: return "search3d";
    case Suite::PurityScaling: return "purity";
  }
  return "";
}

std::optional<Suite> suite_from_name(std::string_view name) {
  for (Suite s : {Suite::Nonnegativity, Suite::Monotonicity, Suite::Variance,
                  Suite::Convexity, Suite::LowerBound, Suite::Sandwich,
                  Suite::Corollary, Suite::Baselines, Suite::Search3d,
                  Suite::PurityScaling})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::vector<Suite> cli_suites() {
  return {Suite::Nonnegativity, Suite::Monotonicity, Suite::Variance,
          Suite::Convexity,     Suite::LowerBound,   Suite::Sandwich,
          Suite::Corollary,     Suite::Baselines,    Suite::Search3d};
}

bool suite_asserts(Suite suite) { return suite != Suite::Search3d; }

SweepReport run_suite(Suite suite, const SweepConfig& cfg) {
  return execute(plan(suite, cfg), cfg);
}

SweepReport check_nonnegativity(const SweepConfig& cfg) {
  return run_suite(Suite::Nonnegativity, cfg);
}
SweepReport check_monotonicity(const SweepConfig& cfg) {
  return run_suite(Suite::Monotonicity, cfg);
}
SweepReport check_variance_bound(const SweepConfig& cfg) {
  return run_suite(Suite::Variance, cfg);
}
SweepReport check_convexity(const SweepConfig& cfg) {
  return run_suite(Suite::Convexity, cfg);
}
SweepReport check_lower_bound(const SweepConfig& cfg) {
  return run_suite(Suite::LowerBound, cfg);
}
SweepReport check_qubit_sandwich(const SweepConfig& cfg) {
  return run_suite(Suite::Sandwich, cfg);
}
SweepReport check_corollary(const SweepConfig& cfg) {
  return run_suite(Suite::Corollary, cfg);
}
SweepReport check_uncertainty_baselines(const SweepConfig& cfg) {
  return run_suite(Suite::Baselines, cfg);
}
SweepReport search_upper_bound_violations(const SweepConfig& cfg) {
  return run_suite(Suite::Search3d, cfg);
}
SweepReport check_purity_scaling(const SweepConfig& cfg) {
  return run_suite(Suite::PurityScaling, cfg);
}

double replay_margin(Suite suite, const SweepConfig& cfg, std::uint64_t index,
                     std::string_view relation) {
  const SuitePlan p = plan(suite, cfg);
  const Outcome out = evaluate(p, cfg, index);
  for (const auto& m : out.margins)
    if (relation == m.relation) return m.value;
  throw Error(ErrorCode::BadConfig,
              "sample has no relation '" + std::string(relation) + "'");
}

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["checked"] = report.checked;
  j["violations"] = report.violations;
  j["max_slack"] = report.max_slack;
  j["tolerance"] = report.tolerance;
  if (report.worst_instance) {
    const auto& w = *report.worst_instance;
    j["worst_instance"] = {
        {"seed", w.seed},         {"index", w.index},
        {"d", w.d},               {"order", w.order},
        {"relation", w.relation}, {"rho", matrix_to_json(w.rho)},
        {"X", matrix_to_json(w.x)},
        {"Y", w.y.size() == 0 ? nlohmann::json(nullptr) : matrix_to_json(w.y)},
        {"margin", w.margin}};
  } else {
    j["worst_instance"] = nullptr;
  }
  return j;
}

PencilMatrix pencil_matrix(const DensityMatrix& rho, const MeanOrder& order,
                           const ComplexMatrix& x, const ComplexMatrix& y) {
  if (rho.dim() != 2)
    throw Error(ErrorCode::DimUnsupported, "pencil matrix is defined for qubits");
  return {zeta(rho, order, x, x), zeta(rho, order, x, y), zeta(rho, order, y, x),
          zeta(rho, order, y, y)};
}

double pencil_det(const DensityMatrix& rho, const MeanOrder& order,
                  const ComplexMatrix& x, const ComplexMatrix& y) {
  return pencil_matrix(rho, order, x, y).det();
}

double lower_bound_rhs(const DensityMatrix& rho, const MeanOrder& order,
                       const ComplexMatrix& x, const ComplexMatrix& y) {
  const double diff =
      skew_information(rho, order, x + y) - skew_information(rho, order, x - y);
  return diff * diff / 16.0;
}

double corollary_lhs(const DensityMatrix& rho, const MeanOrder& order,
                     const ComplexMatrix& x, const ComplexMatrix& y) {
  return product_of_infos(rho, order, x, y) - lower_bound_rhs(rho, order, x, y);
}

double commutator_bound(const DensityMatrix& rho, const ComplexMatrix& x,
                        const ComplexMatrix& y) {
  return 0.25 * std::norm((rho.matrix() * commutator(x, y)).trace());
}

double schrodinger_reformulated_lhs(const DensityMatrix& rho,
                                    const ComplexMatrix& x,
                                    const ComplexMatrix& y) {
  const double diff = variance(rho, x + y) - variance(rho, x - y);
  return variance(rho, x) * variance(rho, y) - diff * diff / 16.0;
}

}  // namespace skew
