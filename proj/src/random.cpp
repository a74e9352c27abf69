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

#include "skewlib/random.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace skew {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

double Rng::exponential() {
  double u = uniform();
  while (u <= 0.0) u = uniform();
  return -std::log(u);
}

namespace {

void require_dim(int d) {
  if (d < 1) throw Error(ErrorCode::BadConfig, "dimension must be >= 1");
}

}  // namespace

ComplexMatrix random_unitary(int d, Rng& rng) {
  require_dim(d);
  ComplexMatrix g(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  // Modified Gram-Schmidt, applied twice for orthogonality at round-off level.
  for (int j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        const Complex proj = g.col(k).dot(g.col(j));
        g.col(j) -= proj * g.col(k);
      }
    }
    g.col(j) /= g.col(j).norm();
  }
  return g;
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(d, rng);
}

ComplexMatrix random_hermitian(int d, Rng& rng) {
  require_dim(d);
  ComplexMatrix h(d, d);
  for (int i = 0; i < d; ++i) {
    h(i, i) = rng.normal();
    for (int j = i + 1; j < d; ++j) {
      h(i, j) = rng.complex_normal();
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

ComplexMatrix random_hermitian(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(d, rng);
}

ComplexMatrix random_normal_matrix(int d, Rng& rng) {
  const ComplexMatrix u = random_unitary(d, rng);
  Eigen::VectorXcd z(d);
  for (int i = 0; i < d; ++i) z(i) = rng.complex_normal();
  return u * z.asDiagonal() * u.adjoint();
}

Eigen::VectorXcd random_pure_vector(int d, Rng& rng) {
  require_dim(d);
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

DensityMatrix random_density_matrix(int d, int rank, Rng& rng) {
  require_dim(d);
  if (rank < 1 || rank > d)
    throw Error(ErrorCode::BadRank, "rank " + std::to_string(rank) +
                                        " outside [1, " + std::to_string(d) + "]");
  const ComplexMatrix u = random_unitary(d, rng);
  std::vector<double> weights(static_cast<std::size_t>(rank));
  for (;;) {
    double total = 0.0;
    for (auto& w : weights) total += (w = rng.exponential());
    double smallest = total;
    for (auto& w : weights) smallest = std::min(smallest, w /= total);
    if (smallest >= 1e-6) break;
  }
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < rank; ++k)
    m += weights[static_cast<std::size_t>(k)] * u.col(k) * u.col(k).adjoint();
  // Pin the trace to 1 exactly up to the final rounding of the diagonal.
  const double tr = m.trace().real();
  m /= tr;
  return DensityMatrix::from_matrix(m);
}

DensityMatrix random_density_matrix(int d, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix(d, rank, rng);
}

BlochVector random_bloch_vector(Rng& rng) {
  for (;;) {
    BlochVector b{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                   rng.uniform(-1.0, 1.0)}};
    if (b.norm() <= 1.0) return b;
  }
}

}  // namespace skew
