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
 * Seeded sampling of states, unitaries and observables.
 *
 * All draws go through Rng, a std::mt19937_64 stream with hand-rolled
 * uniform and Gaussian transforms, so a seed gives bit-identical output on
 * every conforming standard library. Sweeps derive one stream per sample with
 * derive_seed(seed, index).
 */

#pragma once

#include <cstdint>
#include <random>

#include "skewlib/linalg.hpp"

namespace skew {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent stream seed for sample `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Box-Muller standard normal.
  double normal();
  Complex complex_normal();
  /// Exp(1) draw, strictly positive.
  double exponential();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Haar-distributed unitary (Gram-Schmidt on a Ginibre matrix).
ComplexMatrix random_unitary(int d, Rng& rng);
ComplexMatrix random_unitary(int d, std::uint64_t seed);

/// (G + G^dagger)/2 with complex Gaussian G; exactly Hermitian.
ComplexMatrix random_hermitian(int d, Rng& rng);
ComplexMatrix random_hermitian(int d, std::uint64_t seed);

/// U diag(z) U^dagger with Haar U and complex Gaussian z; normal, generally
/// not Hermitian.
ComplexMatrix random_normal_matrix(int d, Rng& rng);

/// Haar-random unit vector.
Eigen::VectorXcd random_pure_vector(int d, Rng& rng);

/// Mixture of `rank` orthonormal Haar vectors with Dirichlet(1,...,1) weights,
/// each weight at least 1e-6 of the total.
DensityMatrix random_density_matrix(int d, int rank, Rng& rng);
DensityMatrix random_density_matrix(int d, int rank, std::uint64_t seed);

/// Uniform point of the unit ball.
BlochVector random_bloch_vector(Rng& rng);

}  // namespace skew
