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
 * Weighted power means m_s(a, b) = (w a^s + (1-w) b^s)^(1/s) for s in
 * [-inf, 0], with the geometric mean at s = 0, the minimum at s = -inf, and
 * m_s(a, 0) = m_s(0, b) = 0.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace skew {

/// Order s of the power mean plus the weight w on the first argument.
class MeanOrder {
 public:
  enum class Kind { NegInfinity, Finite, Zero };

  static MeanOrder neg_infinity(double weight = 0.5);
  static MeanOrder zero(double weight = 0.5);
  /// Requires s < 0 and finite.
  static MeanOrder finite(double s, double weight = 0.5);

  /// Wigner-Yanase (geometric mean).
  static MeanOrder wy() { return zero(); }
  /// Quantum Fisher information (harmonic mean).
  static MeanOrder qfi() { return finite(-1.0); }
  static MeanOrder min() { return neg_infinity(); }
  /// Wigner-Yanase-Dyson with weight w.
  static MeanOrder wyd(double w) { return zero(w); }

  Kind kind() const { return kind_; }
  /// Only meaningful for Kind::Finite.
  double s() const { return s_; }
  double weight() const { return weight_; }
  bool symmetric() const { return weight_ == 0.5; }

  /// Position on the extended line: -inf for NegInfinity, 0 for Zero.
  double exponent() const;

  /// Orders compare by exponent; weights are not ordered.
  friend bool operator<(const MeanOrder& a, const MeanOrder& b) {
    return a.exponent() < b.exponent();
  }
  friend bool operator==(const MeanOrder&, const MeanOrder&) = default;

 private:
  MeanOrder(Kind kind, double s, double weight)
      : kind_(kind), s_(s), weight_(weight) {}

  Kind kind_;
  double s_;
  double weight_;
};

/// Parses wy | qfi | min | s=<x> | s=0 | s=-inf | wyd:w=<w>, where every
/// s= form may carry a ",w=<w>" suffix.
MeanOrder parse_order(std::string_view text);
/// Inverse of parse_order; uses the named aliases where they apply.
std::string order_token(const MeanOrder& order);

/// The seven-order chain -inf, -8, -4, -2, -1, -1/2, 0.
std::vector<MeanOrder> default_order_chain();

double power_mean(const MeanOrder& order, double a, double b);

/// a - m_s(a, b), evaluated without cancelling two nearly equal terms.
double mean_gap(const MeanOrder& order, double a, double b);

/// ((a - m_s(a, b)) + (b - m_s(b, a)))/2, which is (a + b)/2 - m_s(a, b) for
/// symmetric orders.
double kernel_weight(const MeanOrder& order, double lambda_i, double lambda_j);

}  // namespace skew
