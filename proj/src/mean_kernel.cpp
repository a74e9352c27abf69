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

#include "skewlib/mean_kernel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "skewlib/error.hpp"

namespace skew {

namespace {

void check_weight(double w) {
  if (!(w >= 0.0 && w <= 1.0))
    throw Error(ErrorCode::BadWeight, "weight must lie in [0,1]");
}

double parse_number(std::string_view text) {
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end || text.empty())
    throw Error(ErrorCode::Parse, "bad number '" + std::string(text) + "'");
  return value;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

MeanOrder MeanOrder::neg_infinity(double weight) {
  check_weight(weight);
  return {Kind::NegInfinity, -std::numeric_limits<double>::infinity(), weight};
}

MeanOrder MeanOrder::zero(double weight) {
  check_weight(weight);
  return {Kind::Zero, 0.0, weight};
}

MeanOrder MeanOrder::finite(double s, double weight) {
  check_weight(weight);
  if (!std::isfinite(s) || !(s < 0.0))
    throw Error(ErrorCode::BadOrder,
                "finite order must be negative, got " + shortest(s));
  return {Kind::Finite, s, weight};
}

double MeanOrder::exponent() const {
  switch (kind_) {
    case Kind::NegInfinity: return -std::numeric_limits<double>::infinity();
    case Kind::Zero: return 0.0;
    case Kind::Finite: return s_;
  }
  return 0.0;
}

MeanOrder parse_order(std::string_view text) {
  if (text == "wy") return MeanOrder::wy();
  if (text == "qfi") return MeanOrder::qfi();
  if (text == "min") return MeanOrder::min();
  if (text.starts_with("wyd:w=")) {
    const double w = parse_number(text.substr(6));
    if (!(w > 0.0 && w < 1.0))
      throw Error(ErrorCode::BadWeight, "wyd weight must lie in (0,1)");
    return MeanOrder::wyd(w);
  }
  if (text.starts_with("s=")) {
    text.remove_prefix(2);
    double w = 0.5;
    if (const auto comma = text.find(",w="); comma != std::string_view::npos) {
      w = parse_number(text.substr(comma + 3));
      text = text.substr(0, comma);
    }
    const double s = parse_number(text);
    if (std::isinf(s) && s < 0.0) return MeanOrder::neg_infinity(w);
    if (s == 0.0) return MeanOrder::zero(w);
    return MeanOrder::finite(s, w);
  }
  throw Error(ErrorCode::Parse, "unknown order '" + std::string(text) + "'");
}

std::string order_token(const MeanOrder& order) {
  const bool sym = order.symmetric();
  switch (order.kind()) {
    case MeanOrder::Kind::Zero:
      if (sym) return "wy";
      return "wyd:w=" + shortest(order.weight());
    case MeanOrder::Kind::NegInfinity:
      if (sym) return "min";
      return "s=-inf,w=" + shortest(order.weight());
    case MeanOrder::Kind::Finite:
      if (sym && order.s() == -1.0) return "qfi";
      return "s=" + shortest(order.s()) +
             (sym ? "" : ",w=" + shortest(order.weight()));
  }
  return {};
}

std::vector<MeanOrder> default_order_chain() {
  return {MeanOrder::neg_infinity(), MeanOrder::finite(-8.0),
          MeanOrder::finite(-4.0),   MeanOrder::finite(-2.0),
          MeanOrder::finite(-1.0),   MeanOrder::finite(-0.5),
          MeanOrder::zero()};
}

double power_mean(const MeanOrder& order, double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  if (a == b) return a;
  const double w = order.weight();
  if (w == 1.0) return a;
  if (w == 0.0) return b;

  switch (order.kind()) {
    case MeanOrder::Kind::NegInfinity:
      return std::min(a, b);
    case MeanOrder::Kind::Zero:
      if (order.symmetric()) return std::sqrt(a) * std::sqrt(b);
      return std::pow(a, w) * std::pow(b, 1.0 - w);
    case MeanOrder::Kind::Finite: {
      // m_s = lo * (w_lo + w_hi (hi/lo)^s)^(1/s), and (hi/lo)^s <= 1.
      const bool a_low = a < b;
      const double lo = a_low ? a : b;
      const double hi = a_low ? b : a;
      const double w_hi = a_low ? 1.0 - w : w;
      const double s = order.s();
      const double inner_minus_one = w_hi * std::expm1(s * std::log(hi / lo));
      const double m = lo * std::exp(std::log1p(inner_minus_one) / s);
      return std::clamp(m, lo, hi);
    }
  }
  return 0.0;
}

double mean_gap(const MeanOrder& order, double a, double b) {
  if (a == 0.0 || b == 0.0) return a;
  if (a == b) return 0.0;
  const double w = order.weight();
  if (w == 1.0) return 0.0;
  if (w == 0.0) return a - b;

  switch (order.kind()) {
    case MeanOrder::Kind::NegInfinity:
      return std::max(a - b, 0.0);
    case MeanOrder::Kind::Zero:
      // a - a^w b^(1-w) = -a expm1((1-w) ln(b/a))
      return -a * std::expm1((1.0 - w) * std::log1p((b - a) / a));
    case MeanOrder::Kind::Finite: {
      // Expand around the smaller argument so that (hi/lo)^s <= 1.
      const double s = order.s();
      if (a < b) {
        const double inner = (1.0 - w) * std::expm1(s * std::log1p((b - a) / a));
        return -a * std::expm1(std::log1p(inner) / s);
      }
      const double inner = w * std::expm1(s * std::log1p((a - b) / b));
      return (a - b) - b * std::expm1(std::log1p(inner) / s);
    }
  }
  return 0.0;
}

double kernel_weight(const MeanOrder& order, double lambda_i, double lambda_j) {
  if (lambda_i == lambda_j) return 0.0;
  return 0.5 * (mean_gap(order, lambda_i, lambda_j) +
                mean_gap(order, lambda_j, lambda_i));
}

}  // namespace skew
