// Copyright 2026 The mek Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Log-domain hyperbolic functions shared by the analytic, thermal and oracle code.

#pragma once

#include <cmath>

namespace mek::detail {

inline constexpr double kLn2 = 0.69314718055994530942;

/// ln tanh x for x > 0. Small x keeps 1 - e^{-2x} exact through expm1, large x
/// keeps the tiny result exact through log1p.
inline double log_tanh(double x) {
  const double e = std::exp(-2.0 * x);
  const double log_numerator = x < 0.5 ? std::log(-std::expm1(-2.0 * x)) : std::log1p(-e);
  return log_numerator - std::log1p(e);
}

/// ln cosh x. Near zero, cosh x - 1 = 2 sinh^2(x/2) avoids the cancellation in x - ln 2.
inline double log_cosh(double x) {
  x = std::abs(x);
  if (x < 0.5) {
    const double s = std::sinh(0.5 * x);
    return std::log1p(2.0 * s * s);
  }
  return x + std::log1p(std::exp(-2.0 * x)) - kLn2;
}

/// ln sinh x for x > 0.
inline double log_sinh(double x) {
  const double log_factor = x < 0.5 ? std::log(-std::expm1(-2.0 * x)) : std::log1p(-std::exp(-2.0 * x));
  return x + log_factor - kLn2;
}

/// ln(1 - e^{x}) for x < 0.
inline double log1m_exp(double x) { return x > -kLn2 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x)); }

}  // namespace mek::detail
