// Copyright 2026 The reachcalc Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>

#include "reach/constants.hpp"
#include "reach/errors.hpp"
#include "reach/lambert_w.hpp"

namespace reach {

/// f(z) = e^{-W0(z)}, convex on [-1/e, inf). Equals W0(z)/z for z != 0.
inline double f_exp_negW(double z) {
  if (!(z >= detail::kBranchPoint) && !detail::near_branch_point(z))
    throw DomainError("f(z) = exp(-W(z)) requires z >= -1/e");
  return std::exp(-eval_w(z, Branch::Principal).value);
}

/// f'(z) = -W0'(z) e^{-W0(z)}.
inline double f_prime(double z) {
  if (!(z > detail::kBranchPoint) || detail::near_branch_point(z))
    throw DomainError("f'(z) requires z > -1/e");
  return -w_derivative(z, Branch::Principal) * f_exp_negW(z);
}

struct LossEvaluation {
  double z_hat = 0.0;
  double z = 0.0;
  double f_z_hat = 0.0;
  double f_z = 0.0;
  double divergence = 0.0;
};

/// Bregman divergence of f between the prediction z_hat and the target z:
/// f(z_hat) - f(z) - f'(z) (z_hat - z).
inline LossEvaluation matching_loss(double z_hat, double z) {
  auto inside = [](double v) { return v > detail::kBranchPoint && !detail::near_branch_point(v); };
  if (!inside(z_hat) || !inside(z) || !std::isfinite(z_hat) || !std::isfinite(z))
    throw DomainError("matching loss requires both arguments > -1/e");
  LossEvaluation e;
  e.z_hat = z_hat;
  e.z = z;
  e.f_z_hat = f_exp_negW(z_hat);
  e.f_z = f_exp_negW(z);
  e.divergence = z_hat == z ? 0.0 : e.f_z_hat - e.f_z - f_prime(z) * (z_hat - z);
  return e;
}

/// Numerical inverse of f on (0, e] by bisection. f is strictly decreasing
/// from f(-1/e) = e towards 0.
inline double invert_f(double y) {
  if (!(y > 0.0 && y <= std::numbers::e * (1.0 + 1e-15)))
    throw DomainError("f^-1(y) requires 0 < y <= e");
  double lo = detail::kBranchPoint;
  double hi = 1.0;
  while (f_exp_negW(hi) > y) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw DomainError("f^-1(y) target too small");
  }
  for (int i = 0; i < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (f_exp_negW(mid) > y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct ConvexityCertificate {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  double tolerance = 0.0;
  std::size_t points = 0;
  double min_second_difference = 0.0;  // min of (f(z+h) - 2f(z) + f(z-h)) / h^2
  double argmin = 0.0;
  bool passed = false;
};

/// Checks convexity of f on a uniform grid through second central differences.
/// The default grid stops 1e-3 short of the branch point, where f' diverges.
inline ConvexityCertificate convexity_certificate(double lo = -kInvE + 1e-3, double hi = 10.0,
                                                  double step = 1e-2, double tolerance = 1e-8) {
  if (!(lo > detail::kBranchPoint) || !(hi > lo) || !(step > 0.0))
    throw DomainError("convexity grid must satisfy -1/e < lo < hi and step > 0");
  ConvexityCertificate c{lo, hi, step, tolerance};
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  c.points = n;
  if (n < 3) throw DomainError("convexity grid needs at least three points");
  c.min_second_difference = std::numeric_limits<double>::infinity();
  double prev = f_exp_negW(lo);
  double cur = f_exp_negW(lo + step);
  for (std::size_t i = 2; i < n; ++i) {
    const double next = f_exp_negW(lo + static_cast<double>(i) * step);
    const double d2 = (next - 2.0 * cur + prev) / (step * step);
    if (d2 < c.min_second_difference) {
      c.min_second_difference = d2;
      c.argmin = lo + static_cast<double>(i - 1) * step;
    }
    prev = cur;
    cur = next;
  }
  c.passed = c.min_second_difference >= -tolerance;
  return c;
}

}  // namespace reach
