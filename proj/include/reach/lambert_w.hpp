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
#include <limits>
#include <numbers>
#include <string>
#include <string_view>

#include "reach/constants.hpp"
#include "reach/errors.hpp"

namespace reach {

/// Real branch of the Lambert W function.
///
/// Principal is W0 on [-1/e, inf) with values >= -1; Lower is W-1 on
/// [-1/e, 0) with values <= -1. The two meet at the branch point (-1/e, -1).
enum class Branch { Principal, Lower };

inline std::string_view branch_name(Branch b) {
  return b == Branch::Principal ? "principal" : "lower";
}

inline Branch parse_branch(std::string_view s) {
  if (s == "principal" || s == "0") return Branch::Principal;
  if (s == "lower" || s == "-1") return Branch::Lower;
  throw DomainError("unknown branch '" + std::string(s) + "'");
}

struct WEvaluation {
  double argument = 0.0;
  double value = 0.0;
  Branch branch = Branch::Principal;
  double residual = 0.0;  // |value * e^value - argument|
  int iterations = 0;
};

inline constexpr int kLambertMaxIterations = 64;

namespace detail {

inline constexpr double kBranchPoint = -kInvE;

// True when x is within one ulp of -1/e.
inline bool near_branch_point(double x) {
  return x >= std::nextafter(kBranchPoint, -1.0) &&
         x <= std::nextafter(kBranchPoint, 0.0);
}

inline double residual_tolerance(double x) { return 1e-12 * std::max(1.0, std::abs(x)); }

// |w e^w - x|. Past w ~ 700 the product overflows, so it is rescaled by x.
inline double lambert_residual(double w, double x) {
  if (w < 700.0) return std::abs(w * std::exp(w) - x);
  const double q = std::exp(std::log(std::abs(x)) - w);
  return std::abs(x) * std::abs(w / q - 1.0);
}

inline double lambert_initial_guess(double x, Branch b) {
  // Series about the branch point in p = sqrt(2(ex + 1)).
  auto branch_series = [x](double sign) {
    const double p = sign * std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  };
  if (b == Branch::Principal) {
    if (x < -0.25) return branch_series(1.0);
    if (x <= std::numbers::e) {
      const double l = std::log1p(x);
      return l * (1.0 - std::log1p(l) / (2.0 + l));
    }
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
  }
  if (x < -0.25) return branch_series(-1.0);
  const double l1 = std::log(-x);
  const double l2 = std::log(-l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace detail

/// Evaluates W on the requested real branch.
///
/// Halley iteration on w - x e^{-w} = 0 (same root as w e^w = x, but free of
/// overflow for huge x and of underflow on the lower branch near 0). The
/// result is accepted only if |w e^w - x| <= 1e-12 max(1, |x|).
inline WEvaluation eval_w(double x, Branch branch) {
  if (!std::isfinite(x)) throw DomainError("Lambert W argument must be finite");
  WEvaluation out;
  out.argument = x;
  out.branch = branch;

  if (detail::near_branch_point(x)) {
    out.value = -1.0;
    out.residual = detail::lambert_residual(-1.0, x);
    return out;
  }
  if (x < detail::kBranchPoint) throw DomainError("W(x) is not defined for x < -1/e");
  if (branch == Branch::Lower && x >= 0.0)
    throw DomainError("lower branch W-1 requires -1/e <= x < 0");
  if (x == 0.0) return out;

  const double log_abs_x = std::log(std::abs(x));
  double w = detail::lambert_initial_guess(x, branch);
  for (int it = 1; it <= kLambertMaxIterations; ++it) {
    out.iterations = it;
    const double q = std::copysign(std::exp(log_abs_x - w), x);  // x e^{-w}
    const double r = w - q;
    const double dr = 1.0 + q;
    const double denom = 2.0 * dr * dr + r * q;
    if (r == 0.0 || denom == 0.0 || !std::isfinite(denom)) break;
    double next = w - 2.0 * r * dr / denom;
    // Keep the iterate on its own side of the branch point.
    if (branch == Branch::Principal && !(next > -1.0)) next = 0.5 * (w - 1.0);
    if (branch == Branch::Lower && !(next < -1.0)) next = 0.5 * (w - 1.0);
    const bool settled =
        std::abs(next - w) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(1.0, std::abs(next));
    w = next;
    if (settled) break;
  }

  out.value = w;
  out.residual = detail::lambert_residual(w, x);
  if (!(out.residual <= detail::residual_tolerance(x)))
    throw ConvergenceError("Lambert W residual " + detail::num(out.residual) +
                           " above tolerance at x = " + detail::num(x));
  return out;
}

inline double lambert_w(double x, Branch branch = Branch::Principal) {
  return eval_w(x, branch).value;
}

/// W'(x) = W / (x (1 + W)), with W'(0) = 1 on the principal branch.
/// Undefined at the branch point, where the derivative diverges.
inline double w_derivative(double x, Branch branch) {
  if (!std::isfinite(x) || x <= detail::kBranchPoint || detail::near_branch_point(x))
    throw DomainError("W'(x) requires x strictly greater than -1/e");
  if (branch == Branch::Principal && x == 0.0) return 1.0;
  const double w = eval_w(x, branch).value;
  return w / (x * (1.0 + w));
}

/// Solves x log_a(x) = b, i.e. x = e^{W(b ln a)}.
inline double solve_xlog(double a, double b, Branch branch = Branch::Principal) {
  if (!(a > 1.0) || !std::isfinite(a)) throw DomainError("solve_xlog requires base a > 1");
  if (!std::isfinite(b)) throw DomainError("solve_xlog requires finite b");
  double arg = b * std::log(a);
  if (arg < detail::kBranchPoint) {
    if (!detail::near_branch_point(arg))
      throw DomainError("solve_xlog requires b ln a >= -1/e");
    arg = detail::kBranchPoint;
  }
  return std::exp(eval_w(arg, branch).value);
}

}  // namespace reach
