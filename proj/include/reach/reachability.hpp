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
#include <span>
#include <string>
#include <vector>

#include "reach/constants.hpp"
#include "reach/entropy.hpp"
#include "reach/errors.hpp"
#include "reach/lambert_w.hpp"

namespace reach {

// Excess above kMaxVariationBits that is treated as rounding and clamped.
inline constexpr double kVariationSlack = 1e-12;

namespace detail {

// Maps a W argument that grazes -1/e from below back onto the branch point.
inline double clamp_to_branch_point(double arg) { return arg < kBranchPoint ? kBranchPoint : arg; }

inline double reach_from_argument(double arg, Branch branch) {
  const double w = eval_w(clamp_to_branch_point(arg), branch).value;
  // e^{-|W-1|} on the lower branch; W0 is already in [-1, 0] here.
  return branch == Branch::Lower ? std::exp(-std::abs(w)) : std::exp(w);
}

}  // namespace detail

/// Reachability P of a program from its entropy variation h (bits): the root
/// of P log2 P = -h on the requested branch, P = e^{W(-h ln2)}.
///
/// Requires 0 < h <= 1/(e ln2). The lower branch gives P in (0, 1/e], the
/// principal branch P in [1/e, 1); both return 1/e at the upper bound.
inline double reach_from_variation(double variation, Branch branch = Branch::Lower) {
  if (!(variation > 0.0)) throw DomainError("entropy variation must be positive");
  if (!(variation <= kMaxVariationBits + kVariationSlack))
    throw DomainError("entropy variation " + detail::num(variation) +
                      " exceeds 1/(e ln2) ~ 0.5307 bits");
  return detail::reach_from_argument(-std::min(variation, kMaxVariationBits) * kLn2, branch);
}

/// Energy form P = e^{W(-E / kT)}; E must lie in (0, kT/e].
inline double reach_from_energy(double energy, double temperature,
                                Branch branch = Branch::Lower) {
  require_temperature(temperature);
  const double thermal = kBoltzmann * temperature;
  if (!(energy > 0.0)) throw DomainError("energy must be positive");
  if (!(energy <= thermal * kInvE * (1.0 + kVariationSlack)))
    throw DomainError("energy exceeds kT/e for T = " + detail::num(temperature) + " K");
  return detail::reach_from_argument(-energy / thermal, branch);
}

struct ReachEvaluation {
  double probability = 0.0;
  // Set for zero variation (single-program solution sets), where the lower
  // branch only has the limit P -> 0 and the principal root is P = 1.
  bool degenerate = false;
};

/// Like reach_from_variation, but accepts h = 0 and flags it instead of
/// throwing.
inline ReachEvaluation evaluate_reach(double variation, Branch branch = Branch::Lower) {
  if (variation == 0.0) return {branch == Branch::Lower ? 0.0 : 1.0, true};
  return {reach_from_variation(variation, branch), false};
}

struct ReachabilityRecord {
  std::string program_id;
  double p_i = 0.0;
  double variation = 0.0;     // bits
  double reachability = 0.0;  // P
  Branch branch = Branch::Lower;
  double energy = 0.0;        // J, k T ln2 * variation
  double temperature = kDefaultTemperature;
  double normalized = 0.0;    // filled in by normalize_records
  bool degenerate = false;
};

/// Builds the record for a program holding mass p_i in its solution set.
inline ReachabilityRecord make_record(std::string program_id, double p_i, double temperature,
                                      Branch branch = Branch::Lower) {
  if (!(p_i > 0.0 && p_i <= 1.0)) throw InvalidDistribution("record mass outside (0, 1]");
  ReachabilityRecord r;
  r.program_id = std::move(program_id);
  r.p_i = p_i;
  r.variation = detail::surprisal_term(p_i);
  const ReachEvaluation e = evaluate_reach(r.variation, branch);
  r.reachability = e.probability;
  r.degenerate = e.degenerate;
  r.branch = branch;
  r.temperature = temperature;
  r.energy = entropy_to_work(r.variation, temperature);
  return r;
}

/// P_i / sum_j P_j. Order is preserved. A list whose reachabilities are all
/// zero (only possible for the degenerate single-program set) maps to the
/// uniform measure, the limit of the normalised values.
inline std::vector<double> normalize(std::span<const double> reachabilities) {
  if (reachabilities.empty()) throw EmptySetError("cannot normalise an empty record list");
  for (double p : reachabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("reachability must be >= 0");
  }
  const double total = detail::compensated_sum(reachabilities);
  std::vector<double> out(reachabilities.size());
  if (total == 0.0) {
    std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(out.size()));
    return out;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = reachabilities[i] / total;
  return out;
}

inline std::vector<double> normalize(std::span<const ReachabilityRecord> records) {
  std::vector<double> ps;
  ps.reserve(records.size());
  for (const auto& r : records) ps.push_back(r.reachability);
  return normalize(ps);
}

inline void normalize_records(std::span<ReachabilityRecord> records) {
  const std::vector<double> n = normalize(std::span<const ReachabilityRecord>(records));
  for (std::size_t i = 0; i < records.size(); ++i) records[i].normalized = n[i];
}

/// P(s_kol) = P(s_kol | rho) P(rho). With P(rho) = 1 this is the identity on
/// the conditional.
inline double kol_posterior_identity(double p_sigma_given_rho, double p_rho) {
  auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!unit(p_sigma_given_rho) || !unit(p_rho))
    throw DomainError("probabilities must lie in [0, 1]");
  return p_sigma_given_rho * p_rho;
}

}  // namespace reach
