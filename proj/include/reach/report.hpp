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
#include <optional>
#include <vector>

#include "reach/chaitin_vm.hpp"
#include "reach/entropy.hpp"
#include "reach/reachability.hpp"

namespace reach {

struct ReachabilityReport {
  Problem problem;
  int max_len = 0;
  WeightScheme scheme = WeightScheme::LengthWeighted;
  double temperature = kDefaultTemperature;
  Branch branch = Branch::Lower;
  std::optional<KolmogorovBound> kolmogorov;
  // Sorted by descending reachability; ties keep shortlex order.
  std::vector<ReachabilityRecord> records;

  /// True when the set has a single program, whose variation is zero.
  [[nodiscard]] bool degenerate() const {
    return std::any_of(records.begin(), records.end(),
                       [](const ReachabilityRecord& r) { return r.degenerate; });
  }
};

/// Per-program reachability over the solution set of `problem`.
///
/// For each program: its mass p(i) under `scheme`, the variation -p log2 p,
/// P from the chosen branch, the energy k T ln2 * variation, and its share of
/// the normalised measure.
inline ReachabilityReport reachability_report(const Problem& problem, int max_len,
                                              WeightScheme scheme = WeightScheme::LengthWeighted,
                                              double temperature = kDefaultTemperature,
                                              Branch branch = Branch::Lower,
                                              const EnumerationLimits& limits = {}) {
  require_temperature(temperature);
  const SolutionSet set = enumerate_solutions(problem, max_len, scheme, limits);
  if (set.empty())
    throw EmptySetError("no program of length <= " + std::to_string(max_len) +
                        " prints the target");
  const FiniteDistribution dist = set.distribution();

  ReachabilityReport report{problem, max_len, scheme, temperature, branch,
                            kolmogorov_upper(set), {}};
  report.records.reserve(set.programs.size());
  for (std::size_t i = 0; i < set.programs.size(); ++i) {
    report.records.push_back(make_record(set.programs[i].bits(), dist[i], temperature, branch));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const ReachabilityRecord& a, const ReachabilityRecord& b) {
                     return a.reachability > b.reachability;
                   });
  normalize_records(report.records);
  return report;
}

}  // namespace reach
