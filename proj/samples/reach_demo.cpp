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

// Walks one target through the toolkit: solution set, complexity bound,
// per-program reachability, and the three search policies.
//
//   reach_demo [target-bits] [max-len]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "reach/reach.hpp"

int main(int argc, char** argv) {
  const reach::Problem problem(argc > 1 ? argv[1] : "01010101");
  const int max_len = argc > 2 ? std::atoi(argv[2]) : 16;

  try {
    const auto report = reach::reachability_report(problem, max_len);
    std::printf("target '%s', %zu solutions up to %d bits, K <= %d\n", problem.target().c_str(),
                report.records.size(), max_len, report.kolmogorov->bits);
    for (const auto& r : report.records)
      std::printf("  %-20s p=%.6f  H'=%.6f  P=%.6f  E=%.4g J\n", r.program_id.c_str(), r.p_i,
                  r.variation, r.reachability, r.energy);

    for (auto policy : {reach::SearchPolicy::ExhaustiveBySize, reach::SearchPolicy::SizeDescending,
                        reach::SearchPolicy::ReachabilityGreedy}) {
      const auto trace = reach::demiurge_search(problem, policy, {}, reach::kDefaultTemperature,
                                                {.max_len = max_len});
      std::printf("%-10s ran %llu programs, best %s, charged %.4g J\n",
                  reach::policy_name(policy).data(),
                  static_cast<unsigned long long>(trace.programs_run),
                  trace.best_found ? trace.best_found->bits().c_str() : "-", trace.energy_charged);
    }
  } catch (const reach::Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", e.name(), e.what());
    return 1;
  }
  return 0;
}
