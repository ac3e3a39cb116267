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

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reach/chaitin_vm.hpp"
#include "reach/entropy.hpp"
#include "reach/loss.hpp"
#include "reach/reachability.hpp"

namespace reach {

/// How the searcher walks program space.
///
/// ExhaustiveBySize   scans length classes 2, 4, 6, ... in full and stops after
///                    the first class containing a solution.
/// SizeDescending     scans the class of max_len in full, then each next smaller
///                    class, stopping at the first class that yields no shorter
///                    solution. Every accepted size reduction is charged
///                    k T ln2 per bit removed.
/// ReachabilityGreedy best-first over partial programs whose output is still a
///                    prefix of the target, ordered by the reachability a
///                    completion would have in the running solution set.
enum class SearchPolicy { ExhaustiveBySize, SizeDescending, ReachabilityGreedy };

inline std::string_view policy_name(SearchPolicy p) {
  switch (p) {
    case SearchPolicy::ExhaustiveBySize: return "exhaustive";
    case SearchPolicy::SizeDescending: return "descending";
    case SearchPolicy::ReachabilityGreedy: return "greedy";
  }
  return "?";
}

inline SearchPolicy parse_policy(std::string_view s) {
  if (s == "exhaustive" || s == "ExhaustiveBySize") return SearchPolicy::ExhaustiveBySize;
  if (s == "descending" || s == "SizeDescending") return SearchPolicy::SizeDescending;
  if (s == "greedy" || s == "ReachabilityGreedy") return SearchPolicy::ReachabilityGreedy;
  throw InvalidPolicy("unknown search policy '" + std::string(s) + "'");
}

/// Frontier ordering for ReachabilityGreedy.
enum class GreedyPriority {
  Reachability,    // descending lower-branch P
  LossDivergence,  // ascending Bregman divergence of the W argument from 0
};

inline GreedyPriority parse_priority(std::string_view s) {
  if (s == "reachability") return GreedyPriority::Reachability;
  if (s == "loss") return GreedyPriority::LossDivergence;
  throw InvalidPolicy("unknown greedy priority '" + std::string(s) + "'");
}

struct SearchBudget {
  std::uint64_t programs = 10'000'000;
  double energy = std::numeric_limits<double>::infinity();  // J
};

struct SearchOptions {
  int max_len = kDefaultMaxLen;
  GreedyPriority priority = GreedyPriority::Reachability;
  RunLimits run{};
};

enum class StepOutcome {
  Mismatch,  // valid program, different output
  Overflow,  // hit the run limits
  Solution,  // prints the target but does not improve on the best
  Accepted,  // new best
};

inline std::string_view outcome_name(StepOutcome o) {
  switch (o) {
    case StepOutcome::Mismatch: return "mismatch";
    case StepOutcome::Overflow: return "overflow";
    case StepOutcome::Solution: return "solution";
    case StepOutcome::Accepted: return "accepted";
  }
  return "?";
}

enum class SearchStatus { Completed, ProgramBudgetExhausted, EnergyBudgetExhausted };

inline std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Completed: return "completed";
    case SearchStatus::ProgramBudgetExhausted: return "program-budget-exhausted";
    case SearchStatus::EnergyBudgetExhausted: return "energy-budget-exhausted";
  }
  return "?";
}

struct SearchStep {
  Program program;
  StepOutcome outcome = StepOutcome::Mismatch;
  double energy_charged = 0.0;  // cumulative, after this step
};

struct SearchTrace {
  SearchPolicy policy = SearchPolicy::ExhaustiveBySize;
  std::vector<SearchStep> steps;
  std::uint64_t programs_run = 0;
  double energy_charged = 0.0;  // J
  std::size_t bits_reduced = 0;
  std::optional<Program> best_found;
  double temperature = kDefaultTemperature;
  int max_len = 0;
  SearchStatus status = SearchStatus::Completed;
};

namespace detail {

// Bookkeeping shared by the policies: budget checks, the best-so-far and the
// Landauer ledger.
class SearchRecorder {
 public:
  SearchRecorder(const Problem& problem, SearchPolicy policy, const SearchBudget& budget,
                 double temperature, const SearchOptions& options)
      : problem_(problem), budget_(budget), options_(options) {
    trace_.policy = policy;
    trace_.temperature = temperature;
    trace_.max_len = options.max_len;
  }

  [[nodiscard]] bool stopped() const { return stopped_; }

  /// Runs one candidate. Returns false once the search must stop.
  bool examine(const Program& candidate) {
    if (stopped_) return false;
    if (trace_.programs_run >= budget_.programs) {
      stop(SearchStatus::ProgramBudgetExhausted);
      return false;
    }
    ++trace_.programs_run;
    StepOutcome outcome = StepOutcome::Mismatch;
    try {
      if (run(candidate, options_.run) == problem_.target()) outcome = StepOutcome::Solution;
    } catch (const ResourceExceeded&) {
      outcome = StepOutcome::Overflow;
    }
    if (outcome == StepOutcome::Solution) {
      solution_lengths_.push_back(static_cast<int>(candidate.length()));
      if (!trace_.best_found || candidate < *trace_.best_found) {
        std::size_t reduced = 0;
        if (trace_.best_found && candidate.length() < trace_.best_found->length())
          reduced = trace_.best_found->length() - candidate.length();
        // The ledger is kept in whole bits; energy is derived from it.
        const double after = entropy_to_work(static_cast<double>(trace_.bits_reduced + reduced),
                                             trace_.temperature);
        if (after > budget_.energy) {
          trace_.steps.push_back({candidate, outcome, trace_.energy_charged});
          stop(SearchStatus::EnergyBudgetExhausted);
          return false;
        }
        trace_.bits_reduced += reduced;
        trace_.energy_charged = after;
        trace_.best_found = candidate;
        outcome = StepOutcome::Accepted;
      }
    }
    trace_.steps.push_back({candidate, outcome, trace_.energy_charged});
    return true;
  }

  [[nodiscard]] const std::optional<Program>& best() const { return trace_.best_found; }
  [[nodiscard]] const std::vector<int>& solution_lengths() const { return solution_lengths_; }

  SearchTrace finish() { return std::move(trace_); }

 private:
  void stop(SearchStatus s) {
    stopped_ = true;
    trace_.status = s;
  }

  const Problem& problem_;
  SearchBudget budget_;
  SearchOptions options_;
  SearchTrace trace_;
  std::vector<int> solution_lengths_;
  bool stopped_ = false;
};

// Every valid program of the given length, in lexicographic order. Returns
// false if the recorder stopped the scan.
inline bool scan_length_class(int length, SearchRecorder& rec) {
  const std::size_t body_ops = static_cast<std::size_t>(length / 2 - 1);
  std::vector<int> digits(body_ops, 0);
  std::string bits(static_cast<std::size_t>(length), '0');
  bits[bits.size() - 2] = '1';
  bits[bits.size() - 1] = '1';
  while (true) {
    for (std::size_t i = 0; i < body_ops; ++i) {
      bits[2 * i] = kOpcodeBits[digits[i]][0];
      bits[2 * i + 1] = kOpcodeBits[digits[i]][1];
    }
    if (!rec.examine(Program(bits))) return false;
    std::size_t pos = body_ops;
    while (pos > 0 && digits[pos - 1] == 2) digits[--pos] = 0;
    if (pos == 0) return true;
    ++digits[pos - 1];
  }
}

// Fewest extra non-HALT opcodes that can grow `have` output bits into `need`:
// EMIT adds one bit, DOUBLE at most doubles.
inline std::size_t opcodes_lower_bound(std::size_t have, std::size_t need) {
  if (have >= need) return 0;
  std::size_t ops = 0;
  if (have == 0) {
    have = 1;
    ops = 1;
  }
  while (have < need) {
    have *= 2;
    ++ops;
  }
  return ops;
}

struct FrontierNode {
  std::string body;  // non-HALT opcodes so far
  std::string output;
  int length_bound = 0;  // lower bound on the length of any completion
};

inline bool greedy_key_better(double pa, const FrontierNode& a, double pb, const FrontierNode& b) {
  if (pa != pb) return pa > pb;
  if (a.length_bound != b.length_bound) return a.length_bound < b.length_bound;
  return a.body < b.body;
}

// Score of a hypothetical solution of length `len` joining the solutions found
// so far, under length weighting. Higher is better.
inline double greedy_score(int len, const std::vector<int>& found, GreedyPriority priority) {
  double others = 0.0;
  for (int l : found) others += std::ldexp(1.0, -l);
  const double mine = std::ldexp(1.0, -len);
  const double p = mine / (mine + others);
  const double h = surprisal_term(p);
  if (priority == GreedyPriority::Reachability) return evaluate_reach(h, Branch::Lower).probability;
  const double z = std::max(-h * kLn2, -kInvE + 1e-9);
  return -matching_loss(z, 0.0).divergence;
}

inline void greedy_search(const Problem& problem, const SearchOptions& options,
                          SearchRecorder& rec) {
  const std::string& target = problem.target();
  const auto bound = [&](std::size_t body_ops, std::size_t out_len) {
    return static_cast<int>(2 * (body_ops + opcodes_lower_bound(out_len, target.size()) + 1));
  };
  std::vector<FrontierNode> frontier;
  if (options.max_len >= 2) frontier.push_back({"", "", bound(0, 0)});

  while (!frontier.empty()) {
    const std::optional<Program>& best = rec.best();
    const auto too_long = [&](const FrontierNode& n) {
      return best && n.length_bound > static_cast<int>(best->length());
    };
    std::erase_if(frontier, too_long);
    if (frontier.empty()) break;

    std::size_t pick = 0;
    double pick_score = greedy_score(frontier[0].length_bound, rec.solution_lengths(), options.priority);
    for (std::size_t i = 1; i < frontier.size(); ++i) {
      const double s = greedy_score(frontier[i].length_bound, rec.solution_lengths(), options.priority);
      if (greedy_key_better(s, frontier[i], pick_score, frontier[pick])) {
        pick = i;
        pick_score = s;
      }
    }
    FrontierNode node = std::move(frontier[pick]);
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));

    if (!rec.examine(Program(node.body + "11"))) return;

    const std::size_t ops = node.body.size() / 2 + 1;
    if (static_cast<int>(2 * (ops + 1)) > options.max_len) continue;
    for (int op = 0; op < 3; ++op) {
      std::string out = node.output;
      if (op == 2) {
        out += out;
      } else {
        out.push_back(static_cast<char>('0' + op));
      }
      if (out.size() > target.size() || target.compare(0, out.size(), out) != 0) continue;
      FrontierNode child{node.body + std::string(kOpcodeBits[op]), std::move(out), 0};
      child.length_bound = bound(ops, child.output.size());
      if (child.length_bound > options.max_len) continue;
      if (rec.best() && child.length_bound > static_cast<int>(rec.best()->length())) continue;
      frontier.push_back(std::move(child));
    }
  }
}

}  // namespace detail

/// Searches for short programs printing the target and returns the full trace.
/// Running out of budget is reported in the trace status, not thrown.
inline SearchTrace demiurge_search(const Problem& problem, SearchPolicy policy,
                                   const SearchBudget& budget,
                                   double temperature = kDefaultTemperature,
                                   const SearchOptions& options = {}) {
  require_temperature(temperature);
  if (budget.programs == 0 || !(budget.energy > 0.0))
    throw DomainError("search budget must be positive");
  if (options.max_len < 0 || options.max_len % 2 != 0)
    throw DomainError("maximum program length must be a non-negative even number");
  if (options.max_len > kDefaultMaxLen)
    throw ResourceExceeded("search length cap is " + std::to_string(kDefaultMaxLen) + " bits");

  detail::SearchRecorder rec(problem, policy, budget, temperature, options);
  switch (policy) {
    case SearchPolicy::ExhaustiveBySize:
      for (int len = 2; len <= options.max_len; len += 2) {
        if (!detail::scan_length_class(len, rec) || rec.best()) break;
      }
      break;
    case SearchPolicy::SizeDescending:
      for (int len = options.max_len; len >= 2; len -= 2) {
        const std::optional<Program> before = rec.best();
        if (!detail::scan_length_class(len, rec)) break;
        const bool improved = rec.best() && (!before || rec.best()->length() < before->length());
        if (before && !improved) break;
      }
      break;
    case SearchPolicy::ReachabilityGreedy:
      detail::greedy_search(problem, options, rec);
      break;
    default:
      throw InvalidPolicy("unknown search policy");
  }
  return rec.finish();
}

}  // namespace reach
