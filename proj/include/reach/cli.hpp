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

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "reach/chaitin_vm.hpp"
#include "reach/entropy.hpp"
#include "reach/errors.hpp"
#include "reach/io.hpp"
#include "reach/lambert_w.hpp"
#include "reach/loss.hpp"
#include "reach/reachability.hpp"
#include "reach/report.hpp"
#include "reach/search.hpp"

namespace reach::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kResource = 2, kUsage = 3 };

struct CliConfig {
  double temperature = kDefaultTemperature;
  Branch branch = Branch::Lower;
  WeightScheme scheme = WeightScheme::LengthWeighted;
  int max_len = kDefaultMaxLen;
  io::Format output_format = io::Format::Table;
};

inline int exit_code_for(const Error& e) {
  if (dynamic_cast<const ResourceExceeded*>(&e)) return kResource;
  if (dynamic_cast<const InvalidPolicy*>(&e)) return kUsage;
  return kDomain;
}

/// n evenly spaced points from lo to hi inclusive; the last one is hi exactly.
inline std::vector<double> sample_grid(double lo, double hi, std::int64_t n) {
  if (n < 1) throw DomainError("curve needs at least one point");
  if (!(hi >= lo)) throw DomainError("curve needs lo <= hi");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  if (n > 1) xs.back() = hi;
  return xs;
}

/// (x, W0(x), W-1(x)) rows; the lower branch is missing for x >= 0.
inline io::Table lambert_curve(double lo, double hi, std::int64_t n) {
  io::Table t{{"x", "principal", "lower"}, {}};
  for (double x : sample_grid(lo, hi, n)) {
    t.rows.push_back({io::Cell::number(x), io::Cell::number(eval_w(x, Branch::Principal).value),
                      x < 0.0 ? io::Cell::number(eval_w(x, Branch::Lower).value)
                              : io::Cell::missing()});
  }
  return t;
}

/// (variation, P) rows for one branch. Variation 0 maps to the branch limit.
inline io::Table reach_curve(double lo, double hi, std::int64_t n, Branch branch) {
  io::Table t{{"variation", "reachability"}, {}};
  for (double h : sample_grid(lo, hi, n))
    t.rows.push_back({io::Cell::number(h), io::Cell::number(evaluate_reach(h, branch).probability)});
  return t;
}

namespace detail {

constexpr const char* kDegenerateWarning =
    "warning: degenerate solution set (one program, zero entropy variation); "
    "lower-branch reachability reported as its limit 0\n";

inline Problem load_problem(const std::optional<std::string>& rho,
                            const std::optional<std::string>& input) {
  if (input) return Problem::parse(io::read_file(*input));
  if (rho) return Problem::parse(*rho);
  throw CLI::ValidationError("rho", "a target string or --input <file> is required");
}

inline void print_kv(std::ostream& out, std::initializer_list<std::pair<const char*, std::string>> kvs) {
  std::size_t w = 0;
  for (const auto& [k, v] : kvs) w = std::max(w, std::string(k).size());
  for (const auto& [k, v] : kvs) out << k << std::string(w - std::string(k).size() + 2, ' ') << v << '\n';
}

}  // namespace detail

/// Runs the command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reachability calculus toolkit: Lambert W, entropy variation, program search",
               "reachcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string branch_text;
  std::string scheme_text = "lengthweighted";
  std::string format_text = "table";
  std::vector<double> curve;

  app.add_option("--temp", cfg.temperature, "Temperature in kelvin")->capture_default_str();
  app.add_option("--branch", branch_text, "Lambert W branch: lower | principal");
  app.add_option("--scheme", scheme_text, "Solution weighting: uniform | lengthweighted")
      ->capture_default_str();
  app.add_option("--max-len", cfg.max_len, "Longest program length in bits")->capture_default_str();
  app.add_option("--format", format_text, "Output: table | records | csv")->capture_default_str();

  // lambertw
  auto* lw = app.add_subcommand("lambertw", "Evaluate W(x) on one branch, or sample both");
  double lw_x = 0.0;
  lw->add_option("x", lw_x, "Argument");
  lw->add_option("--curve", curve, "lo hi n: sample both branches")->expected(3);

  // reach
  auto* rc = app.add_subcommand("reach", "Reachability from an entropy variation or an energy");
  double rc_h = 0.0;
  std::optional<double> rc_energy;
  rc->add_option("variation", rc_h, "Entropy variation in bits");
  rc->add_option("--energy", rc_energy, "Energy in joules instead of a variation");
  rc->add_option("--curve", curve, "lo hi n: sample the (variation, P) curve")->expected(3);

  // entropy
  auto* en = app.add_subcommand("entropy", "Shannon entropy and per-outcome variations");
  std::vector<double> en_p;
  en->add_option("p", en_p, "Probabilities")->required();

  // solve / report / search share the target
  std::optional<std::string> rho;
  std::optional<std::string> input;
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("rho", rho, "Target bit string");
    sub->add_option("--input", input, "File holding the target bit string");
  };
  auto* sv = app.add_subcommand("solve", "Enumerate the solution set and the complexity bound");
  add_target(sv);
  auto* rp = app.add_subcommand("report", "Per-program reachability report");
  add_target(rp);
  auto* se = app.add_subcommand("search", "Run a program search with an energy ledger");
  add_target(se);
  std::string policy_text = "descending";
  std::string priority_text = "reachability";
  std::uint64_t budget_programs = SearchBudget{}.programs;
  double budget_energy = SearchBudget{}.energy;
  std::string steps_text;
  se->add_option("--policy", policy_text, "exhaustive | descending | greedy")->capture_default_str();
  se->add_option("--priority", priority_text, "Greedy frontier order: reachability | loss")
      ->capture_default_str();
  se->add_option("--budget-programs", budget_programs, "Maximum programs to run");
  se->add_option("--budget-energy", budget_energy, "Maximum energy to charge, in joules");
  se->add_option("--steps", steps_text, "List steps instead of the summary: accepted | all");

  // loss
  auto* ls = app.add_subcommand("loss", "Bregman matching loss of exp(-W(z))");
  std::vector<double> ls_args;
  bool ls_grid = false;
  ls->add_option("z", ls_args, "z_hat z")->expected(0, 2);
  ls->add_flag("--convexity-grid", ls_grid, "Certify convexity on the default grid");

  try {
    std::vector<std::string> argv_store{"reachcalc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: UsageError: " << e.what() << '\n';
    return kUsage;
  }

  try {
    cfg.output_format = io::parse_format(format_text);
    cfg.scheme = parse_scheme(scheme_text);
    const bool branch_given = !branch_text.empty();
    if (branch_given) cfg.branch = parse_branch(branch_text);
    const io::Format fmt = cfg.output_format;
    auto need_curve = [&]() {
      return std::tuple{curve.at(0), curve.at(1), static_cast<std::int64_t>(curve.at(2))};
    };

    if (lw->parsed()) {
      if (!curve.empty()) {
        auto [lo, hi, n] = need_curve();
        io::write(out, lambert_curve(lo, hi, n), fmt);
        return kOk;
      }
      if (lw->count("x") == 0) throw CLI::ValidationError("x", "argument required");
      const Branch b = branch_given ? cfg.branch : Branch::Principal;
      const WEvaluation w = eval_w(lw_x, b);
      io::write(out,
                {{"argument", "branch", "value", "residual", "iterations"},
                 {{io::Cell::number(w.argument), io::Cell::str(std::string(branch_name(w.branch))),
                   io::Cell::number(w.value), io::Cell::number(w.residual),
                   io::Cell::integer(w.iterations)}}},
                fmt);
      return kOk;
    }

    if (rc->parsed()) {
      if (!curve.empty()) {
        auto [lo, hi, n] = need_curve();
        io::write(out, reach_curve(lo, hi, n, cfg.branch), fmt);
        return kOk;
      }
      double h = rc_h;
      double energy = 0.0;
      ReachEvaluation r;
      if (rc_energy) {
        energy = *rc_energy;
        h = work_to_entropy(energy, cfg.temperature);
        r.probability = reach_from_energy(energy, cfg.temperature, cfg.branch);
      } else {
        if (rc->count("variation") == 0)
          throw CLI::ValidationError("variation", "a variation or --energy is required");
        r = evaluate_reach(h, cfg.branch);
        energy = entropy_to_work(h, cfg.temperature);
      }
      if (r.degenerate) err << detail::kDegenerateWarning;
      io::write(out,
                {{"variation", "energy", "temperature", "branch", "reachability", "degenerate"},
                 {{io::Cell::number(h), io::Cell::number(energy), io::Cell::number(cfg.temperature),
                   io::Cell::str(std::string(branch_name(cfg.branch))),
                   io::Cell::number(r.probability), io::Cell::boolean(r.degenerate)}}},
                fmt);
      return kOk;
    }

    if (en->parsed()) {
      const FiniteDistribution dist(en_p);
      const double h = shannon_entropy(dist);
      io::Table t{{"i", "p", "variation", "partial_entropy", "energy"}, {}};
      for (std::size_t i = 0; i < dist.size(); ++i) {
        const EntropyVariation v = entropy_variation(dist, i);
        t.rows.push_back({io::Cell::integer(static_cast<long long>(i + 1)), io::Cell::number(dist[i]),
                          io::Cell::number(v.variation), io::Cell::number(v.partial_entropy),
                          io::Cell::number(entropy_to_work(v.variation, cfg.temperature))});
      }
      if (fmt == io::Format::Table) {
        const ThermoEntropy s = to_thermo(h);
        detail::print_kv(out, {{"entropy_bits", io::format_number(h)},
                               {"boltzmann_J_per_K", io::format_number(s.boltzmann)},
                               {"landauer_work_J", io::format_number(entropy_to_work(h, cfg.temperature))},
                               {"temperature_K", io::format_number(cfg.temperature)}});
        out << '\n';
      }
      io::write(out, t, fmt);
      return kOk;
    }

    if (sv->parsed()) {
      const Problem problem = detail::load_problem(rho, input);
      const SolutionSet set = enumerate_solutions(problem, cfg.max_len, cfg.scheme);
      const auto k = kolmogorov_upper(set);
      std::vector<ReachabilityRecord> recs;
      if (!set.empty()) {
        for (std::size_t i = 0; i < set.programs.size(); ++i)
          recs.push_back(make_record(set.programs[i].bits(), set.weights[i], cfg.temperature, cfg.branch));
        normalize_records(recs);
      }
      if (fmt == io::Format::Table) {
        detail::print_kv(out, {{"target", problem.target().empty() ? "\"\"" : problem.target()},
                               {"max_len", std::to_string(cfg.max_len)},
                               {"solutions", std::to_string(set.programs.size())},
                               {"k_hat", k ? std::to_string(k->bits) : "none"},
                               {"minimal_program", k ? k->program.bits() : "none"}});
        out << '\n';
      }
      if (fmt != io::Format::Table || !recs.empty()) io::write(out, io::records_table(recs), fmt);
      return kOk;
    }

    if (rp->parsed()) {
      const Problem problem = detail::load_problem(rho, input);
      const ReachabilityReport rep =
          reachability_report(problem, cfg.max_len, cfg.scheme, cfg.temperature, cfg.branch);
      if (rep.degenerate()) err << detail::kDegenerateWarning;
      if (fmt == io::Format::Table) {
        detail::print_kv(out, {{"target", problem.target().empty() ? "\"\"" : problem.target()},
                               {"max_len", std::to_string(rep.max_len)},
                               {"scheme", std::string(scheme_name(rep.scheme))},
                               {"temperature_K", io::format_number(rep.temperature)},
                               {"branch", std::string(branch_name(rep.branch))},
                               {"k_hat", rep.kolmogorov ? std::to_string(rep.kolmogorov->bits) : "none"}});
        out << '\n';
      }
      io::write(out, io::records_table(rep.records), fmt);
      return kOk;
    }

    if (se->parsed()) {
      const Problem problem = detail::load_problem(rho, input);
      SearchOptions opt;
      opt.max_len = cfg.max_len;
      opt.priority = parse_priority(priority_text);
      const SearchTrace trace = demiurge_search(problem, parse_policy(policy_text),
                                                {budget_programs, budget_energy}, cfg.temperature, opt);
      if (!steps_text.empty() && steps_text != "accepted" && steps_text != "all")
        throw CLI::ValidationError("--steps", "expected accepted or all");
      if (fmt == io::Format::Table) {
        io::write(out, io::trace_summary(trace), fmt);
        out << '\n';
        io::write(out, io::trace_table(trace, steps_text != "all"), fmt);
      } else if (steps_text.empty()) {
        io::write(out, io::trace_summary(trace), fmt);
      } else {
        io::write(out, io::trace_table(trace, steps_text == "accepted"), fmt);
      }
      return kOk;
    }

    if (ls->parsed()) {
      if (ls_grid) {
        const ConvexityCertificate c = convexity_certificate();
        io::write(out,
                  {{"lo", "hi", "step", "points", "min_second_difference", "argmin", "tolerance", "passed"},
                   {{io::Cell::number(c.lo), io::Cell::number(c.hi), io::Cell::number(c.step),
                     io::Cell::integer(static_cast<long long>(c.points)),
                     io::Cell::number(c.min_second_difference), io::Cell::number(c.argmin),
                     io::Cell::number(c.tolerance), io::Cell::boolean(c.passed)}}},
                  fmt);
        return kOk;
      }
      if (ls_args.size() != 2) throw CLI::ValidationError("z", "expected z_hat and z");
      const LossEvaluation e = matching_loss(ls_args[0], ls_args[1]);
      io::write(out,
                {{"z_hat", "z", "f_z_hat", "f_z", "divergence"},
                 {{io::Cell::number(e.z_hat), io::Cell::number(e.z), io::Cell::number(e.f_z_hat),
                   io::Cell::number(e.f_z), io::Cell::number(e.divergence)}}},
                fmt);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const CLI::Error& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace reach::cli
