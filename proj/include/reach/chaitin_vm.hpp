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
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reach/entropy.hpp"
#include "reach/errors.hpp"

// Toy prefix-free machine. A program is a sequence of 2-bit opcodes
//
//   00 EMIT0   append '0' to the output
//   01 EMIT1   append '1'
//   10 DOUBLE  append a copy of the output to itself (no-op on empty output)
//   11 HALT    stop
//
// and is valid only when HALT is its last opcode and appears nowhere else,
// so no valid program is a proper prefix of another.

namespace reach {

enum class Opcode : std::uint8_t { Emit0 = 0, Emit1 = 1, Double = 2, Halt = 3 };

inline constexpr std::size_t kMaxTargetBits = 64;
inline constexpr int kDefaultMaxLen = 24;

struct RunLimits {
  std::size_t max_steps = 10'000;
  std::size_t max_output_bits = kMaxTargetBits;
};

namespace detail {

inline bool is_bit_string(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

inline std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

inline Opcode opcode_at(std::string_view bits, std::size_t op) {
  return static_cast<Opcode>(((bits[2 * op] - '0') << 1) | (bits[2 * op + 1] - '0'));
}

inline constexpr std::string_view kOpcodeBits[] = {"00", "01", "10", "11"};

}  // namespace detail

/// Target string rho over {0,1}.
class Problem {
 public:
  explicit Problem(std::string target, std::size_t max_bits = kMaxTargetBits)
      : target_(std::move(target)) {
    if (!detail::is_bit_string(target_)) throw DomainError("target must be a binary string");
    if (target_.size() > max_bits)
      throw DomainError("target longer than " + std::to_string(max_bits) + " bits");
  }

  static Problem parse(std::string_view text) { return Problem(detail::strip_whitespace(text)); }

  [[nodiscard]] const std::string& target() const { return target_; }
  [[nodiscard]] std::size_t length() const { return target_.size(); }

 private:
  std::string target_;
};

/// Raw program bits. Construction only checks the alphabet; structural
/// validity is checked by is_valid() and enforced by run().
class Program {
 public:
  Program() = default;
  explicit Program(std::string bits) : bits_(std::move(bits)) {
    if (!detail::is_bit_string(bits_)) throw InvalidProgram("program must be a binary string");
  }

  /// Parses the program file format: '0'/'1' characters, whitespace ignored.
  static Program parse(std::string_view text) { return Program(detail::strip_whitespace(text)); }

  [[nodiscard]] const std::string& bits() const { return bits_; }
  [[nodiscard]] std::size_t length() const { return bits_.size(); }
  [[nodiscard]] std::size_t opcode_count() const { return bits_.size() / 2; }

  [[nodiscard]] bool is_valid() const { return validation_error().empty(); }

  [[nodiscard]] std::string validation_error() const {
    if (bits_.size() % 2 != 0) return "odd program length";
    if (bits_.empty()) return "missing terminal HALT";
    const std::size_t n = opcode_count();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (detail::opcode_at(bits_, i) == Opcode::Halt)
        return "HALT before the final opcode at position " + std::to_string(i);
    }
    if (detail::opcode_at(bits_, n - 1) != Opcode::Halt) return "missing terminal HALT";
    return {};
  }

  friend bool operator==(const Program&, const Program&) = default;
  /// Shortlex: by length, then lexicographic.
  friend bool operator<(const Program& a, const Program& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.bits_ < b.bits_;
  }

 private:
  std::string bits_;
};

/// Executes a program and returns what it prints.
inline std::string run(const Program& program, const RunLimits& limits = {}) {
  if (const std::string why = program.validation_error(); !why.empty())
    throw InvalidProgram(why);
  const std::size_t n = program.opcode_count();
  if (n > limits.max_steps) throw ResourceExceeded("step cap exceeded");
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    switch (detail::opcode_at(program.bits(), i)) {
      case Opcode::Emit0:
      case Opcode::Emit1:
        if (out.size() + 1 > limits.max_output_bits)
          throw ResourceExceeded("output cap exceeded");
        out.push_back(program.bits()[2 * i + 1]);
        break;
      case Opcode::Double:
        if (2 * out.size() > limits.max_output_bits)
          throw ResourceExceeded("output cap exceeded");
        out += out;
        break;
      case Opcode::Halt:
        return out;
    }
  }
  return out;
}

enum class WeightScheme { Uniform, LengthWeighted };

inline std::string_view scheme_name(WeightScheme s) {
  return s == WeightScheme::Uniform ? "uniform" : "lengthweighted";
}

inline WeightScheme parse_scheme(std::string_view s) {
  if (s == "uniform") return WeightScheme::Uniform;
  if (s == "lengthweighted" || s == "length-weighted") return WeightScheme::LengthWeighted;
  throw DomainError("unknown weighting scheme '" + std::string(s) + "'");
}

/// Probability assigned to each program: 1/m, or proportional to 2^-l.
inline FiniteDistribution solution_distribution(const std::vector<Program>& programs,
                                                WeightScheme scheme) {
  if (programs.empty()) throw EmptySetError("solution set is empty");
  std::vector<double> w(programs.size(), 1.0);
  if (scheme == WeightScheme::LengthWeighted) {
    std::size_t shortest = programs.front().length();
    for (const auto& p : programs) shortest = std::min(shortest, p.length());
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] = std::ldexp(1.0, -static_cast<int>(programs[i].length() - shortest));
  }
  const double total = detail::compensated_sum(w);
  for (double& x : w) x /= total;
  return FiniteDistribution(std::move(w));
}

/// All programs of length <= max_len printing the target, in shortlex order.
/// The cap on max_len makes the set finite; it is carried with the set.
struct SolutionSet {
  Problem problem;
  int max_len = 0;
  std::vector<Program> programs;
  WeightScheme scheme = WeightScheme::LengthWeighted;
  std::vector<double> weights;  // empty iff programs is empty

  [[nodiscard]] bool empty() const { return programs.empty(); }
  [[nodiscard]] FiniteDistribution distribution() const {
    return solution_distribution(programs, scheme);
  }
};

struct EnumerationLimits {
  int max_len_cap = kDefaultMaxLen;
  RunLimits run{};
  // Scan length classes on separate threads; the merged order is unchanged.
  bool parallel = false;
};

namespace detail {

inline void check_max_len(int max_len, const EnumerationLimits& limits) {
  if (max_len < 0 || max_len % 2 != 0)
    throw DomainError("maximum program length must be a non-negative even number");
  if (max_len > limits.max_len_cap)
    throw ResourceExceeded("2^" + std::to_string(max_len) +
                           " candidate strings exceed the enumeration budget (cap " +
                           std::to_string(limits.max_len_cap) + " bits)");
}

// Depth-first over opcode bodies in lexicographic order. The output only
// grows, so any body whose output is not a prefix of the target is cut.
inline void collect_class(const std::string& target, std::size_t body_ops, std::string& body,
                          std::string& out, std::vector<Program>& found) {
  if (body.size() / 2 == body_ops) {
    if (out == target) found.emplace_back(body + "11");
    return;
  }
  for (int op = 0; op < 3; ++op) {
    const std::size_t saved = out.size();
    if (op == 2) {
      out += out;
    } else {
      out.push_back(static_cast<char>('0' + op));
    }
    if (out.size() <= target.size() && target.compare(0, out.size(), out) == 0) {
      body += kOpcodeBits[op];
      collect_class(target, body_ops, body, out, found);
      body.resize(body.size() - 2);
    }
    out.resize(saved);
  }
}

inline std::vector<Program> solutions_of_length(const std::string& target, int length) {
  std::vector<Program> found;
  std::string body;
  std::string out;
  collect_class(target, static_cast<std::size_t>(length / 2 - 1), body, out, found);
  return found;
}

}  // namespace detail

/// Exhaustive enumeration of the solution set, one length class at a time.
inline SolutionSet enumerate_solutions(const Problem& problem, int max_len,
                                       WeightScheme scheme = WeightScheme::LengthWeighted,
                                       const EnumerationLimits& limits = {}) {
  detail::check_max_len(max_len, limits);
  if (problem.length() > limits.run.max_output_bits)
    throw ResourceExceeded("target longer than the output cap");
  SolutionSet set{problem, max_len, {}, scheme, {}};
  std::vector<std::vector<Program>> classes;
  if (limits.parallel) {
    std::vector<std::future<std::vector<Program>>> jobs;
    for (int len = 2; len <= max_len; len += 2)
      jobs.push_back(std::async(std::launch::async, detail::solutions_of_length,
                                std::cref(problem.target()), len));
    for (auto& j : jobs) classes.push_back(j.get());
  } else {
    for (int len = 2; len <= max_len; len += 2)
      classes.push_back(detail::solutions_of_length(problem.target(), len));
  }
  for (auto& c : classes) set.programs.insert(set.programs.end(), c.begin(), c.end());
  if (!set.programs.empty()) {
    const FiniteDistribution d = solution_distribution(set.programs, scheme);
    set.weights.assign(d.probabilities().begin(), d.probabilities().end());
  }
  return set;
}

struct KolmogorovBound {
  int bits = 0;
  Program program;  // shortlex-least minimal solution
  int max_len = 0;
};

/// Length of the shortest program of length <= max_len printing the target:
/// an upper bound on its complexity relative to this machine.
inline std::optional<KolmogorovBound> kolmogorov_upper(const Problem& problem, int max_len,
                                                       const EnumerationLimits& limits = {}) {
  detail::check_max_len(max_len, limits);
  for (int len = 2; len <= max_len; len += 2) {
    auto found = detail::solutions_of_length(problem.target(), len);
    if (!found.empty()) return KolmogorovBound{len, std::move(found.front()), max_len};
  }
  return std::nullopt;
}

inline std::optional<KolmogorovBound> kolmogorov_upper(const SolutionSet& set) {
  if (set.empty()) return std::nullopt;
  return KolmogorovBound{static_cast<int>(set.programs.front().length()), set.programs.front(),
                         set.max_len};
}

}  // namespace reach
