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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reach/constants.hpp"
#include "reach/errors.hpp"

namespace reach {

namespace detail {

// Neumaier compensated sum.
inline double compensated_sum(std::span<const double> xs) {
  double sum = 0.0;
  double c = 0.0;
  for (double x : xs) {
    const double t = sum + x;
    c += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + c;
}

// 0 - p log2 p keeps p = 1 at +0.
inline double surprisal_term(double p) { return 0.0 - p * std::log2(p); }

}  // namespace detail

/// Probabilities p(1..m) of a finite random variable. Every entry is in
/// (0, 1] and the entries sum to one within 1e-12; zero entries are rejected
/// because -p log2 p cannot be inverted at p = 0.
class FiniteDistribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit FiniteDistribution(std::vector<double> probabilities)
      : p_(std::move(probabilities)) {
    if (p_.empty()) throw InvalidDistribution("distribution has no outcomes");
    for (double p : p_) {
      if (!(p > 0.0 && p <= 1.0))
        throw InvalidDistribution("probability " + detail::num(p) + " outside (0, 1]");
    }
    const double total = detail::compensated_sum(p_);
    if (std::abs(total - 1.0) > kSumTolerance)
      throw InvalidDistribution("probabilities sum to " + detail::num(total));
  }

  static FiniteDistribution uniform(std::size_t m) {
    if (m == 0) throw InvalidDistribution("distribution has no outcomes");
    return FiniteDistribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
  }

  [[nodiscard]] std::span<const double> probabilities() const { return p_; }
  [[nodiscard]] std::size_t size() const { return p_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

/// H(X) = -sum p log2 p, in bits.
inline double shannon_entropy(const FiniteDistribution& dist) {
  std::vector<double> terms;
  terms.reserve(dist.size());
  for (double p : dist.probabilities()) terms.push_back(detail::surprisal_term(p));
  return detail::compensated_sum(terms);
}

struct EntropyVariation {
  std::size_t index = 0;
  double total_entropy = 0.0;    // H, bits
  double partial_entropy = 0.0;  // H', bits
  double variation = 0.0;        // H - H' = -p(i) log2 p(i), bits
};

/// Leave-one-out entropy variation of outcome `i` (zero-based).
///
/// H' is the plain partial sum over the other outcomes with their original
/// probabilities, not the entropy of the renormalised remainder. The variation
/// field holds the isolated summand -p(i) log2 p(i) directly; it agrees with
/// total_entropy - partial_entropy to rounding.
inline EntropyVariation entropy_variation(const FiniteDistribution& dist, std::size_t i) {
  if (i >= dist.size())
    throw IndexError("index " + std::to_string(i) + " out of range for distribution of size " +
                     std::to_string(dist.size()));
  std::vector<double> others;
  others.reserve(dist.size() - 1);
  for (std::size_t j = 0; j < dist.size(); ++j) {
    if (j != i) others.push_back(detail::surprisal_term(dist[j]));
  }
  EntropyVariation ev;
  ev.index = i;
  ev.variation = detail::surprisal_term(dist[i]);
  ev.partial_entropy = detail::compensated_sum(others);
  ev.total_entropy = shannon_entropy(dist);
  return ev;
}

/// Shannon entropy together with its Boltzmann form S = H k ln2.
struct ThermoEntropy {
  double shannon_bits = 0.0;
  double boltzmann = 0.0;  // J/K
  double boltzmann_constant = kBoltzmann;
};

inline ThermoEntropy to_thermo(double shannon_bits) {
  return {shannon_bits, shannon_bits * kBoltzmann * kLn2, kBoltzmann};
}

/// Boltzmann entropy of a macrostate with d microstates: k ln2 log2 d = k ln d.
inline double microstate_entropy(std::uint64_t microstate_count) {
  if (microstate_count < 1) throw DomainError("microstate count must be at least 1");
  return kBoltzmann * kLn2 * std::log2(static_cast<double>(microstate_count));
}

/// Physical algorithmic entropy k ln2 (K + H_x), with K the prefix complexity
/// in bits (typically an upper bound from program enumeration).
inline double algorithmic_entropy(double prefix_complexity_bits, double macrostate_bits) {
  if (!(prefix_complexity_bits >= 0.0) || !(macrostate_bits >= 0.0))
    throw DomainError("algorithmic entropy inputs must be non-negative");
  return kBoltzmann * kLn2 * (prefix_complexity_bits + macrostate_bits);
}

inline void require_temperature(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw DomainError("temperature must be positive and finite");
}

/// Work for an entropy change: dW = k T ln2 dH.
inline double entropy_to_work(double delta_bits, double temperature) {
  require_temperature(temperature);
  return kBoltzmann * temperature * kLn2 * delta_bits;
}

/// Entropy change bought by work: dH = dW / (k T ln2).
inline double work_to_entropy(double delta_joules, double temperature) {
  require_temperature(temperature);
  return delta_joules / (kBoltzmann * temperature * kLn2);
}

}  // namespace reach
