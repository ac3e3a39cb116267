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

#include <numbers>

namespace reach {

// Boltzmann constant in J/K, at the five significant digits used throughout
// the entropy literature this toolkit cross-checks against (not CODATA 2019).
inline constexpr double kBoltzmann = 1.38065e-23;

inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kInvE = 0.36787944117144233;  // 1/e rounded to nearest

// Largest entropy variation with a real reachability: max of -p log2 p,
// attained at p = 1/e.
inline constexpr double kMaxVariationBits = kInvE / kLn2;

// Reference temperature for energy-form computations, in kelvin.
inline constexpr double kDefaultTemperature = 300.0;

}  // namespace reach
