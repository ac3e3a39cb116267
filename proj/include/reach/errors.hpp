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

#include <cstdio>
#include <stdexcept>
#include <string>

namespace reach {

// Base of every error raised by the library. name() is the class name the CLI
// reports alongside the message.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  [[nodiscard]] virtual const char* name() const noexcept { return "Error"; }
};

#define REACH_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                \
   public:                                                                   \
    using Error::Error;                                                      \
    [[nodiscard]] const char* name() const noexcept override { return #Name; } \
  }

// Argument outside the mathematical domain of the operation.
REACH_DEFINE_ERROR(DomainError);
// An iterative solver missed its residual bound within the iteration cap.
REACH_DEFINE_ERROR(ConvergenceError);
// Probabilities not strictly positive or not summing to one.
REACH_DEFINE_ERROR(InvalidDistribution);
REACH_DEFINE_ERROR(IndexError);
REACH_DEFINE_ERROR(EmptySetError);
// Bit string that is not a self-delimiting program for the toy machine.
REACH_DEFINE_ERROR(InvalidProgram);
// Step, output or enumeration cap breached.
REACH_DEFINE_ERROR(ResourceExceeded);
REACH_DEFINE_ERROR(InvalidPolicy);

#undef REACH_DEFINE_ERROR

namespace detail {

// Compact number text for error messages.
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

}  // namespace reach
