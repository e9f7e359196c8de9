// Copyright 2026 The mek Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mek {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or factor indices do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the domain of a formula (negative r, non-positive scale, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-visible precondition on a value was violated (non-Hermitian input,
/// unnormalized spectrum, large negative eigenvalue).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel failed to converge. Carries the last residual estimate.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Truncating the occupation basis dropped more probability than allowed.
class TailMassError : public Error {
 public:
  TailMassError(const std::string& what, double tail_mass, int required_n_max)
      : Error(what + ": tail mass " + std::to_string(tail_mass) +
              ", retry with n_max >= " + std::to_string(required_n_max)),
        tail_mass_(tail_mass),
        required_n_max_(required_n_max) {}
  double tail_mass() const noexcept { return tail_mass_; }
  int required_n_max() const noexcept { return required_n_max_; }

 private:
  double tail_mass_;
  int required_n_max_;
};

/// Requested tensor would exceed the configured memory budget.
class SizeError : public Error {
 public:
  SizeError(const std::string& what, std::size_t requested, std::size_t budget)
      : Error(what + ": " + std::to_string(requested) + " complex entries requested, budget is " +
              std::to_string(budget) + "; reduce the mode count or n_max"),
        requested_(requested),
        budget_(budget) {}
  std::size_t requested() const noexcept { return requested_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

}  // namespace mek
