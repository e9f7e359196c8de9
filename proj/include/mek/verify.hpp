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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "mek/fockspace.hpp"

namespace mek {

struct VerifyCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;

  bool passed() const noexcept { return max_deviation <= tolerance; }
};

struct VerifyOptions {
  double tail_tolerance = kDefaultTailTolerance;
  std::uint64_t seed = 0;
  /// Test hook: perturbs the oracle spectrum before the normalization check.
  bool corrupt_normalization = false;
};

/// Runs the invariant battery on parameters drawn deterministically from the seed.
std::vector<VerifyCheck> run_verify(const VerifyOptions& options);
void write_verify_report(std::ostream& out, const std::vector<VerifyCheck>& checks);
bool all_passed(const std::vector<VerifyCheck>& checks);

}  // namespace mek
