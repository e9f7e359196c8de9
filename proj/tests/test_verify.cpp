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

#include "mek/verify.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace mek {
namespace {

TEST(Verify, DefaultSeedPasses) {
  const auto checks = run_verify({});
  EXPECT_GE(checks.size(), 10u);
  for (const auto& check : checks) EXPECT_TRUE(check.passed()) << check.name << " " << check.max_deviation;
  EXPECT_TRUE(all_passed(checks));
}

TEST(Verify, SeedsShareStructure) {
  const auto a = run_verify({.seed = 1});
  const auto b = run_verify({.seed = 7});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].name, b[i].name);
  EXPECT_TRUE(all_passed(b));
}

TEST(Verify, SameSeedIsReproducible) {
  std::ostringstream x;
  std::ostringstream y;
  write_verify_report(x, run_verify({.seed = 3}));
  write_verify_report(y, run_verify({.seed = 3}));
  EXPECT_EQ(x.str(), y.str());
}

TEST(Verify, CorruptedSpectrumFailsOnlyNormalization) {
  const auto checks = run_verify({.corrupt_normalization = true});
  EXPECT_FALSE(all_passed(checks));
  for (const auto& check : checks) {
    EXPECT_EQ(check.passed(), check.name != "spectra.normalization") << check.name;
  }
}

}  // namespace
}  // namespace mek
