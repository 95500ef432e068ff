// Copyright 2026 The activecc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance criteria, one test per criterion, in order. The last test
// audits the query ledgers of every run made by the earlier ones.

#include <iostream>

#include "activecc/acceptance.h"
#include "gtest/gtest.h"

namespace activecc::acceptance {
namespace {

AcceptanceSuite& Suite() {
  static AcceptanceSuite suite;
  return suite;
}

void Expect(const CriterionResult& result) {
  std::cout << FormatResult(result) << std::endl;
  EXPECT_TRUE(result.passed) << result.name << ": " << result.detail;
}

TEST(Acceptance, MetricAxioms) { Expect(Suite().MetricAxioms()); }
TEST(Acceptance, DecompositionIdentities) {
  Expect(Suite().DecompositionIdentities());
}
TEST(Acceptance, ExhaustiveExactness) { Expect(Suite().ExhaustiveExactness()); }
TEST(Acceptance, Unbiasedness) { Expect(Suite().Unbiasedness()); }
TEST(Acceptance, SmoothnessTrend) { Expect(Suite().SmoothnessTrend()); }
TEST(Acceptance, ExactEstimatorLoop) { Expect(Suite().ExactEstimatorLoop()); }
TEST(Acceptance, ConvergenceBound) { Expect(Suite().ConvergenceBoundCheck()); }
TEST(Acceptance, DeskScaleConvergence) { Expect(Suite().DeskScaleConvergence()); }
TEST(Acceptance, SizeBiasBeatsUniform) { Expect(Suite().SizeBiasBeatsUniform()); }
TEST(Acceptance, QueryAccounting) { Expect(Suite().QueryAccounting()); }

}  // namespace
}  // namespace activecc::acceptance

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  return RUN_ALL_TESTS();
}
