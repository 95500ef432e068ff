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

#ifndef ACTIVECC_ACCEPTANCE_H_
#define ACTIVECC_ACCEPTANCE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace activecc::acceptance {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit_seconds = 0.0;
};

// "PASS  name  (1.23 s / 60 s)  detail"
std::string FormatResult(const CriterionResult& result);

// The end-to-end acceptance criteria. Every threshold below is fixed; the
// query-accounting criterion audits every run the earlier criteria made, so
// it must be evaluated last.
class AcceptanceSuite {
 public:
  CriterionResult MetricAxioms();
  CriterionResult DecompositionIdentities();
  CriterionResult ExhaustiveExactness();
  CriterionResult Unbiasedness();
  CriterionResult SmoothnessTrend();
  CriterionResult ExactEstimatorLoop();
  CriterionResult ConvergenceBoundCheck();
  CriterionResult DeskScaleConvergence();
  CriterionResult SizeBiasBeatsUniform();
  CriterionResult QueryAccounting();

  std::vector<CriterionResult> RunAll();

  struct LedgerAudit {
    std::string run;
    int64_t reported = 0;
    int64_t ledger = 0;
    int64_t max_pairs = 0;
  };
  const std::vector<LedgerAudit>& audits() const { return audits_; }

 private:
  std::vector<LedgerAudit> audits_;
};

}  // namespace activecc::acceptance

#endif  // ACTIVECC_ACCEPTANCE_H_
