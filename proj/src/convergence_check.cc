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

#include "activecc/convergence_check.h"

#include <cmath>

#include "activecc/errors.h"

namespace activecc {

double ConvergenceBound(int32_t t, int64_t opt, double epsilon, int64_t d0) {
  const double decay = std::pow(5.0 * epsilon, t);
  return (1.0 + 8.0 * epsilon) * (1.0 + decay) * static_cast<double>(opt) +
         decay * static_cast<double>(d0);
}

std::vector<bool> CheckConvergenceBound(const ExperimentTrace& trace,
                                        int64_t opt, double epsilon,
                                        int64_t d0) {
  if (!(epsilon >= 0.0 && epsilon < 0.2)) {
    throw InputError("epsilon must lie in [0, 1/5) for the convergence bound");
  }
  if (opt < 0 || d0 < 0) throw InputError("opt and d0 must be nonnegative");
  std::vector<bool> holds;
  for (const TraceRow& row : trace.rows) {
    if (row.t < 1) continue;
    if (!row.cost) throw InputError("trace rows need costs");
    holds.push_back(static_cast<double>(*row.cost) <=
                    ConvergenceBound(row.t, opt, epsilon, d0));
  }
  return holds;
}

}  // namespace activecc
