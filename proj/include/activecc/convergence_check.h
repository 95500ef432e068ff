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

#ifndef ACTIVECC_CONVERGENCE_CHECK_H_
#define ACTIVECC_CONVERGENCE_CHECK_H_

#include <cstdint>
#include <vector>

#include "activecc/regret_loop.h"

namespace activecc {

// Right-hand side of the convergence bound after t >= 1 rounds with an
// epsilon-smooth estimator:
//   (1 + 8 eps)(1 + (5 eps)^t) * opt + (5 eps)^t * d0
double ConvergenceBound(int32_t t, int64_t opt, double epsilon, int64_t d0);

// For every trace row t >= 1, whether cost(pivot_t) stays within
// ConvergenceBound(t, opt, epsilon, d0). The trace must carry costs.
// epsilon must lie in [0, 1/5); 0 is the exact-estimator limit.
std::vector<bool> CheckConvergenceBound(const ExperimentTrace& trace,
                                        int64_t opt, double epsilon,
                                        int64_t d0);

}  // namespace activecc

#endif  // ACTIVECC_CONVERGENCE_CHECK_H_
