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

#ifndef ACTIVECC_ERRORS_H_
#define ACTIVECC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace activecc {

// Malformed arguments: out-of-range ids, size mismatches, bad parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The label source could not answer (e.g. a human has not labeled the pair
// yet). The query ledger is left unchanged.
class OracleUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search was asked to explore more states than allowed.
class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Labeling-session protocol violations (submitting a pair that is not
// pending).
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace activecc

#endif  // ACTIVECC_ERRORS_H_
