// Copyright 2026 The Authors.
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

#ifndef DYNSUB_ERRORS_H_
#define DYNSUB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dynsub {

// An element id that is not part of the universe reached an oracle.
class UniverseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed operation stream: duplicate insert, delete of a dead element,
// unparsable line.
class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Brute-force enumeration refused because the instance is too large.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dynsub

#endif  // DYNSUB_ERRORS_H_
