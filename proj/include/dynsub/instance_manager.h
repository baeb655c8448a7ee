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

#ifndef DYNSUB_INSTANCE_MANAGER_H_
#define DYNSUB_INSTANCE_MANAGER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "dynsub/dynamic_structure.h"
#include "dynsub/operation.h"
#include "dynsub/oracles.h"

namespace dynsub {

struct ManagerOptions {
  // Threshold copies tau = (1 + epsilon)^j. Unset: a single unfiltered
  // structure (its update cost then depends on the spread of f).
  std::optional<double> epsilon = 0.5;
  std::uint64_t seed = 0;
  bool record_trace = false;
};

struct BestSolution {
  std::optional<int> copy;  // unset when no copy exists yet
  std::vector<ElementId> elements;
  double value = 0.0;
};

struct CopyCost {
  int copy = 0;
  OracleCounters counters;
};

struct CostReport {
  std::uint64_t operations = 0;
  OracleCounters total;
  double amortized = 0.0;          // total calls / operations
  OracleCounters routing;          // singleton values computed for routing
  OracleCounters retired;          // copies discarded by capacity doubling
  std::vector<CopyCost> per_copy;  // live copies
};

// Top-level fully dynamic API. Runs one DynamicStructure per threshold
// tau = (1 + eps)^j, created the first time an element falls in its band,
// and returns the best S_L among them after each operation. The capacity
// starts at 1 and doubles whenever the number of operations reaches it;
// every copy is then rebuilt at the new capacity from the alive elements
// (in id order). Replayed insertions do not count as operations.
class InstanceManager {
 public:
  InstanceManager(Oracles oracles, ManagerOptions options = {});

  // Throws StreamError for an insert of an alive id or a delete of a dead
  // one; the manager is unchanged in that case.
  BestSolution Apply(const Operation& op);
  // argmax of the cached f(S_L) over copies, ties to the smaller j.
  BestSolution Best();

  // Throws ContractViolation before the first operation.
  CostReport AmortizedCost() const;
  OracleCounters TotalCounters() const;

  // Indices j with (1 + eps)^(j+1) > value >= (eps / k)(1 + eps)^j.
  static std::vector<int> QualifyingCopies(double value, double epsilon,
                                           int rank);
  // ceil(log_{1+eps}((1 + eps) k / eps)): no element is in more copies.
  std::size_t MaxCopiesPerElement() const;

  std::vector<int> CopiesHolding(ElementId e) const;
  bool IsAlive(ElementId e) const { return alive_.contains(e); }
  std::size_t alive_count() const { return alive_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::uint64_t operations() const { return operations_; }
  std::uint64_t restarts() const { return restarts_; }
  bool filtered() const { return options_.epsilon.has_value(); }
  const std::map<int, DynamicStructure>& copies() const { return copies_; }

 private:
  void Restart();
  void Route(ElementId e);
  DynamicStructure& CopyFor(int j);
  double SingletonValue(ElementId e);

  Oracles oracles_;
  ManagerOptions options_;
  std::map<int, DynamicStructure> copies_;
  std::set<ElementId> alive_;
  std::unordered_map<ElementId, double> singleton_;
  std::size_t capacity_ = 1;
  std::uint64_t operations_ = 0;
  std::uint64_t restarts_ = 0;
  OracleCounters retired_;
};

}  // namespace dynsub

#endif  // DYNSUB_INSTANCE_MANAGER_H_
