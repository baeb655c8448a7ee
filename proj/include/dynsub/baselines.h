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

#ifndef DYNSUB_BASELINES_H_
#define DYNSUB_BASELINES_H_

#include <span>
#include <vector>

#include "dynsub/indexed_set.h"
#include "dynsub/operation.h"
#include "dynsub/oracles.h"
#include "dynsub/swapping.h"

namespace dynsub {

// Alive elements in insertion order.
class AliveList {
 public:
  // StreamError on a malformed operation.
  void Apply(const Operation& op);
  bool Contains(ElementId e) const;
  const std::vector<ElementId>& items() const { return items_; }

 private:
  std::vector<ElementId> items_;
};

// Streams insertions through the swapping algorithm and, whenever a
// solution element is deleted, reruns swapping over the alive elements in
// insertion order.
class DynamicSwapping {
 public:
  explicit DynamicSwapping(Oracles oracles);

  void Apply(const Operation& op);
  std::vector<ElementId> solution() const;
  // Calls of every swapping run so far, including discarded ones.
  OracleCounters counters() const;
  std::uint64_t rebuilds() const { return rebuilds_; }

 private:
  Oracles oracles_;
  AliveList alive_;
  ThresholdSwapping swapping_;
  OracleCounters retired_;
  std::uint64_t rebuilds_ = 0;
};

// Recomputes a lazy-greedy solution over the alive elements after every
// insertion and after every deletion that hits the solution.
class DynamicGreedy {
 public:
  explicit DynamicGreedy(Oracles oracles);

  void Apply(const Operation& op);
  const std::vector<ElementId>& solution() const { return solution_; }
  OracleCounters counters() const { return oracles_.counters(); }
  std::uint64_t rebuilds() const { return rebuilds_; }

 private:
  void Rebuild();

  Oracles oracles_;
  AliveList alive_;
  std::vector<ElementId> solution_;
  std::uint64_t rebuilds_ = 0;
};

// Matroid greedy with lazy evaluation: a max-heap of (stale gain, id) is
// popped, the top is re-evaluated if stale, and a fresh top is taken when
// it keeps the solution independent. Selection order is identical to
// EagerGreedy under the (gain desc, id asc) order.
std::vector<ElementId> LazyGreedy(std::span<const ElementId> ground,
                                  Oracles& oracles);
// Full rescan of every remaining element at each step.
std::vector<ElementId> EagerGreedy(std::span<const ElementId> ground,
                                   Oracles& oracles);

struct Optimum {
  std::vector<ElementId> elements;
  double value = 0.0;
};

inline constexpr std::size_t kBruteForceMaxElements = 20;
inline constexpr int kBruteForceMaxRank = 5;

// Exact optimum over independent subsets of `alive` of size <= rank,
// enumerated depth-first in lexicographic id order (dependent prefixes are
// pruned by downward closure). The first set reaching the maximum wins.
// Throws BudgetExceeded past 20 elements or rank 5.
Optimum BruteForceOptimum(std::span<const ElementId> alive, Oracles& oracles);

}  // namespace dynsub

#endif  // DYNSUB_BASELINES_H_
