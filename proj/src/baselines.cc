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

#include "dynsub/baselines.h"

#include <algorithm>
#include <queue>
#include <string>

#include "dynsub/errors.h"

namespace dynsub {

void AliveList::Apply(const Operation& op) {
  auto it = std::find(items_.begin(), items_.end(), op.id);
  if (op.kind == OpKind::kInsert) {
    if (it != items_.end()) {
      throw StreamError("insert of element " + std::to_string(op.id) +
                        " which is already alive");
    }
    items_.push_back(op.id);
  } else {
    if (it == items_.end()) {
      throw StreamError("delete of element " + std::to_string(op.id) +
                        " which is not alive");
    }
    items_.erase(it);
  }
}

bool AliveList::Contains(ElementId e) const {
  return std::find(items_.begin(), items_.end(), e) != items_.end();
}

namespace {

void RequireKnown(const Oracles& oracles, const Operation& op) {
  if (op.kind == OpKind::kInsert && !oracles.universe().Contains(op.id)) {
    throw StreamError("insert of unknown element " + std::to_string(op.id));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

DynamicSwapping::DynamicSwapping(Oracles oracles)
    : oracles_(std::move(oracles)), swapping_(oracles_.Fork()) {}

void DynamicSwapping::Apply(const Operation& op) {
  RequireKnown(oracles_, op);
  alive_.Apply(op);
  if (op.kind == OpKind::kInsert) {
    swapping_.Process(op.id);
    return;
  }
  if (!swapping_.solution().Contains(op.id)) return;
  ++rebuilds_;
  retired_ += swapping_.oracles().counters();
  swapping_ = ThresholdSwapping(oracles_.Fork());
  for (ElementId e : alive_.items()) swapping_.Process(e);
}

std::vector<ElementId> DynamicSwapping::solution() const {
  return swapping_.solution().member_ids();
}

OracleCounters DynamicSwapping::counters() const {
  return retired_ + swapping_.oracles().counters();
}

// ---------------------------------------------------------------------------

DynamicGreedy::DynamicGreedy(Oracles oracles) : oracles_(std::move(oracles)) {}

void DynamicGreedy::Rebuild() {
  ++rebuilds_;
  solution_ = LazyGreedy(alive_.items(), oracles_);
}

void DynamicGreedy::Apply(const Operation& op) {
  RequireKnown(oracles_, op);
  alive_.Apply(op);
  if (op.kind == OpKind::kInsert ||
      std::find(solution_.begin(), solution_.end(), op.id) !=
          solution_.end()) {
    Rebuild();
  }
}

// ---------------------------------------------------------------------------

namespace {

struct HeapEntry {
  double gain;
  ElementId id;
  std::size_t round;  // solution size when gain was computed
};

// std::priority_queue is a max-heap on `less`; "less" here means "comes
// later" in the (gain desc, id asc) order.
struct LaterInOrder {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.id > b.id;
  }
};

}  // namespace

std::vector<ElementId> LazyGreedy(std::span<const ElementId> ground,
                                  Oracles& oracles) {
  std::vector<ElementId> solution;
  if (ground.empty()) return solution;
  double value = oracles.Value(solution);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, LaterInOrder> heap;
  for (ElementId e : ground) {
    heap.push({oracles.Marginal(e, solution, value), e, 0});
  }
  const auto rank = static_cast<std::size_t>(oracles.rank());
  while (!heap.empty() && solution.size() < rank) {
    HeapEntry top = heap.top();
    heap.pop();
    if (top.round != solution.size()) {
      top.gain = oracles.Marginal(top.id, solution, value);
      top.round = solution.size();
      heap.push(top);
      continue;
    }
    solution.push_back(top.id);
    if (oracles.IsIndependent(solution)) {
      value = oracles.Value(solution);
    } else {
      // Stays dependent for every larger solution; drop it for good.
      solution.pop_back();
    }
  }
  return solution;
}

std::vector<ElementId> EagerGreedy(std::span<const ElementId> ground,
                                   Oracles& oracles) {
  std::vector<ElementId> solution;
  std::vector<ElementId> remaining(ground.begin(), ground.end());
  const auto rank = static_cast<std::size_t>(oracles.rank());
  while (solution.size() < rank && !remaining.empty()) {
    const double value = oracles.Value(solution);
    std::optional<HeapEntry> best;
    std::vector<ElementId> kept;
    for (ElementId e : remaining) {
      solution.push_back(e);
      const bool independent = oracles.IsIndependent(solution);
      solution.pop_back();
      if (!independent) continue;
      kept.push_back(e);
      const HeapEntry candidate{oracles.Marginal(e, solution, value), e, 0};
      if (!best || LaterInOrder()(*best, candidate)) best = candidate;
    }
    if (!best) break;
    solution.push_back(best->id);
    std::erase(kept, best->id);
    remaining = std::move(kept);
  }
  return solution;
}

// ---------------------------------------------------------------------------

namespace {

struct Enumeration {
  std::span<const ElementId> sorted;
  std::size_t rank;
  Oracles* oracles;
  std::vector<ElementId> current;
  Optimum best;

  void Visit(std::size_t next) {
    const double value = oracles->Value(current);
    if (value > best.value) {
      best.value = value;
      best.elements = current;
    }
    if (current.size() == rank) return;
    for (std::size_t i = next; i < sorted.size(); ++i) {
      current.push_back(sorted[i]);
      if (oracles->IsIndependent(current)) Visit(i + 1);
      current.pop_back();
    }
  }
};

}  // namespace

Optimum BruteForceOptimum(std::span<const ElementId> alive, Oracles& oracles) {
  if (alive.size() > kBruteForceMaxElements ||
      oracles.rank() > kBruteForceMaxRank) {
    throw BudgetExceeded("brute force limited to " +
                         std::to_string(kBruteForceMaxElements) +
                         " elements and rank " +
                         std::to_string(kBruteForceMaxRank));
  }
  std::vector<ElementId> sorted(alive.begin(), alive.end());
  std::sort(sorted.begin(), sorted.end());
  Enumeration search{sorted, static_cast<std::size_t>(oracles.rank()),
                     &oracles, {}, {}};
  search.Visit(0);
  return search.best;
}

}  // namespace dynsub
