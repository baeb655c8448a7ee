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

#ifndef DYNSUB_WEIGHTED_SOLUTION_H_
#define DYNSUB_WEIGHTED_SOLUTION_H_

#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "dynsub/oracles.h"

namespace dynsub {

// An element of the solution with the weight it was admitted with.
struct WeightedMember {
  ElementId id = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedMember&,
                         const WeightedMember&) = default;
};

// Strict total order used everywhere: heavier first, then smaller id.
inline bool HeavierThan(const WeightedMember& a, const WeightedMember& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  return a.id < b.id;
}

// Outcome of looking for the element that e would replace.
struct SwapCandidate {
  enum class Kind {
    kFree,     // S + e is independent; nothing has to leave.
    kSwap,     // `out` is the lightest y with S - y + e independent.
    kBlocked,  // no single exchange makes room for e (e is a loop).
  };
  Kind kind = Kind::kFree;
  WeightedMember out;  // meaningful only for kSwap

  friend bool operator==(const SwapCandidate&, const SwapCandidate&) = default;
};

// The solution S of a swapping algorithm, kept sorted by frozen weight
// (heaviest first), together with its history S' of every element ever
// admitted. Weights are fixed at admission and never recomputed.
class WeightedSolution {
 public:
  // Inserts e with weight w at its sorted position and records it in the
  // history. When swap_out is given it must be a member; it leaves S and its
  // weight is added to the swapped-out total w(K). Throws ContractViolation
  // otherwise, or when e is already a member.
  void Admit(ElementId e, double w, std::optional<ElementId> swap_out);

  // Binary search over the weight-sorted prefix: at most
  // ceil(log2(|S| + 1)) + 1 independence calls.
  SwapCandidate FindSwap(ElementId e, Oracles& oracles) const;
  // Reference scan over all members, lightest first. Up to |S| + 1 calls.
  SwapCandidate FindSwapLinear(ElementId e, Oracles& oracles) const;

  std::span<const WeightedMember> members() const { return members_; }
  std::vector<ElementId> member_ids() const;
  // Distinct elements ever admitted, in admission order.
  std::span<const ElementId> history() const { return history_; }

  bool Contains(ElementId e) const;
  bool InHistory(ElementId e) const { return history_set_.contains(e); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  // w(S), w(S') and w(K) = w(S') - w(S) as running sums over admissions.
  double weight() const;
  double history_weight() const { return history_weight_; }
  double swapped_out_weight() const { return swapped_out_weight_; }

  // f(S) and f(S'), evaluated with one value call the first time they are
  // asked for after a change and cached afterwards.
  double Value(Oracles& oracles) const;
  double HistoryValue(Oracles& oracles) const;

 private:
  std::vector<WeightedMember> members_;
  std::vector<ElementId> history_;
  std::unordered_set<ElementId> history_set_;
  double history_weight_ = 0.0;
  double swapped_out_weight_ = 0.0;
  mutable std::optional<double> value_;
  mutable std::optional<double> history_value_;
};

// The three weight properties of a swapping run:
//   (i) w(K) <= w(S), (ii) w(S) <= f(S), (iii) f(S') = w(S').
struct WPropertiesReport {
  bool swapped_out_bounded = true;  // (i)
  bool weight_below_value = true;   // (ii)
  bool history_matches = true;      // (iii)
  double swapped_out_weight = 0.0;
  double weight = 0.0;
  double value = 0.0;
  double history_weight = 0.0;
  double history_value = 0.0;

  bool ok() const {
    return swapped_out_bounded && weight_below_value && history_matches;
  }
};

// Evaluates f(S) and f(S') with fresh value calls. Comparisons allow a
// relative slack of 1e-9 * max(1, w(S')) for rounding in the weight sums.
WPropertiesReport CheckWProperties(const WeightedSolution& solution,
                                   Oracles& oracles);

}  // namespace dynsub

#endif  // DYNSUB_WEIGHTED_SOLUTION_H_
