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

#include "dynsub/weighted_solution.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "dynsub/errors.h"

namespace dynsub {

void WeightedSolution::Admit(ElementId e, double w,
                             std::optional<ElementId> swap_out) {
  if (Contains(e)) {
    throw ContractViolation("element " + std::to_string(e) +
                            " is already in the solution");
  }
  if (swap_out) {
    auto it = std::find_if(members_.begin(), members_.end(),
                           [&](const WeightedMember& m) {
                             return m.id == *swap_out;
                           });
    if (it == members_.end()) {
      throw ContractViolation("swap-out element " + std::to_string(*swap_out) +
                              " is not a member");
    }
    swapped_out_weight_ += it->weight;
    members_.erase(it);
  }
  const WeightedMember member{e, w};
  members_.insert(std::upper_bound(members_.begin(), members_.end(), member,
                                   HeavierThan),
                  member);
  // A re-inserted element already in the history contributes a fresh
  // admission record (its weight is then 0 because e is in S').
  if (history_set_.insert(e).second) history_.push_back(e);
  history_weight_ += w;
  value_.reset();
  history_value_.reset();
}

SwapCandidate WeightedSolution::FindSwap(ElementId e, Oracles& oracles) const {
  std::vector<ElementId> probe = member_ids();
  probe.push_back(e);
  if (oracles.IsIndependent(probe)) return {};

  // Prefix(i) = {x_1, ..., x_i} + e over the heaviest-first order, with
  // Prefix(|S|) known to be dependent. Search the largest i in [0, |S|)
  // with Prefix(i) independent; lo == -1 means even {e} is dependent.
  // Downward closure makes the predicate monotone in i, and x_{i+1} is the
  // lightest member whose removal makes room for e.
  std::ptrdiff_t lo = -1;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(members_.size());
  while (hi - lo > 1) {
    const std::ptrdiff_t mid = lo + (hi - lo) / 2;
    probe.clear();
    for (std::ptrdiff_t i = 0; i < mid; ++i) probe.push_back(members_[i].id);
    probe.push_back(e);
    if (oracles.IsIndependent(probe)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo < 0) return {SwapCandidate::Kind::kBlocked, {}};
  return {SwapCandidate::Kind::kSwap, members_[lo]};
}

SwapCandidate WeightedSolution::FindSwapLinear(ElementId e,
                                               Oracles& oracles) const {
  std::vector<ElementId> probe = member_ids();
  probe.push_back(e);
  if (oracles.IsIndependent(probe)) return {};
  for (auto it = members_.rbegin(); it != members_.rend(); ++it) {
    probe.clear();
    for (const WeightedMember& m : members_) {
      if (m.id != it->id) probe.push_back(m.id);
    }
    probe.push_back(e);
    if (oracles.IsIndependent(probe)) {
      return {SwapCandidate::Kind::kSwap, *it};
    }
  }
  return {SwapCandidate::Kind::kBlocked, {}};
}

std::vector<ElementId> WeightedSolution::member_ids() const {
  std::vector<ElementId> ids;
  ids.reserve(members_.size() + 1);
  for (const WeightedMember& m : members_) ids.push_back(m.id);
  return ids;
}

bool WeightedSolution::Contains(ElementId e) const {
  return std::any_of(members_.begin(), members_.end(),
                     [e](const WeightedMember& m) { return m.id == e; });
}

double WeightedSolution::weight() const {
  double total = 0.0;
  for (const WeightedMember& m : members_) total += m.weight;
  return total;
}

double WeightedSolution::Value(Oracles& oracles) const {
  if (!value_) value_ = oracles.Value(member_ids());
  return *value_;
}

double WeightedSolution::HistoryValue(Oracles& oracles) const {
  if (!history_value_) history_value_ = oracles.Value(history_);
  return *history_value_;
}

WPropertiesReport CheckWProperties(const WeightedSolution& solution,
                                   Oracles& oracles) {
  WPropertiesReport report;
  report.weight = solution.weight();
  report.swapped_out_weight = solution.swapped_out_weight();
  report.history_weight = solution.history_weight();
  report.value = oracles.Value(solution.member_ids());
  report.history_value = oracles.Value(solution.history());

  const double slack = 1e-9 * std::max(1.0, report.history_weight);
  report.swapped_out_bounded =
      report.swapped_out_weight <= report.weight + slack;
  report.weight_below_value = report.weight <= report.value + slack;
  report.history_matches =
      std::abs(report.history_value - report.history_weight) <= slack;
  return report;
}

}  // namespace dynsub
