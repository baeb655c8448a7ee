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

#include "dynsub/instance_manager.h"

#include <cmath>
#include <string>

#include "dynsub/errors.h"

namespace dynsub {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

InstanceManager::InstanceManager(Oracles oracles, ManagerOptions options)
    : oracles_(std::move(oracles)), options_(options) {
  if (options_.epsilon && !(*options_.epsilon > 0.0)) {
    throw ContractViolation("epsilon must be positive");
  }
  if (!filtered()) CopyFor(0);
}

std::vector<int> InstanceManager::QualifyingCopies(double value,
                                                   double epsilon, int rank) {
  std::vector<int> out;
  if (!(value > 0.0)) return out;
  const double base = std::log1p(epsilon);
  // The band is [log(value) - 1, log(value k / eps)] in units of log(1+eps);
  // widen by two on each side and test every index exactly.
  const int lo = static_cast<int>(std::floor(std::log(value) / base)) - 3;
  const int hi =
      static_cast<int>(std::ceil(std::log(value * rank / epsilon) / base)) + 3;
  for (int j = lo; j <= hi; ++j) {
    if (InThresholdBand(value, epsilon, std::pow(1.0 + epsilon, j), rank)) {
      out.push_back(j);
    }
  }
  return out;
}

std::size_t InstanceManager::MaxCopiesPerElement() const {
  if (!filtered()) return 1;
  const double eps = *options_.epsilon;
  return static_cast<std::size_t>(std::ceil(
      std::log((1.0 + eps) * oracles_.rank() / eps) / std::log1p(eps)));
}

DynamicStructure& InstanceManager::CopyFor(int j) {
  auto it = copies_.find(j);
  if (it != copies_.end()) return it->second;
  DynamicOptions options;
  options.seed = SplitMix64(options_.seed ^ SplitMix64(
                                static_cast<std::uint64_t>(j) +
                                (restarts_ << 32)));
  options.record_trace = options_.record_trace;
  if (filtered()) {
    options.filter =
        MarginalFilter{*options_.epsilon, std::pow(1.0 + *options_.epsilon, j)};
  }
  return copies_
      .try_emplace(j, capacity_, oracles_.Fork(), options)
      .first->second;
}

double InstanceManager::SingletonValue(ElementId e) {
  auto it = singleton_.find(e);
  if (it != singleton_.end()) return it->second;
  const ElementId single[] = {e};
  const double value = oracles_.Value(single);
  singleton_.emplace(e, value);
  return value;
}

void InstanceManager::Route(ElementId e) {
  if (!filtered()) {
    CopyFor(0).Insert(e);
    return;
  }
  const double value = SingletonValue(e);
  for (int j : QualifyingCopies(value, *options_.epsilon, oracles_.rank())) {
    CopyFor(j).Insert(e, value);
  }
}

void InstanceManager::Restart() {
  for (const auto& [j, copy] : copies_) retired_ += copy.oracles().counters();
  copies_.clear();
  ++restarts_;
  if (!filtered()) CopyFor(0);
  for (ElementId e : alive_) Route(e);
}

BestSolution InstanceManager::Apply(const Operation& op) {
  if (op.kind == OpKind::kInsert) {
    if (alive_.contains(op.id)) {
      throw StreamError("insert of element " + std::to_string(op.id) +
                        " which is already alive");
    }
    if (!oracles_.universe().Contains(op.id)) {
      throw StreamError("insert of unknown element " + std::to_string(op.id));
    }
  } else if (!alive_.contains(op.id)) {
    throw StreamError("delete of element " + std::to_string(op.id) +
                      " which is not alive");
  }

  if (operations_ == capacity_) {
    capacity_ *= 2;
    Restart();
  }
  ++operations_;
  if (op.kind == OpKind::kInsert) {
    alive_.insert(op.id);
    Route(op.id);
  } else {
    alive_.erase(op.id);
    for (auto& [j, copy] : copies_) {
      if (copy.IsAlive(op.id)) copy.Delete(op.id);
    }
  }
  return Best();
}

BestSolution InstanceManager::Best() {
  BestSolution best;
  for (auto& [j, copy] : copies_) {
    const double value = copy.SolutionValue();
    if (!best.copy || value > best.value) {
      best.copy = j;
      best.value = value;
    }
  }
  if (best.copy) best.elements = copies_.at(*best.copy).solution().member_ids();
  return best;
}

std::vector<int> InstanceManager::CopiesHolding(ElementId e) const {
  std::vector<int> out;
  for (const auto& [j, copy] : copies_) {
    if (copy.IsAlive(e)) out.push_back(j);
  }
  return out;
}

OracleCounters InstanceManager::TotalCounters() const {
  OracleCounters total = retired_ + oracles_.counters();
  for (const auto& [j, copy] : copies_) total += copy.oracles().counters();
  return total;
}

CostReport InstanceManager::AmortizedCost() const {
  if (operations_ == 0) {
    throw ContractViolation("amortized cost needs at least one operation");
  }
  CostReport report;
  report.operations = operations_;
  report.routing = oracles_.counters();
  report.retired = retired_;
  for (const auto& [j, copy] : copies_) {
    report.per_copy.push_back({j, copy.oracles().counters()});
  }
  report.total = TotalCounters();
  report.amortized = static_cast<double>(report.total.total()) /
                     static_cast<double>(operations_);
  return report;
}

}  // namespace dynsub
