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

#include "dynsub/oracles.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dynsub/errors.h"

namespace dynsub {
namespace {

bool SpanContains(std::span<const ElementId> set, ElementId e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

std::string UnknownId(ElementId id) {
  return "unknown element id " + std::to_string(id);
}

// Minimal union-find over dense vertex indices.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False when x and y were already connected.
  bool Unite(int x, int y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

double SubmodularFunction::Gain(ElementId e, std::span<const ElementId> set,
                                double base) const {
  if (SpanContains(set, e)) return 0.0;
  std::vector<ElementId> extended(set.begin(), set.end());
  extended.push_back(e);
  return Evaluate(extended) - base;
}

// ---------------------------------------------------------------------------

ModularFunction::ModularFunction(std::unordered_map<ElementId, double> weights)
    : weights_(std::move(weights)) {
  for (const auto& [id, w] : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw UniverseError("modular weight of element " + std::to_string(id) +
                          " must be finite and nonnegative");
    }
  }
}

ModularFunction ModularFunction::FromWeights(const Universe& universe) {
  std::unordered_map<ElementId, double> weights;
  for (const Element& e : universe.elements()) {
    weights.emplace(e.id, e.payload.weight);
  }
  return ModularFunction(std::move(weights));
}

ModularFunction ModularFunction::FromExponents(const Universe& universe,
                                               double base) {
  std::unordered_map<ElementId, double> weights;
  for (const Element& e : universe.elements()) {
    const double w = std::pow(base, e.payload.exponent);
    if (!std::isfinite(w)) {
      throw UniverseError("weight " + std::to_string(base) + "^" +
                          std::to_string(e.payload.exponent) +
                          " overflows binary64");
    }
    weights.emplace(e.id, w);
  }
  return ModularFunction(std::move(weights));
}

double ModularFunction::weight(ElementId e) const {
  auto it = weights_.find(e);
  if (it == weights_.end()) throw UniverseError(UnknownId(e));
  return it->second;
}

double ModularFunction::Evaluate(std::span<const ElementId> set) const {
  double total = 0.0;
  for (ElementId e : set) total += weight(e);
  return total;
}

double ModularFunction::Gain(ElementId e, std::span<const ElementId> set,
                             double /*base*/) const {
  return SpanContains(set, e) ? 0.0 : weight(e);
}

// ---------------------------------------------------------------------------

WeightedCoverage::WeightedCoverage(
    const Universe& universe,
    std::unordered_map<std::int64_t, double> item_weights)
    : item_weights_(std::move(item_weights)) {
  for (const auto& [item, w] : item_weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw UniverseError("item " + std::to_string(item) +
                          " has an invalid weight");
    }
  }
  for (const Element& e : universe.elements()) {
    std::vector<std::int64_t> items = e.payload.covers;
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    for (std::int64_t item : items) {
      if (!item_weights_.contains(item)) {
        throw UniverseError("element " + std::to_string(e.id) +
                            " covers unweighted item " + std::to_string(item));
      }
    }
    covers_.emplace(e.id, std::move(items));
  }
}

const std::vector<std::int64_t>& WeightedCoverage::covers(ElementId e) const {
  auto it = covers_.find(e);
  if (it == covers_.end()) throw UniverseError(UnknownId(e));
  return it->second;
}

double WeightedCoverage::Evaluate(std::span<const ElementId> set) const {
  std::vector<std::int64_t> items;
  for (ElementId e : set) {
    const auto& c = covers(e);
    items.insert(items.end(), c.begin(), c.end());
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  double total = 0.0;
  for (std::int64_t item : items) total += item_weights_.at(item);
  return total;
}

double WeightedCoverage::Gain(ElementId e, std::span<const ElementId> set,
                              double /*base*/) const {
  const auto& mine = covers(e);
  if (SpanContains(set, e) || mine.empty()) return 0.0;
  std::vector<std::int64_t> items;
  for (ElementId x : set) {
    const auto& c = covers(x);
    items.insert(items.end(), c.begin(), c.end());
  }
  std::sort(items.begin(), items.end());
  double gain = 0.0;
  for (std::int64_t item : mine) {
    if (!std::binary_search(items.begin(), items.end(), item)) {
      gain += item_weights_.at(item);
    }
  }
  return gain;
}

// ---------------------------------------------------------------------------

FacilityLocation::FacilityLocation(const Universe& universe,
                                   std::vector<std::vector<double>> clients)
    : clients_(std::move(clients)) {
  for (const Element& e : universe.elements()) {
    std::vector<double> row;
    row.reserve(clients_.size());
    for (const auto& c : clients_) {
      if (c.size() != e.payload.point.size()) {
        throw UniverseError("element " + std::to_string(e.id) +
                            " has a point of the wrong dimension");
      }
      double d2 = 0.0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const double d = c[i] - e.payload.point[i];
        d2 += d * d;
      }
      row.push_back(1.0 / (1.0 + std::sqrt(d2)));
    }
    similarity_.emplace(e.id, std::move(row));
  }
}

// Per-client improvement over the current best. Each term can only shrink
// as the set grows, so the rounded sum is nonincreasing too.
double FacilityLocation::Gain(ElementId e, std::span<const ElementId> set,
                              double) const {
  auto row = similarity_.find(e);
  if (row == similarity_.end()) throw UniverseError(UnknownId(e));
  std::vector<double> best(clients_.size(), 0.0);
  for (ElementId s : set) {
    auto it = similarity_.find(s);
    if (it == similarity_.end()) throw UniverseError(UnknownId(s));
    for (std::size_t c = 0; c < best.size(); ++c) {
      best[c] = std::max(best[c], it->second[c]);
    }
  }
  double gain = 0.0;
  for (std::size_t c = 0; c < best.size(); ++c) {
    gain += std::max(0.0, row->second[c] - best[c]);
  }
  return gain;
}

double FacilityLocation::Similarity(std::size_t client, ElementId e) const {
  auto it = similarity_.find(e);
  if (it == similarity_.end()) throw UniverseError(UnknownId(e));
  return it->second.at(client);
}

double FacilityLocation::Evaluate(std::span<const ElementId> set) const {
  std::vector<double> best(clients_.size(), 0.0);
  for (ElementId e : set) {
    auto it = similarity_.find(e);
    if (it == similarity_.end()) throw UniverseError(UnknownId(e));
    for (std::size_t c = 0; c < best.size(); ++c) {
      best[c] = std::max(best[c], it->second[c]);
    }
  }
  double total = 0.0;
  for (double b : best) total += b;
  return total;
}

// ---------------------------------------------------------------------------

UniformMatroid::UniformMatroid(int k) : k_(k) {
  if (k < 1) throw ContractViolation("uniform matroid rank must be positive");
}

bool UniformMatroid::IsIndependent(std::span<const ElementId> set) const {
  return static_cast<int>(set.size()) <= k_;
}

PartitionMatroid::PartitionMatroid(const Universe& universe,
                                   std::vector<std::vector<ElementId>> parts,
                                   std::vector<int> capacities)
    : capacities_(std::move(capacities)) {
  if (parts.size() != capacities_.size()) {
    throw UniverseError("partition matroid needs one capacity per part");
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (capacities_[p] < 0) throw UniverseError("negative part capacity");
    for (ElementId e : parts[p]) {
      if (!universe.Contains(e)) throw UniverseError(UnknownId(e));
      if (!part_of_.emplace(e, static_cast<int>(p)).second) {
        throw UniverseError("element " + std::to_string(e) +
                            " listed in two parts");
      }
    }
    rank_ += std::min<int>(capacities_[p], static_cast<int>(parts[p].size()));
  }
  for (const Element& e : universe.elements()) {
    if (!part_of_.contains(e.id)) {
      throw UniverseError("element " + std::to_string(e.id) +
                          " belongs to no part");
    }
  }
}

int PartitionMatroid::part_of(ElementId e) const {
  auto it = part_of_.find(e);
  if (it == part_of_.end()) throw UniverseError(UnknownId(e));
  return it->second;
}

bool PartitionMatroid::IsIndependent(std::span<const ElementId> set) const {
  std::vector<int> used(capacities_.size(), 0);
  for (ElementId e : set) {
    const int p = part_of(e);
    if (++used[p] > capacities_[p]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(const Universe& universe, int vertex_count)
    : vertex_count_(vertex_count) {
  DisjointSets forest(vertex_count_);
  for (const Element& e : universe.elements()) {
    if (!e.payload.edge) {
      throw UniverseError("element " + std::to_string(e.id) + " has no edge");
    }
    const auto [u, v] = *e.payload.edge;
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
      throw UniverseError("edge of element " + std::to_string(e.id) +
                          " references a missing vertex");
    }
    edges_.emplace(e.id, *e.payload.edge);
    if (forest.Unite(u, v)) ++rank_;
  }
}

bool GraphicMatroid::IsIndependent(std::span<const ElementId> set) const {
  DisjointSets forest(vertex_count_);
  for (ElementId e : set) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw UniverseError(UnknownId(e));
    if (!forest.Unite(it->second.first, it->second.second)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Oracles::Oracles(std::shared_ptr<const Universe> universe,
                 std::shared_ptr<const SubmodularFunction> function,
                 std::shared_ptr<const Matroid> matroid)
    : universe_(std::move(universe)),
      function_(std::move(function)),
      matroid_(std::move(matroid)) {}

void Oracles::CheckKnown(std::span<const ElementId> set) const {
  for (ElementId e : set) {
    if (!universe_->Contains(e)) throw UniverseError(UnknownId(e));
  }
}

bool Oracles::IsIndependent(std::span<const ElementId> set) {
  CheckKnown(set);
  ++counters_.independence_calls;
  return matroid_->IsIndependent(set);
}

double Oracles::Value(std::span<const ElementId> set) {
  CheckKnown(set);
  ++counters_.value_calls;
  return function_->Evaluate(set);
}

double Oracles::Marginal(ElementId e, std::span<const ElementId> set) {
  const double base = Value(set);
  return Marginal(e, set, base);
}

double Oracles::Marginal(ElementId e, std::span<const ElementId> set,
                         double value_of_set) {
  CheckKnown(set);
  CheckKnown({&e, 1});
  ++counters_.value_calls;
  return function_->Gain(e, set, value_of_set);
}

}  // namespace dynsub
