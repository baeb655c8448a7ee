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

#ifndef DYNSUB_ORACLES_H_
#define DYNSUB_ORACLES_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dynsub/universe.h"

namespace dynsub {

// Monotone, normalized, submodular set function over a Universe.
// Implementations are immutable and may be shared between threads.
class SubmodularFunction {
 public:
  virtual ~SubmodularFunction() = default;

  virtual double Evaluate(std::span<const ElementId> set) const = 0;

  // f(set + e) - base, where base is f(set) as previously evaluated.
  // Returns 0 when e is already in set.
  virtual double Gain(ElementId e, std::span<const ElementId> set,
                      double base) const;

  virtual std::string_view name() const = 0;
};

// f(S) = sum of per-element weights.
class ModularFunction : public SubmodularFunction {
 public:
  explicit ModularFunction(std::unordered_map<ElementId, double> weights);

  // Weights taken from Payload::weight.
  static ModularFunction FromWeights(const Universe& universe);
  // Weights base^Payload::exponent. Throws UniverseError when a weight does
  // not fit in a double.
  static ModularFunction FromExponents(const Universe& universe, double base);

  double Evaluate(std::span<const ElementId> set) const override;
  // Exact: never subtracts two large sums.
  double Gain(ElementId e, std::span<const ElementId> set,
              double base) const override;
  std::string_view name() const override { return "modular"; }

  double weight(ElementId e) const;

 private:
  std::unordered_map<ElementId, double> weights_;
};

// f(S) = total weight of the items covered by at least one element of S.
class WeightedCoverage : public SubmodularFunction {
 public:
  WeightedCoverage(const Universe& universe,
                   std::unordered_map<std::int64_t, double> item_weights);

  double Evaluate(std::span<const ElementId> set) const override;
  double Gain(ElementId e, std::span<const ElementId> set,
              double base) const override;
  std::string_view name() const override { return "coverage"; }

 private:
  const std::vector<std::int64_t>& covers(ElementId e) const;

  std::unordered_map<std::int64_t, double> item_weights_;
  std::unordered_map<ElementId, std::vector<std::int64_t>> covers_;
};

// f(S) = sum over clients c of max_{e in S} sim(c, e), with
// sim(c, e) = 1 / (1 + |c - e|) on Payload::point coordinates.
class FacilityLocation : public SubmodularFunction {
 public:
  FacilityLocation(const Universe& universe,
                   std::vector<std::vector<double>> clients);

  double Evaluate(std::span<const ElementId> set) const override;
  double Gain(ElementId e, std::span<const ElementId> set,
              double base) const override;
  std::string_view name() const override { return "facility-location"; }

  double Similarity(std::size_t client, ElementId e) const;

 private:
  std::vector<std::vector<double>> clients_;
  // Row per element, one entry per client.
  std::unordered_map<ElementId, std::vector<double>> similarity_;
};

class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual bool IsIndependent(std::span<const ElementId> set) const = 0;
  virtual int rank() const = 0;
  virtual std::string_view name() const = 0;
};

class UniformMatroid : public Matroid {
 public:
  explicit UniformMatroid(int k);
  bool IsIndependent(std::span<const ElementId> set) const override;
  int rank() const override { return k_; }
  std::string_view name() const override { return "uniform"; }

 private:
  int k_;
};

// At most capacities[p] elements from part p. Every element of the universe
// must belong to exactly one part.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(const Universe& universe,
                   std::vector<std::vector<ElementId>> parts,
                   std::vector<int> capacities);
  bool IsIndependent(std::span<const ElementId> set) const override;
  int rank() const override { return rank_; }
  std::string_view name() const override { return "partition"; }

  int part_of(ElementId e) const;

 private:
  std::unordered_map<ElementId, int> part_of_;
  std::vector<int> capacities_;
  int rank_ = 0;
};

// Forests of a multigraph whose edges are the elements (Payload::edge).
// Independence is checked with a union-find built per query.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(const Universe& universe, int vertex_count);
  bool IsIndependent(std::span<const ElementId> set) const override;
  int rank() const override { return rank_; }
  std::string_view name() const override { return "graphic"; }

 private:
  int vertex_count_;
  std::unordered_map<ElementId, std::pair<int, int>> edges_;
  int rank_ = 0;
};

struct OracleCounters {
  std::uint64_t value_calls = 0;
  std::uint64_t independence_calls = 0;

  std::uint64_t total() const { return value_calls + independence_calls; }

  OracleCounters& operator+=(const OracleCounters& other) {
    value_calls += other.value_calls;
    independence_calls += other.independence_calls;
    return *this;
  }
  friend OracleCounters operator+(OracleCounters a, const OracleCounters& b) {
    return a += b;
  }
  friend OracleCounters operator-(const OracleCounters& a,
                                  const OracleCounters& b) {
    return {a.value_calls - b.value_calls,
            a.independence_calls - b.independence_calls};
  }
  friend bool operator==(const OracleCounters&,
                         const OracleCounters&) = default;
};

// Counting front end over a shared (universe, function, matroid) triple.
// Every algorithm instance owns one of these; Fork() hands out another one
// bound to the same oracles with zeroed counters. Not thread-safe.
class Oracles {
 public:
  Oracles(std::shared_ptr<const Universe> universe,
          std::shared_ptr<const SubmodularFunction> function,
          std::shared_ptr<const Matroid> matroid);

  // One independence call.
  bool IsIndependent(std::span<const ElementId> set);
  // One value call.
  double Value(std::span<const ElementId> set);
  // f(e | set): two value calls.
  double Marginal(ElementId e, std::span<const ElementId> set);
  // f(e | set) given f(set) = value_of_set: one value call.
  double Marginal(ElementId e, std::span<const ElementId> set,
                  double value_of_set);

  const OracleCounters& counters() const { return counters_; }
  void ResetCounters() { counters_ = {}; }

  Oracles Fork() const { return Oracles(universe_, function_, matroid_); }

  int rank() const { return matroid_->rank(); }
  const Universe& universe() const { return *universe_; }
  const SubmodularFunction& function() const { return *function_; }
  const Matroid& matroid() const { return *matroid_; }

 private:
  void CheckKnown(std::span<const ElementId> set) const;

  std::shared_ptr<const Universe> universe_;
  std::shared_ptr<const SubmodularFunction> function_;
  std::shared_ptr<const Matroid> matroid_;
  OracleCounters counters_;
};

}  // namespace dynsub

#endif  // DYNSUB_ORACLES_H_
