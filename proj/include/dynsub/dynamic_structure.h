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

#ifndef DYNSUB_DYNAMIC_STRUCTURE_H_
#define DYNSUB_DYNAMIC_STRUCTURE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dynsub/indexed_set.h"
#include "dynsub/operation.h"
#include "dynsub/oracles.h"
#include "dynsub/weighted_solution.h"

namespace dynsub {

// Restricts a structure to one threshold band tau: insertions outside
// [(eps/k) tau, (1+eps) tau) are ignored and candidates whose gain over
// S_l drops below (eps/k) tau are discarded during reconstruction.
struct MarginalFilter {
  double epsilon = 0.0;
  double tau = 0.0;
};

// True when f({e}) = singleton_value lies in the band handled by a copy
// with threshold tau: (1 + eps) tau > f({e}) >= (eps / k) tau.
bool InThresholdBand(double singleton_value, double epsilon, double tau,
                     int rank);

struct DynamicOptions {
  std::uint64_t seed = 0;
  std::optional<MarginalFilter> filter;
  // Keep the per-level decision log of the latest reconstruction.
  bool record_trace = false;
};

enum class TraceDecision { kAdded, kSwapped, kDiscarded };

struct TraceEntry {
  ElementId element = 0;
  TraceDecision decision = TraceDecision::kDiscarded;
  double weight = 0.0;
  std::optional<ElementId> swapped_out;
};

// One level l: partial solution S_l with its history S'_l, candidates A_l
// and the buffer B_l of elements inserted since the last rebuild of l.
struct Level {
  WeightedSolution solution;
  IndexedSet candidates;
  IndexedSet buffer;
  std::vector<TraceEntry> trace;
};

struct InvariantViolation {
  int level = 0;
  std::string what;
};

struct InvariantReport {
  std::vector<InvariantViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Fully dynamic structure for a stream of at most `capacity` insertions:
// L + 1 levels with L = log2(capacity). Each insertion lands in every
// buffer and rebuilds from the first level whose buffer reached
// capacity / 2^l; deleting a solution element rebuilds from the first level
// whose partial solution holds it. S_L is a 4-approximation of the optimum
// over the alive elements after every operation.
//
// Level 0 has no predecessor; its rebuild starts from every alive element
// with empty S_0 and S'_0.
class DynamicStructure {
 public:
  // capacity must be a power of two (ContractViolation otherwise).
  DynamicStructure(std::size_t capacity, Oracles oracles,
                   DynamicOptions options = {});

  // Throws StreamError when e is already alive. `singleton_value`, when
  // given, is f({e}) as already computed by the caller; in filtered mode the
  // structure otherwise pays one value call to obtain it.
  void Insert(ElementId e, std::optional<double> singleton_value = {});
  // Throws StreamError when e is not alive.
  void Delete(ElementId e);
  void Apply(const Operation& op);

  // S_L, without oracle calls.
  const WeightedSolution& solution() const { return levels_.back().solution; }
  // f(S_L); one value call when S_L changed since the last query.
  double SolutionValue() { return solution().Value(oracles_); }

  bool IsAlive(ElementId e) const { return alive_.Contains(e); }
  std::size_t alive_count() const { return alive_.size(); }
  std::size_t capacity() const { return capacity_; }
  int top_level() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t level_capacity(int level) const { return capacity_ >> level; }
  const Level& level(int l) const { return levels_.at(l); }
  std::uint64_t operations() const { return operations_; }
  const std::optional<MarginalFilter>& filter() const {
    return options_.filter;
  }
  // Rebuilds started at each level by an insertion or a deletion (the
  // recursive rebuilds of the higher levels are not counted here).
  const std::vector<std::uint64_t>& insert_rebuilds() const {
    return insert_rebuilds_;
  }
  const std::vector<std::uint64_t>& delete_rebuilds() const {
    return delete_rebuilds_;
  }

  Oracles& oracles() { return oracles_; }
  const Oracles& oracles() const { return oracles_; }

  // Concatenated decision logs of levels 0..L (requires record_trace). The
  // swapping algorithm fed with these elements in this order ends with S_L.
  std::vector<TraceEntry> DecisionTrace() const;

  // Sweeps every level: |B_l| <= n/2^l, |A_l| <= 4n/2^l, S_l independent,
  // S_l within S'_l, plus any "|A_l| < n/2^l and B_l empty" failure seen at
  // the end of a rebuild. Uses a fork of the oracles, so the counters are
  // not touched.
  InvariantReport AuditInvariants() const;

  // Fault injection hook for tests.
  Level& mutable_level_for_testing(int l) { return levels_.at(l); }

 private:
  void LevelConstruct(int level);
  bool InBand(double singleton_value) const;
  double filter_threshold() const;

  std::size_t capacity_;
  Oracles oracles_;
  DynamicOptions options_;
  std::mt19937_64 rng_;
  std::vector<Level> levels_;
  IndexedSet alive_;
  std::uint64_t operations_ = 0;
  std::vector<std::uint64_t> insert_rebuilds_;
  std::vector<std::uint64_t> delete_rebuilds_;
  std::vector<InvariantViolation> rebuild_violations_;
};

}  // namespace dynsub

#endif  // DYNSUB_DYNAMIC_STRUCTURE_H_
