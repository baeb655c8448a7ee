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

#ifndef DYNSUB_SWAPPING_H_
#define DYNSUB_SWAPPING_H_

#include <optional>
#include <span>
#include <vector>

#include "dynsub/oracles.h"
#include "dynsub/weighted_solution.h"

namespace dynsub {

enum class SwapDecision {
  kBelowThreshold,  // w(e) < (eps / k) * tau; e is ignored entirely
  kAddedNoSwap,     // S + e independent
  kSwapped,         // e replaced a lighter member s_e with 2 w(s_e) < w(e)
  kRejected,        // swap test failed (or e is a loop)
};

const char* ToString(SwapDecision decision);

struct SwapStep {
  ElementId element = 0;
  double weight = 0.0;
  SwapDecision decision = SwapDecision::kRejected;
  std::optional<WeightedMember> swapped_out;

  friend bool operator==(const SwapStep&, const SwapStep&) = default;
};

// Insertion-only streaming algorithm. Each arriving element gets weight
// w(e) = f(e | S') and either joins S, replaces the lightest exchangeable
// member when it is more than twice as heavy, or is dropped. Elements
// below (eps / k) * tau are skipped before touching S'. With tau = 0 this
// is the plain swapping algorithm.
class ThresholdSwapping {
 public:
  explicit ThresholdSwapping(Oracles oracles, double epsilon = 0.0,
                             double tau = 0.0);

  SwapStep Process(ElementId e);

  const WeightedSolution& solution() const { return solution_; }
  Oracles& oracles() { return oracles_; }
  const Oracles& oracles() const { return oracles_; }
  double threshold() const { return threshold_; }

 private:
  Oracles oracles_;
  double threshold_;
  WeightedSolution solution_;
};

struct SwapRun {
  WeightedSolution solution;
  std::vector<SwapStep> steps;
  OracleCounters counters;
};

// Folds Process over an insertion-only sequence using a fork of `oracles`.
SwapRun RunStream(std::span<const ElementId> elements, const Oracles& oracles,
                  double epsilon = 0.0, double tau = 0.0);

}  // namespace dynsub

#endif  // DYNSUB_SWAPPING_H_
