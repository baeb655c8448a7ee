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

#include "dynsub/swapping.h"

#include "dynsub/errors.h"

namespace dynsub {

const char* ToString(SwapDecision decision) {
  switch (decision) {
    case SwapDecision::kBelowThreshold:
      return "below-threshold";
    case SwapDecision::kAddedNoSwap:
      return "added";
    case SwapDecision::kSwapped:
      return "swapped";
    case SwapDecision::kRejected:
      return "rejected";
  }
  return "?";
}

ThresholdSwapping::ThresholdSwapping(Oracles oracles, double epsilon,
                                     double tau)
    : oracles_(std::move(oracles)),
      threshold_(epsilon / oracles_.rank() * tau) {
  if (epsilon < 0.0 || tau < 0.0) {
    throw ContractViolation("epsilon and tau must be nonnegative");
  }
}

SwapStep ThresholdSwapping::Process(ElementId e) {
  SwapStep step;
  step.element = e;
  const auto history = solution_.history();
  step.weight =
      oracles_.Marginal(e, history, solution_.HistoryValue(oracles_));
  if (step.weight < threshold_) {
    step.decision = SwapDecision::kBelowThreshold;
    return step;
  }
  const SwapCandidate swap = solution_.FindSwap(e, oracles_);
  switch (swap.kind) {
    case SwapCandidate::Kind::kFree:
      solution_.Admit(e, step.weight, std::nullopt);
      step.decision = SwapDecision::kAddedNoSwap;
      break;
    case SwapCandidate::Kind::kSwap:
      if (2.0 * swap.out.weight < step.weight) {
        solution_.Admit(e, step.weight, swap.out.id);
        step.decision = SwapDecision::kSwapped;
        step.swapped_out = swap.out;
      } else {
        step.decision = SwapDecision::kRejected;
      }
      break;
    case SwapCandidate::Kind::kBlocked:
      step.decision = SwapDecision::kRejected;
      break;
  }
  return step;
}

SwapRun RunStream(std::span<const ElementId> elements, const Oracles& oracles,
                  double epsilon, double tau) {
  ThresholdSwapping algorithm(oracles.Fork(), epsilon, tau);
  SwapRun run;
  run.steps.reserve(elements.size());
  for (ElementId e : elements) run.steps.push_back(algorithm.Process(e));
  run.solution = algorithm.solution();
  run.counters = algorithm.oracles().counters();
  return run;
}

}  // namespace dynsub
