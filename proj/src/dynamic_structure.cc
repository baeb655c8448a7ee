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

#include "dynsub/dynamic_structure.h"

#include <bit>
#include <string>

#include "dynsub/errors.h"

namespace dynsub {
namespace {

struct ScoredCandidate {
  ElementId id;
  double weight;
  SwapCandidate swap;
};

}  // namespace

bool InThresholdBand(double singleton_value, double epsilon, double tau,
                     int rank) {
  return (1.0 + epsilon) * tau > singleton_value &&
         singleton_value >= epsilon / rank * tau;
}

DynamicStructure::DynamicStructure(std::size_t capacity, Oracles oracles,
                                   DynamicOptions options)
    : capacity_(capacity),
      oracles_(std::move(oracles)),
      options_(options),
      rng_(options.seed) {
  if (capacity_ == 0 || !std::has_single_bit(capacity_)) {
    throw ContractViolation("capacity must be a power of two, got " +
                            std::to_string(capacity_));
  }
  if (options_.filter &&
      (options_.filter->epsilon <= 0.0 || options_.filter->tau <= 0.0)) {
    throw ContractViolation("filter needs epsilon > 0 and tau > 0");
  }
  const int top = std::countr_zero(capacity_);
  levels_.resize(top + 1);
  insert_rebuilds_.assign(top + 1, 0);
  delete_rebuilds_.assign(top + 1, 0);
}

double DynamicStructure::filter_threshold() const {
  return options_.filter->epsilon / oracles_.rank() * options_.filter->tau;
}

bool DynamicStructure::InBand(double singleton_value) const {
  return InThresholdBand(singleton_value, options_.filter->epsilon,
                         options_.filter->tau, oracles_.rank());
}

void DynamicStructure::Insert(ElementId e,
                              std::optional<double> singleton_value) {
  if (alive_.Contains(e)) {
    throw StreamError("insert of element " + std::to_string(e) +
                      " which is already alive");
  }
  if (!oracles_.universe().Contains(e)) {
    throw UniverseError("unknown element id " + std::to_string(e));
  }
  ++operations_;
  if (options_.filter) {
    if (!singleton_value) {
      const ElementId single[] = {e};
      singleton_value = oracles_.Value(single);
    }
    if (!InBand(*singleton_value)) return;
  }
  alive_.Insert(e);
  for (Level& level : levels_) level.buffer.Insert(e);
  for (int l = 0; l <= top_level(); ++l) {
    if (levels_[l].buffer.size() >= level_capacity(l)) {
      ++insert_rebuilds_[l];
      LevelConstruct(l);
      return;
    }
  }
}

void DynamicStructure::Delete(ElementId e) {
  if (!alive_.Contains(e)) {
    throw StreamError("delete of element " + std::to_string(e) +
                      " which is not alive");
  }
  ++operations_;
  alive_.Erase(e);
  for (Level& level : levels_) {
    level.candidates.Erase(e);
    level.buffer.Erase(e);
  }
  for (int l = 0; l <= top_level(); ++l) {
    if (levels_[l].solution.Contains(e)) {
      ++delete_rebuilds_[l];
      LevelConstruct(l);
      return;
    }
  }
}

void DynamicStructure::Apply(const Operation& op) {
  if (op.kind == OpKind::kInsert) {
    Insert(op.id);
  } else {
    Delete(op.id);
  }
}

void DynamicStructure::LevelConstruct(int start) {
  std::vector<ScoredCandidate> kept;
  std::vector<ElementId> members;
  for (int l = start; l <= top_level(); ++l) {
    Level& level = levels_[l];
    level.candidates.Clear();
    if (l == 0) {
      for (ElementId e : alive_.items()) level.candidates.Insert(e);
      level.solution = WeightedSolution();
    } else {
      const Level& below = levels_[l - 1];
      for (ElementId e : below.candidates.items()) level.candidates.Insert(e);
      for (ElementId e : below.buffer.items()) level.candidates.Insert(e);
      level.solution = below.solution;
    }
    level.buffer.Clear();
    level.trace.clear();

    const std::size_t cap = level_capacity(l);
    do {
      kept.clear();
      const double history_value = level.solution.HistoryValue(oracles_);
      const auto history = level.solution.history();
      double solution_value = 0.0;
      if (options_.filter) {
        members = level.solution.member_ids();
        solution_value = level.solution.Value(oracles_);
      }
      for (ElementId e : level.candidates.items()) {
        const double w = oracles_.Marginal(e, history, history_value);
        bool keep = true;
        SwapCandidate swap;
        if (options_.filter &&
            oracles_.Marginal(e, members, solution_value) <
                filter_threshold()) {
          keep = false;
        } else {
          swap = level.solution.FindSwap(e, oracles_);
          keep = swap.kind == SwapCandidate::Kind::kFree ||
                 (swap.kind == SwapCandidate::Kind::kSwap &&
                  w > 2.0 * swap.out.weight);
        }
        if (keep) {
          kept.push_back({e, w, swap});
        } else if (options_.record_trace) {
          level.trace.push_back({e, TraceDecision::kDiscarded, w, {}});
        }
      }
      level.candidates.Clear();
      for (const ScoredCandidate& c : kept) level.candidates.Insert(c.id);

      if (kept.size() >= cap) {
        std::uniform_int_distribution<std::size_t> pick(0, kept.size() - 1);
        const ScoredCandidate& chosen = kept[pick(rng_)];
        level.candidates.Erase(chosen.id);
        std::optional<ElementId> out;
        if (chosen.swap.kind == SwapCandidate::Kind::kSwap) {
          out = chosen.swap.out.id;
        }
        level.solution.Admit(chosen.id, chosen.weight, out);
        if (options_.record_trace) {
          level.trace.push_back(
              {chosen.id,
               out ? TraceDecision::kSwapped : TraceDecision::kAdded,
               chosen.weight, out});
        }
      }
    } while (level.candidates.size() >= cap);

    if (level.candidates.size() >= cap || !level.buffer.empty()) {
      rebuild_violations_.push_back(
          {l, "rebuild ended with |A| = " +
                  std::to_string(level.candidates.size()) + ", |B| = " +
                  std::to_string(level.buffer.size())});
    }
  }
}

std::vector<TraceEntry> DynamicStructure::DecisionTrace() const {
  std::vector<TraceEntry> trace;
  for (const Level& level : levels_) {
    trace.insert(trace.end(), level.trace.begin(), level.trace.end());
  }
  return trace;
}

InvariantReport DynamicStructure::AuditInvariants() const {
  InvariantReport report;
  report.violations = rebuild_violations_;
  Oracles audit = oracles_.Fork();
  for (int l = 0; l <= top_level(); ++l) {
    const Level& level = levels_[l];
    const std::size_t cap = level_capacity(l);
    if (level.buffer.size() > cap) {
      report.violations.push_back(
          {l, "|B| = " + std::to_string(level.buffer.size()) + " exceeds " +
                  std::to_string(cap)});
    }
    if (level.candidates.size() > 4 * cap) {
      report.violations.push_back(
          {l, "|A| = " + std::to_string(level.candidates.size()) +
                  " exceeds " + std::to_string(4 * cap)});
    }
    if (!audit.IsIndependent(level.solution.member_ids())) {
      report.violations.push_back({l, "S is dependent"});
    }
    for (const WeightedMember& m : level.solution.members()) {
      if (!level.solution.InHistory(m.id)) {
        report.violations.push_back(
            {l, "member " + std::to_string(m.id) + " missing from S'"});
      }
    }
  }
  return report;
}

}  // namespace dynsub
