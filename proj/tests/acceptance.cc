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

// Acceptance suite. Each criterion prints one PASS/FAIL line with the
// measured numbers; the exit status is nonzero if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dynsub/baselines.h"
#include "dynsub/dynamic_structure.h"
#include "dynsub/experiment.h"
#include "dynsub/instance_manager.h"
#include "dynsub/stream.h"
#include "dynsub/swapping.h"
#include "dynsub/universe_json.h"
#include "dynsub/weighted_solution.h"
#include "test_support.h"

namespace dynsub {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4g", x);
  return buffer;
}

std::size_t CapacityFor(std::span<const Operation> ops) {
  std::size_t inserts = 0;
  for (const Operation& op : ops) inserts += op.kind == OpKind::kInsert;
  return std::bit_ceil(std::max<std::size_t>(inserts, 1));
}

void Track(std::vector<ElementId>& alive, const Operation& op) {
  if (op.kind == OpKind::kInsert) {
    alive.push_back(op.id);
  } else {
    std::erase(alive, op.id);
  }
}

// OPT / f, with f = 0 < OPT mapped to infinity.
double Ratio(double opt, double value) {
  if (opt <= 0.0) return 1.0;
  if (value <= 0.0) return std::numeric_limits<double>::infinity();
  return opt / value;
}

constexpr int kApproxStreams = 240;
constexpr int kApproxStreamLength = 30;

Outcome DeterministicFourApproximation() {
  std::size_t ops_checked = 0, failures = 0;
  double worst = 1.0;
  for (int s = 0; s < kApproxStreams; ++s) {
    const std::uint64_t seed = 10'000 + s;
    Instance instance = BuildInstance(testing::SmallSpec(seed));
    Oracles opt_oracles = instance.MakeOracles();
    Oracles eval = instance.MakeOracles();
    const auto ops =
        testing::MixedStream(instance, kApproxStreamLength, seed, 0.4);
    DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(),
                        {.seed = seed});
    InstanceManager manager(instance.MakeOracles(),
                            {.epsilon = std::nullopt, .seed = seed});
    std::vector<ElementId> alive;
    for (const Operation& op : ops) {
      ds.Apply(op);
      const BestSolution best = manager.Apply(op);
      Track(alive, op);
      const double opt = BruteForceOptimum(alive, opt_oracles).value;
      for (double value : {eval.Value(ds.solution().member_ids()), best.value}) {
        worst = std::max(worst, Ratio(opt, value));
        if (4.0 * value < opt) ++failures;
      }
      ++ops_checked;
    }
  }
  return {failures == 0,
          std::to_string(kApproxStreams) + " streams, " +
              std::to_string(ops_checked) +
              " ops (structure and unfiltered manager), worst OPT/f = " +
              Fmt(worst) + ", violations = " + std::to_string(failures)};
}

Outcome ManagerApproximation() {
  constexpr double kConstant = 6.0;
  bool pass = true;
  std::string detail;
  for (double eps : {0.5, 0.25}) {
    double worst = 1.0;
    std::size_t failures = 0, ops_checked = 0;
    for (int s = 0; s < kApproxStreams; ++s) {
      const std::uint64_t seed = 20'000 + s;
      Instance instance = BuildInstance(testing::SmallSpec(seed));
      Oracles opt_oracles = instance.MakeOracles();
      const auto ops =
          testing::MixedStream(instance, kApproxStreamLength, seed, 0.4);
      InstanceManager manager(instance.MakeOracles(),
                              {.epsilon = eps, .seed = seed});
      std::vector<ElementId> alive;
      for (const Operation& op : ops) {
        const BestSolution best = manager.Apply(op);
        Track(alive, op);
        const double opt = BruteForceOptimum(alive, opt_oracles).value;
        worst = std::max(worst, Ratio(opt, best.value));
        if ((4.0 + kConstant * eps) * best.value < opt) ++failures;
        ++ops_checked;
      }
    }
    pass = pass && failures == 0;
    // Measured constant c with OPT = (4 + c eps) f at the worst operation.
    const double measured = std::max(0.0, (worst - 4.0) / eps);
    detail += "eps=" + Fmt(eps) + ": " + std::to_string(ops_checked) +
              " ops, worst OPT/f = " + Fmt(worst) + " (bound " +
              Fmt(4.0 + kConstant * eps) + ", measured c = " + Fmt(measured) +
              "), violations = " + std::to_string(failures) + "; ";
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Outcome InvariantSuite() {
  std::size_t audits = 0, violations = 0;
  std::string first;
  auto audit = [&](const DynamicStructure& ds, const std::string& where) {
    const InvariantReport report = ds.AuditInvariants();
    ++audits;
    violations += report.violations.size();
    if (!report.ok() && first.empty()) {
      first = where + " level " + std::to_string(report.violations[0].level) +
              ": " + report.violations[0].what;
    }
  };
  for (int s = 0; s < 100; ++s) {
    const std::uint64_t seed = 30'000 + s;
    std::mt19937_64 rng(seed);
    RandomUniverseOptions options;
    options.function = s % 3 == 0 ? "modular"
                       : s % 3 == 1 ? "coverage"
                                    : "facility-location";
    options.matroid = s % 4 == 0 ? "graphic" : s % 2 ? "partition" : "uniform";
    options.size = 16 + static_cast<int>(rng() % 241);
    options.rank = 1 + static_cast<int>(rng() % 5);
    options.items = 60;
    options.seed = seed;
    Instance instance = BuildInstance(RandomUniverse(options));
    const int length = 32 + static_cast<int>(rng() % 225);
    const auto ops = testing::MixedStream(instance, length, seed, 0.35);
    DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(),
                        {.seed = seed});
    InstanceManager manager(instance.MakeOracles(), {.seed = seed});
    for (std::size_t i = 0; i < ops.size(); ++i) {
      ds.Apply(ops[i]);
      manager.Apply(ops[i]);
      const std::string where =
          "stream " + std::to_string(s) + " op " + std::to_string(i);
      audit(ds, where);
      for (const auto& [j, copy] : manager.copies()) {
        audit(copy, where + " copy " + std::to_string(j));
      }
    }
  }
  return {violations == 0,
          "100 streams, " + std::to_string(audits) +
              " audits, violations = " + std::to_string(violations) +
              (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome SwapFinderEquivalence() {
  std::mt19937_64 rng(40'000);
  std::size_t mismatches = 0, over_budget = 0;
  std::uint64_t max_calls = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    RandomUniverseOptions options;
    options.function = "modular";
    options.matroid = trial % 3 == 0   ? "uniform"
                      : trial % 3 == 1 ? "partition"
                                       : "graphic";
    options.rank = 1 + static_cast<int>(rng() % 8);
    options.size = options.rank + 1 + static_cast<int>(rng() % 12);
    options.seed = rng();
    Instance instance = BuildInstance(RandomUniverse(options));
    Oracles oracles = instance.MakeOracles();
    std::vector<ElementId> ids = instance.universe->ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    const ElementId e = ids.back();
    ids.pop_back();
    WeightedSolution solution;
    std::vector<ElementId> chosen;
    for (ElementId id : ids) {
      chosen.push_back(id);
      if (!instance.matroid->IsIndependent(chosen)) {
        chosen.pop_back();
        continue;
      }
      solution.Admit(id, static_cast<double>(1 + rng() % 5), std::nullopt);
    }
    const OracleCounters before = oracles.counters();
    const SwapCandidate binary = solution.FindSwap(e, oracles);
    const std::uint64_t calls =
        (oracles.counters() - before).independence_calls;
    const SwapCandidate linear = solution.FindSwapLinear(e, oracles);
    const auto budget = static_cast<std::uint64_t>(
        std::ceil(std::log2(static_cast<double>(solution.size()) + 1.0)) + 1);
    max_calls = std::max(max_calls, calls);
    if (calls > budget) ++over_budget;
    if (binary.kind != linear.kind ||
        (binary.kind == SwapCandidate::Kind::kSwap &&
         binary.out.id != linear.out.id)) {
      ++mismatches;
    }
  }
  return {mismatches == 0 && over_budget == 0,
          "10000 cases, mismatches = " + std::to_string(mismatches) +
              ", over budget = " + std::to_string(over_budget) +
              ", max calls = " + std::to_string(max_calls)};
}

Outcome ThresholdDegeneration() {
  std::size_t mismatches = 0, steps = 0;
  for (int s = 0; s < 100; ++s) {
    const std::uint64_t seed = 50'000 + s;
    RandomUniverseOptions options;
    options.function = s % 3 == 0 ? "modular"
                       : s % 3 == 1 ? "coverage"
                                    : "facility-location";
    options.matroid = s % 4 == 0 ? "graphic" : s % 2 ? "partition" : "uniform";
    options.size = 30;
    options.rank = 1 + s % 5;
    options.items = 25;
    options.seed = seed;
    Instance instance = BuildInstance(RandomUniverse(options));
    const auto order = testing::InsertionOrder(instance, seed);
    const SwapRun run = RunStream(order, instance.MakeOracles(), 0.5, 0.0);
    testing::PlainSwapping plain(instance.MakeOracles());
    bool same = run.steps.size() == order.size();
    for (std::size_t i = 0; same && i < order.size(); ++i) {
      const testing::PlainStep expected = plain.Process(order[i]);
      const SwapStep& got = run.steps[i];
      const std::optional<ElementId> got_out =
          got.swapped_out ? std::optional(got.swapped_out->id) : std::nullopt;
      same = got.element == expected.element &&
             got.weight == expected.weight &&
             (got.decision != SwapDecision::kRejected &&
              got.decision != SwapDecision::kBelowThreshold) ==
                 expected.admitted &&
             got_out == expected.evicted;
      ++steps;
    }
    same = same && testing::Sorted(run.solution.member_ids()) ==
                       plain.sorted_members();
    if (!same) ++mismatches;
  }
  return {mismatches == 0, "100 insertion-only streams, " +
                               std::to_string(steps) +
                               " decisions, mismatched runs = " +
                               std::to_string(mismatches)};
}

Outcome WProperties() {
  std::size_t checks = 0, failures = 0;
  double worst_rel = 0.0;
  for (int s = 0; s < 100; ++s) {
    const std::uint64_t seed = 60'000 + s;
    RandomUniverseOptions options;
    options.function = s % 3 == 0 ? "modular"
                       : s % 3 == 1 ? "coverage"
                                    : "facility-location";
    options.matroid = s % 2 ? "partition" : "uniform";
    options.size = 40;
    options.rank = 1 + s % 6;
    options.items = 30;
    options.seed = seed;
    Instance instance = BuildInstance(RandomUniverse(options));
    Oracles checker = instance.MakeOracles();
    ThresholdSwapping swapping(instance.MakeOracles());
    for (ElementId e : testing::InsertionOrder(instance, seed)) {
      swapping.Process(e);
      const WPropertiesReport report =
          CheckWProperties(swapping.solution(), checker);
      const double rel = std::abs(report.history_value - report.history_weight) /
                         std::max(1.0, std::abs(report.history_value));
      worst_rel = std::max(worst_rel, rel);
      if (!report.ok() || rel > 1e-9) ++failures;
      ++checks;
    }
  }
  return {failures == 0, "100 runs, " + std::to_string(checks) +
                             " checks, failures = " + std::to_string(failures) +
                             ", worst |f(S')-w(S')|/f(S') = " + Fmt(worst_rel)};
}

Outcome LowerBoundSeparation() {
  const std::vector<int> sizes = {64, 128, 256, 512};
  const std::vector<Algorithm> baselines = {Algorithm::kDynamicSwapping,
                                            Algorithm::kDynamicGreedy};
  std::vector<Algorithm> all = baselines;
  all.push_back(Algorithm::kDynamic);
  all.push_back(Algorithm::kDynamicUnfiltered);

  std::vector<std::vector<double>> totals(all.size());
  for (int n : sizes) {
    Instance instance = BuildInstance(LowerBoundUniverse(n));
    const auto ops = LowerBoundStream(n);
    RunOptions base;
    base.epsilon = 0.5;
    const auto rows = Compare(instance, ops, all, base);
    for (std::size_t a = 0; a < all.size(); ++a) {
      totals[a].push_back(static_cast<double>(rows[a].counters.total()));
    }
  }

  bool pass = true;
  std::string detail;
  for (std::size_t a = 0; a < baselines.size(); ++a) {
    detail += std::string(ToString(all[a])) + " growth";
    for (std::size_t i = 1; i < sizes.size(); ++i) {
      const double growth = totals[a][i] / totals[a][i - 1];
      pass = pass && growth >= 4.0 * 0.7 && growth <= 4.0 * 1.3;
      detail += " " + Fmt(growth);
    }
    detail += "; ";
  }
  // Normalized cost c(n) = total / (m k^2 log2^3 m) over the m = 2n updates.
  for (std::size_t a = baselines.size(); a < all.size(); ++a) {
    detail += std::string(ToString(all[a])) + " c(n)";
    std::vector<double> c;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const double m = 2.0 * sizes[i];
      c.push_back(totals[a][i] / (m * std::pow(std::log2(m), 3)));
      detail += " " + Fmt(c.back());
    }
    if (all[a] == Algorithm::kDynamic) {
      for (std::size_t i = 1; i < c.size(); ++i) {
        pass = pass && c[i] <= 1.5 * c[i - 1];
      }
    } else {
      detail += " (reported only)";
    }
    detail += "; ";
  }
  detail += "totals at n=" + std::to_string(sizes.back()) + ":";
  for (std::size_t a = 0; a < all.size(); ++a) {
    detail += " " + std::string(ToString(all[a])) + "=" +
              Fmt(totals[a].back());
  }
  return {pass, detail};
}

Outcome SimulationProperty() {
  std::size_t mismatches = 0, replays = 0;
  for (int s = 0; s < 50; ++s) {
    const std::uint64_t seed = 70'000 + s;
    RandomUniverseOptions options;
    options.function = s % 3 == 0 ? "modular"
                       : s % 3 == 1 ? "coverage"
                                    : "facility-location";
    options.matroid = s % 4 == 0 ? "graphic" : s % 2 ? "partition" : "uniform";
    options.size = 24 + s % 41;
    options.rank = 1 + s % 4;
    options.items = 40;
    options.seed = seed;
    Instance instance = BuildInstance(RandomUniverse(options));
    const auto ops = testing::MixedStream(instance, 64, seed, 0.35);
    DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(),
                        {.seed = seed, .record_trace = true});
    bool same = true;
    for (const Operation& op : ops) {
      ds.Apply(op);
      testing::PlainSwapping plain(instance.MakeOracles());
      for (const TraceEntry& entry : ds.DecisionTrace()) {
        const testing::PlainStep step = plain.Process(entry.element);
        same = same &&
               step.admitted == (entry.decision != TraceDecision::kDiscarded) &&
               step.evicted == entry.swapped_out;
      }
      same = same && plain.sorted_members() ==
                         testing::Sorted(ds.solution().member_ids());
      ++replays;
    }
    if (!same) ++mismatches;
  }
  return {mismatches == 0, "50 streams, " + std::to_string(replays) +
                               " trace replays, mismatched streams = " +
                               std::to_string(mismatches)};
}

Outcome ReplayDeterminism() {
  std::size_t runs = 0, differing = 0;
  for (int s = 0; s < 10; ++s) {
    const std::uint64_t seed = 80'000 + s;
    Instance instance = BuildInstance(testing::SmallSpec(seed));
    const auto ops = testing::MixedStream(instance, 120, seed);
    for (Algorithm a : {Algorithm::kDynamic, Algorithm::kDynamicUnfiltered,
                        Algorithm::kDynamicSwapping,
                        Algorithm::kDynamicGreedy}) {
      RunOptions options;
      options.algorithm = a;
      options.seed = seed;
      options.epsilon = s % 2 ? 0.25 : 0.5;
      options.verify = true;
      auto csv = [&] {
        std::ostringstream out;
        WriteReportCsv(out, RunExperiment(instance, ops, options).rows);
        return out.str();
      };
      if (csv() != csv()) ++differing;
      ++runs;
    }
  }
  return {differing == 0, std::to_string(runs) +
                              " configurations run twice, differing CSVs = " +
                              std::to_string(differing)};
}

}  // namespace
}  // namespace dynsub

int main() {
  using dynsub::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {{"1 deterministic 4-approximation",
        dynsub::DeterministicFourApproximation},
       {"2 manager (4+6eps)-approximation", dynsub::ManagerApproximation},
       {"3 level invariants", dynsub::InvariantSuite},
       {"4 swap finder equivalence", dynsub::SwapFinderEquivalence},
       {"5 zero-threshold degeneration", dynsub::ThresholdDegeneration},
       {"6 w-properties", dynsub::WProperties},
       {"7 lower-bound separation", dynsub::LowerBoundSeparation},
       {"8 simulation trace", dynsub::SimulationProperty},
       {"9 replay determinism", dynsub::ReplayDeterminism}};
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    std::printf("%s [%s] %s (%.1fs)\n", outcome.pass ? "PASS" : "FAIL",
                name.c_str(), outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    failed += !outcome.pass;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
