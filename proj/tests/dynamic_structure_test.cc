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

#include <gtest/gtest.h>

#include <random>

#include "dynsub/errors.h"
#include "dynsub/universe_json.h"
#include "test_support.h"

namespace dynsub {
namespace {

using testing::ModularSpec;

std::size_t CapacityFor(std::span<const Operation> ops) {
  std::size_t inserts = 0;
  for (const Operation& op : ops) inserts += op.kind == OpKind::kInsert;
  return std::bit_ceil(std::max<std::size_t>(inserts, 1));
}

std::vector<ElementId> AliveAfter(std::span<const Operation> ops) {
  std::vector<ElementId> alive;
  for (const Operation& op : ops) {
    if (op.kind == OpKind::kInsert) {
      alive.push_back(op.id);
    } else {
      std::erase(alive, op.id);
    }
  }
  return alive;
}

TEST(DynamicStructureTest, InitialLayout) {
  Instance instance = BuildInstance(ModularSpec({1.0}, 1));
  DynamicStructure eight(8, instance.MakeOracles());
  EXPECT_EQ(eight.top_level(), 3);
  for (int l = 0; l <= 3; ++l) {
    EXPECT_TRUE(eight.level(l).solution.empty());
    EXPECT_TRUE(eight.level(l).candidates.empty());
    EXPECT_TRUE(eight.level(l).buffer.empty());
  }
  EXPECT_EQ(eight.oracles().counters(), OracleCounters{});
  EXPECT_TRUE(eight.solution().empty());
  EXPECT_EQ(eight.SolutionValue(), 0.0);
  EXPECT_TRUE(eight.AuditInvariants().ok());

  DynamicStructure one(1, instance.MakeOracles());
  EXPECT_EQ(one.top_level(), 0);
  EXPECT_THROW(DynamicStructure(6, instance.MakeOracles()), ContractViolation);
}

TEST(DynamicStructureTest, FirstInsertRebuildsTopLevel) {
  Instance instance = BuildInstance(ModularSpec({5.0}, 1));
  DynamicStructure ds(8, instance.MakeOracles());
  ds.Insert(1);
  for (int l = 0; l < 3; ++l) EXPECT_TRUE(ds.level(l).buffer.Contains(1));
  EXPECT_TRUE(ds.level(3).buffer.empty());
  EXPECT_EQ(ds.insert_rebuilds(), (std::vector<std::uint64_t>{0, 0, 0, 1}));
  EXPECT_EQ(ds.solution().member_ids(), (std::vector<ElementId>{1}));
  EXPECT_EQ(ds.SolutionValue(), 5.0);
  EXPECT_THROW(ds.Insert(1), StreamError);
  EXPECT_THROW(ds.Delete(2), StreamError);
  EXPECT_THROW(ds.Insert(99), UniverseError);
}

TEST(DynamicStructureTest, FilterIgnoresOutOfBandInsert) {
  Instance instance = BuildInstance(ModularSpec({20.0, 10.0}, 2));
  DynamicStructure ds(8, instance.MakeOracles(),
                      {.filter = MarginalFilter{0.5, 10.0}});
  ds.Insert(1);
  EXPECT_FALSE(ds.IsAlive(1));
  for (int l = 0; l <= ds.top_level(); ++l) {
    EXPECT_TRUE(ds.level(l).buffer.empty());
  }
  ds.Insert(2, 10.0);
  EXPECT_TRUE(ds.IsAlive(2));
  EXPECT_EQ(ds.solution().member_ids(), (std::vector<ElementId>{2}));
}

TEST(DynamicStructureTest, ThresholdBand) {
  EXPECT_TRUE(InThresholdBand(1.0, 1.0, 1.0, 2));
  EXPECT_TRUE(InThresholdBand(1.0, 1.0, 2.0, 2));
  EXPECT_FALSE(InThresholdBand(1.0, 1.0, 0.5, 2));
  EXPECT_FALSE(InThresholdBand(1.0, 1.0, 4.0, 2));
  EXPECT_FALSE(InThresholdBand(20.0, 0.5, 10.0, 2));
}

TEST(DynamicStructureTest, DeletingTheSolutionRebuilds) {
  Instance instance = BuildInstance(ModularSpec({4.0, 9.0, 2.0}, 1));
  DynamicStructure ds(4, instance.MakeOracles());
  for (ElementId e : {1, 2, 3}) ds.Insert(e);
  ASSERT_EQ(ds.solution().size(), 1u);
  const ElementId held = ds.solution().member_ids()[0];
  std::uint64_t before = 0;
  for (auto n : ds.delete_rebuilds()) before += n;
  ds.Delete(held);
  std::uint64_t after = 0;
  for (auto n : ds.delete_rebuilds()) after += n;
  EXPECT_EQ(after, before + 1);
  ASSERT_EQ(ds.solution().size(), 1u);
  EXPECT_NE(ds.solution().member_ids()[0], held);
  EXPECT_TRUE(ds.AuditInvariants().ok());
}

TEST(DynamicStructureTest, DeletingOutsideEverySolutionIsFree) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance instance = BuildInstance(testing::SmallSpec(seed));
    const auto ops = testing::MixedStream(instance, 30, seed);
    DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(),
                        {.seed = seed});
    for (const Operation& op : ops) ds.Apply(op);
    for (ElementId e : AliveAfter(ops)) {
      bool held = false;
      for (int l = 0; l <= ds.top_level(); ++l) {
        held = held || ds.level(l).solution.Contains(e);
      }
      if (held) continue;
      const OracleCounters before = ds.oracles().counters();
      ds.Delete(e);
      EXPECT_EQ(ds.oracles().counters(), before);
      ++checked;
      break;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(DynamicStructureProperty, FourApproximationAfterEveryOperation) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const UniverseSpec spec = testing::SmallSpec(seed + 40);
    Instance instance = BuildInstance(spec);
    testing::Reference reference(spec);
    const auto ops = testing::MixedStream(instance, 24, seed);
    DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(),
                        {.seed = seed});
    for (std::size_t i = 0; i < ops.size(); ++i) {
      ds.Apply(ops[i]);
      const auto alive = AliveAfter(std::span(ops).first(i + 1));
      const double opt = reference.Optimum(alive);
      ASSERT_GE(4.0 * reference.Value(ds.solution().member_ids()) + 1e-9, opt)
          << "seed " << seed << " op " << i;
    }
  }
}

TEST(DynamicStructureProperty, CachedValueMatchesFreshEvaluation) {
  RandomUniverseOptions options;
  options.size = 40;
  options.rank = 4;
  options.items = 30;
  options.seed = 8;
  Instance instance = BuildInstance(RandomUniverse(options));
  Oracles fresh = instance.MakeOracles();
  const auto ops = testing::MixedStream(instance, 1000, 8, 0.45);
  DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(), {.seed = 8});
  for (const Operation& op : ops) {
    ds.Apply(op);
    ASSERT_EQ(ds.SolutionValue(), fresh.Value(ds.solution().member_ids()));
  }
}

TEST(DynamicStructureProperty, AuditCleanAfterEveryOperation) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomUniverseOptions options;
    options.function = seed % 3 == 0 ? "modular" : "coverage";
    options.matroid = seed % 2 ? "partition" : "uniform";
    options.size = 64;
    options.rank = 1 + static_cast<int>(seed % 4);
    options.items = 40;
    options.seed = seed;
    Instance instance = BuildInstance(RandomUniverse(options));
    const auto ops = testing::MixedStream(instance, 64, seed);
    DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(),
                        {.seed = seed});
    for (std::size_t i = 0; i < ops.size(); ++i) {
      ds.Apply(ops[i]);
      const InvariantReport report = ds.AuditInvariants();
      ASSERT_TRUE(report.ok()) << "seed " << seed << " op " << i << ": level "
                               << report.violations[0].level << " "
                               << report.violations[0].what;
    }
  }
}

TEST(DynamicStructureTest, AuditFlagsOversizedBuffer) {
  Instance instance = BuildInstance(ModularSpec({1, 2, 3, 4, 5, 6}, 2));
  DynamicStructure ds(8, instance.MakeOracles());
  ds.Insert(1);
  Level& level = ds.mutable_level_for_testing(2);
  for (ElementId e : {2, 3, 4}) level.buffer.Insert(e);
  const InvariantReport report = ds.AuditInvariants();
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations[0].level, 2);
}

TEST(DynamicStructureProperty, SameSeedSameRun) {
  Instance instance = BuildInstance(testing::SmallSpec(77));
  const auto ops = testing::MixedStream(instance, 40, 77);
  auto run = [&] {
    DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(),
                        {.seed = 5, .record_trace = true});
    for (const Operation& op : ops) ds.Apply(op);
    return std::make_pair(ds.solution().member_ids(),
                          ds.oracles().counters());
  };
  EXPECT_EQ(run(), run());
}

// The decision log, read as an insertion order, drives plain Swapping to the
// same decisions and the same final solution.
TEST(DynamicStructureProperty, TraceReplaysThroughPlainSwapping) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomUniverseOptions options;
    options.function = seed % 2 ? "coverage" : "modular";
    options.matroid = seed % 3 ? "uniform" : "partition";
    options.size = 64;
    options.rank = 1 + static_cast<int>(seed % 3);
    options.items = 40;
    options.seed = seed;
    Instance instance = BuildInstance(RandomUniverse(options));
    const auto ops = testing::MixedStream(instance, 64, seed);
    DynamicStructure ds(CapacityFor(ops), instance.MakeOracles(),
                        {.seed = seed, .record_trace = true});
    for (const Operation& op : ops) {
      ds.Apply(op);
      testing::PlainSwapping plain(instance.MakeOracles());
      for (const TraceEntry& entry : ds.DecisionTrace()) {
        const testing::PlainStep step = plain.Process(entry.element);
        ASSERT_EQ(step.admitted, entry.decision != TraceDecision::kDiscarded)
            << "seed " << seed << " element " << entry.element;
        ASSERT_EQ(step.evicted, entry.swapped_out);
      }
      ASSERT_EQ(plain.sorted_members(),
                testing::Sorted(ds.solution().member_ids()))
          << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace dynsub
