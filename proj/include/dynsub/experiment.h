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

#ifndef DYNSUB_EXPERIMENT_H_
#define DYNSUB_EXPERIMENT_H_

// Replays operation streams through one algorithm, optionally checks every
// step against the brute-force optimum, and writes per-operation CSV.
//
// Report CSV columns (fixed order, header always present):
//   op,kind,element,value,opt,value_calls,independence_calls
// `kind` is "insert" or "delete"; `value` is f of the algorithm's solution
// after the operation; `opt` is empty unless verified; the call columns are
// per-operation deltas. Reals use the shortest round-trip decimal form.
//
// Comparison CSV columns:
//   algorithm,operations,value_calls,independence_calls,total_calls,
//   amortized_calls,final_value

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynsub/operation.h"
#include "dynsub/oracles.h"
#include "dynsub/universe_json.h"

namespace dynsub {

enum class Algorithm {
  kDynamic,            // threshold copies with capacity doubling
  kDynamicUnfiltered,  // one unfiltered structure with capacity doubling
  kSwapping,           // insertion-only streaming baseline
  kDynamicSwapping,
  kDynamicGreedy,
};

std::string_view ToString(Algorithm algorithm);
// Throws std::invalid_argument for an unknown name.
Algorithm ParseAlgorithm(std::string_view name);

// Approximation factor each algorithm is held to under --verify:
// 4 + 6 eps for the threshold copies, 2 for greedy, 4 otherwise.
double GuaranteeFactor(Algorithm algorithm, double epsilon);

struct RunOptions {
  Algorithm algorithm = Algorithm::kDynamic;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  bool verify = false;
};

// Common face of every dynamic algorithm the harness can drive.
class DynamicAlgorithm {
 public:
  virtual ~DynamicAlgorithm() = default;
  virtual void Apply(const Operation& op) = 0;
  virtual std::vector<ElementId> Solution() = 0;
  // f(Solution()). Algorithms that track it themselves (and pay for it)
  // return their own value; the others are evaluated on `evaluator`.
  virtual double Value(Oracles& evaluator) = 0;
  virtual OracleCounters Counters() const = 0;
};

std::unique_ptr<DynamicAlgorithm> MakeAlgorithm(const Instance& instance,
                                                const RunOptions& options);

struct ReportRow {
  std::size_t index = 0;
  OpKind kind = OpKind::kInsert;
  ElementId element = 0;
  double value = 0.0;
  std::optional<double> opt;
  std::uint64_t value_calls = 0;
  std::uint64_t independence_calls = 0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ExperimentSummary {
  std::size_t operations = 0;
  OracleCounters total;
  double amortized = 0.0;
  std::size_t verified = 0;          // rows with an optimum
  std::optional<double> min_ratio;   // min value / opt over verified rows
  bool verification_failed = false;  // factor * value < opt somewhere
};

// Everything here is recomputable from the rows.
ExperimentSummary Summarize(std::span<const ReportRow> rows, double factor);

struct ExperimentReport {
  std::vector<ReportRow> rows;
  ExperimentSummary summary;
};

// Validates the stream against the universe first (StreamError naming the
// operation index). Verification runs only while the alive set and the rank
// fit the brute-force budget; it uses its own oracle fork, so the counted
// calls belong to the algorithm alone.
ExperimentReport RunExperiment(const Instance& instance,
                               std::span<const Operation> ops,
                               const RunOptions& options);

std::string FormatReal(double value);
void WriteReportCsv(std::ostream& out, std::span<const ReportRow> rows);
// Throws std::runtime_error on a malformed file.
std::vector<ReportRow> ParseReportCsv(std::istream& in);

struct ComparisonRow {
  std::string algorithm;
  std::size_t operations = 0;
  OracleCounters counters;
  double amortized = 0.0;
  double final_value = 0.0;
};

std::vector<ComparisonRow> Compare(const Instance& instance,
                                   std::span<const Operation> ops,
                                   std::span<const Algorithm> algorithms,
                                   const RunOptions& base);
void WriteComparisonCsv(std::ostream& out,
                        std::span<const ComparisonRow> rows);

}  // namespace dynsub

#endif  // DYNSUB_EXPERIMENT_H_
