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

#include "dynsub/experiment.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dynsub/baselines.h"
#include "dynsub/errors.h"
#include "dynsub/instance_manager.h"
#include "dynsub/stream.h"
#include "dynsub/swapping.h"

namespace dynsub {

std::string_view ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kDynamic:
      return "dynamic";
    case Algorithm::kDynamicUnfiltered:
      return "dynamic-unfiltered";
    case Algorithm::kSwapping:
      return "swapping";
    case Algorithm::kDynamicSwapping:
      return "dynamic-swapping";
    case Algorithm::kDynamicGreedy:
      return "dynamic-greedy";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a :
       {Algorithm::kDynamic, Algorithm::kDynamicUnfiltered,
        Algorithm::kSwapping, Algorithm::kDynamicSwapping,
        Algorithm::kDynamicGreedy}) {
    if (ToString(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

double GuaranteeFactor(Algorithm algorithm, double epsilon) {
  switch (algorithm) {
    case Algorithm::kDynamic:
      return 4.0 + 6.0 * epsilon;
    case Algorithm::kDynamicGreedy:
      return 2.0;
    default:
      return 4.0;
  }
}

namespace {

class ManagerAlgorithm : public DynamicAlgorithm {
 public:
  ManagerAlgorithm(Oracles oracles, ManagerOptions options)
      : manager_(std::move(oracles), options) {}
  void Apply(const Operation& op) override { best_ = manager_.Apply(op); }
  std::vector<ElementId> Solution() override { return best_.elements; }
  double Value(Oracles&) override { return best_.value; }
  OracleCounters Counters() const override {
    return manager_.TotalCounters();
  }

 private:
  InstanceManager manager_;
  BestSolution best_;
};

class SwappingAlgorithm : public DynamicAlgorithm {
 public:
  explicit SwappingAlgorithm(Oracles oracles) : swapping_(std::move(oracles)) {}
  void Apply(const Operation& op) override {
    if (op.kind == OpKind::kDelete) {
      throw StreamError("swapping handles insertion-only streams");
    }
    swapping_.Process(op.id);
  }
  std::vector<ElementId> Solution() override {
    return swapping_.solution().member_ids();
  }
  double Value(Oracles& evaluator) override {
    return evaluator.Value(Solution());
  }
  OracleCounters Counters() const override {
    return swapping_.oracles().counters();
  }

 private:
  ThresholdSwapping swapping_;
};

template <typename Baseline>
class BaselineAlgorithm : public DynamicAlgorithm {
 public:
  explicit BaselineAlgorithm(Oracles oracles) : baseline_(std::move(oracles)) {}
  void Apply(const Operation& op) override { baseline_.Apply(op); }
  std::vector<ElementId> Solution() override { return baseline_.solution(); }
  double Value(Oracles& evaluator) override {
    return evaluator.Value(Solution());
  }
  OracleCounters Counters() const override { return baseline_.counters(); }

 private:
  Baseline baseline_;
};

std::string KindName(OpKind kind) {
  return kind == OpKind::kInsert ? "insert" : "delete";
}

}  // namespace

std::unique_ptr<DynamicAlgorithm> MakeAlgorithm(const Instance& instance,
                                                const RunOptions& options) {
  Oracles oracles = instance.MakeOracles();
  switch (options.algorithm) {
    case Algorithm::kDynamic:
      return std::make_unique<ManagerAlgorithm>(
          std::move(oracles), ManagerOptions{options.epsilon, options.seed});
    case Algorithm::kDynamicUnfiltered:
      return std::make_unique<ManagerAlgorithm>(
          std::move(oracles), ManagerOptions{std::nullopt, options.seed});
    case Algorithm::kSwapping:
      return std::make_unique<SwappingAlgorithm>(std::move(oracles));
    case Algorithm::kDynamicSwapping:
      return std::make_unique<BaselineAlgorithm<DynamicSwapping>>(
          std::move(oracles));
    case Algorithm::kDynamicGreedy:
      return std::make_unique<BaselineAlgorithm<DynamicGreedy>>(
          std::move(oracles));
  }
  throw std::invalid_argument("unknown algorithm");
}

ExperimentSummary Summarize(std::span<const ReportRow> rows, double factor) {
  ExperimentSummary summary;
  summary.operations = rows.size();
  for (const ReportRow& row : rows) {
    summary.total.value_calls += row.value_calls;
    summary.total.independence_calls += row.independence_calls;
    if (!row.opt) continue;
    ++summary.verified;
    const double ratio = *row.opt > 0.0 ? row.value / *row.opt : 1.0;
    if (!summary.min_ratio || ratio < *summary.min_ratio) {
      summary.min_ratio = ratio;
    }
    if (factor * row.value < *row.opt) summary.verification_failed = true;
  }
  if (!rows.empty()) {
    summary.amortized = static_cast<double>(summary.total.total()) /
                        static_cast<double>(rows.size());
  }
  return summary;
}

ExperimentReport RunExperiment(const Instance& instance,
                               std::span<const Operation> ops,
                               const RunOptions& options) {
  if (auto problem = ValidateStream(ops, instance.universe.get())) {
    throw StreamError("operation " + std::to_string(problem->index + 1) +
                      ": " + problem->message);
  }
  auto algorithm = MakeAlgorithm(instance, options);
  Oracles evaluator = instance.MakeOracles();
  const bool can_verify =
      options.verify && instance.matroid->rank() <= kBruteForceMaxRank;
  std::vector<ElementId> alive;

  ExperimentReport report;
  report.rows.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Operation& op = ops[i];
    const OracleCounters before = algorithm->Counters();
    algorithm->Apply(op);
    ReportRow row;
    row.index = i + 1;
    row.kind = op.kind;
    row.element = op.id;
    row.value = algorithm->Value(evaluator);
    const OracleCounters delta = algorithm->Counters() - before;
    row.value_calls = delta.value_calls;
    row.independence_calls = delta.independence_calls;

    if (op.kind == OpKind::kInsert) {
      alive.push_back(op.id);
    } else {
      std::erase(alive, op.id);
    }
    if (can_verify && alive.size() <= kBruteForceMaxElements) {
      row.opt = BruteForceOptimum(alive, evaluator).value;
    }
    report.rows.push_back(row);
  }
  report.summary = Summarize(report.rows,
                             GuaranteeFactor(options.algorithm,
                                             options.epsilon));
  return report;
}

std::string FormatReal(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer, ptr);
}

void WriteReportCsv(std::ostream& out, std::span<const ReportRow> rows) {
  out << "op,kind,element,value,opt,value_calls,independence_calls\n";
  for (const ReportRow& row : rows) {
    out << row.index << ',' << KindName(row.kind) << ',' << row.element << ','
        << FormatReal(row.value) << ','
        << (row.opt ? FormatReal(*row.opt) : std::string()) << ','
        << row.value_calls << ',' << row.independence_calls << '\n';
  }
}

namespace {

template <typename T>
T ParseNumber(std::string_view text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("report line " + std::to_string(line) +
                             ": bad number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<ReportRow> ParseReportCsv(std::istream& in) {
  static constexpr std::string_view kHeader =
      "op,kind,element,value,opt,value_calls,independence_calls";
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("report CSV: unexpected header");
  }
  std::vector<ReportRow> rows;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 7) {
      throw std::runtime_error("report line " + std::to_string(line_number) +
                               ": expected 7 fields");
    }
    ReportRow row;
    row.index = ParseNumber<std::size_t>(fields[0], line_number);
    if (fields[1] == "insert") {
      row.kind = OpKind::kInsert;
    } else if (fields[1] == "delete") {
      row.kind = OpKind::kDelete;
    } else {
      throw std::runtime_error("report line " + std::to_string(line_number) +
                               ": bad kind");
    }
    row.element = ParseNumber<ElementId>(fields[2], line_number);
    row.value = ParseNumber<double>(fields[3], line_number);
    if (!fields[4].empty()) {
      row.opt = ParseNumber<double>(fields[4], line_number);
    }
    row.value_calls = ParseNumber<std::uint64_t>(fields[5], line_number);
    row.independence_calls =
        ParseNumber<std::uint64_t>(fields[6], line_number);
    rows.push_back(row);
  }
  return rows;
}

std::vector<ComparisonRow> Compare(const Instance& instance,
                                   std::span<const Operation> ops,
                                   std::span<const Algorithm> algorithms,
                                   const RunOptions& base) {
  std::vector<ComparisonRow> out;
  for (Algorithm algorithm : algorithms) {
    RunOptions options = base;
    options.algorithm = algorithm;
    const ExperimentReport report = RunExperiment(instance, ops, options);
    ComparisonRow row;
    row.algorithm = std::string(ToString(algorithm));
    row.operations = report.summary.operations;
    row.counters = report.summary.total;
    row.amortized = report.summary.amortized;
    row.final_value = report.rows.empty() ? 0.0 : report.rows.back().value;
    out.push_back(std::move(row));
  }
  return out;
}

void WriteComparisonCsv(std::ostream& out,
                        std::span<const ComparisonRow> rows) {
  out << "algorithm,operations,value_calls,independence_calls,total_calls,"
         "amortized_calls,final_value\n";
  for (const ComparisonRow& row : rows) {
    out << row.algorithm << ',' << row.operations << ','
        << row.counters.value_calls << ',' << row.counters.independence_calls
        << ',' << row.counters.total() << ',' << FormatReal(row.amortized)
        << ',' << FormatReal(row.final_value) << '\n';
  }
}

}  // namespace dynsub
