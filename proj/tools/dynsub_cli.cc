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

// Command-line front end: universe and stream generation, replay, and
// algorithm comparison.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynsub/errors.h"
#include "dynsub/experiment.h"
#include "dynsub/stream.h"
#include "dynsub/universe_json.h"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerificationFailed = 2;

struct GenArgs {
  std::string spec = "random";
  int n = 16;
  double delete_prob = 0.3;
  int window = 4;
  std::uint64_t seed = 0;
  std::string universe;
  std::string out;
  std::string universe_out;
};

struct UniverseArgs {
  dynsub::RandomUniverseOptions options;
  std::string out;
};

struct RunArgs {
  std::string universe;
  std::string stream;
  std::string algorithm = "dynamic";
  std::vector<std::string> algorithms;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  bool verify = false;
  std::string out;
};

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw dynsub::StreamError("cannot write " + path);
  file << text;
}

int Generate(const GenArgs& args) {
  std::vector<dynsub::Operation> ops;
  if (args.spec == "appendix-c") {
    if (args.n < 1) throw std::invalid_argument("--n must be positive");
    // Weights 3^i must stay finite; BuildInstance rejects larger n.
    const dynsub::UniverseSpec universe = dynsub::LowerBoundUniverse(args.n);
    dynsub::BuildInstance(universe);
    ops = dynsub::LowerBoundStream(args.n);
    if (!args.universe_out.empty()) {
      dynsub::SaveUniverse(universe, args.universe_out);
    }
  } else if (args.spec == "random") {
    if (args.universe.empty()) {
      throw std::invalid_argument("random streams need --universe");
    }
    const dynsub::Instance instance =
        dynsub::BuildInstance(dynsub::LoadUniverse(args.universe));
    ops = dynsub::RandomStream(instance.universe->ids(), args.n,
                               args.delete_prob, args.seed);
  } else if (args.spec == "sliding-window") {
    ops = dynsub::SlidingWindowStream(args.n, args.window);
  } else {
    throw std::invalid_argument("unknown --spec '" + args.spec + "'");
  }
  std::ostringstream text;
  dynsub::WriteStream(text, ops);
  Emit(args.out, text.str());
  return kOk;
}

int MakeUniverse(const UniverseArgs& args) {
  const dynsub::UniverseSpec spec = dynsub::RandomUniverse(args.options);
  dynsub::BuildInstance(spec);
  Emit(args.out, dynsub::UniverseToJson(spec).dump(2) + "\n");
  return kOk;
}

int Run(const RunArgs& args) {
  const dynsub::Instance instance =
      dynsub::BuildInstance(dynsub::LoadUniverse(args.universe));
  const std::vector<dynsub::Operation> ops = dynsub::LoadStream(args.stream);
  dynsub::RunOptions options;
  options.algorithm = dynsub::ParseAlgorithm(args.algorithm);
  options.epsilon = args.epsilon;
  options.seed = args.seed;
  options.verify = args.verify;
  const dynsub::ExperimentReport report =
      dynsub::RunExperiment(instance, ops, options);

  std::ostringstream csv;
  dynsub::WriteReportCsv(csv, report.rows);
  Emit(args.out, csv.str());

  const auto& summary = report.summary;
  std::cerr << args.algorithm << ": " << summary.operations << " ops, "
            << summary.total.total() << " oracle calls, amortized "
            << dynsub::FormatReal(summary.amortized);
  if (summary.min_ratio) {
    std::cerr << ", min f/OPT " << dynsub::FormatReal(*summary.min_ratio)
              << " over " << summary.verified << " verified ops";
  }
  std::cerr << "\n";
  if (summary.verification_failed) {
    std::cerr << "verification failed: guarantee violated\n";
    return kVerificationFailed;
  }
  return kOk;
}

int CompareAll(const RunArgs& args) {
  const dynsub::Instance instance =
      dynsub::BuildInstance(dynsub::LoadUniverse(args.universe));
  const std::vector<dynsub::Operation> ops = dynsub::LoadStream(args.stream);
  std::vector<dynsub::Algorithm> algorithms;
  for (const std::string& name : args.algorithms) {
    algorithms.push_back(dynsub::ParseAlgorithm(name));
  }
  dynsub::RunOptions base;
  base.epsilon = args.epsilon;
  base.seed = args.seed;
  const auto rows = dynsub::Compare(instance, ops, algorithms, base);
  std::ostringstream csv;
  dynsub::WriteComparisonCsv(csv, rows);
  Emit(args.out, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic submodular maximization under a matroid constraint"};
  app.require_subcommand(1);

  UniverseArgs universe_args;
  auto* universe = app.add_subcommand("universe", "Write a random universe");
  universe->add_option("--function", universe_args.options.function,
                       "coverage | modular | facility-location")
      ->check(CLI::IsMember({"coverage", "modular", "facility-location"}));
  universe->add_option("--matroid", universe_args.options.matroid,
                       "uniform | partition | graphic")
      ->check(CLI::IsMember({"uniform", "partition", "graphic"}));
  universe->add_option("--size", universe_args.options.size)
      ->check(CLI::PositiveNumber);
  universe->add_option("--rank", universe_args.options.rank)
      ->check(CLI::PositiveNumber);
  universe->add_option("--items", universe_args.options.items)
      ->check(CLI::PositiveNumber);
  universe->add_option("--seed", universe_args.options.seed);
  universe->add_option("--out", universe_args.out, "Output path (default stdout)");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate an update stream");
  gen->add_option("--spec", gen_args.spec,
                  "appendix-c | random | sliding-window")
      ->check(CLI::IsMember({"appendix-c", "random", "sliding-window"}));
  gen->add_option("--n", gen_args.n, "Element count or stream length")
      ->check(CLI::PositiveNumber);
  gen->add_option("--delete-prob", gen_args.delete_prob)
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--window", gen_args.window)->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--universe", gen_args.universe,
                  "Universe JSON to draw ids from (random)");
  gen->add_option("--universe-out", gen_args.universe_out,
                  "Also write the matching universe (appendix-c)");
  gen->add_option("--out", gen_args.out, "Output path (default stdout)");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Replay a stream through one algorithm");
  run->add_option("--universe", run_args.universe)->required();
  run->add_option("--stream", run_args.stream)->required();
  run->add_option("--algorithm", run_args.algorithm)
      ->check(CLI::IsMember({"dynamic", "dynamic-unfiltered", "swapping",
                             "dynamic-swapping", "dynamic-greedy"}));
  run->add_option("--epsilon", run_args.epsilon)
      ->check(CLI::Range(1e-9, 1e9));
  run->add_option("--seed", run_args.seed);
  run->add_flag("--verify", run_args.verify,
                "Brute-force OPT after each op when small enough");
  run->add_option("--out", run_args.out, "Report CSV (default stdout)");

  RunArgs compare_args;
  auto* compare =
      app.add_subcommand("compare", "Run several algorithms on one stream");
  compare->add_option("--universe", compare_args.universe)->required();
  compare->add_option("--stream", compare_args.stream)->required();
  compare->add_option("--algorithms", compare_args.algorithms)
      ->delimiter(',')
      ->required();
  compare->add_option("--epsilon", compare_args.epsilon)
      ->check(CLI::Range(1e-9, 1e9));
  compare->add_option("--seed", compare_args.seed);
  compare->add_option("--out", compare_args.out, "Comparison CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*universe) return MakeUniverse(universe_args);
    if (*gen) return Generate(gen_args);
    if (*run) return Run(run_args);
    if (*compare) return CompareAll(compare_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
