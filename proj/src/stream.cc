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

#include "dynsub/stream.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <string_view>
#include <unordered_set>

#include "dynsub/errors.h"
#include "dynsub/indexed_set.h"

namespace dynsub {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<Operation> ParseStream(std::istream& in) {
  std::vector<Operation> ops;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view text = line;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = Trim(text);
    if (text.empty()) continue;

    auto fail = [&](const std::string& why) {
      return StreamError("line " + std::to_string(line_number) + ": " + why +
                         ": '" + line + "'");
    };
    OpKind kind;
    if (text.front() == '+') {
      kind = OpKind::kInsert;
    } else if (text.front() == '-') {
      kind = OpKind::kDelete;
    } else {
      throw fail("expected '+' or '-'");
    }
    const std::string_view digits = Trim(text.substr(1));
    ElementId id = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), id);
    if (digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size()) {
      throw fail("expected an integer element id");
    }
    ops.push_back({kind, id});
  }
  return ops;
}

std::vector<Operation> LoadStream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StreamError("cannot open stream file " + path);
  return ParseStream(in);
}

void WriteStream(std::ostream& out, std::span<const Operation> ops) {
  for (const Operation& op : ops) {
    out << (op.kind == OpKind::kInsert ? "+ " : "- ") << op.id << '\n';
  }
}

void SaveStream(std::span<const Operation> ops, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StreamError("cannot write stream file " + path);
  WriteStream(out, ops);
}

std::optional<StreamProblem> ValidateStream(std::span<const Operation> ops,
                                            const Universe* universe) {
  std::unordered_set<ElementId> alive;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Operation& op = ops[i];
    const std::string id = std::to_string(op.id);
    if (op.kind == OpKind::kInsert) {
      if (universe && !universe->Contains(op.id)) {
        return StreamProblem{i, "insert of unknown element " + id};
      }
      if (!alive.insert(op.id).second) {
        return StreamProblem{i, "insert of alive element " + id};
      }
    } else if (alive.erase(op.id) == 0) {
      return StreamProblem{i, "delete of dead element " + id};
    }
  }
  return std::nullopt;
}

std::vector<Operation> LowerBoundStream(int n) {
  if (n < 1) throw ContractViolation("lower-bound stream needs n >= 1");
  std::vector<Operation> ops;
  ops.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) ops.push_back(Operation::Insert(i));
  for (int i = n; i >= 1; --i) ops.push_back(Operation::Delete(i));
  return ops;
}

std::vector<Operation> RandomStream(std::span<const ElementId> ids, int n,
                                    double delete_prob, std::uint64_t seed) {
  if (n < 0 || !(delete_prob >= 0.0 && delete_prob <= 1.0)) {
    throw ContractViolation("random stream needs n >= 0 and p in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(delete_prob);
  // Sorted containers keep the draw independent of hash-table layout.
  std::set<ElementId> dead(ids.begin(), ids.end());
  IndexedSet alive;
  std::vector<Operation> ops;
  auto pick = [&rng](std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  };
  for (int step = 0; step < n; ++step) {
    const bool want_delete = coin(rng);
    if ((want_delete || dead.empty()) && !alive.empty()) {
      const ElementId e = alive.at(pick(alive.size()));
      alive.Erase(e);
      dead.insert(e);
      ops.push_back(Operation::Delete(e));
    } else if (!dead.empty()) {
      auto it = std::next(dead.begin(), static_cast<std::ptrdiff_t>(
                                             pick(dead.size())));
      const ElementId e = *it;
      dead.erase(it);
      alive.Insert(e);
      ops.push_back(Operation::Insert(e));
    } else {
      break;
    }
  }
  return ops;
}

std::vector<Operation> SlidingWindowStream(int n, int window) {
  if (n < 0 || window < 1) {
    throw ContractViolation("sliding window needs n >= 0 and window >= 1");
  }
  std::vector<Operation> ops;
  for (int i = 1; i <= n; ++i) {
    ops.push_back(Operation::Insert(i));
    if (i > window) ops.push_back(Operation::Delete(i - window));
  }
  return ops;
}

}  // namespace dynsub
