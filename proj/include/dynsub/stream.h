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

#ifndef DYNSUB_STREAM_H_
#define DYNSUB_STREAM_H_

// Operation streams.
//
// File format: UTF-8 text, one operation per line, "+ <id>" for an insertion
// and "- <id>" for a deletion. Blank lines and lines starting with '#' are
// ignored; trailing "# ..." comments are allowed. Writers emit exactly
// "+ <id>\n" / "- <id>\n".

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynsub/operation.h"
#include "dynsub/universe.h"

namespace dynsub {

// Throws StreamError naming the offending line number.
std::vector<Operation> ParseStream(std::istream& in);
std::vector<Operation> LoadStream(const std::string& path);
void WriteStream(std::ostream& out, std::span<const Operation> ops);
void SaveStream(std::span<const Operation> ops, const std::string& path);

struct StreamProblem {
  std::size_t index = 0;  // zero-based operation index
  std::string message;
};

// Simulates the alive set. When `universe` is given, inserted ids must
// belong to it.
std::optional<StreamProblem> ValidateStream(std::span<const Operation> ops,
                                            const Universe* universe = nullptr);

// +x_1 ... +x_n followed by -x_n ... -x_1 (ids 1..n).
std::vector<Operation> LowerBoundStream(int n);

// n operations over `ids`: with probability delete_prob (or when nothing is
// left to insert) a uniformly chosen alive element is deleted, otherwise a
// uniformly chosen dead element is inserted. Deleted elements may return.
// Stops early when neither move is possible.
std::vector<Operation> RandomStream(std::span<const ElementId> ids, int n,
                                    double delete_prob, std::uint64_t seed);

// Inserts 1..n in order; after inserting i > window, deletes i - window.
std::vector<Operation> SlidingWindowStream(int n, int window);

}  // namespace dynsub

#endif  // DYNSUB_STREAM_H_
