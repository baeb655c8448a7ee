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

#ifndef DYNSUB_UNIVERSE_H_
#define DYNSUB_UNIVERSE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dynsub {

using ElementId = std::int64_t;

// Data attached to an element. Each oracle reads only the field it
// understands; the rest stay empty.
struct Payload {
  std::vector<std::int64_t> covers;          // weighted coverage
  double weight = 0.0;                       // modular
  int exponent = 0;                          // power-modular
  std::vector<double> point;                 // facility location
  std::optional<std::pair<int, int>> edge;   // graphic matroid
};

struct Element {
  ElementId id = 0;
  Payload payload;
};

// Append-only ground set. Elements are kept sorted by id; ids are unique.
// Deleted stream elements stay in the universe because solution histories
// keep referring to them.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<Element> elements);

  bool Contains(ElementId id) const { return index_.contains(id); }
  // Throws UniverseError for unknown ids.
  const Element& at(ElementId id) const;

  std::span<const Element> elements() const { return elements_; }
  std::vector<ElementId> ids() const;
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<Element> elements_;
  std::unordered_map<ElementId, std::size_t> index_;
};

}  // namespace dynsub

#endif  // DYNSUB_UNIVERSE_H_
