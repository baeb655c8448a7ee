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

#include "dynsub/universe.h"

#include <algorithm>
#include <string>

#include "dynsub/errors.h"

namespace dynsub {

Universe::Universe(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const Element& a, const Element& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i].id, i).second) {
      throw UniverseError("duplicate element id " +
                          std::to_string(elements_[i].id));
    }
  }
}

const Element& Universe::at(ElementId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw UniverseError("unknown element id " + std::to_string(id));
  }
  return elements_[it->second];
}

std::vector<ElementId> Universe::ids() const {
  std::vector<ElementId> out;
  out.reserve(elements_.size());
  for (const Element& e : elements_) out.push_back(e.id);
  return out;
}

}  // namespace dynsub
