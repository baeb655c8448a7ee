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

#ifndef DYNSUB_INDEXED_SET_H_
#define DYNSUB_INDEXED_SET_H_

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "dynsub/universe.h"

namespace dynsub {

// Set of element ids with O(1) insert, erase, membership and positional
// access (for uniform sampling). Erase moves the last element into the
// hole, so iteration order depends only on the operation sequence.
class IndexedSet {
 public:
  bool Insert(ElementId e) {
    if (!position_.emplace(e, items_.size()).second) return false;
    items_.push_back(e);
    return true;
  }

  bool Erase(ElementId e) {
    auto it = position_.find(e);
    if (it == position_.end()) return false;
    const std::size_t pos = it->second;
    position_.erase(it);
    if (pos + 1 != items_.size()) {
      items_[pos] = items_.back();
      position_[items_[pos]] = pos;
    }
    items_.pop_back();
    return true;
  }

  bool Contains(ElementId e) const { return position_.contains(e); }
  ElementId at(std::size_t i) const { return items_.at(i); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::span<const ElementId> items() const { return items_; }

  void Clear() {
    items_.clear();
    position_.clear();
  }

 private:
  std::vector<ElementId> items_;
  std::unordered_map<ElementId, std::size_t> position_;
};

}  // namespace dynsub

#endif  // DYNSUB_INDEXED_SET_H_
