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

#ifndef DYNSUB_OPERATION_H_
#define DYNSUB_OPERATION_H_

#include "dynsub/universe.h"

namespace dynsub {

enum class OpKind { kInsert, kDelete };

struct Operation {
  OpKind kind = OpKind::kInsert;
  ElementId id = 0;

  static Operation Insert(ElementId id) { return {OpKind::kInsert, id}; }
  static Operation Delete(ElementId id) { return {OpKind::kDelete, id}; }

  friend bool operator==(const Operation&, const Operation&) = default;
};

}  // namespace dynsub

#endif  // DYNSUB_OPERATION_H_
