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

#ifndef DYNSUB_UNIVERSE_JSON_H_
#define DYNSUB_UNIVERSE_JSON_H_

// Universe definition files and the oracle instances built from them.
//
// Schema (field names are part of the CLI contract):
//
//   {
//     "function": {"kind": "coverage", "items": {"<item>": <weight>, ...}}
//               | {"kind": "modular"}
//               | {"kind": "power-modular", "base": <b>}
//               | {"kind": "facility-location", "clients": [[x, y, ...], ...]},
//     "matroid":  {"kind": "uniform", "rank": <k>}
//               | {"kind": "partition", "parts": [[id, ...], ...],
//                  "capacities": [c, ...]}
//               | {"kind": "graphic", "vertices": <count>},
//     "elements": [{"id": <int>, "payload": {...}}, ...]
//   }
//
// Payload fields: "covers" (item list, coverage), "weight" (modular),
// "exponent" (power-modular), "point" (facility location), "edge" ([u, v],
// graphic). Unused fields may be omitted.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "dynsub/oracles.h"
#include "dynsub/universe.h"

namespace dynsub {

struct FunctionSpec {
  std::string kind = "modular";
  std::map<std::int64_t, double> items;         // coverage
  double base = 3.0;                            // power-modular
  std::vector<std::vector<double>> clients;     // facility-location
};

struct MatroidSpec {
  std::string kind = "uniform";
  int rank = 1;                                 // uniform
  std::vector<std::vector<ElementId>> parts;    // partition
  std::vector<int> capacities;                  // partition
  int vertices = 0;                             // graphic
};

struct UniverseSpec {
  FunctionSpec function;
  MatroidSpec matroid;
  std::vector<Element> elements;
};

// Shared immutable oracles for one universe.
struct Instance {
  std::shared_ptr<const Universe> universe;
  std::shared_ptr<const SubmodularFunction> function;
  std::shared_ptr<const Matroid> matroid;

  Oracles MakeOracles() const { return Oracles(universe, function, matroid); }
};

// Throws UniverseError on an unknown kind or inconsistent fields.
Instance BuildInstance(const UniverseSpec& spec);

UniverseSpec UniverseFromJson(const nlohmann::json& doc);
nlohmann::json UniverseToJson(const UniverseSpec& spec);

UniverseSpec LoadUniverse(const std::string& path);
void SaveUniverse(const UniverseSpec& spec, const std::string& path);

struct RandomUniverseOptions {
  std::string function = "coverage";  // coverage | modular | facility-location
  std::string matroid = "uniform";     // uniform | partition | graphic
  int size = 12;
  int rank = 3;
  int items = 10;                      // coverage ground items
  std::uint64_t seed = 0;
};

// Random instance with integer-valued weights (coverage, modular), so that
// sums are exact in binary64.
UniverseSpec RandomUniverse(const RandomUniverseOptions& options);

// Elements x_1..x_n with f(x_i) = 3^i under a rank-1 uniform matroid.
UniverseSpec LowerBoundUniverse(int n);

}  // namespace dynsub

#endif  // DYNSUB_UNIVERSE_JSON_H_
