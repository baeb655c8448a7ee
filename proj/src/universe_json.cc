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

#include "dynsub/universe_json.h"

#include <fstream>
#include <random>
#include <unordered_map>

#include "dynsub/errors.h"

namespace dynsub {

using nlohmann::json;

Instance BuildInstance(const UniverseSpec& spec) {
  Instance instance;
  auto universe = std::make_shared<const Universe>(spec.elements);
  instance.universe = universe;

  const FunctionSpec& fs = spec.function;
  if (fs.kind == "modular") {
    instance.function = std::make_shared<const ModularFunction>(
        ModularFunction::FromWeights(*universe));
  } else if (fs.kind == "power-modular") {
    instance.function = std::make_shared<const ModularFunction>(
        ModularFunction::FromExponents(*universe, fs.base));
  } else if (fs.kind == "coverage") {
    std::unordered_map<std::int64_t, double> items(fs.items.begin(),
                                                   fs.items.end());
    instance.function =
        std::make_shared<const WeightedCoverage>(*universe, std::move(items));
  } else if (fs.kind == "facility-location") {
    instance.function =
        std::make_shared<const FacilityLocation>(*universe, fs.clients);
  } else {
    throw UniverseError("unknown function kind '" + fs.kind + "'");
  }

  const MatroidSpec& ms = spec.matroid;
  if (ms.kind == "uniform") {
    if (ms.rank < 1) throw UniverseError("uniform matroid rank must be >= 1");
    instance.matroid = std::make_shared<const UniformMatroid>(ms.rank);
  } else if (ms.kind == "partition") {
    instance.matroid = std::make_shared<const PartitionMatroid>(
        *universe, ms.parts, ms.capacities);
  } else if (ms.kind == "graphic") {
    instance.matroid =
        std::make_shared<const GraphicMatroid>(*universe, ms.vertices);
  } else {
    throw UniverseError("unknown matroid kind '" + ms.kind + "'");
  }
  if (instance.matroid->rank() < 1) {
    throw UniverseError("matroid has rank 0");
  }
  return instance;
}

UniverseSpec UniverseFromJson(const json& doc) {
  UniverseSpec spec;
  try {
    const json& f = doc.at("function");
    spec.function.kind = f.at("kind").get<std::string>();
    if (spec.function.kind == "coverage") {
      for (const auto& [item, weight] : f.at("items").items()) {
        spec.function.items[std::stoll(item)] = weight.get<double>();
      }
    } else if (spec.function.kind == "power-modular") {
      spec.function.base = f.at("base").get<double>();
    } else if (spec.function.kind == "facility-location") {
      spec.function.clients =
          f.at("clients").get<std::vector<std::vector<double>>>();
    }

    const json& m = doc.at("matroid");
    spec.matroid.kind = m.at("kind").get<std::string>();
    if (spec.matroid.kind == "uniform") {
      spec.matroid.rank = m.at("rank").get<int>();
    } else if (spec.matroid.kind == "partition") {
      spec.matroid.parts =
          m.at("parts").get<std::vector<std::vector<ElementId>>>();
      spec.matroid.capacities = m.at("capacities").get<std::vector<int>>();
    } else if (spec.matroid.kind == "graphic") {
      spec.matroid.vertices = m.at("vertices").get<int>();
    }

    for (const json& e : doc.at("elements")) {
      Element element;
      element.id = e.at("id").get<ElementId>();
      const json payload = e.value("payload", json::object());
      if (payload.contains("covers")) {
        element.payload.covers =
            payload["covers"].get<std::vector<std::int64_t>>();
      }
      element.payload.weight = payload.value("weight", 0.0);
      element.payload.exponent = payload.value("exponent", 0);
      if (payload.contains("point")) {
        element.payload.point = payload["point"].get<std::vector<double>>();
      }
      if (payload.contains("edge")) {
        const auto edge = payload["edge"].get<std::vector<int>>();
        if (edge.size() != 2) throw UniverseError("edge needs two endpoints");
        element.payload.edge = std::make_pair(edge[0], edge[1]);
      }
      spec.elements.push_back(std::move(element));
    }
  } catch (const json::exception& ex) {
    throw UniverseError(std::string("malformed universe: ") + ex.what());
  } catch (const std::invalid_argument&) {
    throw UniverseError("malformed universe: item keys must be integers");
  }
  return spec;
}

json UniverseToJson(const UniverseSpec& spec) {
  json doc;
  json f = {{"kind", spec.function.kind}};
  if (spec.function.kind == "coverage") {
    json items = json::object();
    for (const auto& [item, weight] : spec.function.items) {
      items[std::to_string(item)] = weight;
    }
    f["items"] = items;
  } else if (spec.function.kind == "power-modular") {
    f["base"] = spec.function.base;
  } else if (spec.function.kind == "facility-location") {
    f["clients"] = spec.function.clients;
  }
  doc["function"] = f;

  json m = {{"kind", spec.matroid.kind}};
  if (spec.matroid.kind == "uniform") {
    m["rank"] = spec.matroid.rank;
  } else if (spec.matroid.kind == "partition") {
    m["parts"] = spec.matroid.parts;
    m["capacities"] = spec.matroid.capacities;
  } else if (spec.matroid.kind == "graphic") {
    m["vertices"] = spec.matroid.vertices;
  }
  doc["matroid"] = m;

  json elements = json::array();
  for (const Element& e : spec.elements) {
    json payload = json::object();
    const Payload& p = e.payload;
    if (!p.covers.empty()) payload["covers"] = p.covers;
    if (spec.function.kind == "modular") payload["weight"] = p.weight;
    if (spec.function.kind == "power-modular") payload["exponent"] = p.exponent;
    if (!p.point.empty()) payload["point"] = p.point;
    if (p.edge) payload["edge"] = {p.edge->first, p.edge->second};
    elements.push_back({{"id", e.id}, {"payload", payload}});
  }
  doc["elements"] = elements;
  return doc;
}

UniverseSpec LoadUniverse(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UniverseError("cannot open universe file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw UniverseError(path + ": " + ex.what());
  }
  return UniverseFromJson(doc);
}

void SaveUniverse(const UniverseSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UniverseError("cannot write universe file " + path);
  out << UniverseToJson(spec).dump(2) << '\n';
}

UniverseSpec RandomUniverse(const RandomUniverseOptions& options) {
  if (options.size < 1 || options.rank < 1) {
    throw ContractViolation("random universe needs size >= 1 and rank >= 1");
  }
  std::mt19937_64 rng(options.seed);
  auto uniform_int = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  UniverseSpec spec;
  spec.function.kind = options.function;
  spec.matroid.kind = options.matroid;

  if (options.function == "coverage") {
    const int items = std::max(1, options.items);
    for (int i = 1; i <= items; ++i) spec.function.items[i] = uniform_int(1, 5);
  } else if (options.function == "facility-location") {
    for (int c = 0; c < 6; ++c) {
      spec.function.clients.push_back(
          {static_cast<double>(uniform_int(0, 10)),
           static_cast<double>(uniform_int(0, 10))});
    }
  } else if (options.function != "modular") {
    throw UniverseError("random universes support coverage, modular and "
                        "facility-location functions");
  }

  for (int i = 1; i <= options.size; ++i) {
    Element e;
    e.id = i;
    if (options.function == "coverage") {
      const int count = uniform_int(1, std::min(4, options.items));
      for (int c = 0; c < count; ++c) {
        e.payload.covers.push_back(uniform_int(1, options.items));
      }
      std::sort(e.payload.covers.begin(), e.payload.covers.end());
      e.payload.covers.erase(
          std::unique(e.payload.covers.begin(), e.payload.covers.end()),
          e.payload.covers.end());
    } else if (options.function == "modular") {
      e.payload.weight = uniform_int(1, 20);
    } else {
      e.payload.point = {static_cast<double>(uniform_int(0, 10)),
                         static_cast<double>(uniform_int(0, 10))};
    }
    spec.elements.push_back(std::move(e));
  }

  if (options.matroid == "uniform") {
    spec.matroid.rank = options.rank;
  } else if (options.matroid == "partition") {
    const int parts = uniform_int(1, options.rank);
    spec.matroid.parts.assign(parts, {});
    spec.matroid.capacities.assign(parts, 1);
    for (int extra = options.rank - parts; extra > 0; --extra) {
      ++spec.matroid.capacities[uniform_int(0, parts - 1)];
    }
    for (int p = 0; p < parts && p < options.size; ++p) {
      spec.matroid.parts[p].push_back(spec.elements[p].id);
    }
    for (int i = parts; i < options.size; ++i) {
      spec.matroid.parts[uniform_int(0, parts - 1)].push_back(
          spec.elements[i].id);
    }
    // Parts with no elements would make the part list ragged; drop them.
    for (int p = parts - 1; p >= 0; --p) {
      if (spec.matroid.parts[p].empty()) {
        spec.matroid.parts.erase(spec.matroid.parts.begin() + p);
        spec.matroid.capacities.erase(spec.matroid.capacities.begin() + p);
      }
    }
  } else if (options.matroid == "graphic") {
    spec.matroid.vertices = options.rank + 1;
    for (Element& e : spec.elements) {
      const int u = uniform_int(0, options.rank);
      int v = uniform_int(0, options.rank);
      // Roughly one element in twenty is a self-loop.
      if (v == u && uniform_int(0, 19) != 0) v = (u + 1) % (options.rank + 1);
      e.payload.edge = std::make_pair(u, v);
    }
  } else {
    throw UniverseError("unknown matroid kind '" + options.matroid + "'");
  }
  return spec;
}

UniverseSpec LowerBoundUniverse(int n) {
  if (n < 1) throw ContractViolation("lower-bound universe needs n >= 1");
  UniverseSpec spec;
  spec.function.kind = "power-modular";
  spec.function.base = 3.0;
  spec.matroid.kind = "uniform";
  spec.matroid.rank = 1;
  for (int i = 1; i <= n; ++i) {
    Element e;
    e.id = i;
    e.payload.exponent = i;
    spec.elements.push_back(std::move(e));
  }
  return spec;
}

}  // namespace dynsub
