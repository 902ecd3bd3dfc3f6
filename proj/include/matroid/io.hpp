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

// JSON form of matroid descriptions (schema version 1):
//   {"type":"linear","labels":[...],"matrix":{"p","rows","cols","entries"}}
//   {"type":"uniform","r":2,"n":4,"labels":[...]}          labels optional
//   {"type":"spike","n":4,"dependent_transversals":["0101",...],"labels":[...]}
//   {"type":"rank-table","labels":[...],"ranks":[{"set":[...],"rank":1},...]}
//   {"type":"minor","base":{...},"contract":[...],"delete":[...]}
//   {"type":"dual","base":{...}}

#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "matroid/error.hpp"
#include "matroid/gf.hpp"
#include "matroid/matroid.hpp"
#include "matroid/spike.hpp"
#include "matroid/subset.hpp"

namespace matroid {

namespace detail {

inline nlohmann::json labels_json(const Matroid& m, ElementSet x) {
  nlohmann::json out = nlohmann::json::array();
  for (int e : elements(x)) out.push_back(m.labels()[e]);
  return out;
}

inline nlohmann::json matroid_body(const Matroid& m) {
  using nlohmann::json;
  return std::visit(
      [&](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LinearNode>) {
          return {{"type", "linear"}, {"labels", m.labels()}, {"matrix", matrix_to_json(n.matrix)}};
        } else if constexpr (std::is_same_v<T, UniformNode>) {
          return {{"type", "uniform"}, {"r", n.rank}, {"n", n.size}, {"labels", m.labels()}};
        } else if constexpr (std::is_same_v<T, SpikeNode>) {
          json dep = json::array();
          for (Transversal t : n.spike.dependent()) dep.push_back(transversal_to_string(t, n.spike.legs()));
          return {{"type", "spike"}, {"n", n.spike.legs()}, {"dependent_transversals", dep}, {"labels", m.labels()}};
        } else if constexpr (std::is_same_v<T, RankTableNode>) {
          json ranks = json::array();
          for (ElementSet x = 0; x < n.ranks.size(); ++x) {
            ranks.push_back({{"set", labels_json(m, x)}, {"rank", n.ranks[x]}});
          }
          return {{"type", "rank-table"}, {"labels", m.labels()}, {"ranks", ranks}};
        } else if constexpr (std::is_same_v<T, MinorNode>) {
          return {{"type", "minor"},
                  {"base", matroid_body(n.base)},
                  {"contract", labels_json(n.base, n.contract)},
                  {"delete", labels_json(n.base, n.remove)}};
        } else {
          return {{"type", "dual"}, {"base", matroid_body(n.base)}};
        }
      },
      m.node().value);
}

inline std::vector<std::string> optional_labels(const nlohmann::json& j) {
  if (!j.contains("labels")) return {};
  return j.at("labels").get<std::vector<std::string>>();
}

inline Matroid matroid_from_body(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kMalformed, "matroid description must be an object");
  const std::string type = j.at("type").get<std::string>();
  if (type == "linear") {
    return Matroid::linear(matrix_from_json(j.at("matrix")), optional_labels(j));
  }
  if (type == "uniform") {
    return Matroid::uniform(j.at("r").get<int>(), j.at("n").get<int>(), optional_labels(j));
  }
  if (type == "spike") {
    std::vector<Transversal> dep;
    for (const auto& t : j.at("dependent_transversals")) {
      const std::string s = t.get<std::string>();
      if (static_cast<int>(s.size()) != j.at("n").get<int>()) {
        throw Error(ErrorCode::kInvalidSpike, "transversal '" + s + "' has the wrong length");
      }
      dep.push_back(transversal_from_string(s));
    }
    return Matroid::spike(Spike(j.at("n").get<int>(), std::move(dep), optional_labels(j)));
  }
  if (type == "rank-table") {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const int n = static_cast<int>(labels.size());
    require_exhaustive(n);
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> ranks(size, 0);
    std::vector<bool> seen(size, false);
    for (const auto& entry : j.at("ranks")) {
      ElementSet x = 0;
      for (const auto& l : entry.at("set")) {
        const auto it = std::find(labels.begin(), labels.end(), l.get<std::string>());
        if (it == labels.end()) throw Error(ErrorCode::kMalformed, "unknown label in rank table");
        x |= bit(static_cast<int>(it - labels.begin()));
      }
      const int r = entry.at("rank").get<int>();
      if (r < 0 || r > 64) throw Error(ErrorCode::kInvalidRankTable, "rank out of range");
      ranks[x] = static_cast<std::uint8_t>(r);
      seen[x] = true;
    }
    for (std::size_t x = 0; x < size; ++x) {
      if (!seen[x]) throw Error(ErrorCode::kInvalidRankTable, "rank table must list every subset");
    }
    return Matroid::rank_table(std::move(labels), std::move(ranks));
  }
  if (type == "minor") {
    const Matroid base = matroid_from_body(j.at("base"));
    const auto c = j.at("contract").get<std::vector<std::string>>();
    const auto d = j.at("delete").get<std::vector<std::string>>();
    return base.minor(base.set_of(c), base.set_of(d));
  }
  if (type == "dual") return matroid_from_body(j.at("base")).dual();
  throw Error(ErrorCode::kMalformed, "unknown matroid type '" + type + "'");
}

}  // namespace detail

inline nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json j = detail::matroid_body(m);
  j["v"] = 1;
  return j;
}

inline Matroid matroid_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("v") && j.at("v").get<int>() != 1) {
      throw Error(ErrorCode::kMalformed, "unsupported schema version");
    }
    return detail::matroid_from_body(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("matroid: ") + e.what());
  }
}

// Reads a file, or stdin when `path` is "-".
inline std::string read_text(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kMalformed, "cannot read '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

inline nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("invalid JSON: ") + e.what());
  }
}

inline Matroid load_matroid(const std::string& path) { return matroid_from_json(parse_json(read_text(path))); }

}  // namespace matroid
