// Copyright 2026 The selfsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "selfsim/pairs.hpp"

namespace selfsim {

using nlohmann::json;

namespace {

json VerticesToJson(const Polygon& p) {
  json v = json::array();
  for (const Point& x : p.vertices()) v.push_back({x.x, x.y});
  return v;
}

json MapsToJson(const std::vector<Similitude>& maps) {
  json out = json::array();
  for (const auto& f : maps) {
    auto m = f.matrix();
    out.push_back({{"a", m[0]}, {"b", m[1]}, {"c", m[2]},
                   {"d", m[3]}, {"tx", m[4]}, {"ty", m[5]}});
  }
  return out;
}

template <typename Fn>
auto Field(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

}  // namespace

json CandidateToJson(const PairCandidate& c) {
  return {{"name", c.name},
          {"vertices", VerticesToJson(c.polygon)},
          {"maps", MapsToJson(c.maps)}};
}

json PairToJson(const GeneratingPair& pair) {
  json j = CandidateToJson({pair.name, pair.polygon, pair.maps});
  j["exponents"] = pair.exponents;
  j["scale"] = pair.scale;
  return j;
}

PairCandidate CandidateFromJson(const json& j) {
  PairCandidate c;
  c.name = Field("name", [&] { return j.at("name").get<std::string>(); });
  std::vector<Point> v = Field("vertices", [&] {
    std::vector<Point> out;
    for (const auto& p : j.at("vertices")) {
      if (p.size() != 2) throw Error(ErrorCode::kParse, "vertex needs [x, y]");
      out.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
    return out;
  });
  c.polygon = Polygon::Make(std::move(v));
  c.maps = Field("maps", [&] {
    std::vector<Similitude> out;
    for (const auto& m : j.at("maps")) {
      out.push_back(Similitude::FromMatrix(
          m.at("a").get<double>(), m.at("b").get<double>(),
          m.at("c").get<double>(), m.at("d").get<double>(),
          m.at("tx").get<double>(), m.at("ty").get<double>()));
    }
    return out;
  });
  return c;
}

GeneratingPair PairFromJson(const json& j) {
  PairCandidate c = CandidateFromJson(j);
  GeneratingPair pair;
  pair.name = c.name;
  pair.polygon = c.polygon;
  pair.maps = c.maps;
  pair.exponents =
      Field("exponents", [&] { return j.at("exponents").get<std::vector<int>>(); });
  pair.scale = Field("scale", [&] { return j.at("scale").get<double>(); });
  if (pair.exponents.size() != pair.maps.size()) {
    throw Error(ErrorCode::kParse, "one exponent per map expected");
  }
  return pair;
}

}  // namespace selfsim
