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

#include <cmath>
#include <sstream>

#include "selfsim/pairs.hpp"

namespace selfsim {

namespace {

// Similitude sending the triangle (p0, p1, p2) onto (q0, q1, q2).
Similitude MapTriple(Point p0, Point p1, Point p2, Point q0, Point q1,
                     Point q2) {
  for (bool direct : {true, false}) {
    Similitude g = Similitude::FromPoints(p0, p1, q0, q1, direct);
    if (Distance(g.Apply(p2), q2) <= 1e-12 * (1.0 + Norm(q2))) return g;
  }
  throw Error(ErrorCode::kDegenerateInput, "triangles are not similar");
}

GeneratingPair GoldenBee(const std::string& name) {
  const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
  const double s = 1.0 / std::sqrt(tau);
  const double s2 = s * s, s3 = s2 * s;
  Polygon g = Polygon::Make(
      {{0, 0}, {s, 0}, {s, s2}, {s3, s2}, {s3, 1}, {0, 1}});
  std::vector<Similitude> maps = {
      Similitude::FromMatrix(0, -s, s, 0, s, 0),
      Similitude::FromMatrix(s2, 0, 0, -s2, 0, 1),
  };
  return ValidatePair(name, g, maps);
}

GeneratingPair Square4() {
  Polygon sq = Polygon::Make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  std::vector<Similitude> maps;
  for (Point t : {Point{0, 0}, Point{0.5, 0}, Point{0, 0.5}, Point{0.5, 0.5}}) {
    maps.push_back(Similitude::FromMatrix(0.5, 0, 0, 0.5, t.x, t.y));
  }
  return ValidatePair("square-4", sq, maps);
}

void CheckFamilyParams(const std::string& family, const std::vector<int>& p,
                       bool same_parity) {
  if (p.size() != 2) {
    throw Error(ErrorCode::kBadParams, family + " takes two parameters a,b");
  }
  int a = p[0], b = p[1];
  if (!(a > b && b >= 1)) {
    throw Error(ErrorCode::kBadParams, family + " needs a > b >= 1");
  }
  if (a > kMaxExponent) {
    throw Error(ErrorCode::kBadParams,
                family + " needs a <= " + std::to_string(kMaxExponent));
  }
  if (same_parity && (a - b) % 2 != 0) {
    throw Error(ErrorCode::kBadParams, family + " needs a and b of equal parity");
  }
}

std::string FamilyName(const std::string& family, const std::vector<int>& p) {
  return family + "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

// Right triangle with hypotenuse 1 split by the altitude from the right
// angle.  The legs are s^b and s^a with s^(2a) + s^(2b) = 1.
GeneratingPair RightTriangle(const std::vector<int>& p) {
  CheckFamilyParams("right-triangle", p, false);
  const int a = p[0], b = p[1];
  const double s = SolveScale({a, b});
  const double u = std::pow(s, b), v = std::pow(s, a);
  const Point A{u, 0}, B{0, v}, C{0, 0};
  const Point H{u * v * v, u * u * v};
  Polygon tri = Polygon::Make({C, A, B});
  std::vector<Similitude> maps = {MapTriple(A, B, C, C, B, H),
                                  MapTriple(A, B, C, A, C, H)};
  return ValidatePair(FamilyName("right-triangle", p), tri, maps);
}

// Right trapezoid with bottom 1, right leg w and top w^2, where
// w = s^((b-a)/2) and s^a + s^b = 1.  Pieces: s^a and s^b copies homothetic
// at the two left corners, and two reflected s^((a+b)/2) copies in the
// right corners.
GeneratingPair Trapezoid(const std::vector<int>& p) {
  CheckFamilyParams("trapezoid", p, true);
  const int a = p[0], b = p[1], m = (a + b) / 2;
  const double s = SolveScale({a, m, m, b});
  const double w = std::pow(s, 0.5 * (b - a));
  const double g = std::pow(s, m);
  const Point A{0, 0}, B{1, 0}, C{1, w}, D{1 - w * w, w};
  Polygon trap = Polygon::Make({A, B, C, D});
  std::vector<Similitude> maps = {
      Similitude::Scaling(std::pow(s, a), A),
      MapTriple(A, B, C, Point{1, g}, B, Point{1 - g * w, 0}),
      MapTriple(B, C, D, Point{1 - g * w, w}, C, Point{1, w - g * w * w}),
      Similitude::Scaling(std::pow(s, b), D),
  };
  return ValidatePair(FamilyName("trapezoid", p), trap, maps);
}

// Rectangle 1 x sqrt(tau): a rotated s copy below, and on top a rotated s^3
// copy beside an upright s^4 copy, s = 1/sqrt(tau).
GeneratingPair SporadicA() {
  const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
  const double h = std::sqrt(tau);
  const double s = 1.0 / h;
  const double s2 = s * s, s3 = s2 * s, s4 = s2 * s2;
  const Point P0{0, 0}, P1{1, 0}, P3{0, h};
  Polygon rect = Polygon::Make({P0, P1, {1, h}, P3});
  std::vector<Similitude> maps = {
      MapTriple(P0, P1, P3, Point{1, 0}, Point{1, s}, Point{0, 0}),
      MapTriple(P0, P1, P3, Point{s2, s}, Point{s2, s + s3}, Point{0, s}),
      Similitude::FromMatrix(s4, 0, 0, s4, s2, s),
  };
  return ValidatePair("sporadic-A", rect, maps);
}

// Right trapezoid (0,0) (2,0) (1,1) (0,1): one sqrt(2)/2 copy on the slanted
// side and two half-size copies on the left, one of them mirrored.
GeneratingPair SporadicC() {
  const Point P0{0, 0}, P1{2, 0}, P2{1, 1}, P3{0, 1};
  Polygon trap = Polygon::Make({P0, P1, P2, P3});
  std::vector<Similitude> maps = {
      MapTriple(P0, P1, P2, Point{1, 1}, Point{2, 0}, Point{1, 0}),
      Similitude::FromMatrix(0.5, 0, 0, 0.5, 0, 0),
      Similitude::FromMatrix(0.5, 0, 0, -0.5, 0, 1),
  };
  return ValidatePair("sporadic-C", trap, maps);
}

// Kite with angles 60, 90, 120, 90: two mirrored 1/sqrt(3) copies at the
// 120 degree end, and the leftover equilateral triangle cut into three 1/3
// copies through its center.
GeneratingPair SporadicD() {
  const double r3 = std::sqrt(3.0);
  const Point K0{0, 0}, K1{1.5, -r3 / 2}, K2{2, 0}, K3{1.5, r3 / 2};
  Polygon kite = Polygon::Make({K0, K1, K2, K3});
  const Point lo{1, -1 / r3}, hi{1, 1 / r3}, c{2.0 / 3.0, 0};
  const Point m_lo{0.5, -0.5 / r3}, m_hi{0.5, 0.5 / r3}, m_r{1, 0};
  std::vector<Similitude> maps = {
      MapTriple(K0, K1, K2, K2, K1, lo),
      MapTriple(K0, K3, K2, K2, K3, hi),
      MapTriple(K0, K1, K2, K0, m_lo, c),
      MapTriple(K0, K1, K2, lo, m_r, c),
      MapTriple(K0, K1, K2, hi, m_hi, c),
  };
  return ValidatePair("sporadic-D", kite, maps);
}

// sqrt(3) x 1 rectangle cut into three rotated strips, the last of which is
// cut again into three upright pieces.
GeneratingPair RectReducible() {
  const double r3 = std::sqrt(3.0);
  const double w = 1.0 / r3;
  const Point P0{0, 0}, P1{r3, 0}, P3{0, 1};
  Polygon rect = Polygon::Make({P0, P1, {r3, 1}, P3});
  std::vector<Similitude> maps;
  for (int i = 0; i < 2; ++i) {
    maps.push_back(MapTriple(P0, P1, P3, Point{(i + 1) * w, 0},
                             Point{(i + 1) * w, 1}, Point{i * w, 0}));
  }
  for (int k = 0; k < 3; ++k) {
    maps.push_back(
        Similitude::FromMatrix(1.0 / 3, 0, 0, 1.0 / 3, 2 * w, k / 3.0));
  }
  return ValidatePair("rect-reducible", rect, maps);
}

}  // namespace

std::vector<CatalogEntry> CatalogEntries() {
  return {
      {"golden-bee", "", "golden-bee", false,
       "hexagon; ratios 1/sqrt(tau), 1/tau"},
      {"right-triangle(a,b)", "a > b >= 1", "right-triangle(2,1)", false,
       "altitude split of a right triangle"},
      {"trapezoid(a,b)", "a > b >= 1, a = b mod 2", "trapezoid(3,1)", false,
       "right trapezoid, four pieces"},
      {"sporadic-A", "", "sporadic-A", true, "rectangle 1 x sqrt(tau)"},
      {"sporadic-B", "", "sporadic-B", false, "same pair as golden-bee"},
      {"sporadic-C", "", "sporadic-C", true, "right trapezoid, ratios sqrt(2)/2, 1/2, 1/2"},
      {"sporadic-D", "", "sporadic-D", true, "kite, ratios sqrt(3)/3 x2, 1/3 x3"},
      {"square-4", "", "square-4", false, "unit square in four quarters"},
      {"rect-reducible", "", "rect-reducible", false,
       "reducible on purpose: three pieces rebuild a strip"},
  };
}

GeneratingPair Catalog(const std::string& family,
                       const std::vector<int>& params) {
  auto no_params = [&] {
    if (!params.empty()) {
      throw Error(ErrorCode::kBadParams, family + " takes no parameters");
    }
  };
  if (family == "golden-bee" || family == "sporadic-B") {
    no_params();
    return GoldenBee(family);
  }
  if (family == "right-triangle") return RightTriangle(params);
  if (family == "trapezoid") return Trapezoid(params);
  if (family == "sporadic-A") return no_params(), SporadicA();
  if (family == "sporadic-C") return no_params(), SporadicC();
  if (family == "sporadic-D") return no_params(), SporadicD();
  if (family == "square-4") return no_params(), Square4();
  if (family == "rect-reducible") return no_params(), RectReducible();
  throw Error(ErrorCode::kUnknownName, "no catalog entry '" + family + "'");
}

GeneratingPair Catalog(const std::string& name) {
  auto open = name.find('(');
  if (open == std::string::npos) return Catalog(name, {});
  if (name.back() != ')') {
    throw Error(ErrorCode::kBadParams, "malformed parameters in '" + name + "'");
  }
  std::vector<int> params;
  std::stringstream ss(name.substr(open + 1, name.size() - open - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kBadParams, "bad parameter '" + item + "'");
    }
  }
  return Catalog(name.substr(0, open), params);
}

PairCandidate EquilateralNonExample() {
  const double h = std::sqrt(3.0) / 2.0;
  const Point A{0, 0}, B{3, 0}, C{1.5, 3 * h};
  PairCandidate c;
  c.name = "equilateral-six";
  c.polygon = Polygon::Make({A, B, C});
  c.maps.push_back(Similitude::Scaling(2.0 / 3.0, A));
  const Point tris[5][3] = {
      {{2, 0}, {3, 0}, {2.5, h}},
      {{2, 0}, {2.5, h}, {1.5, h}},
      {{1.5, h}, {2.5, h}, {2, 2 * h}},
      {{1.5, h}, {2, 2 * h}, {1, 2 * h}},
      {{1, 2 * h}, {2, 2 * h}, {1.5, 3 * h}},
  };
  for (const auto& t : tris) {
    c.maps.push_back(MapTriple(A, B, C, t[0], t[1], t[2]));
  }
  return c;
}

}  // namespace selfsim
