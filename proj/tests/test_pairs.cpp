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
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfsim/error.hpp"
#include "selfsim/pairs.hpp"

using namespace selfsim;

namespace {

double ScaleResidual(const std::vector<int>& a, double s) {
  double sum = 0;
  for (int e : a) sum += std::pow(s, 2.0 * e);
  return sum - 1.0;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_SUITE("pairs") {

TEST_CASE("solve scale") {
  CHECK(SolveScale({1, 2}) == doctest::Approx(1.0 / std::sqrt(oracle::Tau())).epsilon(1e-15));
  CHECK(SolveScale({1, 2}) == doctest::Approx(0.7861513778).epsilon(1e-10));
  CHECK(SolveScale({1, 1}) == doctest::Approx(0.7071067812).epsilon(1e-10));
  double s = SolveScale({3, 2, 2, 1});
  CHECK(s == doctest::Approx(0.6823278038).epsilon(1e-10));
  CHECK(std::abs(s * s * s + s - 1) < 1e-14);
  CHECK(s == doctest::Approx(oracle::CardanoRoot()).epsilon(1e-14));
  CHECK(SolveScale({1, 1, 1, 1}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(SolveScale({}), Error);
  CHECK_THROWS_AS(SolveScale({0, 1}), Error);
  CHECK_THROWS_AS(SolveScale({1}), Error);
}

TEST_CASE("solve scale satisfies the scale equation") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(1, 24), n(2, 6);
  for (int i = 0; i < 300; ++i) {
    std::vector<int> a(n(rng));
    for (int& x : a) x = e(rng);
    double s = SolveScale(a);
    CHECK(s > 0);
    CHECK(s < 1);
    CHECK(std::abs(ScaleResidual(a, s)) < 1e-13);
  }
}

TEST_CASE("infer exponents") {
  auto fit = InferExponents({0.7861513778, 0.6180339887});
  CHECK(fit.exponents == std::vector<int>{1, 2});
  CHECK(fit.scale == doctest::Approx(0.7861513778).epsilon(1e-9));
  auto sq = InferExponents({0.5, 0.5, 0.5, 0.5});
  CHECK(sq.exponents == std::vector<int>{1, 1, 1, 1});
  CHECK(sq.scale == doctest::Approx(0.5));
  CHECK(CodeOf([] { InferExponents({1.0 / 3, 2.0 / 3}); }) == ErrorCode::kNoCommonBase);
  CHECK(CodeOf([] { InferExponents({1.0 / 3, 2.0 / 3, 0.5}); }) == ErrorCode::kNoCommonBase);
  CHECK(CodeOf([] { InferExponents({1.5, 0.5}); }) == ErrorCode::kBadParams);
}

TEST_CASE("infer exponents recovers every primitive exponent vector") {
  // Exhaustive over pairs and a random sample of longer vectors.
  for (int a = 1; a <= 24; ++a) {
    for (int b = a; b <= 24; ++b) {
      if (std::gcd(a, b) != 1) continue;
      double s = SolveScale({a, b});
      auto fit = InferExponents({std::pow(s, a), std::pow(s, b)});
      CHECK(fit.exponents == std::vector<int>{a, b});
      CHECK(fit.scale == doctest::Approx(s).epsilon(1e-10));
    }
  }
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> e(1, 24), n(3, 7);
  for (int i = 0; i < 300; ++i) {
    std::vector<int> a(n(rng));
    for (int& x : a) x = e(rng);
    int g = 0;
    for (int x : a) g = std::gcd(g, x);
    for (int& x : a) x /= g;
    double s = SolveScale(a);
    std::vector<double> r;
    for (int x : a) r.push_back(std::pow(s, x));
    auto fit = InferExponents(r);
    CHECK(fit.exponents == a);
  }
}

TEST_CASE("gcd normalization") {
  double s = SolveScale({2, 4});
  auto n = NormalizeExponents({2, 4}, s);
  CHECK(n.exponents == std::vector<int>{1, 2});
  CHECK(n.scale == doctest::Approx(s * s).epsilon(1e-14));
  CHECK(n.scale == doctest::Approx(SolveScale({1, 2})).epsilon(1e-12));
  auto same = NormalizeExponents({3, 2, 2, 1}, 0.68);
  CHECK(same.exponents == std::vector<int>{3, 2, 2, 1});
  CHECK(same.scale == 0.68);
}

TEST_CASE("validate golden bee and square") {
  auto gb = Catalog("golden-bee");
  ValidationReport rep;
  auto v = ValidatePair("gb", gb.polygon, gb.maps, {}, &rep);
  CHECK(rep.passed);
  CHECK(rep.contained);
  CHECK(rep.area_defect < 1e-12);
  CHECK(rep.max_overlap < 1e-12);
  CHECK(v.exponents == std::vector<int>{1, 2});
  CHECK(v.scale == doctest::Approx(0.7861513778).epsilon(1e-9));

  auto sq = Polygon::Make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  std::vector<Similitude> q;
  for (Point c : {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}}) q.push_back(Similitude::Scaling(0.5, c));
  auto s4 = ValidatePair("sq", sq, q);
  CHECK(s4.exponents == std::vector<int>{1, 1, 1, 1});
  CHECK(s4.scale == doctest::Approx(0.5));
}

TEST_CASE("validate rejects broken subdivisions") {
  auto sq = Polygon::Make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  std::vector<Similitude> q;
  for (Point c : {Point{0, 0}, Point{1, 0}, Point{1, 1}}) q.push_back(Similitude::Scaling(0.5, c));
  try {
    ValidatePair("three", sq, q);
    FAIL("expected failure");
  } catch (const SubdivisionFailure& e) {
    CHECK(e.report().area_defect == doctest::Approx(0.25));
    CHECK_FALSE(e.report().passed);
  }
  q.push_back(Similitude::Scaling(0.5, {0, 0}));
  try {
    ValidatePair("overlap", sq, q);
    FAIL("expected failure");
  } catch (const SubdivisionFailure& e) {
    CHECK(e.report().max_overlap == doctest::Approx(0.25));
  }
  // Shift one quadrant outside: area fine, containment fails.
  q.back() = Similitude::Translation({2, 0}).Compose(Similitude::Scaling(0.5, {0, 1}));
  CHECK(CodeOf([&] { ValidatePair("out", sq, q); }) == ErrorCode::kSubdivisionFailure);
  CHECK(CodeOf([&] { ValidatePair("one", sq, {Similitude::Scaling(0.5, {0, 0})}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("equilateral non-example") {
  auto c = EquilateralNonExample();
  CHECK(c.maps.size() == 6);
  auto rep = Inspect(c.polygon, c.maps);
  // The geometry is a valid dissection; only the ratios fail.
  CHECK(rep.area_defect < 1e-12);
  CHECK(rep.max_overlap < 1e-12);
  CHECK(rep.contained);
  try {
    ValidatePair(c.name, c.polygon, c.maps);
    FAIL("expected ExponentFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kExponentFailure);
    CHECK(e.cause() == ErrorCode::kNoCommonBase);
  }
}

TEST_CASE("every catalog entry validates") {
  for (const auto& entry : CatalogEntries()) {
    CAPTURE(entry.example);
    auto p = Catalog(entry.example);
    ValidationReport rep;
    CHECK_NOTHROW(ValidatePair(p.name, p.polygon, p.maps, {}, &rep));
    CHECK(rep.passed);
    CHECK(std::abs(ScaleResidual(p.exponents, p.scale)) < 1e-12);
    for (int n = 0; n < p.N(); ++n) {
      CHECK(p.maps[n].ratio() == doctest::Approx(std::pow(p.scale, p.exponents[n])).epsilon(1e-9));
    }
  }
}

TEST_CASE("catalog families") {
  auto rt = Catalog("right-triangle(2,1)");
  CHECK(rt.N() == 2);
  CHECK(rt.scale * rt.scale == doctest::Approx(1.0 / oracle::Tau()).epsilon(1e-12));
  // Legs s^2 and s with hypotenuse 1.
  std::vector<double> sides;
  const auto& v = rt.polygon.vertices();
  for (std::size_t i = 0; i < 3; ++i) sides.push_back(Distance(v[i], v[(i + 1) % 3]));
  std::sort(sides.begin(), sides.end());
  CHECK(sides[0] == doctest::Approx(rt.scale * rt.scale).epsilon(1e-12));
  CHECK(sides[1] == doctest::Approx(rt.scale).epsilon(1e-12));
  CHECK(sides[2] == doctest::Approx(1.0).epsilon(1e-12));

  auto tz = Catalog("trapezoid(3,1)");
  CHECK(tz.N() == 4);
  CHECK(tz.exponents == std::vector<int>{3, 2, 2, 1});

  auto c = Catalog("sporadic-C");
  REQUIRE(c.N() == 3);
  CHECK(c.maps[0].ratio() == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
  CHECK(c.maps[1].ratio() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.maps[2].ratio() == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(Catalog("trapezoid", {5, 3}).exponents.size() == 4);
  CHECK(Catalog("right-triangle", {5, 2}).N() == 2);
  CHECK(Catalog("sporadic-B").polygon.Area() == doctest::Approx(Catalog("golden-bee").polygon.Area()));

  CHECK(CodeOf([] { Catalog("nonesuch"); }) == ErrorCode::kUnknownName);
  CHECK(CodeOf([] { Catalog("trapezoid(3,2)"); }) == ErrorCode::kBadParams);
  CHECK(CodeOf([] { Catalog("trapezoid(1,3)"); }) == ErrorCode::kBadParams);
  CHECK(CodeOf([] { Catalog("trapezoid(3)"); }) == ErrorCode::kBadParams);
  CHECK(CodeOf([] { Catalog("right-triangle(1,1)"); }) == ErrorCode::kBadParams);
  CHECK(CodeOf([] { Catalog("right-triangle(25,1)"); }) == ErrorCode::kBadParams);
}

TEST_CASE("parameter families validate across the allowed range") {
  for (int a = 2; a <= 24; a += 3) {
    for (int b = 1; b < a; b += 4) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK_NOTHROW(Catalog("right-triangle", {a, b}));
      if ((a - b) % 2 == 0) CHECK_NOTHROW(Catalog("trapezoid", {a, b}));
    }
  }
}

TEST_CASE("catalog listing") {
  auto entries = CatalogEntries();
  bool saw_a = false, saw_trap = false;
  for (const auto& e : entries) {
    if (e.name == "sporadic-A") saw_a = e.reconstructed;
    if (e.name == "trapezoid(a,b)") saw_trap = e.params.find("mod 2") != std::string::npos;
  }
  CHECK(saw_a);
  CHECK(saw_trap);
}

TEST_CASE("reducibility") {
  auto rr = Catalog("rect-reducible");
  auto w = CheckReducible(rr);
  REQUIRE(w);
  CHECK(w->subset == std::vector<int>{3, 4, 5});
  CHECK(w->motion.ratio() < 1);
  // The witness tiles glue into a copy of p placed by the motion.
  std::vector<Polygon> parts;
  for (int i : w->subset) parts.push_back(rr.maps[i - 1].Apply(rr.polygon));
  auto glued = GluePolygons(parts, 1e-9);
  REQUIRE(glued);
  CHECK(SameShape(*glued, w->motion.Apply(rr.polygon), 1e-9));

  CHECK_FALSE(CheckReducible(Catalog("golden-bee")));
  CHECK_FALSE(CheckReducible(Catalog("trapezoid(3,1)")));
  for (const char* n : {"sporadic-A", "sporadic-C", "sporadic-D", "right-triangle(3,1)"}) {
    CAPTURE(n);
    CHECK_FALSE(CheckReducible(Catalog(n)));
  }
}

TEST_CASE("expand makes a pair reducible") {
  for (const char* n : {"golden-bee", "trapezoid(3,1)", "right-triangle(2,1)", "sporadic-C"}) {
    auto p = Catalog(n);
    for (int i = 1; i <= std::min(p.N(), 2); ++i) {
      CAPTURE(n);
      CAPTURE(i);
      auto e = Expand(p, i);
      CHECK(e.N() == 2 * p.N() - 1);
      CHECK(CheckReducible(e));
    }
  }
  CHECK(CodeOf([] { Expand(Catalog("golden-bee"), 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("glue polygons") {
  auto a = Polygon::Make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto b = Polygon::Make({{1, 0}, {2, 0}, {2, 0.5}, {1, 0.5}});
  auto c = Polygon::Make({{1, 0.5}, {2, 0.5}, {2, 1}, {1, 1}});
  auto g = GluePolygons({a, b, c}, 1e-9);
  REQUIRE(g);
  CHECK(g->size() == 4);
  CHECK(g->Area() == doctest::Approx(2.0));
  // Disconnected pieces do not glue.
  CHECK_FALSE(GluePolygons({a, Polygon::Make({{3, 0}, {4, 0}, {4, 1}, {3, 1}})}, 1e-9));
}

TEST_CASE("pair json round trip") {
  for (const char* n : {"golden-bee", "trapezoid(5,3)", "sporadic-D"}) {
    auto p = Catalog(n);
    auto j = PairToJson(p);
    auto q = PairFromJson(j);
    CHECK(q.name == p.name);
    CHECK(q.exponents == p.exponents);
    CHECK(PairToJson(q).dump() == j.dump());
  }
  auto c = EquilateralNonExample();
  auto cj = CandidateToJson(c);
  CHECK(CandidateFromJson(cj).maps.size() == 6);
  CHECK(CodeOf([] { PairFromJson(nlohmann::json::parse(R"({"name":"x"})")); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { CandidateFromJson(nlohmann::json::parse(R"({"vertices":[[0,0],[1,0]],"maps":[]})")); }) != ErrorCode::kInvalidArgument);
}

}  // TEST_SUITE
