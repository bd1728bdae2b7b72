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
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "selfsim/addresses.hpp"
#include "selfsim/error.hpp"
#include "selfsim/pairs.hpp"

using namespace selfsim;

namespace {

Address A(std::initializer_list<int> v) {
  Address a;
  for (int x : v) a.push_back(static_cast<std::uint8_t>(x));
  return a;
}

bool IsPrefix(const Address& a, const Address& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

const double kS = 1.0 / std::sqrt(oracle::Tau());

}  // namespace

TEST_SUITE("addresses") {

TEST_CASE("weight") {
  auto gb = Catalog("golden-bee");
  auto w = WeightOf(A({1, 2, 1}), gb);
  CHECK(w.e == 4);
  CHECK(w.e_minus == 3);
  CHECK(WeightOf({}, gb).e == 0);
  CHECK(WeightOf({}, gb).e_minus == 0);
  CHECK(WeightOf(A({2}), gb).e == 2);
  CHECK(WeightOf(A({2}), gb).e_minus == 0);
  CHECK_THROWS_AS(WeightOf(A({3}), gb), Error);
}

TEST_CASE("address strings") {
  CHECK(AddressToString(A({1, 2, 1}), 2) == "121");
  CHECK(AddressFromString("121", 2) == A({1, 2, 1}));
  CHECK(AddressToString(A({10, 2}), 11) == "10.2");
  CHECK(AddressFromString("10.2", 11) == A({10, 2}));
  CHECK_THROWS_AS(AddressFromString("13", 2), Error);
}

TEST_CASE("frontier small cases") {
  auto gb = Catalog("golden-bee");
  CHECK(Frontier(gb, 1) == std::vector<Address>{A({1}), A({2})});
  CHECK(Frontier(gb, 2) == std::vector<Address>{A({1, 1}), A({1, 2}), A({2})});
  CHECK(Frontier(gb, 4).size() == 8);
  CHECK(Frontier(gb, 0) == std::vector<Address>{Address{}});
}

TEST_CASE("frontier matches brute force enumeration") {
  for (const char* n : {"golden-bee", "trapezoid(3,1)", "sporadic-C", "right-triangle(3,1)",
                        "rect-reducible", "square-4"}) {
    auto p = Catalog(n);
    for (int k = 1; k <= 6; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto brute = oracle::BruteFrontier(p.exponents, k);
      auto got = Frontier(p, k);
      CHECK(got == brute);
      CHECK(FrontierSize(p, k) == brute.size());
    }
  }
}

TEST_CASE("fibonacci frontier sizes") {
  auto gb = Catalog("golden-bee");
  auto fib = oracle::FibonacciFrontierSizes(30);
  for (int n = 1; n <= 30; ++n) CHECK(FrontierSize(gb, n) == static_cast<std::size_t>(fib[n]));
  for (int n = 1; n <= 16; ++n) CHECK(Frontier(gb, n).size() == static_cast<std::size_t>(fib[n]));
}

TEST_CASE("frontier is a prefix-free partition") {
  for (const char* n : {"golden-bee", "trapezoid(3,1)", "sporadic-A", "sporadic-D"}) {
    auto p = Catalog(n);
    for (int k = 1; k <= 7; ++k) {
      auto f = Frontier(p, k);
      CAPTURE(n);
      CAPTURE(k);
      double sum = 0;
      for (const auto& s : f) sum += std::pow(p.scale, 2.0 * WeightOf(s, p).e);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        CHECK_FALSE(IsPrefix(f[i], f[i + 1]));
      }
      for (const auto& s : f) {
        auto w = WeightOf(s, p);
        CHECK(w.e >= k);
        CHECK(w.e_minus < k);
      }
    }
  }
}

TEST_CASE("frontier cap") {
  auto gb = Catalog("golden-bee");
  try {
    Frontier(gb, 30, 1000);
    FAIL("expected LevelTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLevelTooLarge);
  }
  // Saturating count instead of overflow.
  CHECK(FrontierSize(gb, 200) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("walk frontier agrees with frontier") {
  auto tz = Catalog("trapezoid(3,1)");
  std::vector<Address> seen;
  FrontierVisitor v;
  v.emit = [&](const Address& a, const Similitude& f) {
    seen.push_back(a);
    CHECK(f.ratio() == doctest::Approx(std::pow(tz.scale, WeightOf(a, tz).e)).epsilon(1e-12));
  };
  WalkFrontier(tz, 7, Similitude(), v);
  CHECK(seen == Frontier(tz, 7));
}

TEST_CASE("map of") {
  auto gb = Catalog("golden-bee");
  CHECK(MapOf({}, gb).ApproxEqual(Similitude(), 0));
  CHECK(MapOf(A({1, 2}), gb).ratio() == doctest::Approx(std::pow(kS, 3)).epsilon(1e-14));
  CHECK(MapOf(A({1, 2}), gb).ratio() == doctest::Approx(0.4859).epsilon(1e-4));
  CHECK(MapOf(A({1, 2}), gb).ApproxEqual(gb.maps[0].Compose(gb.maps[1]), 1e-15));
  auto sq = Catalog("square-4");
  CHECK(MapOf(A({1, 1}), sq).ratio() == doctest::Approx(0.25));
  for (const char* n : {"trapezoid(3,1)", "sporadic-D"}) {
    auto p = Catalog(n);
    for (const auto& s : Frontier(p, 6)) {
      CHECK(MapOf(s, p).ratio() == doctest::Approx(std::pow(p.scale, WeightOf(s, p).e)).epsilon(1e-12));
    }
  }
}

TEST_CASE("stream prefixes") {
  auto p = ThetaStream::Parse("periodic:12", 2);
  CHECK(p.Prefix(5) == A({1, 2, 1, 2, 1}));
  auto c = ThetaStream::Parse("champernowne", 2);
  CHECK(c.Prefix(10) == A({1, 2, 1, 1, 1, 2, 2, 1, 2, 2}));
  for (int N : {2, 3, 4, 5}) {
    auto cs = ThetaStream::Champernowne(N);
    auto naive = oracle::NaiveChampernowne(N, 2000);
    auto got = cs.Prefix(2000);
    REQUIRE(got.size() == naive.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == naive[i]);
    // Random access agrees with the prefix.
    CHECK(cs.Symbol(1999) == naive[1999]);
  }
  auto e = ThetaStream::Parse("evp:2|11", 2);
  CHECK(e.Prefix(4) == A({2, 1, 1, 1}));
  auto x = ThetaStream::Parse("explicit:1211", 2);
  CHECK(x.Prefix(4) == A({1, 2, 1, 1}));
  try {
    x.Prefix(5);
    FAIL("expected PrefixExhausted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kPrefixExhausted);
  }
}

TEST_CASE("random streams") {
  auto a = ThetaStream::Parse("random:seed=7,p=0.5", 2);
  auto b = ThetaStream::Parse("random:seed=7,p=0.5", 2);
  auto c = ThetaStream::Parse("random:seed=8,p=0.5", 2);
  CHECK(a.Prefix(500) == b.Prefix(500));
  CHECK(a.Prefix(500) != c.Prefix(500));
  CHECK(a.Symbol(321) == a.Prefix(400)[321]);
  auto w = ThetaStream::Parse("random:seed=1,w=0.9/0.1", 2);
  auto pre = w.Prefix(20000);
  double ones = std::count(pre.begin(), pre.end(), 1) / 20000.0;
  CHECK(ones == doctest::Approx(0.9).epsilon(0.02));
}

TEST_CASE("stream parse errors") {
  for (const char* bad : {"", "periodic:", "periodic:13", "evp:2", "evp:|", "random:seed=x",
                          "random:seed=1,w=0.5", "bogus:1", "explicit:"}) {
    CAPTURE(bad);
    try {
      ThetaStream::Parse(bad, 2);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParse);
    }
  }
  CHECK(ThetaStream::Parse("evp:2|11", 2).Spec() == "evp:2|11");
}

TEST_CASE("inverse prefix") {
  auto gb = Catalog("golden-bee");
  auto one = ThetaStream::Parse("periodic:1", 2);
  CHECK(InversePrefix(one, 0, gb).ApproxEqual(Similitude(), 0));
  CHECK(InversePrefix(one, 1, gb).ApproxEqual(gb.maps[0].Inverse(), 1e-15));
  CHECK(InversePrefix(one, 1, gb).ratio() == doctest::Approx(1.2720).epsilon(1e-4));
  auto t21 = ThetaStream::Parse("periodic:21", 2);
  CHECK(InversePrefix(t21, 2, gb).ratio() == doctest::Approx(std::pow(kS, -3)).epsilon(1e-14));
  CHECK(InversePrefix(t21, 2, gb).ratio() == doctest::Approx(2.0582).epsilon(1e-4));
  CHECK(PrefixWeight(t21, 2, gb) == 3);
  // Inverses are applied in stream order: f_{t1}^-1 o ... o f_{tk}^-1.
  auto pre = t21.Prefix(6);
  std::reverse(pre.begin(), pre.end());
  auto m = InversePrefix(t21, 6, gb).Compose(MapOf(pre, gb));
  CHECK(m.ApproxEqual(Similitude(), 1e-12));
}

}  // TEST_SUITE
