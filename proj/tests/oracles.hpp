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

// Reference computations used by the tests.  Each one is written without
// calling the code it checks.

#ifndef SELFSIM_TESTS_ORACLES_HPP_
#define SELFSIM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

struct P {
  double x, y;
};

// Winding number test; points on the boundary may land either way.
inline bool InsideWinding(const std::vector<P>& poly, P q) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    P a = poly[i], b = poly[(i + 1) % n];
    double side = (b.x - a.x) * (q.y - a.y) - (q.x - a.x) * (b.y - a.y);
    if (a.y <= q.y) {
      if (b.y > q.y && side > 0) ++wn;
    } else {
      if (b.y <= q.y && side < 0) --wn;
    }
  }
  return wn != 0;
}

// Monte Carlo estimate of area(p ∩ q) sampling the bounding box of p.
inline double MonteCarloIntersection(const std::vector<P>& p,
                                     const std::vector<P>& q, int samples,
                                     std::uint64_t seed) {
  double x0 = p[0].x, x1 = p[0].x, y0 = p[0].y, y1 = p[0].y;
  for (const P& v : p) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    P s{ux(rng), uy(rng)};
    if (InsideWinding(p, s) && InsideWinding(q, s)) ++hits;
  }
  return (x1 - x0) * (y1 - y0) * hits / samples;
}

// Every word of length <= n over {1..N}, filtered by e >= n > e_minus.
inline std::vector<std::vector<std::uint8_t>> BruteFrontier(
    const std::vector<int>& a, int n) {
  std::vector<std::vector<std::uint8_t>> out, layer = {{}};
  for (int len = 1; len <= n; ++len) {
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto& w : layer) {
      for (std::size_t k = 1; k <= a.size(); ++k) {
        auto v = w;
        v.push_back(static_cast<std::uint8_t>(k));
        next.push_back(v);
      }
    }
    for (const auto& w : next) {
      int e = 0, em = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        e += a[w[i] - 1];
        if (i + 1 < w.size()) em += a[w[i] - 1];
      }
      if (e >= n && n > em) out.push_back(w);
    }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// |S_1| = 2, |S_2| = 3, |S_n| = |S_{n-1}| + |S_{n-2}|.
inline std::vector<long> FibonacciFrontierSizes(int n_max) {
  std::vector<long> f = {0, 2, 3};
  for (int n = 3; n <= n_max; ++n) f.push_back(f[n - 1] + f[n - 2]);
  return f;
}

// Concatenation of all words over {1..N} by length, then lexicographically.
inline std::vector<int> NaiveChampernowne(int N, std::size_t k) {
  std::vector<int> out;
  std::vector<std::vector<int>> words = {{}};
  while (out.size() < k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words) {
      for (int c = 1; c <= N; ++c) {
        auto v = w;
        v.push_back(c);
        next.push_back(v);
      }
    }
    for (const auto& w : next) out.insert(out.end(), w.begin(), w.end());
    words = std::move(next);
  }
  out.resize(k);
  return out;
}

// Dominant eigenvector of the subdivision matrix from the row relations
// c_i d_1 + d_{i+1} = s^-2 d_i, solved backwards and normalized.
inline std::vector<double> ClosedFormDensity(const std::vector<int>& c,
                                             double s) {
  const std::size_t M = c.size();
  std::vector<double> d(M);
  for (std::size_t i = 0; i < M; ++i) {
    double v = 0.0;
    for (std::size_t j = i; j < M; ++j) v += c[j] * std::pow(s, 2.0 * (j - i + 1));
    d[i] = v;
  }
  double sum = 0.0;
  for (double x : d) sum += x;
  for (double& x : d) x /= sum;
  return d;
}

// Real root of x^3 + x - 1 by Cardano's formula.
inline double CardanoRoot() {
  double r = std::sqrt(31.0 / 27.0);
  return std::cbrt((1.0 + r) / 2.0) + std::cbrt((1.0 - r) / 2.0);
}

inline double Tau() { return (1.0 + std::sqrt(5.0)) / 2.0; }

}  // namespace oracle

#endif  // SELFSIM_TESTS_ORACLES_HPP_
