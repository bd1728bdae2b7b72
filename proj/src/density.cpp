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

#include "selfsim/density.hpp"

#include <algorithm>
#include <cmath>

namespace selfsim {

SubdivisionMatrix BuildMatrix(const GeneratingPair& pair) {
  SubdivisionMatrix m;
  const int M = pair.M();
  if (M < 1) throw Error(ErrorCode::kInvalidArgument, "pair has no exponents");
  m.c.assign(M, 0);
  for (int a : pair.exponents) ++m.c[a - 1];
  m.C.assign(M, std::vector<double>(M, 0.0));
  for (int i = 0; i < M; ++i) {
    m.C[i][0] = m.c[i];
    if (i + 1 < M) m.C[i][i + 1] = 1.0;
  }
  return m;
}

DensityResult LimitDensities(const SubdivisionMatrix& m, double tol,
                             int max_iterations) {
  const int M = m.M();
  std::vector<double> v(m.c.begin(), m.c.end()), next(M);
  auto normalize = [](std::vector<double>& x) {
    double s = 0.0;
    for (double y : x) s += y;
    for (double& y : x) y /= s;
    return s;
  };
  normalize(v);
  DensityResult r;
  for (int it = 1; it <= max_iterations; ++it) {
    for (int i = 0; i < M; ++i) {
      double s = 0.0;
      for (int j = 0; j < M; ++j) s += m.C[i][j] * v[j];
      next[i] = s;
    }
    r.eigenvalue = normalize(next);
    double change = 0.0;
    for (int i = 0; i < M; ++i) change = std::max(change, std::abs(next[i] - v[i]));
    v.swap(next);
    if (change < tol) {
      r.d = v;
      r.iterations = it;
      return r;
    }
  }
  throw Error(ErrorCode::kNoConvergence,
              "power iteration did not settle in " +
                  std::to_string(max_iterations) + " steps");
}

std::vector<double> EmpiricalDensities(const WindowTiling& tiling, int M,
                                       std::size_t min_tiles) {
  std::vector<double> counts(M, 0.0);
  std::size_t total = 0;
  const double r2 = tiling.window.radius * tiling.window.radius;
  for (const auto& t : tiling.tiles) {
    Point c = t.shape.Centroid() - tiling.window.center;
    if (Dot(c, c) > r2) continue;
    if (t.tile_class < 0 || t.tile_class >= M) {
      throw Error(ErrorCode::kInvalidArgument, "tile class out of range");
    }
    counts[t.tile_class] += 1.0;
    ++total;
  }
  if (total < min_tiles) {
    throw Error(ErrorCode::kTooFewTiles,
                std::to_string(total) + " tiles in the window, need " +
                    std::to_string(min_tiles));
  }
  for (double& x : counts) x /= static_cast<double>(total);
  return counts;
}

}  // namespace selfsim
