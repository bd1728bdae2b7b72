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

#ifndef SELFSIM_DENSITY_HPP_
#define SELFSIM_DENSITY_HPP_

#include <vector>

#include "selfsim/pairs.hpp"
#include "selfsim/tiling.hpp"

namespace selfsim {

// M x M matrix with first column c, ones on the superdiagonal and zeros
// elsewhere; c_i counts the maps with exponent i.
struct SubdivisionMatrix {
  std::vector<int> c;
  std::vector<std::vector<double>> C;
  int M() const { return static_cast<int>(c.size()); }
};

SubdivisionMatrix BuildMatrix(const GeneratingPair& pair);

struct DensityResult {
  std::vector<double> d;  // d[i] for tiles of class i (ratio s^i)
  int iterations = 0;
  double eigenvalue = 0.0;
};

// Normalized power iteration from c.  Throws kNoConvergence.
DensityResult LimitDensities(const SubdivisionMatrix& m, double tol = 1e-13,
                             int max_iterations = 10'000);

// Fraction of tiles per class among tiles whose centroid lies in the window
// disk.  Throws kTooFewTiles below min_tiles.
std::vector<double> EmpiricalDensities(const WindowTiling& tiling, int M,
                                       std::size_t min_tiles = 100);

}  // namespace selfsim

#endif  // SELFSIM_DENSITY_HPP_
