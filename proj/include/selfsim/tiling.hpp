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

#ifndef SELFSIM_TILING_HPP_
#define SELFSIM_TILING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "selfsim/addresses.hpp"
#include "selfsim/geometry.hpp"
#include "selfsim/pairs.hpp"

namespace selfsim {

struct Tile {
  Similitude placement;  // f_{-(theta|k)} o f_sigma
  Polygon shape;         // placement(p)
  Address address;       // sigma
  int level = 0;         // k
  int tile_class = 0;    // e(sigma) - e(theta|k), ratio s^class
};

struct Patch {
  ThetaStream theta;
  int level = 0;
  std::vector<Tile> tiles;  // lexicographic in address
};

struct Window {
  Point center;
  double radius = 0.0;
};

struct WindowTiling {
  Window window;
  int level = 0;         // k used
  bool covered = false;  // the disk lies inside f_{-(theta|k)}(p)
  std::vector<Tile> tiles;
};

struct Limits {
  int min_depth = 1;
  int max_depth = 20;
  std::size_t max_tiles = 1'000'000;
};

// Throws kAddressNotOnFrontier unless sigma is in S_{e(theta|k)}.
Tile MakeTile(const GeneratingPair& pair, const ThetaStream& theta, int k,
              const Address& sigma);

Patch MakePatch(const GeneratingPair& pair, const ThetaStream& theta, int k,
                std::size_t cap = kDefaultFrontierCap);

// Every tile of patch(theta, k) is a tile of patch(theta, k + 1).
bool CheckNested(const GeneratingPair& pair, const ThetaStream& theta, int k);
// Same check on explicit tile lists (used for negative controls).
bool TilesNested(const std::vector<Tile>& coarse, const std::vector<Tile>& fine);

// Support of the level k patch: f_{-(theta|k)}(p).
Polygon PatchSupport(const GeneratingPair& pair, const ThetaStream& theta,
                     int k);

// True when the closed disk lies inside the polygon.
bool DiskInside(const Polygon& p, const Window& w, double eps = 0.0);
// True when the disk and polygon share interior points.
bool DiskMeets(const Polygon& p, const Window& w);

// Tiles of the first level min_depth <= k <= max_depth whose support contains the
// window, restricted to tiles meeting the window.  When no level covers it
// the deepest level is returned with covered = false.
WindowTiling GenerateWindow(const GeneratingPair& pair,
                            const ThetaStream& theta, const Window& window,
                            const Limits& limits = {});

// Tiles of patch(theta, k) meeting the window, without the coverage search.
std::vector<Tile> PatchInWindow(const GeneratingPair& pair,
                                const ThetaStream& theta, int k,
                                const Window& window,
                                std::size_t cap = 1'000'000);

struct Prototile {
  Polygon shape;       // first tile of the class, in input order
  int tile_class = 0;  // class of that tile
  std::size_t count = 0;
};

// Congruence classes of the tiles, largest area first.
std::vector<Prototile> Prototiles(const std::vector<Tile>& tiles,
                                  const Tolerance& tol = {});

// Checks that phi maps each tile of patch(theta, depth) onto a union of
// tiles of a deeper patch of the same stream.  Throws kDepthTooShallow when
// no level up to limits.max_depth contains phi of the patch support.
bool CheckSelfSimilarityMap(const GeneratingPair& pair,
                            const ThetaStream& theta, const Similitude& phi,
                            int depth, const Limits& limits = {});

// T(alpha alpha alpha ...) is self-similar under f_{-alpha}.
bool CheckSelfSimilar(const GeneratingPair& pair, const Address& alpha,
                      int depth, const Limits& limits = {});
// Same map f_{-alpha} tested against patches of another stream.
bool CheckSelfSimilar(const GeneratingPair& pair, const Address& alpha,
                      int depth, const ThetaStream& theta,
                      const Limits& limits = {});

struct CongruenceMotion {
  Similitude motion;
  int test_depth = 0;
  bool tiles_match = false;
};

// g = f_{-(psi|L)} o f_{theta_K} o ... o f_{theta_1}, an isometry taking
// T(theta) onto T(psi).  Requires e(theta|K) = e(psi|L) (kWeightMismatch)
// and theta_{K+i} = psi_{L+i} on the tested range (kInvalidArgument).
// Verification maps patch(theta, K + extra) into patch(psi, L + extra).
CongruenceMotion FindCongruenceMotion(const GeneratingPair& pair,
                                      const ThetaStream& theta, int K,
                                      const ThetaStream& psi, int L,
                                      int extra = 6);

// Fixed point of f_alpha lies strictly inside p, so T(beta alpha alpha ...)
// covers the plane.
bool FillsPlaneCertificate(const GeneratingPair& pair, const Address& beta,
                           const Address& alpha, const Tolerance& tol = {});

// Motions g (ratio 1) with g(patch(theta, k)) among the window tiles.  The
// disk is centered on the centroid of the first support f_{-(theta|K)}(p),
// K >= k, that contains it; the identity always counts.  Throws
// kWindowNotCovered if no level up to limits.max_depth works.
std::vector<Similitude> QuasiperiodicityProbe(const GeneratingPair& pair,
                                              const ThetaStream& theta, int k,
                                              double radius,
                                              const Limits& limits = {},
                                              WindowTiling* window = nullptr);

// Area sum and pairwise overlap of a tile list, against a reference area.
struct PartitionReport {
  double area_sum = 0.0;
  double max_overlap = 0.0;
};
PartitionReport CheckPartition(const std::vector<Tile>& tiles);
PartitionReport CheckPartition(const std::vector<Polygon>& polygons);

// {pair, theta, level, tiles: [{address, class, matrix, vertices}]}
nlohmann::json TilingToJson(const GeneratingPair& pair, const ThetaStream& theta,
                            int level, const std::vector<Tile>& tiles);

}  // namespace selfsim

#endif  // SELFSIM_TILING_HPP_
