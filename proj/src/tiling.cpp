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

#include "selfsim/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "selfsim/parallel.hpp"

namespace selfsim {

namespace {

// Uniform grid over tile centroids.
class TileIndex {
 public:
  explicit TileIndex(const std::vector<Tile>& tiles) : tiles_(tiles) {
    double cell = 0.0;
    for (const auto& t : tiles) cell = std::max(cell, t.shape.Bounds().Diameter());
    cell_ = cell > 0.0 ? cell : 1.0;
    centroids_.reserve(tiles.size());
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      Point c = tiles[i].shape.Centroid();
      centroids_.push_back(c);
      grid_[Key(Cell(c.x), Cell(c.y))].push_back(static_cast<int>(i));
    }
  }

  const Point& centroid(int i) const { return centroids_[i]; }

  // Tiles whose centroid lies in a cell next to that of c.
  template <typename Fn>
  void ForNear(Point c, Fn&& fn) const {
    std::int64_t cx = Cell(c.x), cy = Cell(c.y);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        auto it = grid_.find(Key(cx + dx, cy + dy));
        if (it == grid_.end()) continue;
        for (int i : it->second) {
          if (fn(i)) return;
        }
      }
    }
  }

  // Tiles whose centroid lies in a cell meeting the box.
  template <typename Fn>
  void ForBox(const BoundingBox& b, Fn&& fn) const {
    std::int64_t x0 = Cell(b.min_x), x1 = Cell(b.max_x);
    std::int64_t y0 = Cell(b.min_y), y1 = Cell(b.max_y);
    if ((x1 - x0 + 1) * (y1 - y0 + 1) > static_cast<std::int64_t>(grid_.size())) {
      for (const auto& [key, list] : grid_) {
        for (int i : list) fn(i);
      }
      return;
    }
    for (std::int64_t x = x0; x <= x1; ++x) {
      for (std::int64_t y = y0; y <= y1; ++y) {
        auto it = grid_.find(Key(x, y));
        if (it == grid_.end()) continue;
        for (int i : it->second) fn(i);
      }
    }
  }

  // Index of a tile with the same vertex cycle as p, or -1.
  int FindShape(const Polygon& p, double tol) const {
    int found = -1;
    ForNear(p.Centroid(), [&](int i) {
      if (SameShape(p, tiles_[i].shape, tol)) {
        found = i;
        return true;
      }
      return false;
    });
    return found;
  }

 private:
  std::int64_t Cell(double v) const {
    return static_cast<std::int64_t>(std::floor(v / cell_));
  }
  static std::uint64_t Key(std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(x) << 32) ^
           (static_cast<std::uint64_t>(y) & 0xffffffffULL);
  }

  const std::vector<Tile>& tiles_;
  double cell_ = 1.0;
  std::vector<Point> centroids_;
  std::unordered_map<std::uint64_t, std::vector<int>> grid_;
};

double ShapeTolerance(const Polygon& p) {
  BoundingBox b = p.Bounds();
  double m = std::max({std::abs(b.min_x), std::abs(b.max_x), std::abs(b.min_y),
                       std::abs(b.max_y), 1.0});
  return 1e-9 * m;
}

// Patch tiles whose supporting subtree passes `keep`.
std::vector<Tile> CollectTiles(
    const GeneratingPair& pair, const ThetaStream& theta, int k,
    const std::function<bool(const Polygon&)>& keep, std::size_t cap) {
  const int n = PrefixWeight(theta, k, pair);
  std::vector<Tile> out;
  FrontierVisitor v;
  if (keep) {
    v.keep = [&](const Address&, const Similitude& m) {
      return keep(m.Apply(pair.polygon));
    };
  }
  v.emit = [&](const Address& sigma, const Similitude& m) {
    Tile t;
    t.placement = m;
    t.shape = m.Apply(pair.polygon);
    t.address = sigma;
    t.level = k;
    t.tile_class = WeightOf(sigma, pair).e - n;
    out.push_back(std::move(t));
  };
  WalkFrontier(pair, n, InversePrefix(theta, k, pair), v, cap);
  return out;
}

bool RegionInside(const Polygon& region, const Polygon& support) {
  const double a = region.Area();
  if (support.Area() < a * (1.0 - 1e-9)) return false;
  if (!support.Bounds().Intersects(region.Bounds())) return false;
  return IntersectionArea(region, support) >= a * (1.0 - 1e-9);
}

}  // namespace

Tile MakeTile(const GeneratingPair& pair, const ThetaStream& theta, int k,
              const Address& sigma) {
  const int n = PrefixWeight(theta, k, pair);
  Weight w = WeightOf(sigma, pair);
  bool on = n <= 0 ? sigma.empty() : (!sigma.empty() && w.e >= n && n > w.e_minus);
  if (!on) {
    throw Error(ErrorCode::kAddressNotOnFrontier,
                AddressToString(sigma, pair.N()) + " is not in S_" +
                    std::to_string(n));
  }
  Tile t;
  t.placement = InversePrefix(theta, k, pair).Compose(MapOf(sigma, pair));
  t.shape = t.placement.Apply(pair.polygon);
  t.address = sigma;
  t.level = k;
  t.tile_class = w.e - n;
  return t;
}

Patch MakePatch(const GeneratingPair& pair, const ThetaStream& theta, int k,
                std::size_t cap) {
  Patch p;
  p.theta = theta;
  p.level = k;
  p.tiles = CollectTiles(pair, theta, k, nullptr, cap);
  return p;
}

bool TilesNested(const std::vector<Tile>& coarse, const std::vector<Tile>& fine) {
  TileIndex index(fine);
  for (const auto& t : coarse) {
    bool hit = false;
    index.ForNear(t.shape.Centroid(), [&](int i) {
      hit = t.placement.ApproxEqual(fine[i].placement, 1e-9);
      return hit;
    });
    if (!hit) return false;
  }
  return true;
}

bool CheckNested(const GeneratingPair& pair, const ThetaStream& theta, int k) {
  Patch a = MakePatch(pair, theta, k);
  Patch b = MakePatch(pair, theta, k + 1);
  return TilesNested(a.tiles, b.tiles);
}

Polygon PatchSupport(const GeneratingPair& pair, const ThetaStream& theta,
                     int k) {
  return InversePrefix(theta, k, pair).Apply(pair.polygon);
}

bool DiskInside(const Polygon& p, const Window& w, double eps) {
  return Contains(p, w.center) == Location::kInside &&
         BoundaryDistance(p, w.center) >= w.radius - eps;
}

bool DiskMeets(const Polygon& p, const Window& w) {
  BoundingBox b = p.Bounds();
  BoundingBox d{w.center.x - w.radius, w.center.y - w.radius,
                w.center.x + w.radius, w.center.y + w.radius};
  if (!b.Intersects(d)) return false;
  return Contains(p, w.center, Tolerance{0.0, 0.0}) == Location::kInside ||
         BoundaryDistance(p, w.center) < w.radius;
}

std::vector<Tile> PatchInWindow(const GeneratingPair& pair,
                                const ThetaStream& theta, int k,
                                const Window& window, std::size_t cap) {
  return CollectTiles(
      pair, theta, k, [&](const Polygon& q) { return DiskMeets(q, window); },
      cap);
}

WindowTiling GenerateWindow(const GeneratingPair& pair,
                            const ThetaStream& theta, const Window& window,
                            const Limits& limits) {
  WindowTiling wt;
  wt.window = window;
  wt.level = limits.max_depth;
  Similitude inv = InversePrefix(theta, limits.min_depth - 1, pair);
  for (int k = limits.min_depth; k <= limits.max_depth; ++k) {
    inv = inv.Compose(pair.maps.at(theta.Symbol(k - 1) - 1).Inverse());
    if (DiskInside(inv.Apply(pair.polygon), window)) {
      wt.level = k;
      wt.covered = true;
      break;
    }
  }
  wt.tiles = PatchInWindow(pair, theta, wt.level, window, limits.max_tiles);
  return wt;
}

std::vector<Prototile> Prototiles(const std::vector<Tile>& tiles,
                                  const Tolerance& tol) {
  std::vector<Prototile> reps;
  std::vector<double> areas;
  for (const auto& t : tiles) {
    const double a = t.shape.Area();
    bool matched = false;
    for (std::size_t r = 0; r < reps.size() && !matched; ++r) {
      if (std::abs(a - areas[r]) > 1e-6 * a) continue;
      if (Congruent(reps[r].shape, t.shape, tol)) {
        ++reps[r].count;
        matched = true;
      }
    }
    if (!matched) {
      reps.push_back({t.shape, t.tile_class, 1});
      areas.push_back(a);
    }
  }
  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return areas[x] > areas[y]; });
  std::vector<Prototile> out;
  for (auto i : order) out.push_back(reps[i]);
  return out;
}

bool CheckSelfSimilarityMap(const GeneratingPair& pair,
                            const ThetaStream& theta, const Similitude& phi,
                            int depth, const Limits& limits) {
  Patch coarse = MakePatch(pair, theta, depth);
  const Polygon region = phi.Apply(PatchSupport(pair, theta, depth));
  int level = -1;
  Similitude inv = InversePrefix(theta, depth, pair);
  for (int k = depth + 1; k <= limits.max_depth; ++k) {
    inv = inv.Compose(pair.maps.at(theta.Symbol(k - 1) - 1).Inverse());
    if (RegionInside(region, inv.Apply(pair.polygon))) {
      level = k;
      break;
    }
  }
  if (level < 0) {
    throw Error(ErrorCode::kDepthTooShallow,
                "no patch up to level " + std::to_string(limits.max_depth) +
                    " contains the image of level " + std::to_string(depth));
  }
  const BoundingBox rb = region.Bounds();
  std::vector<Tile> fine = CollectTiles(
      pair, theta, level,
      [&](const Polygon& q) { return q.Bounds().Intersects(rb); },
      limits.max_tiles);
  TileIndex index(fine);
  std::vector<char> ok(coarse.tiles.size(), 0);
  ParallelFor(coarse.tiles.size(), [&](std::size_t i) {
    const Polygon image = phi.Apply(coarse.tiles[i].shape);
    const double area = image.Area();
    double sum = 0.0;
    bool good = true;
    index.ForBox(image.Bounds(), [&](int j) {
      if (!good) return;
      if (Contains(image, index.centroid(j)) == Location::kOutside) return;
      const double aj = fine[j].shape.Area();
      if (IntersectionArea(fine[j].shape, image) < aj * (1.0 - 1e-9)) {
        good = false;
        return;
      }
      sum += aj;
    });
    ok[i] = good && std::abs(sum - area) <= 1e-9 * area;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool CheckSelfSimilar(const GeneratingPair& pair, const Address& alpha,
                      int depth, const ThetaStream& theta,
                      const Limits& limits) {
  if (alpha.empty()) throw Error(ErrorCode::kInvalidArgument, "alpha is empty");
  Similitude phi = InversePrefix(ThetaStream::Periodic(alpha),
                                 static_cast<int>(alpha.size()), pair);
  return CheckSelfSimilarityMap(pair, theta, phi, depth, limits);
}

bool CheckSelfSimilar(const GeneratingPair& pair, const Address& alpha,
                      int depth, const Limits& limits) {
  if (alpha.empty()) throw Error(ErrorCode::kInvalidArgument, "alpha is empty");
  return CheckSelfSimilar(pair, alpha, depth, ThetaStream::Periodic(alpha),
                          limits);
}

CongruenceMotion FindCongruenceMotion(const GeneratingPair& pair,
                                      const ThetaStream& theta, int K,
                                      const ThetaStream& psi, int L,
                                      int extra) {
  const int e1 = PrefixWeight(theta, K, pair);
  const int e2 = PrefixWeight(psi, L, pair);
  if (e1 != e2) {
    throw Error(ErrorCode::kWeightMismatch,
                "e(theta|K) = " + std::to_string(e1) + " but e(psi|L) = " +
                    std::to_string(e2));
  }
  for (int i = 0; i < extra; ++i) {
    if (theta.Symbol(K + i) != psi.Symbol(L + i)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "streams differ after the chosen prefixes");
    }
  }
  Similitude forward;
  for (int i = 0; i < K; ++i) {
    forward = pair.maps.at(theta.Symbol(i) - 1).Compose(forward);
  }
  CongruenceMotion r;
  r.motion = InversePrefix(psi, L, pair).Compose(forward);
  r.test_depth = K + extra;
  Patch a = MakePatch(pair, theta, K + extra);
  Patch b = MakePatch(pair, psi, L + extra);
  if (a.tiles.size() != b.tiles.size()) return r;
  TileIndex index(b.tiles);
  r.tiles_match = true;
  for (const auto& t : a.tiles) {
    Polygon image = r.motion.Apply(t.shape);
    if (index.FindShape(image, ShapeTolerance(image)) < 0) {
      r.tiles_match = false;
      break;
    }
  }
  return r;
}

bool FillsPlaneCertificate(const GeneratingPair& pair, const Address& /*beta*/,
                           const Address& alpha, const Tolerance& tol) {
  if (alpha.empty()) throw Error(ErrorCode::kInvalidArgument, "alpha is empty");
  Point x = MapOf(alpha, pair).FixedPoint();
  return Contains(pair.polygon, x, tol) == Location::kInside;
}

std::vector<Similitude> QuasiperiodicityProbe(const GeneratingPair& pair,
                                              const ThetaStream& theta, int k,
                                              double radius,
                                              const Limits& limits,
                                              WindowTiling* window) {
  Patch patch = MakePatch(pair, theta, k);
  // Search disk: centered on the first support at level >= k that holds it.
  WindowTiling wt;
  Similitude inv = InversePrefix(theta, k - 1, pair);
  for (int K = std::max(k, limits.min_depth); K <= limits.max_depth; ++K) {
    inv = inv.Compose(pair.maps.at(theta.Symbol(K - 1) - 1).Inverse());
    Polygon support = inv.Apply(pair.polygon);
    Window w{support.Centroid(), radius};
    if (DiskInside(support, w)) {
      wt.window = w;
      wt.level = K;
      wt.covered = true;
      break;
    }
  }
  if (!wt.covered) {
    throw Error(ErrorCode::kWindowNotCovered,
                "no level up to " + std::to_string(limits.max_depth) +
                    " covers a search disk of radius " + std::to_string(radius));
  }
  wt.tiles = PatchInWindow(pair, theta, wt.level, wt.window, limits.max_tiles);
  // Anchor on a tile of the rarest congruence class in the patch.
  auto classes = Prototiles(patch.tiles);
  std::size_t rare = 0;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    if (classes[c].count < classes[rare].count) rare = c;
  }
  const Polygon& anchor_shape = classes[rare].shape;
  const double anchor_area = anchor_shape.Area();

  TileIndex index(wt.tiles);
  std::vector<Similitude> motions = {Similitude()};
  std::vector<std::vector<Similitude>> found(wt.tiles.size());
  ParallelFor(wt.tiles.size(), [&](std::size_t w) {
    const Polygon& target = wt.tiles[w].shape;
    if (std::abs(target.Area() - anchor_area) > 1e-6 * anchor_area) return;
    for (const auto& g : AllSimilarities(anchor_shape, target)) {
      if (std::abs(g.ratio() - 1.0) > 1e-7) continue;
      bool all = true;
      for (const auto& t : patch.tiles) {
        Polygon image = g.Apply(t.shape);
        if (index.FindShape(image, ShapeTolerance(image)) < 0) {
          all = false;
          break;
        }
      }
      if (all) found[w].push_back(g);
    }
  });
  for (const auto& list : found) {
    for (const auto& g : list) {
      bool dup = false;
      for (const auto& h : motions) dup = dup || g.ApproxEqual(h, 1e-7);
      if (!dup) motions.push_back(g);
    }
  }
  if (window) *window = std::move(wt);
  return motions;
}

PartitionReport CheckPartition(const std::vector<Polygon>& polys) {
  PartitionReport r;
  std::vector<BoundingBox> boxes;
  std::vector<std::size_t> order(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    r.area_sum += polys[i].Area();
    boxes.push_back(polys[i].Bounds());
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return boxes[a].min_x < boxes[b].min_x;
  });
  std::vector<double> worst(order.size(), 0.0);
  ParallelFor(order.size(), [&](std::size_t oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const std::size_t j = order[oj];
      if (boxes[j].min_x > boxes[i].max_x) break;
      if (!boxes[i].Intersects(boxes[j])) continue;
      worst[oi] = std::max(worst[oi], IntersectionArea(polys[i], polys[j]));
    }
  });
  for (double w : worst) r.max_overlap = std::max(r.max_overlap, w);
  return r;
}

PartitionReport CheckPartition(const std::vector<Tile>& tiles) {
  std::vector<Polygon> polys;
  polys.reserve(tiles.size());
  for (const auto& t : tiles) polys.push_back(t.shape);
  return CheckPartition(polys);
}

nlohmann::json TilingToJson(const GeneratingPair& pair,
                            const ThetaStream& theta, int level,
                            const std::vector<Tile>& tiles) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : tiles) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Point& v : t.shape.vertices()) verts.push_back({v.x, v.y});
    auto m = t.placement.matrix();
    arr.push_back({{"address", AddressToString(t.address, pair.N())},
                   {"class", t.tile_class},
                   {"matrix", {m[0], m[1], m[2], m[3], m[4], m[5]}},
                   {"vertices", verts}});
  }
  return {{"pair", pair.name},
          {"theta", theta.Spec()},
          {"level", level},
          {"tiles", arr}};
}

}  // namespace selfsim
