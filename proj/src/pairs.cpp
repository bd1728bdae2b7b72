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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

namespace selfsim {

int GeneratingPair::M() const {
  return exponents.empty() ? 0
                           : *std::max_element(exponents.begin(), exponents.end());
}

double SolveScale(const std::vector<int>& exponents) {
  if (exponents.size() < 2) {
    throw Error(ErrorCode::kBadParams, "need at least two exponents");
  }
  for (int a : exponents) {
    if (a < 1) throw Error(ErrorCode::kBadParams, "exponents must be >= 1");
  }
  auto f = [&](double x) {
    double s = -1.0;
    for (int a : exponents) s += std::pow(x, 2 * a);
    return s;
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

ExponentFit NormalizeExponents(const std::vector<int>& exponents, double s) {
  int g = 0;
  for (int a : exponents) g = std::gcd(g, a);
  ExponentFit fit;
  fit.exponents = exponents;
  fit.scale = s;
  if (g > 1) {
    for (int& a : fit.exponents) a /= g;
    fit.scale = std::pow(s, g);
  }
  return fit;
}

ExponentFit InferExponents(const std::vector<double>& ratios, double fit_tol) {
  if (ratios.empty()) throw Error(ErrorCode::kBadParams, "no ratios");
  for (double r : ratios) {
    if (!(r > 0.0 && r < 1.0)) {
      throw Error(ErrorCode::kBadParams, "ratios must lie in (0, 1)");
    }
  }
  const double r_min = *std::min_element(ratios.begin(), ratios.end());
  for (int a_min = 1; a_min <= kMaxExponent; ++a_min) {
    const double log_s = std::log(r_min) / a_min;
    std::vector<int> a(ratios.size());
    bool ok = true;
    for (std::size_t n = 0; n < ratios.size() && ok; ++n) {
      double e = std::log(ratios[n]) / log_s;
      long k = std::lround(e);
      ok = k >= 1 && k <= kMaxExponent;
      a[n] = static_cast<int>(k);
    }
    if (!ok) continue;
    // Least squares base for the candidate exponents.
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < ratios.size(); ++n) {
      num += a[n] * std::log(ratios[n]);
      den += static_cast<double>(a[n]) * a[n];
    }
    const double s = std::exp(num / den);
    double err = 0.0;
    for (std::size_t n = 0; n < ratios.size(); ++n) {
      err = std::max(err, std::abs(ratios[n] - std::pow(s, a[n])));
    }
    if (err > fit_tol) continue;
    ExponentFit fit = NormalizeExponents(a, s);
    fit.fit_error = err;
    return fit;
  }
  throw Error(ErrorCode::kNoCommonBase,
              "ratios are not integer powers of a common base");
}

ValidationReport Inspect(const Polygon& polygon,
                         const std::vector<Similitude>& maps,
                         const Tolerance& tol) {
  ValidationReport rep;
  const double area = polygon.Area();
  std::vector<Polygon> pieces;
  pieces.reserve(maps.size());
  double sum = 0.0;
  for (const auto& f : maps) {
    pieces.push_back(f.Apply(polygon));
    sum += pieces.back().Area();
  }
  rep.area_defect = std::abs(sum - area) / area;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      rep.max_overlap = std::max(
          rep.max_overlap, IntersectionArea(pieces[i], pieces[j]) / area);
    }
    double inside = IntersectionArea(pieces[i], polygon);
    if (pieces[i].Area() - inside > tol.eps_area * area) rep.contained = false;
  }
  rep.passed = rep.area_defect <= tol.eps_area &&
               rep.max_overlap <= tol.eps_area && rep.contained;
  return rep;
}

GeneratingPair ValidatePair(const std::string& name, const Polygon& polygon,
                            const std::vector<Similitude>& maps,
                            const Tolerance& tol, ValidationReport* report) {
  if (maps.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two maps");
  }
  std::vector<double> ratios;
  for (const auto& f : maps) {
    if (!(f.ratio() < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "maps must be contractions");
    }
    ratios.push_back(f.ratio());
  }
  ExponentFit fit;
  try {
    fit = InferExponents(ratios);
  } catch (const Error& e) {
    throw Error(ErrorCode::kExponentFailure, e.code(), e.what());
  }
  ValidationReport rep = Inspect(polygon, maps, tol);
  rep.exponent_fit_error = fit.fit_error;
  if (report) *report = rep;
  if (!rep.passed) {
    throw SubdivisionFailure(rep, "maps do not subdivide the polygon");
  }
  GeneratingPair pair;
  pair.name = name;
  pair.polygon = polygon;
  pair.maps = maps;
  pair.exponents = fit.exponents;
  pair.scale = fit.scale;
  return pair;
}

std::optional<Polygon> GluePolygons(const std::vector<Polygon>& parts,
                                    double eps) {
  std::vector<Point> all;
  for (const auto& p : parts) {
    all.insert(all.end(), p.vertices().begin(), p.vertices().end());
  }
  std::vector<Point> ids;
  auto id_of = [&](Point x) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (Distance(ids[i], x) <= eps) return static_cast<int>(i);
    }
    ids.push_back(x);
    return static_cast<int>(ids.size() - 1);
  };
  std::map<std::pair<int, int>, int> edges;
  auto add_edge = [&](int u, int v) {
    if (u == v) return;
    auto rev = edges.find({v, u});
    if (rev != edges.end()) {
      if (--rev->second == 0) edges.erase(rev);
      return;
    }
    ++edges[{u, v}];
  };
  for (const auto& p : parts) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
      Point a = p[i], b = p[(i + 1) % n];
      Point ab = b - a;
      double len2 = Dot(ab, ab);
      // Split at vertices of other parts lying on this edge.
      std::vector<std::pair<double, Point>> cuts;
      for (const Point& x : all) {
        if (Distance(x, a) <= eps || Distance(x, b) <= eps) continue;
        if (SegmentDistance(x, a, b) > eps) continue;
        cuts.push_back({Dot(x - a, ab) / len2, x});
      }
      std::sort(cuts.begin(), cuts.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      int prev = id_of(a);
      for (const auto& c : cuts) {
        int cur = id_of(c.second);
        add_edge(prev, cur);
        prev = cur;
      }
      add_edge(prev, id_of(b));
    }
  }
  std::map<int, int> next;
  for (const auto& [e, count] : edges) {
    if (count != 1 || next.count(e.first)) return std::nullopt;
    next[e.first] = e.second;
  }
  if (next.size() < 3) return std::nullopt;
  std::vector<Point> cycle;
  int start = next.begin()->first, cur = start;
  do {
    cycle.push_back(ids[cur]);
    auto it = next.find(cur);
    if (it == next.end() || cycle.size() > next.size()) return std::nullopt;
    cur = it->second;
  } while (cur != start);
  if (cycle.size() != next.size()) return std::nullopt;
  if (SignedArea(cycle) <= 0.0) return std::nullopt;
  try {
    return Polygon::Make(std::move(cycle)).WithoutCollinear();
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<Reduction> AllReductions(const GeneratingPair& pair,
                                     const Tolerance& tol) {
  const int n = pair.N();
  std::vector<Polygon> tiles;
  for (const auto& f : pair.maps) tiles.push_back(f.Apply(pair.polygon));
  const double eps =
      tol.eps_len * std::max(1.0, pair.polygon.Bounds().Diameter()) * 100.0;
  std::vector<Reduction> out;
  for (int size = 2; size < n; ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      std::vector<int> subset;
      std::vector<Polygon> parts;
      for (int i = 0; i < n; ++i) {
        if (pick[i]) {
          subset.push_back(i + 1);
          parts.push_back(tiles[i]);
        }
      }
      auto glued = GluePolygons(parts, eps);
      if (!glued) continue;
      if (auto g = Similar(pair.polygon, *glued, tol)) out.push_back({subset, *g});
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::optional<Reduction> CheckReducible(const GeneratingPair& pair,
                                        const Tolerance& tol) {
  auto all = AllReductions(pair, tol);
  if (all.empty()) return std::nullopt;
  return all.front();
}

GeneratingPair Expand(const GeneratingPair& pair, int i) {
  if (i < 1 || i > pair.N()) {
    throw Error(ErrorCode::kInvalidArgument, "map index out of range");
  }
  std::vector<Similitude> maps;
  for (int k = 0; k < pair.N(); ++k) {
    if (k + 1 != i) {
      maps.push_back(pair.maps[k]);
      continue;
    }
    for (const auto& g : pair.maps) maps.push_back(pair.maps[k].Compose(g));
  }
  return ValidatePair(pair.name + "/expand(" + std::to_string(i) + ")",
                      pair.polygon, maps);
}

}  // namespace selfsim
