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

#include "selfsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>

#include "selfsim/error.hpp"

namespace selfsim {

double Dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double Cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double Norm(Point a) { return std::hypot(a.x, a.y); }
double Distance(Point a, Point b) { return Norm(a - b); }

double SegmentDistance(Point p, Point a, Point b) {
  Point ab = b - a;
  double len2 = Dot(ab, ab);
  if (len2 == 0.0) return Distance(p, a);
  double t = std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
  return Distance(p, a + t * ab);
}

double BoundingBox::Diameter() const {
  return std::hypot(max_x - min_x, max_y - min_y);
}

// ---------------------------------------------------------------------------
// Similitude

namespace {
constexpr int kReorthonormalizeEvery = 32;
}

Similitude::Similitude() : m_{1.0, 0.0, 0.0, 1.0}, t_{0.0, 0.0} {}

Similitude Similitude::FromMatrix(double a, double b, double c, double d,
                                  double tx, double ty) {
  for (double v : {a, b, c, d, tx, ty}) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite map entry");
    }
  }
  double det = a * d - b * c;
  double r2 = std::abs(det);
  if (!(r2 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "singular linear part");
  }
  const double tol = 1e-9 * r2;
  if (std::abs(a * a + c * c - r2) > tol || std::abs(b * b + d * d - r2) > tol ||
      std::abs(a * b + c * d) > tol) {
    throw Error(ErrorCode::kInvalidArgument,
                "linear part is not a multiple of an orthogonal matrix");
  }
  Similitude s;
  s.m_ = {a, b, c, d};
  s.t_ = {tx, ty};
  s.ratio_ = std::sqrt(r2);
  s.direct_ = det > 0.0;
  return s;
}

Similitude Similitude::FromMatrix(const std::array<double, 6>& m) {
  return FromMatrix(m[0], m[1], m[2], m[3], m[4], m[5]);
}

Similitude Similitude::FromPoints(Point p0, Point p1, Point q0, Point q1,
                                  bool direct) {
  using C = std::complex<double>;
  C dp(p1.x - p0.x, p1.y - p0.y);
  C dq(q1.x - q0.x, q1.y - q0.y);
  if (std::abs(dp) == 0.0 || std::abs(dq) == 0.0) {
    throw Error(ErrorCode::kDegenerateInput, "coincident reference points");
  }
  Similitude s;
  if (direct) {
    C alpha = dq / dp;
    C beta = C(q0.x, q0.y) - alpha * C(p0.x, p0.y);
    s.m_ = {alpha.real(), -alpha.imag(), alpha.imag(), alpha.real()};
    s.t_ = {beta.real(), beta.imag()};
    s.ratio_ = std::abs(alpha);
    s.direct_ = true;
  } else {
    C alpha = dq / std::conj(dp);
    C beta = C(q0.x, q0.y) - alpha * std::conj(C(p0.x, p0.y));
    s.m_ = {alpha.real(), alpha.imag(), alpha.imag(), -alpha.real()};
    s.t_ = {beta.real(), beta.imag()};
    s.ratio_ = std::abs(alpha);
    s.direct_ = false;
  }
  return s;
}

Similitude Similitude::Scaling(double r, Point center) {
  return FromMatrix(r, 0.0, 0.0, r, center.x - r * center.x,
                    center.y - r * center.y);
}

Similitude Similitude::Translation(Point t) {
  Similitude s;
  s.t_ = t;
  return s;
}

Polygon Similitude::Apply(const Polygon& p) const {
  std::vector<Point> v;
  v.reserve(p.size());
  for (const Point& x : p.vertices()) v.push_back(Apply(x));
  if (!direct_) std::reverse(v.begin(), v.end());
  return Polygon::Trusted(std::move(v));
}

Similitude Similitude::Compose(const Similitude& g) const {
  Similitude s;
  const auto& a = m_;
  const auto& b = g.m_;
  s.m_ = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  s.t_ = Apply(g.t_);
  s.ratio_ = ratio_ * g.ratio_;
  s.direct_ = direct_ == g.direct_;
  s.compositions_ = compositions_ + g.compositions_ + 1;
  if (s.compositions_ >= kReorthonormalizeEvery) s.Reorthonormalize();
  return s;
}

void Similitude::Reorthonormalize() {
  double c, s;
  if (direct_) {
    c = 0.5 * (m_[0] + m_[3]);
    s = 0.5 * (m_[2] - m_[1]);
  } else {
    c = 0.5 * (m_[0] - m_[3]);
    s = 0.5 * (m_[1] + m_[2]);
  }
  double n = std::hypot(c, s);
  c = ratio_ * c / n;
  s = ratio_ * s / n;
  if (direct_) {
    m_ = {c, -s, s, c};
  } else {
    m_ = {c, s, s, -c};
  }
  compositions_ = 0;
}

Similitude Similitude::Inverse() const {
  Similitude s;
  double k = 1.0 / (ratio_ * ratio_);
  s.m_ = {m_[0] * k, m_[2] * k, m_[1] * k, m_[3] * k};
  s.t_ = {-(s.m_[0] * t_.x + s.m_[1] * t_.y), -(s.m_[2] * t_.x + s.m_[3] * t_.y)};
  s.ratio_ = 1.0 / ratio_;
  s.direct_ = direct_;
  s.compositions_ = compositions_;
  return s;
}

Point Similitude::FixedPoint() const {
  if (std::abs(ratio_ - 1.0) <= 1e-12) {
    throw Error(ErrorCode::kRatioOne, "an isometry has no unique fixed point");
  }
  double a = 1.0 - m_[0], b = -m_[1], c = -m_[2], d = 1.0 - m_[3];
  double det = a * d - b * c;
  return {(t_.x * d - b * t_.y) / det, (a * t_.y - c * t_.x) / det};
}

bool Similitude::ApproxEqual(const Similitude& o, double tol) const {
  if (direct_ != o.direct_) return false;
  double lin_tol = tol * std::max(1.0, ratio_);
  for (int i = 0; i < 4; ++i) {
    if (std::abs(m_[i] - o.m_[i]) > lin_tol) return false;
  }
  double t_tol = tol * (1.0 + Norm(t_));
  return Distance(t_, o.t_) <= t_tol;
}

// ---------------------------------------------------------------------------
// Polygon

double SignedArea(const std::vector<Point>& v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    s += Cross(v[i], v[(i + 1) % n]);
  }
  return 0.5 * s;
}

namespace {

int Orient(Point a, Point b, Point c) {
  double v = Cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

bool OnSegment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool SegmentsIntersect(Point a, Point b, Point c, Point d) {
  int o1 = Orient(a, b, c), o2 = Orient(a, b, d);
  int o3 = Orient(c, d, a), o4 = Orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && OnSegment(a, b, c)) return true;
  if (o2 == 0 && OnSegment(a, b, d)) return true;
  if (o3 == 0 && OnSegment(c, d, a)) return true;
  if (o4 == 0 && OnSegment(c, d, b)) return true;
  return false;
}

}  // namespace

bool IsSimple(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Point a = v[i], b = v[(i + 1) % n];
    if (a == b) return false;
    // Adjacent edges may only share their common endpoint.
    Point c = v[(i + 2) % n];
    if (Orient(a, b, c) == 0 && Dot(b - a, c - b) < 0) return false;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (SegmentsIntersect(a, b, v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

Polygon Polygon::Make(std::vector<Point> vertices) {
  if (vertices.size() < 3) {
    throw Error(ErrorCode::kDegenerateInput, "polygon needs 3 vertices");
  }
  for (const Point& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::kDegenerateInput, "non-finite vertex");
    }
  }
  double a = SignedArea(vertices);
  if (a == 0.0) throw Error(ErrorCode::kDegenerateInput, "zero area polygon");
  if (a < 0.0) std::reverse(vertices.begin(), vertices.end());
  if (!IsSimple(vertices)) {
    throw Error(ErrorCode::kDegenerateInput, "polygon is not simple");
  }
  return Polygon(std::move(vertices));
}

Polygon Polygon::Trusted(std::vector<Point> vertices) {
  return Polygon(std::move(vertices));
}

double Polygon::Area() const { return SignedArea(v_); }

Point Polygon::Centroid() const {
  double cx = 0.0, cy = 0.0, a = 0.0;
  const std::size_t n = v_.size();
  // Shift to the first vertex to limit cancellation far from the origin.
  Point o = v_[0];
  for (std::size_t i = 0; i < n; ++i) {
    Point p = v_[i] - o, q = v_[(i + 1) % n] - o;
    double c = Cross(p, q);
    a += c;
    cx += (p.x + q.x) * c;
    cy += (p.y + q.y) * c;
  }
  return {o.x + cx / (3.0 * a), o.y + cy / (3.0 * a)};
}

BoundingBox Polygon::Bounds() const {
  BoundingBox b{v_[0].x, v_[0].y, v_[0].x, v_[0].y};
  for (const Point& p : v_) {
    b.min_x = std::min(b.min_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_x = std::max(b.max_x, p.x);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

double Polygon::Perimeter() const {
  double s = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    s += Distance(v_[i], v_[(i + 1) % v_.size()]);
  }
  return s;
}

Polygon Polygon::WithoutCollinear(double rel_tol) const {
  std::vector<Point> v = v_;
  bool changed = true;
  while (changed && v.size() > 3) {
    changed = false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      Point a = v[(i + n - 1) % n], b = v[i], c = v[(i + 1) % n];
      Point e1 = b - a, e2 = c - b;
      if (std::abs(Cross(e1, e2)) <= rel_tol * Norm(e1) * Norm(e2) &&
          Dot(e1, e2) > 0) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return Polygon(std::move(v));
}

// ---------------------------------------------------------------------------
// Area of intersection

std::vector<std::array<int, 3>> Triangulate(const Polygon& p) {
  const auto& v = p.vertices();
  std::vector<int> idx(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) idx[i] = static_cast<int>(i);
  std::vector<std::array<int, 3>> out;
  const double scale = p.Bounds().Diameter();
  const double eps = 1e-14 * scale * scale;

  auto inside_or_on = [&](Point x, Point a, Point b, Point c) {
    return Cross(b - a, x - a) >= -eps && Cross(c - b, x - b) >= -eps &&
           Cross(a - c, x - c) >= -eps;
  };

  while (idx.size() > 3) {
    const std::size_t n = idx.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n && !clipped; ++i) {
      int ia = idx[(i + n - 1) % n], ib = idx[i], ic = idx[(i + 1) % n];
      Point a = v[ia], b = v[ib], c = v[ic];
      double turn = Cross(b - a, c - b);
      if (std::abs(turn) <= eps) {
        // Collinear vertex contributes no area.
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
        clipped = true;
        break;
      }
      if (turn < 0) continue;
      bool ear = true;
      for (int j : idx) {
        if (j == ia || j == ib || j == ic) continue;
        Point x = v[j];
        if (x == a || x == b || x == c) continue;
        if (inside_or_on(x, a, b, c)) {
          ear = false;
          break;
        }
      }
      if (ear) {
        out.push_back({ia, ib, ic});
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
        clipped = true;
      }
    }
    if (!clipped) {
      // Numerically awkward input; clip the most convex vertex.
      std::size_t best = 0;
      double best_turn = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        Point a = v[idx[(i + n - 1) % n]], b = v[idx[i]], c = v[idx[(i + 1) % n]];
        double t = Cross(b - a, c - b);
        if (t > best_turn) {
          best_turn = t;
          best = i;
        }
      }
      out.push_back({idx[(best + n - 1) % n], idx[best], idx[(best + 1) % n]});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(best));
    }
  }
  if (idx.size() == 3) {
    Point a = v[idx[0]], b = v[idx[1]], c = v[idx[2]];
    if (Cross(b - a, c - a) > 0) out.push_back({idx[0], idx[1], idx[2]});
  }
  return out;
}

double ConvexIntersectionArea(const std::vector<Point>& a,
                              const std::vector<Point>& b) {
  std::vector<Point> poly = a, next;
  const std::size_t m = b.size();
  for (std::size_t j = 0; j < m && !poly.empty(); ++j) {
    Point e0 = b[j], e1 = b[(j + 1) % m];
    Point dir = e1 - e0;
    next.clear();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      Point cur = poly[i], nxt = poly[(i + 1) % n];
      double dc = Cross(dir, cur - e0);
      double dn = Cross(dir, nxt - e0);
      bool cin = dc >= 0, nin = dn >= 0;
      if (cin) next.push_back(cur);
      if (cin != nin) {
        double t = dc / (dc - dn);
        next.push_back(cur + t * (nxt - cur));
      }
    }
    poly.swap(next);
  }
  if (poly.size() < 3) return 0.0;
  return std::max(0.0, SignedArea(poly));
}

double IntersectionArea(const Polygon& p, const Polygon& q) {
  if (!p.Bounds().Intersects(q.Bounds())) return 0.0;
  auto tp = Triangulate(p);
  auto tq = Triangulate(q);
  double total = 0.0;
  std::vector<Point> ta(3), tb(3);
  for (const auto& x : tp) {
    for (int k = 0; k < 3; ++k) ta[k] = p[x[k]];
    BoundingBox bx = Polygon::Trusted(ta).Bounds();
    for (const auto& y : tq) {
      for (int k = 0; k < 3; ++k) tb[k] = q[y[k]];
      if (!bx.Intersects(Polygon::Trusted(tb).Bounds())) continue;
      total += ConvexIntersectionArea(ta, tb);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Point location

double BoundaryDistance(const Polygon& p, Point x) {
  double d = std::numeric_limits<double>::infinity();
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    d = std::min(d, SegmentDistance(x, p[i], p[(i + 1) % n]));
  }
  return d;
}

Location Contains(const Polygon& p, Point x, const Tolerance& tol) {
  if (BoundaryDistance(p, x) <= tol.eps_len) return Location::kBoundary;
  bool in = false;
  const std::size_t n = p.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    Point a = p[i], b = p[j];
    if ((a.y > x.y) != (b.y > x.y)) {
      double xi = a.x + (x.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x.x < xi) in = !in;
    }
  }
  return in ? Location::kInside : Location::kOutside;
}

// ---------------------------------------------------------------------------
// Congruence

namespace {

double MaxAbsCoordinate(const Polygon& p) {
  double m = 0.0;
  for (const Point& v : p.vertices()) {
    m = std::max({m, std::abs(v.x), std::abs(v.y)});
  }
  return m;
}

}  // namespace

std::vector<Similitude> AllSimilarities(const Polygon& p0, const Polygon& q0,
                                        const Tolerance& tol) {
  std::vector<Similitude> out;
  Polygon p = p0.WithoutCollinear();
  Polygon q = q0.WithoutCollinear();
  const std::size_t n = p.size();
  if (n != q.size()) return out;
  double k2 = q.Area() / p.Area();
  double k = q.Perimeter() / p.Perimeter();
  if (std::abs(k * k - k2) > 1e-6 * k2) return out;
  const double thr = tol.eps_len * std::max(1.0, MaxAbsCoordinate(q)) +
                     1e-9 * q.Perimeter();
  for (int dir = 0; dir < 2; ++dir) {
    const bool direct = dir == 0;
    for (std::size_t j = 0; j < n; ++j) {
      auto target = [&](std::size_t i) {
        return direct ? q[(j + i) % n] : q[(j + n - (i % n)) % n];
      };
      if (std::abs(Distance(p[0], p[1]) * k - Distance(target(0), target(1))) >
          1e-6 * k * Distance(p[0], p[1])) {
        continue;
      }
      Similitude g = Similitude::FromPoints(p[0], p[1], target(0), target(1),
                                            direct);
      bool ok = true;
      for (std::size_t i = 2; i < n && ok; ++i) {
        ok = Distance(g.Apply(p[i]), target(i)) <= thr;
      }
      if (ok) out.push_back(g);
    }
  }
  return out;
}

std::optional<Similitude> Similar(const Polygon& p, const Polygon& q,
                                  const Tolerance& tol) {
  auto all = AllSimilarities(p, q, tol);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<Similitude> Congruent(const Polygon& p, const Polygon& q,
                                    const Tolerance& tol) {
  auto g = Similar(p, q, tol);
  if (!g || std::abs(g->ratio() - 1.0) > 1e-7) return std::nullopt;
  return g;
}

bool SameShape(const Polygon& p, const Polygon& q, double tol) {
  const std::size_t n = p.size();
  if (n != q.size()) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (Distance(p[0], q[j]) > tol) continue;
    bool ok = true;
    for (std::size_t i = 1; i < n && ok; ++i) {
      ok = Distance(p[i], q[(i + j) % n]) <= tol;
    }
    if (ok) return true;
  }
  return false;
}

std::string CanonicalKey(const Polygon& p0, int digits) {
  Polygon p = p0.WithoutCollinear();
  const std::size_t n = p.size();
  std::vector<double> len(n), turn(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point a = p[(i + n - 1) % n], b = p[i], c = p[(i + 1) % n];
    len[i] = Distance(b, c);
    turn[i] = std::atan2(Cross(b - a, c - b), Dot(b - a, c - b));
  }
  auto fmt = [digits](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return std::string(buf);
  };
  std::vector<std::string> fwd(n), rev(n);
  for (std::size_t i = 0; i < n; ++i) {
    fwd[i] = fmt(turn[i]) + "/" + fmt(len[i]);
    // Mirror image traversed counterclockwise: vertex i followed by i-1.
    rev[i] = fmt(turn[i]) + "/" + fmt(len[(i + n - 1) % n]);
  }
  std::vector<std::string> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::string> seq(n);
      for (std::size_t i = 0; i < n; ++i) {
        seq[i] = dir == 0 ? fwd[(s + i) % n] : rev[(s + n - i) % n];
      }
      if (best.empty() || seq < best) best = seq;
    }
  }
  std::string key;
  for (const auto& s : best) key += s + ";";
  return key;
}

}  // namespace selfsim
