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

#ifndef SELFSIM_GEOMETRY_HPP_
#define SELFSIM_GEOMETRY_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace selfsim {

struct Tolerance {
  double eps_len = 1e-9;
  double eps_area = 1e-9;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

double Dot(Point a, Point b);
double Cross(Point a, Point b);
double Norm(Point a);
double Distance(Point a, Point b);
// Distance from p to the closed segment [a, b].
double SegmentDistance(Point p, Point a, Point b);

struct BoundingBox {
  double min_x, min_y, max_x, max_y;

  bool Intersects(const BoundingBox& o, double pad = 0.0) const {
    return min_x <= o.max_x + pad && o.min_x <= max_x + pad &&
           min_y <= o.max_y + pad && o.min_y <= max_y + pad;
  }
  double Diameter() const;
};

class Polygon;

// x -> r U x + t with U orthogonal and r > 0.  The linear part is stored
// row-major as [[a, b], [c, d]].
class Similitude {
 public:
  Similitude();  // identity

  // Throws kInvalidArgument unless the linear part is a nonzero multiple of
  // an orthogonal matrix.  Entries are stored verbatim.
  static Similitude FromMatrix(double a, double b, double c, double d,
                               double tx, double ty);
  static Similitude FromMatrix(const std::array<double, 6>& m);

  // Direct (orientation preserving) or indirect map sending p0 -> q0 and
  // p1 -> q1.
  static Similitude FromPoints(Point p0, Point p1, Point q0, Point q1,
                               bool direct);

  static Similitude Scaling(double r, Point center);
  static Similitude Translation(Point t);

  double ratio() const { return ratio_; }
  bool direct() const { return direct_; }
  // a, b, c, d, tx, ty
  std::array<double, 6> matrix() const {
    return {m_[0], m_[1], m_[2], m_[3], t_.x, t_.y};
  }
  Point translation() const { return t_; }

  Point Apply(Point p) const {
    return {m_[0] * p.x + m_[1] * p.y + t_.x, m_[2] * p.x + m_[3] * p.y + t_.y};
  }
  // Image polygon, kept counterclockwise.
  Polygon Apply(const Polygon& p) const;

  // (*this) o g, i.e. g is applied first.
  Similitude Compose(const Similitude& g) const;
  Similitude Inverse() const;
  // Throws kRatioOne for ratio 1.
  Point FixedPoint() const;

  // Entrywise comparison; translation scaled by 1 + |t|.
  bool ApproxEqual(const Similitude& o, double tol) const;

 private:
  void Reorthonormalize();

  std::array<double, 4> m_;
  Point t_;
  double ratio_ = 1.0;
  bool direct_ = true;
  int compositions_ = 0;
};

// Simple polygon stored counterclockwise.
class Polygon {
 public:
  Polygon() = default;

  // Validates: at least 3 finite vertices, nonzero area, no self
  // intersections.  Clockwise input is reversed.  Throws kDegenerateInput.
  static Polygon Make(std::vector<Point> vertices);
  // Skips validation; vertices must already be counterclockwise.
  static Polygon Trusted(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const Point& operator[](std::size_t i) const { return v_[i]; }

  double Area() const;
  Point Centroid() const;
  BoundingBox Bounds() const;
  double Perimeter() const;
  // Drops vertices whose incident edges are collinear.
  Polygon WithoutCollinear(double rel_tol = 1e-9) const;

 private:
  explicit Polygon(std::vector<Point> v) : v_(std::move(v)) {}
  std::vector<Point> v_;
};

double SignedArea(const std::vector<Point>& v);
bool IsSimple(const std::vector<Point>& v);

// Ear clipping; returns triangles as index triples into the polygon.
std::vector<std::array<int, 3>> Triangulate(const Polygon& p);

// Area of a convex polygon clipped against another convex polygon.
double ConvexIntersectionArea(const std::vector<Point>& a,
                              const std::vector<Point>& b);

double IntersectionArea(const Polygon& p, const Polygon& q);

enum class Location { kInside, kBoundary, kOutside };

// Points within tol.eps_len of an edge count as boundary.
Location Contains(const Polygon& p, Point x, const Tolerance& tol = {});

// Smallest distance from x to the polygon boundary.
double BoundaryDistance(const Polygon& p, Point x);

// Similitude g with g(p) = q (as vertex sets), if any.  Congruent asks for
// ratio 1.
std::optional<Similitude> Similar(const Polygon& p, const Polygon& q,
                                  const Tolerance& tol = {});
std::optional<Similitude> Congruent(const Polygon& p, const Polygon& q,
                                    const Tolerance& tol = {});
// Every similitude taking p onto q; more than one when p has symmetries.
std::vector<Similitude> AllSimilarities(const Polygon& p, const Polygon& q,
                                        const Tolerance& tol = {});

// Same vertex cycle up to rotation of the starting index.
bool SameShape(const Polygon& p, const Polygon& q, double tol);

// Lexicographically least cyclic (edge length, angle) sequence over both
// orientations, rounded to `digits` significant digits.
std::string CanonicalKey(const Polygon& p, int digits = 7);

}  // namespace selfsim

#endif  // SELFSIM_GEOMETRY_HPP_
