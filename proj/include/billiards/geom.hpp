#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "billiards/errors.hpp"

namespace billiards {

// Absolute tolerance for geometric predicates. Inputs are expected to be
// pre-scaled to O(1) coordinates; operations on larger inputs switch to
// tolerances relative to the bounding-box size where noted.
inline constexpr double kTol = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};
using Point = Vec2;

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
// counterclockwise quarter turn
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 unit_from_angle(double t) { return {std::cos(t), std::sin(t)}; }
inline double angle_of(Vec2 a) { return std::atan2(a.y, a.x); }

Vec2 normalized(Vec2 a);
// wrap into [0, 2pi)
double wrap_angle(double t);
double distance_point_segment(Point p, Point a, Point b);
double distance_segments(Point a0, Point a1, Point b0, Point b1);
// intersection of lines {x : <n1,x> = c1} and {x : <n2,x> = c2}
std::optional<Point> intersect_lines(Vec2 n1, double c1, Vec2 n2, double c2);

class Direction {
 public:
  explicit Direction(Vec2 v);
  explicit Direction(double angle_radians);
  Vec2 unit() const { return u_; }
  double angle() const { return angle_of(u_); }

 private:
  Vec2 u_;
};

struct SimilarityTransform {
  double scale = 1.0;
  double rotation = 0.0;  // radians
  Vec2 translation{0.0, 0.0};
  bool reflect = false;  // mirror across the x axis before rotating

  Point apply(Point p) const;
};

// Infinite line given by a point on it and a direction along it.
struct Line {
  Point point;
  Vec2 dir;
};

// Counterclockwise angular interval [lo, lo+width] on the circle.
struct AngleInterval {
  double lo = 0.0;
  double width = 0.0;
  double hi() const { return lo + width; }
  bool contains(double angle, double tol = 1e-12) const;
};

// Strictly convex polygon, vertices counterclockwise, with cached
// half-plane form <n_i, x> <= b_i (one outward unit normal per edge).
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<Point>& vertices() const { return verts_; }
  Point vertex(int i) const { return verts_[wrap(i)]; }
  Vec2 edge_normal(int i) const { return normals_[wrap(i)]; }
  double edge_offset(int i) const { return offsets_[wrap(i)]; }
  Point edge_start(int i) const { return verts_[wrap(i)]; }
  Point edge_end(int i) const { return verts_[wrap(i + 1)]; }
  Vec2 edge_vec(int i) const { return edge_end(i) - edge_start(i); }
  double edge_length(int i) const { return norm(edge_vec(i)); }

  double area() const;
  double perimeter() const;
  Point centroid() const;
  // bounding-box diagonal, used to scale tolerances
  double scale() const { return scale_; }

  double support(Vec2 u) const;  // max_x <u, x>
  // min_i (b_i - <n_i, p>): positive strictly inside, negative outside
  double min_slack(Point p) const;
  bool contains(Point p, double tol = kTol) const { return min_slack(p) >= -tol; }
  double boundary_distance(Point p) const;  // distance to the boundary curve

  // outward normal directions supported at vertex i (spans the exterior angle)
  AngleInterval vertex_normal_cone(int i) const;

  // vertices recomputed as intersections of consecutive edge lines
  std::vector<Point> vertices_from_halfplanes() const;

 private:
  int wrap(int i) const {
    int n = size();
    i %= n;
    return i < 0 ? i + n : i;
  }

  std::vector<Point> verts_;
  std::vector<Vec2> normals_;
  std::vector<double> offsets_;
  double scale_ = 0.0;
};

ConvexPolygon convex_hull(const std::vector<Point>& points);

struct DiameterResult {
  double length = 0.0;
  std::pair<Point, Point> endpoints;
  std::pair<int, int> indices;
};
DiameterResult diameter(const ConvexPolygon& P);

double width(const ConvexPolygon& P, const Direction& d);

struct MinWidthResult {
  double w = 0.0;
  Direction dir;
  int edge = 0;        // edge whose normal realizes the minimum
  int far_vertex = 0;  // vertex touching the opposite supporting line
};
MinWidthResult min_width(const ConvexPolygon& P);

double hausdorff_distance(const ConvexPolygon& P, const ConvexPolygon& Q);

// Largest s such that some translate of pts keeps slack >= s against every
// edge half-plane of P.  s > 0 means the points fit strictly inside.
double translation_slack(const ConvexPolygon& P, const std::vector<Point>& pts);
bool can_translate_into_interior(const ConvexPolygon& P, const std::vector<Point>& pts,
                                 double tol = kTol);

ConvexPolygon steiner_symmetrize(const ConvexPolygon& P, const Line& axis);

ConvexPolygon apply_similarity(const ConvexPolygon& P, const SimilarityTransform& T);

// Deterministic generator: hull of n points on a radially perturbed circle.
ConvexPolygon random_polygon(int n, std::uint64_t seed);

}  // namespace billiards
