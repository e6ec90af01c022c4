#pragma once

#include <optional>
#include <vector>

#include "billiards/geom.hpp"

namespace billiards {

// Half-plane <a, y> <= c.
struct HalfPlane {
  Vec2 a;
  double c = 1.0;
};

// Polar dual K^z = { y : <x - z, y> <= 1 for all x in K }.
//
// Bounded when z is strictly interior to the primal; in that case the dual
// is a polygon with one vertex per primal edge.  For z on the boundary or
// outside, the dual is kept in half-plane form only (one constraint per
// primal vertex).
class DualBody {
 public:
  static DualBody bounded(ConvexPolygon poly, Point z, std::vector<HalfPlane> constraints);
  static DualBody unbounded(std::vector<HalfPlane> constraints, Point z);

  bool is_bounded() const { return polygon_.has_value(); }
  const ConvexPolygon& polygon() const;
  const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
  Point center() const { return center_; }
  bool contains(Point y, double tol = kTol) const;

 private:
  DualBody() = default;
  std::optional<ConvexPolygon> polygon_;
  std::vector<HalfPlane> halfplanes_;  // duals of the primal vertices
  Point center_{};
};

DualBody polar_dual(const ConvexPolygon& P, Point z);

// polar_dual applied twice; recovers P within Hausdorff 1e-6.
ConvexPolygon dual_of_dual_roundtrip(const ConvexPolygon& P, Point z);

// True iff z lies strictly inside all three disks whose diameters are the
// sides of T; equivalently, the dual triangle T^z is acute.
bool acute_dual_region_contains(const ConvexPolygon& T, Point z);

// Support function of an intersection of half-planes; infinity when the
// region is unbounded in direction u.
double halfplane_support(const std::vector<HalfPlane>& hs, Vec2 u);

// Width of the half-plane intersection in direction u (possibly infinite).
double halfplane_width(const std::vector<HalfPlane>& hs, Vec2 u);

// Directions in which an unbounded region still has finite width exist only
// when the recession cone is a single ray (or a line); returns the width
// across that ray's perpendicular, or nullopt when every width is infinite.
std::optional<double> min_finite_width(const std::vector<HalfPlane>& hs);

}  // namespace billiards
