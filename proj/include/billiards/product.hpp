#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "billiards/billiard.hpp"
#include "billiards/dual.hpp"
#include "billiards/geom.hpp"

namespace billiards {

struct ExtendedLength {
  double value = 0.0;
  bool finite = true;

  static ExtendedLength of(double v) { return {v, true}; }
  static ExtendedLength infinite() { return {std::numeric_limits<double>::infinity(), false}; }
};

struct ProductReport {
  double alpha = 0.0;
  double diameter = 0.0;
  double beta = 0.0;  // 8 * alpha / diameter
  double santalo_min = std::numeric_limits<double>::quiet_NaN();
  Point santalo_argmin{};
  int grid_resolution = 0;  // 0 when no scan was run
};

ProductReport billiard_product(const ConvexPolygon& P);

// alpha of the polar dual K^z.  Infinite for z outside P (the dual contains
// a sector) and for z at a vertex of P; for z on an edge the dual is an
// unbounded capped slab whose crossing double normal gives a finite
// two-bounce value 2 * slab width.
ExtendedLength alpha_dual_at(const ConvexPolygon& P, Point z);

struct SantaloResult {
  double min = 0.0;
  Point argmin{};
};

// Minimum of alpha_dual_at over a grid of interior centers (plus the
// diameter midpoints), refined by coordinate descent with step halving.
SantaloResult santalo_scan(const ConvexPolygon& P, int resolution);

ProductReport product_report(const ConvexPolygon& P, int resolution);

// alpha(T^z) = 2 (1/|AZ| + 1/|ZD|) sin(angle BZC), with D the intersection
// of line AZ with side BC; valid when the dual triangle is acute.  The value
// does not depend on which vertex plays A.
double alpha_dual_triangle_geometric(const ConvexPolygon& T, Point z);
std::array<double, 3> alpha_dual_triangle_geometric_each(const ConvexPolygon& T, Point z);

// Same quantity for the canonical isosceles triangle with base angle phi in
// [pi/3, pi/2), legs of length 1, vertices (0, sin phi) and (+-cos phi, 0):
// alpha(T^z) = 2 sin(2 phi) / (|z-a| |z-b| |z-c|).
double alpha_dual_isosceles(double phi, Point z);
ConvexPolygon canonical_isosceles(double phi);

// All midpoints of diameter-realizing vertex pairs (ties within tol).
std::vector<Point> diameter_midpoints(const ConvexPolygon& P, double tol = kTol);

}  // namespace billiards
