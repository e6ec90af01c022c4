#pragma once

#include <vector>

#include "billiards/geom.hpp"

namespace billiards {

struct TableRow {
  int n = 0;
  double alpha = 0.0;
  double diameter = 0.0;
  double beta = 0.0;
};

// Regular n-gon inscribed in the unit circle, one vertex at angle 0.
ConvexPolygon regular_polygon(int n);

// alpha and beta of regular polygons from the closed forms:
// alpha = 3 sqrt(3)/2 (n = 3), 2 (1 + cos(pi/n)) (odd n >= 5), 4 cos(pi/n)
// (even n); beta = 12, 16 cos(pi/2n), 16 cos(pi/n) respectively.
double alpha_regular_formula(int n);
double beta_regular_formula(int n);

// Rows computed numerically (not from the formulas) for n = 3..n_max.
std::vector<TableRow> regular_polygon_table(int n_max);

struct SearchResult {
  double best_beta;
  ConvexPolygon best_shape;  // re-evaluating this shape reproduces best_beta
  std::vector<double> parameters;
  long evaluations;
};

// Scan of all triangle shapes by their two base angles, diameter normalized
// to 1, grid pass plus simplex refinement.
SearchResult triangle_max_scan(int resolution);

// Cubic bound 32 cos^2(phi/2) sin(phi/2) for isosceles triangles with apex
// angle phi; increases on [0, pi/3] and reaches 12 at pi/3.
double isosceles_beta_bound(double phi);

enum class QuadMode { EdgeDiameter, DiagonalDiameter };

// Search over unit-diameter quadrilaterals.  EdgeDiameter: base edge of
// length 1, far vertices obtained by extending the diagonals until length 1
// or the lens boundary (2 angle parameters).  DiagonalDiameter: unit
// diagonal, rays to the two remaining vertices with the second extension
// capped by the opposite-vertex distance (2 angles + 1 extension fraction).
SearchResult quad_search(QuadMode mode, int resolution);

// Regular odd n-gon with one vertex cut off at distance eps; keeps the
// diameter and yields an (n+1)-gon with beta above beta(R_{n+1}).
ConvexPolygon truncate_regular_odd(int n, double eps);

// Polygonal Reuleaux triangle of the given width, n/3 samples per arc.
ConvexPolygon reuleaux_polygon(double width, int n);

}  // namespace billiards
