#pragma once

#include <string>
#include <utility>
#include <vector>

#include "billiards/geom.hpp"

namespace billiards {

struct SteinerAxisEntry {
  std::string axis_label;
  Line axis;
  ConvexPolygon symmetrized;
  double beta = 0.0;
  double delta = 0.0;  // beta after minus beta before
};

struct SteinerReport {
  double original_beta = 0.0;
  std::vector<SteinerAxisEntry> axes;
};

// Altitude line from each vertex (direction = normal of the opposite side).
std::vector<Line> altitude_lines(const ConvexPolygon& T);

// Symmetrizes a triangle about each of its three altitudes.  The billiard
// product never decreases under these; a violation raises NumericFailure.
SteinerReport steiner_beta_report(const ConvexPolygon& T);

// (beta before, beta after) for an arbitrary axis; no inequality holds in
// general.
std::pair<double, double> steiner_beta_any_axis(const ConvexPolygon& P, const Line& axis);

}  // namespace billiards
