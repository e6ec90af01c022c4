#include "billiards/steiner.hpp"

#include <cmath>

#include "billiards/product.hpp"

namespace billiards {

std::vector<Line> altitude_lines(const ConvexPolygon& T) {
  if (T.size() != 3) throw DegenerateInput("expected a triangle");
  std::vector<Line> out;
  out.reserve(3);
  for (int i = 0; i < 3; ++i) {
    // altitude from vertex i is parallel to the opposite edge normal
    out.push_back(Line{T.vertex(i), T.edge_normal(i + 1)});
  }
  return out;
}

SteinerReport steiner_beta_report(const ConvexPolygon& T) {
  if (T.size() != 3) throw DegenerateInput("expected a triangle");
  SteinerReport r;
  r.original_beta = billiard_product(T).beta;
  auto axes = altitude_lines(T);
  for (int i = 0; i < 3; ++i) {
    ConvexPolygon S = steiner_symmetrize(T, axes[i]);
    double b = billiard_product(S).beta;
    double delta = b - r.original_beta;
    if (delta < -kTol)
      throw NumericFailure("billiard product decreased under altitude symmetrization");
    r.axes.push_back({"altitude_from_vertex_" + std::to_string(i), axes[i], std::move(S), b, delta});
  }
  return r;
}

std::pair<double, double> steiner_beta_any_axis(const ConvexPolygon& P, const Line& axis) {
  double before = billiard_product(P).beta;
  double after = billiard_product(steiner_symmetrize(P, axis)).beta;
  return {before, after};
}

}  // namespace billiards
