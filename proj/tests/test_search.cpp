#include <cmath>

#include "billiards/billiard.hpp"
#include "billiards/product.hpp"
#include "billiards/search.hpp"
#include "doctest.h"

using namespace billiards;

TEST_CASE("regular polygon table matches the closed forms") {
  auto rows = regular_polygon_table(12);
  REQUIRE(rows.size() == 10);
  for (const TableRow& r : rows) {
    CHECK(r.alpha == doctest::Approx(alpha_regular_formula(r.n)).epsilon(1e-6));
    CHECK(r.beta == doctest::Approx(beta_regular_formula(r.n)).epsilon(1e-6));
    CHECK(r.beta == doctest::Approx(8.0 * r.alpha / r.diameter).epsilon(1e-12));
  }
  CHECK(rows[0].alpha == doctest::Approx(1.5 * std::sqrt(3.0)));
  CHECK(rows[0].diameter == doctest::Approx(std::sqrt(3.0)));
  CHECK(rows[1].alpha == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(rows[2].alpha == doctest::Approx(3.6180339887));
  CHECK(rows[2].diameter == doctest::Approx(1.9021130326));

  // each odd value beats the following even one
  for (size_t i = 0; i + 1 < rows.size(); i += 2) CHECK(rows[i].beta > rows[i + 1].beta);
}

TEST_CASE("triangle scan finds the equilateral maximum") {
  SearchResult r = triangle_max_scan(48);
  CHECK(r.best_beta <= 12.0 + 1e-9);
  CHECK(r.best_beta >= 12.0 - 1e-3);
  double step = (M_PI - 0.02) / 48;
  for (int i = 0; i < 3; ++i) {
    const ConvexPolygon& T = r.best_shape;
    Vec2 u = T.vertex(i - 1) - T.vertex(i), v = T.vertex(i + 1) - T.vertex(i);
    double ang = std::acos(std::clamp(dot(u, v) / (norm(u) * norm(v)), -1.0, 1.0));
    CHECK(std::abs(ang - M_PI / 3) < step);
  }
  CHECK(diameter(r.best_shape).length == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(billiard_product(r.best_shape).beta == doctest::Approx(r.best_beta).epsilon(1e-9));
}

TEST_CASE("isosceles bound curve") {
  CHECK(isosceles_beta_bound(M_PI / 3) == doctest::Approx(12.0).epsilon(1e-12));
  double prev = -1;
  for (int i = 0; i <= 100; ++i) {
    double v = isosceles_beta_bound(M_PI / 3 * i / 100);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("quadrilateral search") {
  // the equilateral-with-extended-altitude quadrilateral
  ConvexPolygon conj({{0.5, 0}, {0, std::sqrt(3.0) / 2}, {-0.5, 0}, {0, std::sqrt(3.0) / 2 - 1}});
  double conj_beta = billiard_product(conj).beta;
  CHECK(conj_beta == doctest::Approx(8 * std::sqrt(3.0) * std::cos(M_PI / 12)).epsilon(1e-9));

  SearchResult edge = quad_search(QuadMode::EdgeDiameter, 24);
  CHECK(edge.best_beta >= conj_beta - 1e-6);
  CHECK(edge.best_beta <= 16.0 + 1e-9);
  CHECK(diameter(edge.best_shape).length == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(billiard_product(edge.best_shape).beta == doctest::Approx(edge.best_beta).epsilon(1e-9));

  SearchResult diag = quad_search(QuadMode::DiagonalDiameter, 16);
  CHECK(diag.best_beta >= 12.0);  // beats every triangle
  CHECK(diag.best_beta <= 16.0 + 1e-9);
}

TEST_CASE("vertex truncation keeps the diameter and beats the next even n-gon") {
  ConvexPolygon t3 = truncate_regular_odd(3, 1e-3);
  CHECK(t3.size() == 4);
  double b3 = billiard_product(t3).beta;
  CHECK(b3 >= 11.9);
  CHECK(b3 <= 12.0 + 1e-9);
  CHECK(b3 > beta_regular_formula(4));

  ConvexPolygon t5 = truncate_regular_odd(5, 1e-3);
  CHECK(t5.size() == 6);
  double b5 = billiard_product(t5).beta;
  CHECK(b5 >= 15.1);
  CHECK(b5 > beta_regular_formula(6));
  CHECK(diameter(t5).length == doctest::Approx(2.0 * std::cos(M_PI / 10)).epsilon(1e-9));

  CHECK_THROWS_AS(truncate_regular_odd(4, 1e-3), BadParameter);
  CHECK_THROWS_AS(truncate_regular_odd(5, 2.0), BadParameter);
}

TEST_CASE("Reuleaux approximation has beta near 16") {
  ConvexPolygon reu = reuleaux_polygon(1.0, 300);
  CHECK(reu.size() == 300);
  double d = diameter(reu).length;
  CHECK(d <= 1.0 + 1e-12);
  CHECK(d >= 1.0 - 1e-6);
  ProductReport r = billiard_product(reu);
  CHECK(r.beta >= 15.95);
  CHECK(r.beta <= 16.0 + 1e-9);

  // invariance under scaling the width
  ConvexPolygon reu2 = reuleaux_polygon(2.0, 300);
  CHECK(diameter(reu2).length == doctest::Approx(2.0 * d).epsilon(1e-12));
  CHECK(billiard_product(reu2).beta == doctest::Approx(r.beta).epsilon(1e-9));

  CHECK_THROWS_AS(reuleaux_polygon(1.0, 40), BadParameter);
  CHECK_THROWS_AS(reuleaux_polygon(-1.0, 300), BadParameter);
}
