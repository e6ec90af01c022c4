#include <cmath>

#include "billiards/detail/rng.hpp"
#include "billiards/product.hpp"
#include "billiards/search.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace billiards;
using billiards::testing::equilateral_side1;
using billiards::testing::right_triangle;
using billiards::testing::unit_square;

TEST_CASE("billiard product of known bodies") {
  CHECK(billiard_product(equilateral_side1()).beta == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(billiard_product(regular_polygon(6)).beta ==
        doctest::Approx(16.0 * std::cos(M_PI / 6)).epsilon(1e-12));
  CHECK(billiard_product(right_triangle()).beta == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("alpha of the dual at specific centers") {
  ConvexPolygon eq = equilateral_side1();

  ExtendedLength c = alpha_dual_at(eq, eq.centroid());
  REQUIRE(c.finite);
  CHECK(c.value == doctest::Approx(9.0).epsilon(1e-9));

  CHECK_FALSE(alpha_dual_at(eq, {5.0, 5.0}).finite);

  // edge midpoint is a diameter midpoint on the boundary: capped slab, alpha 8
  ExtendedLength m = alpha_dual_at(eq, {0.5, 0.0});
  REQUIRE(m.finite);
  CHECK(m.value == doctest::Approx(8.0).epsilon(1e-9));

  // at a vertex the dual recession cone is two-dimensional
  CHECK_FALSE(alpha_dual_at(eq, {0.0, 0.0}).finite);
}

TEST_CASE("santalo scan hits 8/diam at a diameter midpoint") {
  ConvexPolygon hex = regular_polygon(6);
  SantaloResult s = santalo_scan(hex, 60);
  CHECK(s.min == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(norm(s.argmin) < 0.02);

  SantaloResult sq = santalo_scan(unit_square(), 40);
  CHECK(sq.min == doctest::Approx(8.0 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(dist(sq.argmin, {0.5, 0.5}) < 0.02);

  CHECK_THROWS_AS(santalo_scan(hex, 4), DegenerateInput);
}

TEST_CASE("dual alpha never goes below 8/diam") {
  detail::Rng rng(107);
  for (int i = 0; i < 20; ++i) {
    ConvexPolygon P = random_polygon(4 + i % 7, rng.bits());
    double bound = 8.0 / diameter(P).length;
    for (int k = 0; k < 8; ++k) {
      Point z = P.centroid() + rng.uniform(0.0, 0.6) *
                                   Point{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      if (P.min_slack(z) < 1e-6) continue;
      ExtendedLength a = alpha_dual_at(P, z);
      REQUIRE(a.finite);
      CHECK(a.value >= bound - 1e-6);
    }
  }
}

TEST_CASE("geometric cevian formula") {
  ConvexPolygon eq = equilateral_side1();
  Point z = eq.centroid();
  CHECK(alpha_dual_triangle_geometric(eq, z) == doctest::Approx(9.0).epsilon(1e-9));

  // does not depend on the chosen vertex
  auto each = alpha_dual_triangle_geometric_each(eq, z);
  CHECK(std::abs(each[0] - each[1]) < 1e-9);
  CHECK(std::abs(each[1] - each[2]) < 1e-9);

  CHECK_THROWS_AS(alpha_dual_triangle_geometric(eq, Point{1e-3, 1e-3}), NotInAcuteRegion);

  detail::Rng rng(127);
  int done = 0;
  while (done < 40) {
    ConvexPolygon T = random_polygon(3, rng.bits());
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1) {
      u = 1 - u;
      v = 1 - v;
    }
    Point zz = T.vertex(0) + u * (T.vertex(1) - T.vertex(0)) + v * (T.vertex(2) - T.vertex(0));
    if (T.min_slack(zz) < 1e-4) continue;
    bool admissible = true;
    for (int e = 0; e < 3; ++e) {
      Point mid = 0.5 * (T.edge_start(e) + T.edge_end(e));
      if (dist(zz, mid) >= 0.5 * T.edge_length(e) - 1e-4) admissible = false;
    }
    if (!admissible) continue;
    auto vals = alpha_dual_triangle_geometric_each(T, zz);
    CHECK(std::abs(vals[0] - vals[1]) < 1e-9);
    CHECK(std::abs(vals[0] - vals[2]) < 1e-9);
    ExtendedLength pipe = alpha_dual_at(T, zz);
    REQUIRE(pipe.finite);
    CHECK(vals[0] == doctest::Approx(pipe.value).epsilon(1e-7));
    ++done;
  }
}

TEST_CASE("isosceles closed form") {
  // equilateral placement: phi = pi/3, z at the centroid height
  CHECK(alpha_dual_isosceles(M_PI / 3, {0.0, std::sqrt(3.0) / 6}) ==
        doctest::Approx(9.0).epsilon(1e-9));
  CHECK(alpha_dual_isosceles(M_PI / 3, {0.0, 0.2}) == doctest::Approx(8.9675092837).epsilon(1e-9));

  CHECK_THROWS_AS(alpha_dual_isosceles(0.5, Point{0.0, 0.2}), BadAngle);
  CHECK_THROWS_AS(alpha_dual_isosceles(M_PI / 3, Point{0.0, 1e-4}), NotInAcuteRegion);

  // on the arc over the base the sine factor is 1 and the formula reduces to
  // the cevian form
  detail::Rng rng(131);
  for (int i = 0; i < 20; ++i) {
    double phi = rng.uniform(M_PI / 3.0, M_PI / 2.0 - 0.05);
    ConvexPolygon T = canonical_isosceles(phi);
    double r = std::cos(phi);  // base disk radius
    double t = rng.uniform(0.3, M_PI - 0.3);
    Point z{r * std::cos(t), r * std::sin(t)};
    z = 0.999999 * z;  // strictly inside the disk
    bool ok = true;
    for (int e = 0; e < 3; ++e) {
      Point mid = 0.5 * (T.edge_start(e) + T.edge_end(e));
      if (dist(z, mid) >= 0.5 * T.edge_length(e) - 1e-9) ok = false;
    }
    if (!ok || T.min_slack(z) < 1e-9) continue;
    Point a{0.0, std::sin(phi)};
    Point d_pt;  // intersection of line a-z with the base
    double lam = a.y / (a.y - z.y);
    d_pt = {a.x + lam * (z.x - a.x), 0.0};
    double cevian = 2.0 * (1.0 / dist(a, z) + 1.0 / dist(z, d_pt));
    CHECK(alpha_dual_isosceles(phi, z) == doctest::Approx(cevian).epsilon(1e-6));
  }
}

TEST_CASE("beta bounds: 16 globally, 12 for triangles") {
  detail::Rng rng(137);
  for (int i = 0; i < 40; ++i) {
    ConvexPolygon P = random_polygon(3 + i % 10, rng.bits());
    double b = billiard_product(P).beta;
    CHECK(b <= 16.0 + 1e-9);
    if (P.size() == 3) CHECK(b <= 12.0 + 1e-9);
  }
}

TEST_CASE("product report carries the scan fields") {
  ProductReport r = product_report(unit_square(), 24);
  CHECK(r.beta == doctest::Approx(8.0 * 2.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(r.grid_resolution == 24);
  CHECK(r.santalo_min == doctest::Approx(8.0 / std::sqrt(2.0)).epsilon(1e-4));
}
