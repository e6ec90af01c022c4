#include <algorithm>
#include <cmath>

#include "billiards/detail/rng.hpp"
#include "billiards/geom.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace billiards;
using billiards::testing::equilateral_side1;
using billiards::testing::unit_square;

TEST_CASE("convex hull basics") {
  ConvexPolygon sq = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(sq.size() == 4);

  CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 0}, {2, 0}}), DegenerateInput);
  CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 0}}), DegenerateInput);

  ConvexPolygon sq2 = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
  CHECK(sq2.size() == 4);  // interior point dropped
  CHECK(sq2.area() == doctest::Approx(1.0));
}

TEST_CASE("polygon constructor rejects bad input") {
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), DegenerateInput);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 1e-14}}), DegenerateInput);
  // reflex quad
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {0.2, 0.2}, {0, 2}}), DegenerateInput);
  // collinear middle vertex is merged
  ConvexPolygon p({{0, 0}, {0.5, 0.0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(p.size() == 4);
}

TEST_CASE("diameter") {
  auto d = diameter(unit_square());
  CHECK(d.length == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // regular hexagon, circumradius 1
  std::vector<Point> hx;
  for (int k = 0; k < 6; ++k) hx.push_back({std::cos(M_PI * k / 3), std::sin(M_PI * k / 3)});
  CHECK(diameter(ConvexPolygon(hx)).length == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(diameter(equilateral_side1()).length == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("width in a direction") {
  ConvexPolygon sq = unit_square();
  CHECK(width(sq, Direction(Vec2{1, 0})) == doctest::Approx(1.0));
  CHECK(width(sq, Direction(Vec2{1, 1})) == doctest::Approx(std::sqrt(2.0)));

  ConvexPolygon eq = equilateral_side1();
  CHECK(width(eq, Direction(Vec2{0, 1})) == doctest::Approx(std::sqrt(3.0) / 2));
  // support-function cross-check
  Vec2 u = normalized(Vec2{0, 1});
  CHECK(eq.support(u) + eq.support(-u) == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("min width via calipers matches direction sweep") {
  ConvexPolygon rect({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  auto mw = min_width(rect);
  CHECK(mw.w == doctest::Approx(1.0));
  CHECK(std::abs(mw.dir.unit().y) == doctest::Approx(1.0));

  auto check_sweep = [](const ConvexPolygon& P, double expect) {
    auto mw2 = min_width(P);
    CHECK(mw2.w == doctest::Approx(expect).epsilon(1e-9));
    double sweep = 1e300;
    for (int k = 0; k < 3600; ++k) sweep = std::min(sweep, width(P, Direction(M_PI * k / 3600.0)));
    CHECK(mw2.w <= sweep + 1e-9);
    CHECK(sweep <= mw2.w + 1e-4);  // sweep resolution
  };
  check_sweep(equilateral_side1(), std::sqrt(3.0) / 2);
  check_sweep(ConvexPolygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), std::sqrt(2.0));
}

TEST_CASE("hausdorff distance") {
  ConvexPolygon sq = unit_square();
  CHECK(hausdorff_distance(sq, sq) == doctest::Approx(0.0));

  ConvexPolygon moved({{0.3, 0}, {1.3, 0}, {1.3, 1}, {0.3, 1}});
  CHECK(hausdorff_distance(sq, moved) == doctest::Approx(0.3));

  ConvexPolygon tall({{0, 0}, {1, 0}, {1, 2}, {0, 2}});
  CHECK(hausdorff_distance(sq, tall) == doctest::Approx(1.0));
}

TEST_CASE("hausdorff is a metric on samples") {
  detail::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    ConvexPolygon a = random_polygon(5 + i % 5, rng.bits());
    ConvexPolygon b = random_polygon(5 + (i + 2) % 5, rng.bits());
    ConvexPolygon c = random_polygon(4 + (i + 4) % 5, rng.bits());
    double ab = hausdorff_distance(a, b), ba = hausdorff_distance(b, a);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
    CHECK(hausdorff_distance(a, c) <= ab + hausdorff_distance(b, c) + 1e-9);
  }
}

TEST_CASE("translation feasibility") {
  ConvexPolygon sq = unit_square();
  CHECK(can_translate_into_interior(sq, {{0.5, 0.5}}));
  CHECK_FALSE(can_translate_into_interior(sq, {{0, 0}, {1, 1}}));
  CHECK(can_translate_into_interior(sq, {{0.1, 0.1}, {0.2, 0.1}, {0.15, 0.2}}));
  CHECK_THROWS_AS(can_translate_into_interior(sq, {}), DegenerateInput);

  // slack of the diagonal is exactly zero
  CHECK(translation_slack(sq, {{0, 0}, {1, 1}}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("steiner symmetrization") {
  ConvexPolygon tri({{-1, 0}, {1, 0}, {0, 1}});
  ConvexPolygon rhomb = steiner_symmetrize(tri, Line{{0, 0}, {1, 0}});
  ConvexPolygon expect({{-1, 0}, {0, -0.5}, {1, 0}, {0, 0.5}});
  CHECK(hausdorff_distance(rhomb, expect) < 1e-9);
  CHECK(rhomb.area() == doctest::Approx(tri.area()).epsilon(1e-12));

  // symmetric body is a fixed point
  ConvexPolygon sq = unit_square();
  ConvexPolygon sym = steiner_symmetrize(sq, Line{{0.5, 0.0}, {0, 1}});
  CHECK(hausdorff_distance(sym, sq) < 1e-9);

  // equilateral is symmetric about each altitude
  ConvexPolygon eq = equilateral_side1();
  ConvexPolygon s2 = steiner_symmetrize(eq, Line{{0.5, std::sqrt(3.0) / 2}, {0, 1}});
  CHECK(hausdorff_distance(s2, eq) < 1e-9);
}

TEST_CASE("steiner preserves area and does not grow the diameter") {
  detail::Rng rng(17);
  for (int i = 0; i < 25; ++i) {
    ConvexPolygon P = random_polygon(4 + i % 6, rng.bits());
    Line axis{{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)},
              unit_from_angle(rng.uniform(0.0, M_PI))};
    ConvexPolygon S = steiner_symmetrize(P, axis);
    CHECK(S.area() == doctest::Approx(P.area()).epsilon(1e-9));
    CHECK(diameter(S).length <= diameter(P).length + 1e-9);
  }
}

TEST_CASE("similarity transforms") {
  ConvexPolygon sq = unit_square();
  SimilarityTransform id;
  CHECK(hausdorff_distance(apply_similarity(sq, id), sq) < 1e-12);

  SimilarityTransform scale2{2.0, 0.0, {0, 0}, false};
  CHECK(diameter(apply_similarity(sq, scale2)).length == doctest::Approx(2 * std::sqrt(2.0)));

  SimilarityTransform rot{1.0, M_PI / 7, {0, 0}, false};
  CHECK(diameter(apply_similarity(sq, rot)).length ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(apply_similarity(sq, SimilarityTransform{-1.0, 0.0, {0, 0}, false}),
                  BadParameter);
}

TEST_CASE("diameter and min width scale with similarities") {
  detail::Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    ConvexPolygon P = random_polygon(4 + i % 7, rng.bits());
    SimilarityTransform T{rng.uniform(0.3, 3.0), rng.uniform(0.0, 2 * M_PI),
                          {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}, i % 2 == 0};
    ConvexPolygon Q = apply_similarity(P, T);
    CHECK(diameter(Q).length == doctest::Approx(T.scale * diameter(P).length).epsilon(1e-9));
    CHECK(min_width(Q).w == doctest::Approx(T.scale * min_width(P).w).epsilon(1e-9));
  }
}

TEST_CASE("widths are sandwiched between min width and diameter") {
  detail::Rng rng(31);
  for (int i = 0; i < 15; ++i) {
    ConvexPolygon P = random_polygon(4 + i % 8, rng.bits());
    double w = min_width(P).w, d = diameter(P).length;
    for (int k = 0; k < 64; ++k) {
      double wk = width(P, Direction(rng.uniform(0.0, 2 * M_PI)));
      CHECK(wk >= w - 1e-9);
      CHECK(wk <= d + 1e-9);
    }
  }
}

TEST_CASE("half-plane form reproduces the vertices") {
  detail::Rng rng(41);
  for (int i = 0; i < 25; ++i) {
    ConvexPolygon P = random_polygon(3 + i % 9, rng.bits());
    auto back = P.vertices_from_halfplanes();
    REQUIRE(back.size() == P.vertices().size());
    for (size_t k = 0; k < back.size(); ++k) CHECK(dist(back[k], P.vertices()[k]) < 1e-9);
  }
}

TEST_CASE("random polygons are deterministic") {
  ConvexPolygon a = random_polygon(3, 99);
  CHECK(a.size() == 3);
  CHECK(a.area() > 0.0);

  ConvexPolygon b = random_polygon(7, 12345), c = random_polygon(7, 12345);
  REQUIRE(b.size() == c.size());
  for (int i = 0; i < b.size(); ++i) CHECK(dist(b.vertex(i), c.vertex(i)) == 0.0);

  CHECK(random_polygon(50, 7).size() <= 50);
  CHECK_THROWS_AS(random_polygon(2, 1), DegenerateInput);
}
