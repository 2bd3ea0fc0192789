#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eslab/surface.hpp"

#include <cmath>
#include <numbers>

using namespace eslab;
constexpr double pi = std::numbers::pi;

TEST_CASE("square torus validates") {
  auto s = square_torus();
  CHECK(s.total_area() == doctest::Approx(1.0));
  REQUIRE(s.cones.size() == 1);
  CHECK(s.cones[0].angle == doctest::Approx(2.0 * pi));
  CHECK(s.cones[0].k == 0);
  CHECK(s.cones[0].corners.size() == 4);
}

TEST_CASE("l shaped surface has one 6pi cone") {
  auto s = l_shaped_surface(1.0, 1.0);
  CHECK(s.total_area() == doctest::Approx(3.0));
  REQUIRE(s.cones.size() == 1);
  CHECK(s.cones[0].angle == doctest::Approx(6.0 * pi));
  CHECK(s.cones[0].k == 4);
}

TEST_CASE("octagon surface has one 6pi cone") {
  auto s = regular_octagon_surface();
  REQUIRE(s.cones.size() == 1);
  CHECK(s.cones[0].angle == doctest::Approx(6.0 * pi));
  CHECK(s.total_area() == doctest::Approx(2.0 * (1.0 + std::sqrt(2.0))));
}

TEST_CASE("bad gluings rejected") {
  HalfTranslationSurface s;
  s.polys = {{cx{0, 0}, cx{1, 0}, cx{1, 1}, cx{0, 1}}};
  s.gluings = {{{0, 0}, {0, 2}, 1, cx{0, 1}}}; // two edges left unglued
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);

  HalfTranslationSurface r;
  r.polys = {{cx{0, 0}, cx{2, 0}, cx{2, 1}, cx{0, 1}}};
  r.gluings = {{{0, 0}, {0, 2}, 1, cx{0, 1}}, {{0, 1}, {0, 3}, 1, cx{-2, 0}}};
  // 2x1 torus is fine
  CHECK_NOTHROW(r.validate());
}

TEST_CASE("straight line flow closes on the torus") {
  auto s = square_torus();
  auto r = trace_ray(s, {0, cx{0.5, 1e-6}}, cx{0, 1}, 10.0);
  CHECK(r.stop == RayResult::Stop::Closed);
  CHECK(r.length == doctest::Approx(1.0).epsilon(1e-8));
  // slope 2 closes with length sqrt(5)
  auto r2 = trace_ray(s, {0, cx{0.3, 1e-6}}, cx{1.0, 2.0}, 10.0);
  CHECK(r2.stop == RayResult::Stop::Closed);
  CHECK(r2.length == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
  // aimed at the corner: cone stop
  auto r3 = trace_ray(s, {0, cx{0.5, 0.5}}, cx{1.0, 1.0}, 10.0);
  CHECK(r3.stop == RayResult::Stop::Cone);
}

TEST_CASE("direct geodesic on the torus") {
  auto s = square_torus();
  auto g = flat_geodesic(s, {0, cx{0, 0.0001}}, {0, cx{0.3, 0.4001}});
  CHECK(g.length == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(g.legs.size() == 1);
  CHECK(g.cone_angles_ok);
}

TEST_CASE("geodesic through the regular torus vertex") {
  auto s = square_torus();
  auto g = flat_geodesic(s, {0, cx{0.1, 0.1}}, {0, cx{0.9, 0.9}});
  CHECK(g.length == doctest::Approx(2.0 * std::sqrt(0.02)).epsilon(1e-9));
  CHECK(g.legs.size() == 2);
  CHECK(g.cone_angles_ok);
}

TEST_CASE("l shape geodesic passes the cone point") {
  auto s = l_shaped_surface(1.0, 1.0);
  // endpoints straddling the notch, close enough that the cone route wins
  auto g = flat_geodesic(s, {0, cx{0.9, 1.2}}, {0, cx{1.2, 0.9}});
  double expect = 2.0 * std::hypot(0.1, 0.2);
  CHECK(g.length == doctest::Approx(expect).epsilon(1e-9));
  CHECK(g.legs.size() == 2);
  REQUIRE(g.legs[0].end_cone.has_value());
  CHECK(g.cone_angles_ok);
}

TEST_CASE("geodesic invariance under relabeling") {
  auto s = l_shaped_surface(1.0, 1.0);
  double L1 = flat_geodesic(s, {0, cx{0.9, 1.2}}, {0, cx{1.2, 0.9}}).length;
  // z -> -z symmetry: negate vertices, conjugate gluings to z -> sign*z - c
  HalfTranslationSurface neg = s;
  for (auto& P : neg.polys)
    for (auto& v : P) v = -v;
  for (auto& g : neg.gluings) g.offset = -g.offset;
  neg.cones.clear();
  neg.validate();
  double Ln =
      flat_geodesic(neg, {0, cx{-0.9, -1.2}}, {0, cx{-1.2, -0.9}}).length;
  CHECK(L1 == doctest::Approx(Ln).epsilon(1e-9));
  // translation of all data
  HalfTranslationSurface tsl = s;
  for (auto& P : tsl.polys)
    for (auto& v : P) v += cx{3, 5};
  for (auto& g : tsl.gluings) g.offset += cx{3, 5} - double(g.sign) * cx{3, 5};
  tsl.cones.clear();
  tsl.validate();
  double L2 =
      flat_geodesic(tsl, {0, cx{3.9, 6.2}}, {0, cx{4.2, 5.9}}).length;
  CHECK(L1 == doctest::Approx(L2).epsilon(1e-9));
}

TEST_CASE("torus cylinders") {
  auto s = square_torus();
  auto vert = detect_cylinders(s, {pi / 2.0}, 3.0);
  REQUIRE(vert.size() == 1);
  CHECK(vert[0].circumference == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(vert[0].width == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(vert[0].certified);

  auto sl = detect_cylinders(s, {std::atan2(2.0, 1.0)}, 3.0);
  REQUIRE(sl.size() == 1);
  CHECK(sl[0].circumference == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
  CHECK(sl[0].width == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-6));
}

TEST_CASE("octagon horizontal cylinders") {
  auto s = regular_octagon_surface();
  auto cyls = detect_cylinders(s, {0.0}, 8.0);
  REQUIRE(cyls.size() == 2);
  double rt2 = std::sqrt(2.0);
  auto& a = cyls[0].circumference < cyls[1].circumference ? cyls[0] : cyls[1];
  auto& b = cyls[0].circumference < cyls[1].circumference ? cyls[1] : cyls[0];
  CHECK(a.circumference == doctest::Approx(1.0 + rt2).epsilon(1e-6));
  CHECK(b.circumference == doctest::Approx(2.0 + rt2).epsilon(1e-6));
  CHECK(a.width == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(b.width == doctest::Approx(rt2 / 2.0).epsilon(1e-5));
  CHECK(a.certified);
  CHECK(b.certified);
}
