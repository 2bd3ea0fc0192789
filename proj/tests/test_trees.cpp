#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eslab/develop.hpp"
#include "eslab/surface.hpp"
#include "eslab/trees.hpp"

#include <cmath>

using namespace eslab;

static const double L2 = 2.0 * std::log(2.0); // translation length of diag(2, 1/2)

TEST_CASE("maximum displacement over a generator set") {
  Moebius g{cx{2.0}, cx{0.0}, cx{0.0}, cx{0.5}};
  Pt3 axis{cx{0.0}, 1.0};
  CHECK(scale_at({g}, axis) == doctest::Approx(L2).epsilon(1e-12));
  CHECK(scale_at({g, g.inverse()}, axis) == doctest::Approx(L2).epsilon(1e-12));
  CHECK(scale_at({g}, Pt3{cx{1.0}, 1.0}) > L2 + 0.1);
  CHECK(scale_at({Moebius{}}, axis) == 0.0);
  CHECK_THROWS_AS(scale_at({}, axis), std::invalid_argument);
}

TEST_CASE("approximate center of a single loxodromic") {
  Moebius g{cx{2.0}, cx{0.0}, cx{0.0}, cx{0.5}};
  auto [p, r] = approximate_center({g, g.inverse()}, Pt3{cx{1.0, 0.5}, 2.0});
  CHECK(r >= L2 - 1e-9);
  CHECK(r <= 1.02 * L2);
  CHECK(std::abs(p.z) < 0.05 * p.t); // near the (0, infinity) axis
}

TEST_CASE("approximate center of crossing axes") {
  Moebius a{cx{2.0}, cx{0.0}, cx{0.0}, cx{0.5}};
  Moebius b = from_trace_axis(cx{2.5}, cx{-1.0}, cx{1.0});
  auto [p, r] = approximate_center({a, b}, Pt3{cx{0.3, 0.1}, 2.5});
  CHECK(r >= L2 - 1e-9);
  CHECK(r <= 1.02 * L2);
  CHECK(dist(p, Pt3{cx{0.0}, 1.0}) < 0.15);
}

TEST_CASE("actions with one shared fixed point have no center") {
  Moebius p1{cx{1.0}, cx{1.0}, cx{0.0}, cx{1.0}};
  Moebius p2{cx{1.0}, cx{0.0, 1.0}, cx{0.0}, cx{1.0}};
  CHECK_THROWS_AS(approximate_center({p1, p2}, Pt3{cx{0.0}, 1.0}),
                  std::domain_error);
  Moebius lox{cx{2.0}, cx{0.0}, cx{0.0}, cx{0.5}};
  Moebius par0{cx{1.0}, cx{0.0}, cx{1.0}, cx{1.0}}; // parabolic fixing 0
  CHECK_THROWS_AS(approximate_center({lox, par0}, Pt3{cx{0.0}, 1.0}),
                  std::domain_error);
}

TEST_CASE("dual length function on the square torus") {
  auto s = square_torus();
  auto h = dual_length_function(
      s, cx{1.0}, {{1, 0}, {0, 1}, {1, 1}, {2, 3}, {-1, 2}});
  CHECK(h({{1, 0}}) == doctest::Approx(0.0));
  CHECK(h({{0, 1}}) == doctest::Approx(1.0));
  CHECK(h({{1, 1}}) == doctest::Approx(1.0));
  CHECK(h({{2, 3}}) == doctest::Approx(3.0));
  CHECK(h({{-1, 2}}) == doctest::Approx(2.0));
}

TEST_CASE("dual length function respects the differential scale") {
  auto s = square_torus();
  double th = 0.6;
  cx scale = std::exp(cx{0.0, th});
  auto h = dual_length_function(s, scale, {{1, 0}, {0, 1}, {3, -2}});
  CHECK(h({{1, 0}}) == doctest::Approx(std::abs(std::sin(th / 2))).epsilon(1e-12));
  CHECK(h({{0, 1}}) == doctest::Approx(std::abs(std::cos(th / 2))).epsilon(1e-12));
  cx root = std::sqrt(scale);
  CHECK(h({{3, -2}}) ==
        doctest::Approx(std::abs((root * cx{3.0, -2.0}).imag())).epsilon(1e-12));
  // homogeneity under class multiples
  cx sc{2.7, 1.3};
  auto h2 = dual_length_function(s, sc, {{1, 2}, {4, 8}, {-3, -6}});
  CHECK(h2({{4, 8}}) == doctest::Approx(4.0 * h2({{1, 2}})).epsilon(1e-12));
  CHECK(h2({{-3, -6}}) == doctest::Approx(3.0 * h2({{1, 2}})).epsilon(1e-12));
}

TEST_CASE("tree map sample validation") {
  TreeMapSample ok;
  ok.source = {cx{0.0}, cx{0.0, 1.0}, cx{0.0, 3.0}};
  ok.target_dist = {{0.0, 1.0, 3.0}, {1.0, 0.0, 2.0}, {3.0, 2.0, 0.0}};
  CHECK_NOTHROW(ok.validate());

  TreeMapSample bad = ok;
  bad.target_dist[0][1] = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument); // asymmetric

  bad = ok;
  bad.target_dist[1][1] = 0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument); // nonzero diagonal

  bad = ok;
  bad.target_dist[0][2] = bad.target_dist[2][0] = 10.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument); // triangle violation
}

static TreeMapSample projection_sample(const std::vector<cx>& pts) {
  // image of the vertical projection onto the real line of heights
  TreeMapSample s;
  s.source = pts;
  s.target_dist.assign(pts.size(), std::vector<double>(pts.size(), 0.0));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j)
      s.target_dist[i][j] = std::abs(pts[i].imag() - pts[j].imag());
  return s;
}

TEST_CASE("vertical projection is straight, folding is not") {
  auto s = projection_sample({cx{0.2, 0.3}, cx{-1.0, 0.9}, cx{0.4, -0.5}, cx{2.0, 2.0}});
  std::vector<std::pair<int, int>> segs;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) segs.push_back({i, j});
  auto rep = straightness_check(s, cx{1.0}, segs);
  CHECK(rep.all_pass);
  for (auto& it : rep.items) CHECK(it.err < 1e-12);

  // fold z -> |Im z| pulls the two sides together: d < flat height
  TreeMapSample f;
  f.source = {cx{0.0, -0.3}, cx{0.0, 0.5}};
  f.target_dist = {{0.0, 0.2}, {0.2, 0.0}};
  auto bad = straightness_check(f, cx{1.0}, {{0, 1}});
  CHECK_FALSE(bad.all_pass);
  CHECK(bad.items[0].h == doctest::Approx(0.8));
  CHECK(bad.items[0].d == doctest::Approx(0.2));
}

TEST_CASE("segments through zeros are pushed off or skipped") {
  TreeMapSample s;
  s.source = {cx{0.0, -0.5}, cx{0.0, 0.5}};
  s.target_dist = {{0.0, 1.0}, {1.0, 0.0}};
  auto rep = straightness_check(s, cx{1.0}, {{0, 1}}, 1e-9,
                                {CriticalPoint{cx{0.0}, 1}});
  CHECK(rep.all_pass);
  CHECK(rep.items[0].pushed);
  CHECK_FALSE(rep.items[0].skipped);
  CHECK(rep.items[0].h == doctest::Approx(1.0).epsilon(1e-9));

  auto rep2 = straightness_check(s, cx{1.0}, {{0, 1}}, 1e-9,
                                 {CriticalPoint{cx{0.0}, 2}});
  CHECK(rep2.items[0].skipped);
  CHECK(rep2.items[0].pass);
}

TEST_CASE("overflow-safe diagonal displacement") {
  cx w{0.7, 0.3};
  Pt3 x{cx{1.0}, 1.0};
  Moebius g{std::exp(w), cx{0.0}, cx{0.0}, std::exp(-w)};
  CHECK(diag_pair_distance(w, 1.0) ==
        doctest::Approx(dist(x, g.apply(x))).epsilon(1e-12));
  CHECK(diag_pair_distance(-w, 1.0) ==
        doctest::Approx(diag_pair_distance(w, 1.0)).epsilon(1e-12));

  // asymptotic branch agrees with the direct formula where both are finite
  for (double u : {31.0, 45.0}) {
    cx ww{u, 0.4};
    cx r = std::exp(ww);
    double a = std::abs(r - 1.0 / r), b = std::abs(r) - 1.0 / std::abs(r);
    double direct = std::acosh(1.0 + (a * a + b * b) / 2.0);
    CHECK(diag_pair_distance(ww, 1.0) == doctest::Approx(direct).epsilon(1e-10));
  }
  // branch switch is continuous
  double d1 = diag_pair_distance(cx{29.9999, 0.4}, 1.0);
  double d2 = diag_pair_distance(cx{30.0001, 0.4}, 1.0);
  CHECK(std::abs(d2 - d1) < 1e-3);
}

TEST_CASE("stable log trace") {
  for (cx mu : {cx{0.3, 1.2}, cx{-2.0, 0.7}, cx{500.0, 1.0}}) {
    double direct = std::log(std::abs(2.0 * std::cosh(mu)) + 2.0);
    CHECK(stable_log_trace(mu) == doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK(stable_log_trace(cx{800.0, 2.0}) == doctest::Approx(800.0).epsilon(1e-12));
}

TEST_CASE("multiplier family matches developed transport") {
  // constant differential t dz^2: transport over the period p has trace
  // 2 cosh(i sqrt(2t) p / 2)
  for (double t : {1.0, 100.0, 10000.0}) {
    auto d = from_poly({cx{t}});
    for (cx p : {cx{0.0, 1.0}, cx{0.7, 0.4}}) {
      Moebius m = transport_matrix(d, {cx{0.0}, p}, 1e-12);
      cx mu = cx{0.0, 1.0} * std::sqrt(2.0 * t) * p / 2.0;
      double lt = std::log(std::abs(m.tr()) + 2.0);
      CHECK(lt == doctest::Approx(stable_log_trace(mu)).epsilon(1e-7));
    }
  }
}

TEST_CASE("rescaled limit survey of a cylinder family") {
  auto fam = cylinder_family(5);
  auto rep = ms_limit_survey(fam, {1e2, 1e3, 1e4, 1e5, 1e6});
  REQUIRE(rep.limit_heights.size() == 5);
  for (int n = 1; n <= 5; ++n)
    CHECK(rep.limit_heights[n - 1] == doctest::Approx(n / 5.0).epsilon(1e-12));
  CHECK(rep.sup_norm_gap < 1e-3);
  CHECK(rep.length_drift < 1e-9); // l / sqrt(t) is exactly constant here
  for (auto& row : rep.rows) {
    CHECK(row.scale > 0.0);
    CHECK(row.delta < 1e-6); // abelian orbit metrics are degenerate-thin
    for (size_t i = 0; i < 5; ++i)
      CHECK(row.lengths[i] ==
            doctest::Approx(std::sqrt(2.0 * row.t) * (i + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("trace growth of a translation family") {
  auto fam = cylinder_family(3);
  auto g = growth_survey(fam, {1e2, 1e3, 1e4, 1e5, 1e6});
  CHECK(g.A == doctest::Approx(3.0 * std::sqrt(2.0) / 2.0).epsilon(1e-6));
  CHECK(g.fit_residual < 1e-6);
  CHECK(g.c == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(g.C == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-12));
  REQUIRE(g.ratio_at_tmax.size() == 3);
  CHECK(g.ratio_at_tmax[1] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));

  // a horizontal class stays bounded: zero rescaled length
  auto tor = torus_family({{1, 0}, {0, 1}});
  auto gt = growth_survey(tor, {1e2, 1e4, 1e6});
  CHECK(gt.ratio_at_tmax[0] == doctest::Approx(0.0));
  CHECK(gt.ratio_at_tmax[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("scaled word evaluation and displacement") {
  Moebius a{cx{1.3, 0.2}, cx{0.4}, cx{-0.1, 0.3}, cx{0.0}};
  a = Moebius{a.a, a.b, a.c, (cx{1.0} + a.b * a.c) / a.a}; // det 1
  Moebius b = from_trace_axis(cx{2.4}, cx{-1.0}, cx{2.0});
  std::vector<Moebius> gens{a, b};
  std::vector<int> word{1, 2, -1, 2, 2};
  Moebius direct = a * b * a.inverse() * b * b;
  auto sw = scaled_evaluate(gens, word);
  Pt3 x{cx{0.3, 0.2}, 1.7};
  CHECK(displacement_at(sw, x) ==
        doctest::Approx(dist(x, direct.apply(x))).epsilon(1e-10));

  // subadditivity of displacements over concatenation
  std::vector<std::vector<int>> ws{{1}, {2}, {1, 2}, {2, -1}, {1, 1, 2}};
  for (auto& v : ws)
    for (auto& w : ws) {
      auto vw = v;
      vw.insert(vw.end(), w.begin(), w.end());
      double lhs = displacement_at(scaled_evaluate(gens, vw), x);
      double rhs = displacement_at(scaled_evaluate(gens, v), x) +
                   displacement_at(scaled_evaluate(gens, w), x);
      CHECK(lhs <= rhs + 1e-9);
    }

  // far beyond double overflow for the raw product
  double u = 600.0;
  Moebius big{cx{std::exp(u)}, cx{0.0}, cx{0.0}, cx{std::exp(-u)}};
  Pt3 axis{cx{0.0}, 1.0};
  CHECK(displacement_at(scaled_evaluate({big}, {1}), axis) ==
        doctest::Approx(2.0 * u).epsilon(1e-9));
  CHECK(displacement_at(scaled_evaluate({big}, {1, 1}), axis) ==
        doctest::Approx(4.0 * u).epsilon(1e-9));
}

TEST_CASE("free family four-point defect decays like the inverse square root") {
  std::vector<std::vector<int>> words{{1},  {2},    {1, 2}, {2, 1},
                                      {1, 1}, {2, 2}, {1, -2}};
  auto rep = free_family_delta({1e2, 1e3, 1e4, 1e5, 1e6}, words, Pt3{cx{0.0}, 1.0});
  REQUIRE(rep.deltas.size() == 5);
  for (double d : rep.deltas) CHECK(d > 0.0);
  for (size_t i = 1; i < rep.deltas.size(); ++i)
    CHECK(rep.deltas[i] < rep.deltas[i - 1]);
  CHECK(rep.slope == doctest::Approx(-0.5).epsilon(0.1));
}
