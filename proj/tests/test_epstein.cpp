#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eslab/epstein.hpp"

#include <cmath>
#include <random>

using namespace eslab;

static MetricJet log_metric_jet(cx w) {
  // |dw| / |w|
  return MetricJet{-std::log(std::abs(w)), -1.0 / (2.0 * w)};
}

TEST_CASE("envelope point of the euclidean metric") {
  cx w{1.0, 2.0};
  auto f = epstein_point(w, MetricJet{});
  CHECK(std::abs(f.point.z - w) < 1e-14);
  CHECK(f.point.t == doctest::Approx(2.0));
  CHECK(std::abs(f.frame.det() - cx{1.0}) < 1e-14);
}

TEST_CASE("envelope of the cylinder metric projects to one axis") {
  for (double th : {0.0, 0.7, 2.1, -1.3}) {
    cx w = std::polar(1.0, th);
    auto f = epstein_point(w, log_metric_jet(w));
    CHECK(std::abs(f.point.z) < 1e-13);
    CHECK(f.point.t == doctest::Approx(1.0));
  }
  for (double s : {0.4, 1.3, 3.0}) {
    cx w{std::exp(-s)};
    auto f = epstein_point(w, log_metric_jet(w));
    CHECK(std::abs(f.point.z) < 1e-13);
    CHECK(f.point.t == doctest::Approx(std::exp(-s)));
  }
  MetricJet degenerate;
  degenerate.eta = -std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(epstein_point(cx{1.0}, degenerate), std::domain_error);
}

TEST_CASE("contact certificate for an analytic metric jet") {
  for (cx w : {cx{1.0}, cx{0.5, 1.5}, cx{-2.0, 0.3}})
    CHECK(legendrian_defect(log_metric_jet, w, 1e-4) < 1e-6);
}

TEST_CASE("constant differential collapses to a geodesic axis") {
  auto d = from_poly({cx{1.0}});
  cx a{0.0, std::sqrt(2.0)};
  auto j0 = make_jet(cx{0.0}, cx{1.0}, a, a);
  auto p0 = epstein_schwarz(d, j0).point;
  CHECK(std::abs(p0.z) < 1e-12);
  CHECK(p0.t == doctest::Approx(1.0));
  for (double s : {1.0, 5.0, 20.0}) {
    auto j = continue_jet(d, {cx{0.0}, cx{0.0, s}}, 1e-12, j0);
    auto p = epstein_schwarz(d, j).point;
    CHECK(std::abs(p.z) < 1e-9);
    CHECK(p.t == doctest::Approx(std::exp(-std::sqrt(2.0) * s)).epsilon(1e-8));
    CHECK(dist(p0, p) == doctest::Approx(std::sqrt(2.0) * s).epsilon(1e-8));
  }
  // germ-independent form of the same statements
  auto r = collapse_report(d, cx{0.0}, 5.0 * std::sqrt(2.0), SegmentKind::Vertical);
  CHECK(r.endpoint_distance == doctest::Approx(5.0 * std::sqrt(2.0)).epsilon(1e-8));
  CHECK(r.pass);
  auto h = collapse_report(d, cx{0.0}, 10.0, SegmentKind::Horizontal);
  CHECK(h.image_diameter < 1e-9);
  CHECK(h.pass);
}

TEST_CASE("fundamental forms of q = z at z = 2") {
  auto d = from_poly({cx{0.0}, cx{1.0}});
  auto f = epstein_forms(d, cx{2.0});
  CHECK(f.kappa_v == doctest::Approx(5.0 / 133.0).epsilon(1e-12));
  CHECK(f.kappa_h == doctest::Approx(133.0 / 5.0).epsilon(1e-12));
  CHECK(f.kappa_h * f.kappa_v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.eps == doctest::Approx(5.0 / 64.0).epsilon(1e-12));
  CHECK(f.kappa_v <= f.eps);
  CHECK(f.immersed);
  CHECK(std::abs(f.I20 - cx{-69.0 / 64.0}) < 1e-12);
}

TEST_CASE("constant differential is nowhere immersed") {
  auto d = from_poly({cx{1.0}});
  for (cx z : {cx{0.0}, cx{3.0, -2.0}, cx{-1.0, 7.0}}) {
    auto f = epstein_forms(d, z);
    CHECK_FALSE(f.immersed);
    CHECK(std::isinf(f.kappa_h));
    CHECK(f.n_h == doctest::Approx(0.0));
    CHECK(f.n_v == doctest::Approx(1.0));
  }
}

TEST_CASE("general forms reduce to the flat-case formulas") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-4.0, 4.0);
  std::vector<PlanarDifferential> qs{
      from_poly({cx{1.0}}), from_poly({cx{0.0}, cx{1.0}}),
      from_poly({cx{-1.0}, cx{0.0}, cx{1.0}}),
      from_poly({cx{0.0}, cx{-1.0}, cx{0.0}, cx{1.0}})};
  for (auto& d : qs) {
    auto hat = phi_hat(d);
    for (int i = 0; i < 250; ++i) {
      cx z{U(rng), U(rng)};
      if (std::abs(d.eval(z)) < 1e-3) continue;
      cx phi = d.eval(z), h = hat.eval(z);
      MetricJet jet;
      jet.eta = 0.5 * std::log(2.0 * std::abs(phi));
      auto g = general_fundamental_forms(jet, -h / 2.0);
      auto e = forms_from_values(phi, h);
      CHECK(std::abs(g.I20 - e.I20) < 1e-12 * (1.0 + std::abs(e.I20)));
      CHECK(std::abs(g.I11 - e.I11) < 1e-12 * (1.0 + std::abs(e.I11)));
      CHECK(std::abs(g.II - e.II) < 1e-12 * (1.0 + std::abs(e.II)));
      CHECK(g.kappa_v == doctest::Approx(e.kappa_v).epsilon(1e-12));
      if (e.immersed)
        CHECK(g.kappa_h * g.kappa_v == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("general forms at constant curvature") {
  MetricJet flat; // sigma = |dz|
  auto f = general_fundamental_forms(flat, cx{0.0});
  CHECK(std::abs(f.I20) < 1e-15);
  CHECK(f.I11 == doctest::Approx(0.25));
  CHECK(f.II == doctest::Approx(-0.25));

  MetricJet sphere;       // sigma = |dz| with K = 1
  sphere.eta_wwbar = -0.25;
  auto s = general_fundamental_forms(sphere, cx{0.0});
  CHECK(s.II == doctest::Approx(0.0));
  CHECK(std::abs(s.II20) < 1e-15);
}

TEST_CASE("finite-difference metric matches the closed form") {
  auto d = from_poly({cx{0.0}, cx{1.0}});
  cx z{2.0, 0.5};
  auto f = epstein_forms(d, z);
  DevelopingJet base = make_jet(z, cx{0.0}, cx{1.0}, cx{0.0});
  auto ep = [&](cx w) {
    auto j = continue_jet(d, {z, w}, 1e-13, base);
    return epstein_schwarz(d, j).point;
  };
  for (cx xi : {cx{1.0}, std::polar(1.0, M_PI / 4.0), cx{0.0, 1.0}}) {
    double want = f.I11 + 2.0 * (f.I20 * xi * xi).real();
    auto speed = [&](double h) {
      return dist(ep(z + xi * h), ep(z - xi * h)) / (2.0 * h);
    };
    double g1 = speed(1e-3), g2 = speed(5e-4);
    double g = (4.0 * g2 - g1) / 3.0;
    CHECK(g * g == doctest::Approx(want).epsilon(1e-6));
  }
}

TEST_CASE("principal directions align with the leaf directions") {
  auto d = from_poly({cx{0.0}, cx{1.0}});
  auto hat = phi_hat(d);
  for (cx z : {cx{2.0}, cx{1.0, 2.0}, cx{-3.0, 1.5}}) {
    auto f = epstein_forms(d, z);
    // eigendirections of [[I11 + 2 Re I20, -2 Im I20], [-2 Im I20, I11 - 2 Re I20]]
    double off = -2.0 * f.I20.imag(), diag = 2.0 * f.I20.real();
    double theta_max = 0.5 * std::atan2(off, diag); // largest eigenvalue
    cx vert = cx{0.0, 1.0} / std::sqrt(hat.eval(z));
    double theta_v = std::arg(vert);
    double delta = std::remainder(theta_max - theta_v, M_PI);
    CHECK(std::abs(delta) < 1e-6);
  }
}

TEST_CASE("parallel flow matches rescaled metrics") {
  auto d = from_poly({cx{0.0}, cx{1.0}});
  cx z{2.0, 1.0};
  DevelopingJet j = make_jet(z, cx{0.0}, cx{1.0}, cx{0.0});
  auto base = epstein_schwarz(d, j);
  for (double t : {0.1, -0.1}) {
    auto scaled = d;
    scaled.scale = std::exp(2.0 * t);
    auto moved = epstein_schwarz(scaled, j).point;
    auto flowed = base.frame.apply(Pt3{cx{0.0}, 2.0 * std::exp(-t)});
    CHECK(std::abs(moved.z - flowed.z) < 1e-10);
    CHECK(moved.t == doctest::Approx(flowed.t).epsilon(1e-10));
  }
}

TEST_CASE("contact certificate for developed frames") {
  auto dz = from_poly({cx{0.0}, cx{1.0}});
  CHECK(legendrian_defect(dz, cx{2.0, 1.0}) < 1e-6);
  auto d2 = from_poly({cx{-1.0}, cx{0.0}, cx{1.0}});
  CHECK(legendrian_defect(d2, cx{3.0, 2.0}) < 1e-6);
}

TEST_CASE("leaf curvature obeys the inverse-square bound") {
  auto flat = from_poly({cx{1.0}});
  auto lc0 = leaf_curvature(flat, cx{3.0}, 0.01);
  CHECK(std::abs(lc0.k) < 1e-6);

  auto dz = from_poly({cx{0.0}, cx{1.0}});
  cx z0{std::pow(15.0, 2.0 / 3.0)}; // flat distance 10 from the zero
  auto lc = leaf_curvature(dz, z0);
  CHECK(lc.standoff == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(lc.hypothesis_ok);
  CHECK(lc.k < 0.12);
  CHECK(lc.pass);

  auto d2 = from_poly({cx{-1.0}, cx{0.0}, cx{1.0}});
  auto lc2 = leaf_curvature(d2, cx{0.0, 6.0});
  CHECK(lc2.standoff > 8.0);
  CHECK(lc2.pass);
}

TEST_CASE("collapse reports for q = z") {
  auto d = from_poly({cx{0.0}, cx{1.0}});
  cx zh{std::pow(15.0, 2.0 / 3.0)};
  auto h = collapse_report(d, zh, 1.0, SegmentKind::Horizontal);
  CHECK(h.standoff > 4.0);
  CHECK(h.image_diameter < 18.0 / (h.standoff * h.standoff));
  CHECK(h.pass);

  cx zv{std::pow(18.0, 2.0 / 3.0)};
  auto v = collapse_report(d, zv, 5.0, SegmentKind::Vertical);
  double c = 18.0 / (v.standoff * v.standoff);
  CHECK(v.endpoint_distance > (1.0 - c) * 5.0);
  CHECK(v.endpoint_distance < (1.0 + c) * 5.0);
  CHECK(v.pass);

  auto g = collapse_segment_report(d, zh, zh + cx{1.0, 1.0});
  CHECK(g.length == doctest::Approx(phi_length(d, zh, zh + cx{1.0, 1.0}) *
                                    std::sqrt(2.0)));
  CHECK(g.endpoint_distance > 0.0);
}

TEST_CASE("mesh of the constant differential lies on one geodesic") {
  auto d = from_poly({cx{1.0}});
  auto m = epstein_mesh(d, cx{0.0, 0.0}, cx{1.0, 1.0}, 5, 5, 0.0);
  REQUIRE(m.vertices.size() == 25);
  for (auto& v : m.vertices) CHECK(v.valid);
  // collinearity: among any three image points the largest pairwise distance
  // equals the sum of the other two
  auto& a = m.vertices[0].point;
  auto& b = m.vertices[24].point;
  for (auto& v : m.vertices) {
    double ab = dist(a, b), av = dist(a, v.point), vb = dist(v.point, b);
    double mx = std::max({ab, av, vb});
    CHECK(std::abs(ab + av + vb - 2.0 * mx) < 1e-7);
  }
}

TEST_CASE("mesh of q = z respects the standoff") {
  auto d = from_poly({cx{0.0}, cx{1.0}});
  auto m = epstein_mesh(d, cx{-9.0, -9.0}, cx{9.0, 9.0}, 25, 25, 4.0);
  CHECK_FALSE(m.faces.empty());
  size_t valid = 0;
  for (auto& v : m.vertices) {
    if (!v.valid) continue;
    ++valid;
    CHECK(v.dist >= 4.0);
    CHECK(v.eps <= 6.0 / (v.dist * v.dist) + 1e-9);
  }
  CHECK(valid > 200);
  // the vertex at the zero is excluded
  CHECK_FALSE(m.vertices[12 * 25 + 12].valid);
}
