#include "eslab/epstein.hpp"

#include <cmath>
#include <limits>

namespace eslab {

EpsteinFrame epstein_point(cx w, const MetricJet& jet) {
  if (!std::isfinite(jet.eta)) throw std::domain_error("metric zero");
  Moebius T{cx{1.0}, w, cx{0.0}, cx{1.0}};
  Moebius N{cx{1.0}, cx{0.0}, jet.eta_w, cx{1.0}};
  Moebius D{cx{std::exp(-jet.eta / 2.0)}, cx{0.0}, cx{0.0},
            cx{std::exp(jet.eta / 2.0)}};
  EpsteinFrame f;
  f.frame = T * N * D;
  f.point = f.frame.apply(Pt3{cx{0.0}, 2.0});
  f.ideal = w;
  return f;
}

static MetricJet pushforward_jet(const PlanarDifferential& d,
                                 const DevelopingJet& jet) {
  cx q = d.eval(jet.z);
  if (q == cx{0.0}) throw std::domain_error("metric zero");
  cx fp = jet.fprime();
  if (fp == cx{0.0}) throw std::domain_error("degenerate jet: f' = 0");
  cx eta_z = d.q.deriv().eval(jet.z) / d.q.eval(jet.z) / 4.0;
  MetricJet out;
  out.eta = 0.5 * std::log(2.0 * std::abs(q)) - std::log(std::abs(fp));
  out.eta_w = (eta_z - jet.log_derivative_ratio() / 2.0) / fp;
  return out;
}

EpsteinFrame epstein_schwarz(const PlanarDifferential& d, const DevelopingJet& jet) {
  return epstein_point(jet.f(), pushforward_jet(d, jet));
}

FormsAtPoint forms_from_values(cx phi, cx hat) {
  double ap = std::abs(phi), ah = std::abs(hat);
  FormsAtPoint f;
  f.I20 = -hat / 2.0;
  f.I11 = (ah * ah + ap * ap) / (2.0 * ap);
  f.II = (ah * ah - ap * ap) / (2.0 * ap);
  f.II20 = cx{0.0};
  f.n_h = std::abs(ah - ap) / (2.0 * std::sqrt(ap * ah));
  f.n_v = (ah + ap) / (2.0 * std::sqrt(ap * ah));
  f.kappa_v = (ah - ap) / (ah + ap);
  f.immersed = std::abs(ah - ap) > 1e-14 * (ah + ap);
  f.kappa_h = std::abs(f.kappa_v) < 1e-10
                  ? std::numeric_limits<double>::infinity()
                  : 1.0 / f.kappa_v;
  f.eps = std::abs(phi - hat) / ap;
  return f;
}

FormsAtPoint general_fundamental_forms(const MetricJet& jet, cx B) {
  double s2 = std::exp(2.0 * jet.eta); // sigma^2
  double K = -4.0 * jet.eta_wwbar / s2;
  if (std::abs(K) < 1e-14) return forms_from_values(cx{s2 / 2.0}, -2.0 * B);
  FormsAtPoint f;
  f.I20 = B * (1.0 - K);
  f.I11 = 4.0 / s2 * std::norm(B) + 0.25 * s2 * (1.0 - K) * (1.0 - K);
  f.II = 4.0 / s2 * std::norm(B) - 0.25 * s2 * (1.0 - K * K);
  f.II20 = -K * B;
  double nan = std::numeric_limits<double>::quiet_NaN();
  f.n_h = f.n_v = f.kappa_h = f.kappa_v = f.eps = nan;
  f.immersed = f.I11 * f.I11 > std::norm(f.I20) * 4.0;
  return f;
}

FormsAtPoint epstein_forms(const PlanarDifferential& d, cx z) {
  return forms_from_values(d.eval(z), phi_hat(d).eval(z));
}

std::vector<cx> trace_leaf(const PlanarDifferential& d, cx z0, double length,
                           bool vertical, int nsamples, int substeps) {
  PlanarDifferential hat = phi_hat(d);
  cx p_prev = std::sqrt(hat.eval(z0));
  cx rot = vertical ? cx{0.0, 1.0} : cx{1.0};
  auto vel = [&](cx z) {
    cx p = std::sqrt(hat.eval(z));
    if (std::abs(p - p_prev) > std::abs(p + p_prev)) p = -p;
    p_prev = p;
    return rot / (p * std::sqrt(2.0));
  };
  std::vector<cx> path{z0};
  double ds = length / double((nsamples - 1) * substeps);
  cx z = z0;
  for (int i = 1; i < nsamples; ++i) {
    for (int j = 0; j < substeps; ++j) {
      cx k1 = vel(z);
      cx k2 = vel(z + 0.5 * ds * k1);
      cx k3 = vel(z + 0.5 * ds * k2);
      cx k4 = vel(z + ds * k3);
      z += ds / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    path.push_back(z);
  }
  return path;
}

std::vector<Pt3> image_of_path(const PlanarDifferential& d,
                               const std::vector<cx>& path, double tol) {
  std::vector<Pt3> out;
  DevelopingJet j = make_jet(path.front(), cx{0.0}, cx{1.0}, cx{0.0});
  out.push_back(epstein_schwarz(d, j).point);
  for (size_t i = 1; i < path.size(); ++i) {
    j = continue_jet(d, {path[i - 1], path[i]}, tol, j);
    out.push_back(epstein_schwarz(d, j).point);
  }
  return out;
}

LeafCurvature leaf_curvature(const PlanarDifferential& d, cx z, double h) {
  LeafCurvature lc;
  lc.standoff = dist_to_zeros(d, z);
  lc.bound = 12.0 / (lc.standoff * lc.standoff);
  lc.hypothesis_ok = lc.standoff > 2.0 * std::sqrt(3.0);
  auto k_at = [&](double step) {
    auto fwd = trace_leaf(d, z, 2.0 * step, true, 3);
    auto bwd = trace_leaf(d, z, -2.0 * step, true, 3);
    std::vector<cx> path{bwd[2], bwd[1], z, fwd[1], fwd[2]};
    auto pts = image_of_path(d, path, 1e-12);
    return curve_curvature(pts, step, 2);
  };
  double k1 = k_at(h), k2 = k_at(h / 2.0);
  lc.k = (4.0 * k2 - k1) / 3.0;
  lc.pass = lc.hypothesis_ok && lc.k < lc.bound;
  return lc;
}

static void finish_report(const PlanarDifferential& d, CollapseReport& r,
                          const std::vector<cx>& path) {
  r.standoff = std::numeric_limits<double>::infinity();
  for (cx z : path) r.standoff = std::min(r.standoff, dist_to_zeros(d, z));
  r.points = image_of_path(d, path, 1e-12);
  r.endpoint_distance = dist(r.points.front(), r.points.back());
  for (size_t i = 0; i < r.points.size(); ++i)
    for (size_t j = i + 1; j < r.points.size(); ++j)
      r.image_diameter = std::max(r.image_diameter, dist(r.points[i], r.points[j]));
  PlanarDifferential hat = phi_hat(d);
  cx period = path_holonomy(hat, path, 1e-6, 1e-11) * std::sqrt(2.0);
  r.width = std::abs(period.real());
  r.height = std::abs(period.imag());
  double c = 18.0 / (r.standoff * r.standoff);
  r.hypothesis_ok = r.standoff > 4.0;
  switch (r.kind) {
    case SegmentKind::Horizontal:
      r.bound = c * r.length;
      r.pass = r.hypothesis_ok && r.image_diameter <= r.bound + 1e-9;
      break;
    case SegmentKind::Vertical:
      r.bound = c;
      r.pass = r.hypothesis_ok &&
               r.endpoint_distance < (1.0 + c) * r.length + 1e-9 &&
               r.endpoint_distance > (1.0 - c) * r.length - 1e-9;
      break;
    case SegmentKind::General:
      r.bound = 0.0;
      r.pass = r.hypothesis_ok;
      break;
  }
}

CollapseReport collapse_report(const PlanarDifferential& d, cx z0, double length,
                               SegmentKind kind, int nsamples) {
  CollapseReport r;
  r.kind = kind;
  r.length = std::abs(length);
  auto path = trace_leaf(d, z0, length, kind == SegmentKind::Vertical, nsamples);
  finish_report(d, r, path);
  return r;
}

CollapseReport collapse_segment_report(const PlanarDifferential& d, cx z0, cx z1,
                                       int nsamples) {
  CollapseReport r;
  r.kind = SegmentKind::General;
  std::vector<cx> path;
  for (int i = 0; i < nsamples; ++i)
    path.push_back(z0 + (z1 - z0) * (double(i) / (nsamples - 1)));
  r.length = phi_length(d, z0, z1) * std::sqrt(2.0);
  finish_report(d, r, path);
  return r;
}

EpsteinMesh epstein_mesh(const PlanarDifferential& d, cx corner0, cx corner1,
                         int nx, int ny, double standoff) {
  EpsteinMesh m;
  m.nx = nx;
  m.ny = ny;
  if (nx < 1 || ny < 1) return m;
  m.vertices.resize(size_t(nx) * ny);
  double x0 = corner0.real(), y0 = corner0.imag();
  double dx = nx > 1 ? (corner1.real() - x0) / (nx - 1) : 0.0;
  double dy = ny > 1 ? (corner1.imag() - y0) / (ny - 1) : 0.0;
  PlanarDifferential hat = phi_hat(d);
  std::vector<double> sign(m.vertices.size(), 0.0); // sign of |phi_hat| - |phi|
  // jets continued up the first column, then across each row
  DevelopingJet col = make_jet(cx{x0, y0}, cx{0.0}, cx{1.0}, cx{0.0});
  for (int j = 0; j < ny; ++j) {
    cx zc{x0, y0 + j * dy};
    if (j > 0) col = continue_jet(d, {cx{x0, y0 + (j - 1) * dy}, zc}, 1e-11, col);
    DevelopingJet row = col;
    for (int i = 0; i < nx; ++i) {
      cx z{x0 + i * dx, y0 + j * dy};
      if (i > 0) row = continue_jet(d, {cx{x0 + (i - 1) * dx, z.imag()}, z}, 1e-11, row);
      MeshVertex& v = m.vertices[size_t(j) * nx + i];
      v.z = z;
      v.dist = dist_to_zeros(d, z);
      if (v.dist < standoff || d.eval(z) == cx{0.0}) continue;
      auto f = forms_from_values(d.eval(z), hat.eval(z));
      v.kappa_v = f.kappa_v;
      v.eps = f.eps;
      v.point = epstein_schwarz(d, row).point;
      v.valid = true;
      sign[size_t(j) * nx + i] = f.kappa_v > 0 ? 1.0 : -1.0;
    }
  }
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      int a = j * nx + i, b = a + 1, c = a + nx, e = c + 1;
      if (!(m.vertices[a].valid && m.vertices[b].valid && m.vertices[c].valid &&
            m.vertices[e].valid))
        continue;
      double s = sign[a];
      if (sign[b] != s || sign[c] != s || sign[e] != s) continue;
      m.faces.push_back({a, b, e});
      m.faces.push_back({a, e, c});
    }
  return m;
}

static double frame_defect(const std::function<Moebius(cx)>& frame, cx w, double h) {
  double worst = 0.0;
  Moebius E0 = frame(w).normalized();
  for (cx dir : {cx{1.0}, cx{0.0, 1.0}}) {
    Moebius Ep = frame(w + dir * h), Em = frame(w - dir * h);
    Moebius dE{(Ep.a - Em.a) / (2.0 * h), (Ep.b - Em.b) / (2.0 * h),
               (Ep.c - Em.c) / (2.0 * h), (Ep.d - Em.d) / (2.0 * h)};
    Moebius A = E0.inverse() * dE;
    worst = std::max(worst, std::abs(A.a.real()));
  }
  return worst;
}

double legendrian_defect(const std::function<MetricJet(cx)>& jet_fn, cx w, double h) {
  return frame_defect(
      [&](cx u) { return epstein_point(u, jet_fn(u)).frame; }, w, h);
}

double legendrian_defect(const PlanarDifferential& d, cx z, double h) {
  DevelopingJet base = make_jet(z, cx{0.0}, cx{1.0}, cx{0.0});
  auto frame = [&](cx u) {
    DevelopingJet j = std::abs(u - z) < 1e-15
                          ? base
                          : continue_jet(d, {z, u}, 1e-12, base);
    return epstein_schwarz(d, j).frame;
  };
  // real directions in the source chart map to real surface directions, so
  // the contact condition can be differenced in z directly
  return frame_defect(frame, z, h);
}

} // namespace eslab
