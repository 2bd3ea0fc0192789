#include "eslab/qdiff.hpp"

#include <algorithm>
#include <cmath>

namespace eslab {

PlanarDifferential make_differential(RatFn<cx> q, Chart chart, cx scale) {
  if (q.is_zero()) throw std::domain_error("degenerate differential");
  PlanarDifferential d;
  d.q = std::move(q);
  d.chart = chart;
  d.scale = scale;
  auto zr = cluster_roots(poly_roots(d.q.num));
  auto pr = cluster_roots(poly_roots(d.q.den));
  // cancel common root locations (unreduced input)
  for (auto& [z, k] : zr) {
    for (auto& [p, m] : pr) {
      if (std::abs(z - p) < 1e-8 * (1.0 + std::abs(z))) {
        int c = std::min(k, m);
        k -= c;
        m -= c;
      }
    }
  }
  for (auto& [z, k] : zr)
    if (k > 0) d.zeros.push_back({z, k});
  for (auto& [p, m] : pr) {
    if (m > 2) throw std::domain_error("pole of order > 2");
    if (m > 0) d.poles.push_back({p, m});
  }
  return d;
}

PlanarDifferential from_poly(std::initializer_list<cx> coeffs, Chart chart) {
  return make_differential(RatFn<cx>::from_poly(Poly<cx>(std::vector<cx>(coeffs))), chart);
}

PlanarDifferential beta(const PlanarDifferential& d) {
  // scale invariant, so the stored scale drops out
  PlanarDifferential b;
  b.q = beta_of(d.q);
  b.chart = d.chart;
  b.scale = cx{1.0};
  // double poles sit exactly at the zeros of q
  for (auto& z : d.zeros) b.poles.push_back({z.z, 2});
  return b;
}

PlanarDifferential phi_hat(const PlanarDifferential& d) {
  PlanarDifferential h;
  h.q = d.q * d.scale - beta_of(d.q);
  h.chart = d.chart;
  h.scale = cx{1.0};
  for (auto& z : d.zeros) h.poles.push_back({z.z, 2});
  auto zr = cluster_roots(poly_roots(h.q.num));
  for (auto& [z, k] : zr) {
    bool at_pole = false;
    for (auto& p : h.poles)
      if (std::abs(z - p.z) < 1e-7 * (1.0 + std::abs(z))) at_pole = true;
    if (!at_pole) h.zeros.push_back({z, k});
  }
  return h;
}

static double point_segment_dist(cx p, cx a, cx b) {
  cx ab = b - a;
  double L2 = std::norm(ab);
  if (L2 == 0.0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(ab)).real() / L2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

void check_segment_margin(const PlanarDifferential& d, cx a, cx b,
                          double margin_frac, bool include_zeros) {
  double margin = margin_frac * std::abs(b - a);
  if (include_zeros)
    for (auto& z : d.zeros)
      if (point_segment_dist(z.z, a, b) < margin)
        throw SingularSegment("segment passes within margin of a zero");
  for (auto& p : d.poles)
    if (point_segment_dist(p.z, a, b) < margin)
      throw SingularSegment("segment passes within margin of a pole");
}

// branch continuous sqrt samples along a -> b at n+1 uniform points,
// starting from the given seed (or the principal branch when seed is 0)
static std::vector<cx> sqrt_samples(const PlanarDifferential& d, cx a, cx b,
                                    size_t n, cx seed) {
  std::vector<cx> w(n + 1);
  cx prev = seed;
  for (size_t i = 0; i <= n; ++i) {
    cx z = a + (b - a) * (double(i) / double(n));
    cx s = std::sqrt(d.eval(z));
    if (i == 0 && prev == cx{0.0}) prev = s;
    if (std::abs(s - prev) > std::abs(s + prev)) s = -s;
    w[i] = s;
    prev = s;
  }
  return w;
}

// composite Simpson with doubling until two levels agree
static cx simpson_doubling(const PlanarDifferential& d, cx a, cx b, cx seed,
                           double tol, cx* end_branch) {
  cx prev_val{0.0};
  for (int k = 4; k <= 22; ++k) {
    size_t n = size_t(1) << k;
    auto w = sqrt_samples(d, a, b, n, seed);
    cx sum = w[0] + w[n];
    for (size_t i = 1; i < n; i += 2) sum += 4.0 * w[i];
    for (size_t i = 2; i < n; i += 2) sum += 2.0 * w[i];
    cx val = sum * (b - a) / (3.0 * double(n));
    if (k > 4 && std::abs(val - prev_val) < tol * (1.0 + std::abs(val))) {
      if (end_branch) *end_branch = w[n];
      return val;
    }
    prev_val = val;
    if (k == 22 && end_branch) *end_branch = w[n];
  }
  return prev_val;
}

cx path_holonomy(const PlanarDifferential& d, const std::vector<cx>& waypoints,
                 double margin_frac, double tol) {
  if (waypoints.size() < 2) throw std::invalid_argument("need a path");
  cx total{0.0}, seed{0.0};
  for (size_t i = 0; i + 1 < waypoints.size(); ++i) {
    check_segment_margin(d, waypoints[i], waypoints[i + 1], margin_frac);
    cx endb;
    total += simpson_doubling(d, waypoints[i], waypoints[i + 1], seed, tol, &endb);
    seed = endb;
  }
  return total;
}

cx segment_holonomy(const PlanarDifferential& d, cx a, cx b, double margin_frac,
                    double tol) {
  check_segment_margin(d, a, b, margin_frac);
  cx v = simpson_doubling(d, a, b, cx{0.0}, tol, nullptr);
  if (v.imag() < 0.0 || (std::abs(v.imag()) < 1e-12 * std::abs(v) && v.real() < 0.0))
    v = -v;
  return v;
}

double phi_length(const PlanarDifferential& d, cx a, cx b, double tol) {
  // integrand |q|^{1/2} may vanish at either endpoint zero; the substitution
  // t = s^2 (3 - 2s) has dt/ds = 0 at both ends, taming the sqrt singularities
  auto f = [&](double t) { return std::sqrt(std::abs(d.eval(a + (b - a) * t))); };
  double prev = 0.0;
  for (int k = 4; k <= 22; ++k) {
    size_t n = size_t(1) << k;
    double sum = 0.0;
    for (size_t i = 0; i <= n; ++i) {
      double s = double(i) / double(n);
      double t = s * s * (3.0 - 2.0 * s);
      double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += w * f(t) * 6.0 * s * (1.0 - s);
    }
    double val = sum / (3.0 * double(n)) * std::abs(b - a);
    if (k > 4 && std::abs(val - prev) < tol * (1.0 + std::abs(val))) return val;
    prev = val;
  }
  return prev;
}

double dist_to_zeros(const PlanarDifferential& d, cx z) {
  double best = std::numeric_limits<double>::infinity();
  for (auto& zero : d.zeros) {
    cx ab = z - zero.z;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return 0.0;
    // split where another zero sits on the segment, so every integration
    // piece is singular only at its endpoints
    std::vector<double> ts{0.0, 1.0};
    for (auto& o : d.zeros) {
      double t = ((o.z - zero.z) * std::conj(ab)).real() / len2;
      if (t > 1e-12 && t < 1.0 - 1e-12 &&
          std::abs(o.z - (zero.z + t * ab)) < 1e-12 * (1.0 + std::abs(ab)))
        ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    double sum = 0.0;
    for (size_t i = 0; i + 1 < ts.size(); ++i)
      sum += phi_length(d, zero.z + ts[i] * ab, zero.z + ts[i + 1] * ab);
    best = std::min(best, sum);
  }
  return best;
}

std::vector<EpsSample> epsilon_bound_check(const PlanarDifferential& d,
                                           const std::vector<cx>& samples) {
  RatFn<cx> b = beta_of(d.q);
  RatFn<cx> eps_fn = b / (d.q * d.scale); // beta is scale free, q is not
  std::vector<EpsSample> out;
  for (cx z : samples) {
    EpsSample s;
    s.z = z;
    double near = std::numeric_limits<double>::infinity();
    for (auto& zero : d.zeros) near = std::min(near, std::abs(z - zero.z));
    if (near < 1e-9) {
      s.excluded = true;
      out.push_back(s);
      continue;
    }
    s.eps = std::abs(eps_fn.eval(z));
    s.dist = dist_to_zeros(d, z);
    // flat gradient: |d(eps)/dw| with dw = sqrt(q) dz; eps not holomorphic,
    // use the max directional derivative over the flat unit circle
    double h = 1e-5 * (1.0 + std::abs(z));
    double gx = (std::abs(eps_fn.eval(z + h)) - std::abs(eps_fn.eval(z - h))) / (2 * h);
    double gy = (std::abs(eps_fn.eval(z + cx{0, 1} * h)) -
                 std::abs(eps_fn.eval(z - cx{0, 1} * h))) /
                (2 * h);
    s.grad = std::hypot(gx, gy) / std::sqrt(std::abs(d.eval(z)));
    s.pass_eps = s.eps <= 6.0 / (s.dist * s.dist) + 1e-12;
    s.pass_grad = s.grad <= 48.0 / (s.dist * s.dist * s.dist) + 1e-12;
    out.push_back(s);
  }
  return out;
}

CompareReport compare_differentials(const PlanarDifferential& phi,
                                    const PlanarDifferential& psi, cx center,
                                    double radius,
                                    const std::vector<std::pair<cx, cx>>& segments) {
  CompareReport rep;
  // certified sup of |psi - phi|/|phi| on the disk: grid plus one refinement
  double sup = 0.0;
  int N = 48;
  for (int pass = 0; pass < 2; ++pass) {
    double r = pass == 0 ? radius : radius * 1.02; // slack ring guards the boundary
    for (int i = -N; i <= N; ++i)
      for (int j = -N; j <= N; ++j) {
        cx z = center + cx{r * i / N, r * j / N};
        if (std::abs(z - center) > r) continue;
        double fv = std::abs(phi.eval(z));
        if (fv < 1e-14) continue;
        sup = std::max(sup, std::abs(psi.eval(z) - phi.eval(z)) / fv);
      }
    N = 96;
  }
  rep.delta = sup;
  for (auto& [a, b] : segments) {
    CompareSegment cs;
    cs.a = a;
    cs.b = b;
    cs.L_phi = phi_length(phi, a, b);
    cs.L_psi = phi_length(psi, a, b);
    cx hol_phi = segment_holonomy(phi, a, b);
    cx hol_psi = segment_holonomy(psi, a, b);
    cs.w_phi = std::abs(hol_phi.real());
    cs.h_phi = std::abs(hol_phi.imag());
    cs.w_psi = std::abs(hol_psi.real());
    cs.h_psi = std::abs(hol_psi.imag());
    double standoff = std::min(dist_to_zeros(phi, a), dist_to_zeros(phi, b));
    cs.hypothesis_ok = rep.delta < 0.25 &&
                       (phi.zeros.empty() || standoff > 4.0 * rep.delta * cs.L_phi);
    cs.deviation = std::max({std::abs(cs.L_psi - cs.L_phi),
                             std::abs(cs.w_psi - cs.w_phi),
                             std::abs(cs.h_psi - cs.h_phi)});
    cs.pass = !cs.hypothesis_ok || cs.deviation <= rep.delta * cs.L_phi + 1e-9;
    if (cs.hypothesis_ok && !cs.pass) rep.all_pass = false;
    rep.segments.push_back(cs);
  }
  return rep;
}

} // namespace eslab
