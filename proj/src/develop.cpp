#include "eslab/develop.hpp"

#include <cmath>

namespace eslab {

DevelopingJet make_jet(cx z, cx f, cx fp, cx fpp_over_fp) {
  if (fp == cx{0.0}) throw std::domain_error("degenerate jet: f' = 0");
  DevelopingJet j;
  j.z = z;
  j.u2 = std::sqrt(-1.0 / fp);
  j.u2p = -(fpp_over_fp / 2.0) * j.u2;
  j.u1 = f * j.u2;
  j.u1p = (cx{-1.0} + f * j.u2 * j.u2p) / j.u2;
  return j;
}

static State4 transport_state(const PlanarDifferential& d, cx a, cx b, State4 y,
                              double tol, bool as_matrix) {
  check_segment_margin(d, a, b, 1e-6, /*include_zeros=*/false);
  cx dz = b - a;
  double arc = std::abs(dz);
  if (arc == 0.0) return y;
  auto rhs = [&](double t, const State4& s) -> State4 {
    cx q = d.eval(a + dz * t);
    if (as_matrix) {
      // s = row-major fundamental matrix [[a,b],[c,d]], U' = A U
      return State4{s[2] * dz, s[3] * dz, -(q / 2.0) * s[0] * dz,
                    -(q / 2.0) * s[1] * dz};
    }
    // s = (u1, u1', u2, u2')
    return State4{s[1] * dz, -(q / 2.0) * s[0] * dz, s[3] * dz,
                  -(q / 2.0) * s[2] * dz};
  };
  return rk45(rhs, y, tol * arc);
}

DevelopingJet continue_jet(const PlanarDifferential& d, const std::vector<cx>& path,
                           double tol, std::optional<DevelopingJet> start) {
  if (path.size() < 2) throw std::invalid_argument("need a path");
  DevelopingJet j = start.value_or(DevelopingJet{});
  if (start && std::abs(start->z - path.front()) > 1e-9)
    throw std::invalid_argument("jet is not based at the path start");
  cx w0 = j.u1p * j.u2 - j.u1 * j.u2p;
  State4 y{j.u1, j.u1p, j.u2, j.u2p};
  for (size_t i = 0; i + 1 < path.size(); ++i)
    y = transport_state(d, path[i], path[i + 1], y, tol, false);
  DevelopingJet out;
  out.z = path.back();
  out.u1 = y[0];
  out.u1p = y[1];
  out.u2 = y[2];
  out.u2p = y[3];
  out.wronskian_drift = std::abs((y[1] * y[2] - y[0] * y[3]) - w0);
  return out;
}

Moebius transport_matrix(const PlanarDifferential& d, const std::vector<cx>& path,
                         double tol) {
  if (path.size() < 2) throw std::invalid_argument("need a path");
  State4 y{1.0, 0.0, 0.0, 1.0};
  for (size_t i = 0; i + 1 < path.size(); ++i)
    y = transport_state(d, path[i], path[i + 1], y, tol, true);
  return Moebius{y[0], y[1], y[2], y[3]};
}

Moebius monodromy(const PlanarDifferential& d, std::vector<cx> loop, double tol) {
  // an open polyline is read as a circuit whose endpoints the chart identifies
  return transport_matrix(d, loop, tol);
}

Moebius darboux_holonomy(const RatFn<cx>& Phi, const Moebius& gamma, cx z0,
                         double tol) {
  cx z1 = gamma.boundary(z0);
  // invariance of Phi as a quadratic differential under gamma
  for (int k = 0; k <= 8; ++k) {
    cx z = z0 + (z1 - z0) * (double(k) / 8.0);
    if (z.imag() <= 0.0)
      throw std::domain_error("path leaves the upper half-plane");
    cx den = gamma.c * z + gamma.d;
    cx gp = 1.0 / (den * den);
    cx lhs = Phi.eval(gamma.boundary(z)) * gp * gp;
    cx rhs = Phi.eval(z);
    if (std::abs(lhs - rhs) > 1e-8 * (1.0 + std::abs(rhs)))
      throw NotEquivariant("differential is not invariant under gamma");
  }
  cx dz = z1 - z0;
  double arc = std::abs(dz);
  auto rhs_fn = [&](double t, const State4& s) -> State4 {
    cx z = z0 + dz * t;
    cx g = 0.5 * Phi.eval(z) * dz;
    // omega = g [[-z, 1], [-z^2, z]], M' = omega M, s row-major
    cx w00 = -z * g, w01 = g, w10 = -z * z * g, w11 = z * g;
    return State4{w00 * s[0] + w01 * s[2], w00 * s[1] + w01 * s[3],
                  w10 * s[0] + w11 * s[2], w10 * s[1] + w11 * s[3]};
  };
  State4 y{1.0, 0.0, 0.0, 1.0};
  if (arc > 0.0) y = rk45(rhs_fn, y, tol * std::max(arc, 1.0));
  Moebius M{y[0], y[1], y[2], y[3]};
  return M * gamma;
}

std::vector<double> trace_coordinates(const std::vector<Moebius>& gens,
                                      const std::vector<std::vector<int>>& words) {
  std::vector<double> out;
  for (auto& w : words) {
    Moebius m = evaluate_word(gens, w);
    out.push_back(std::log(std::abs(m.tr()) + 2.0));
  }
  return out;
}

std::vector<double> projectivize(std::vector<double> v) {
  double mx = 0.0;
  for (double x : v) mx = std::max(mx, std::abs(x));
  if (mx > 0.0)
    for (double& x : v) x /= mx;
  return v;
}

} // namespace eslab
