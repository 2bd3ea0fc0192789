#include "eslab/halfspace.hpp"

#include <cmath>
#include <stdexcept>

namespace eslab {

double dist(const Pt3& p, const Pt3& q) {
  double dz2 = std::norm(p.z - q.z) + (p.t - q.t) * (p.t - q.t);
  double x = dz2 / (2.0 * p.t * q.t);
  // acosh(1 + x) without forming 1 + x, which wipes out small separations
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

Pt3 geodesic_point(const Pt3& p, const Pt3& q, double s) {
  double L = dist(p, q);
  if (L < 1e-15) return p;
  // move p and q to the vertical axis over 0 by an isometry, interpolate, pull back.
  // vertical case first
  if (std::abs(p.z - q.z) < 1e-14 * (1.0 + std::abs(p.z))) {
    double t = p.t * std::exp((q.t > p.t ? s : -s));
    return Pt3{p.z, t};
  }
  // endpoints of the geodesic through p, q on the boundary line through their
  // projections: circle orthogonal to the boundary.  Reduce to a planar problem
  // in the vertical plane containing both points.
  cx dir = (q.z - p.z) / std::abs(q.z - p.z);
  double xp = 0.0, xq = std::abs(q.z - p.z);
  // circle center x0 on the axis: |(x - x0, t)| equal for both
  double x0 = (xq * xq + q.t * q.t - p.t * p.t) / (2.0 * xq);
  double r = std::hypot(xp - x0, p.t);
  // parametrize by angle, arclength s corresponds to log of half-angle tangent
  double up = std::atan2(p.t, xp - x0);
  double uq = std::atan2(q.t, xq - x0);
  // arclength parameter along the geodesic: sigma = log tan(u/2)
  double sp = std::log(std::tan(up / 2.0));
  double sq = std::log(std::tan(uq / 2.0));
  double sigma = sp + (sq - sp) * (s / L);
  double u = 2.0 * std::atan(std::exp(sigma));
  double x = x0 + r * std::cos(u), t = r * std::sin(u);
  return Pt3{p.z + dir * x, t};
}

std::array<double, 3> to_ball(const Pt3& p) {
  double x = p.z.real(), y = p.z.imag(), t = p.t;
  double den = x * x + y * y + (t + 1.0) * (t + 1.0);
  return {2.0 * x / den, 2.0 * y / den, (x * x + y * y + t * t - 1.0) / den};
}

QuasiFit quasigeodesic_fit(const std::vector<Pt3>& samples, double step) {
  if (samples.size() < 2) throw std::invalid_argument("need at least two samples");
  QuasiFit fit;
  double K = 1.0;
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j) {
      double d = dist(samples[i], samples[j]);
      double param = (j - i) * step;
      if (d > 1e-12 && param > 1e-12)
        K = std::max({K, d / param, param / d});
    }
  double C = 0.0;
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j) {
      double d = dist(samples[i], samples[j]);
      double param = (j - i) * step;
      C = std::max({C, d / K - param, param / K - d});
    }
  fit.K = K;
  fit.C = std::max(0.0, C);
  return fit;
}

double curve_curvature(const std::vector<Pt3>& samples, double step, size_t i) {
  if (i == 0 || i + 1 >= samples.size())
    throw std::out_of_range("interior sample required");
  auto coord = [](const Pt3& p) {
    return std::array<double, 3>{p.z.real(), p.z.imag(), p.t};
  };
  auto pm = coord(samples[i - 1]), p0 = coord(samples[i]), pp = coord(samples[i + 1]);
  std::array<double, 3> V, A;
  for (int k = 0; k < 3; ++k) {
    V[k] = (pp[k] - pm[k]) / (2.0 * step);
    A[k] = (pp[k] - 2.0 * p0[k] + pm[k]) / (step * step);
  }
  double t = p0[2];
  // covariant acceleration in the hyperbolic metric dx^2+dy^2+dt^2 over t^2
  std::array<double, 3> a;
  a[0] = A[0] - 2.0 * V[0] * V[2] / t;
  a[1] = A[1] - 2.0 * V[1] * V[2] / t;
  a[2] = A[2] + (V[0] * V[0] + V[1] * V[1] - V[2] * V[2]) / t;
  double v2 = (V[0] * V[0] + V[1] * V[1] + V[2] * V[2]) / (t * t);
  // component of a orthogonal to V, measured in the metric
  double av = (a[0] * V[0] + a[1] * V[1] + a[2] * V[2]) / (t * t);
  double a2 = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]) / (t * t);
  double perp2 = std::max(0.0, a2 - av * av / v2);
  return std::sqrt(perp2) / v2;
}

} // namespace eslab
