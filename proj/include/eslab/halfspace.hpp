#pragma once
// metric of the upper half-space model and curve diagnostics

#include "eslab/moebius.hpp"

#include <array>
#include <functional>
#include <vector>

namespace eslab {

double dist(const Pt3& p, const Pt3& q);

// point on the geodesic from p to q at arclength s from p
Pt3 geodesic_point(const Pt3& p, const Pt3& q, double s);

// half-space -> Poincare ball; sends (0,0,1) to the origin
std::array<double, 3> to_ball(const Pt3& p);

struct QuasiFit {
  double K = 1.0; // multiplicative distortion
  double C = 0.0; // additive slack after K is fixed
};

// smallest K with  d/K - C <= |i-j|*step <= K d + C  over all sample pairs,
// then the smallest C that works for that K
QuasiFit quasigeodesic_fit(const std::vector<Pt3>& samples, double step);

// geodesic curvature of a discretized curve at interior sample i,
// centered differences with the half-space Christoffel terms
double curve_curvature(const std::vector<Pt3>& samples, double step, size_t i);

} // namespace eslab
