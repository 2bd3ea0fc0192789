#pragma once
// developing maps and holonomy: transport of the linear system behind the
// Schwarzian equation, monodromy, the half-plane Darboux construction,
// and trace coordinates

#include "eslab/moebius.hpp"
#include "eslab/ode.hpp"
#include "eslab/qdiff.hpp"

#include <optional>
#include <vector>

namespace eslab {

// fundamental pair of u'' + (q/2) u = 0, normalized to Wronskian
// u1' u2 - u1 u2' = -1; the solution ratio f = u1/u2 then has f' = -1/u2^2
struct DevelopingJet {
  cx z{0.0};
  cx u1{0.0}, u1p{0.0, 1.0}, u2{0.0, 1.0}, u2p{0.0}; // identity germ, W = -1
  double wronskian_drift = 0.0; // |W + 1| accumulated over continuation

  cx f() const { return u1 / u2; }
  cx fprime() const { return -1.0 / (u2 * u2); }
  cx log_derivative_ratio() const { return -2.0 * u2p / u2; } // f''/f'
};

// jet at z from the value, derivative, and f''/f' of a developing germ
DevelopingJet make_jet(cx z, cx f, cx fp, cx fpp_over_fp);

// transports the jet along the polyline; throws SingularSegment when the
// path violates the zero/pole standoff margin
DevelopingJet continue_jet(const PlanarDifferential& d, const std::vector<cx>& path,
                           double tol = 1e-10,
                           std::optional<DevelopingJet> start = std::nullopt);

// fundamental-system transport matrix along a path: columns are the images of
// the identity frame at the start point
Moebius transport_matrix(const PlanarDifferential& d, const std::vector<cx>& path,
                         double tol = 1e-10);

// monodromy of a closed loop (first == last waypoint, or closed implicitly)
Moebius monodromy(const PlanarDifferential& d, std::vector<cx> loop,
                  double tol = 1e-10);

struct NotEquivariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rho_phi(gamma) = M(gamma z0) rho_0(gamma) for the flat connection with
// Darboux derivative (1/2) Phi(z) [[-z, 1], [-z^2, z]] dz on the half-plane
Moebius darboux_holonomy(const RatFn<cx>& Phi, const Moebius& gamma, cx z0,
                         double tol = 1e-10);

// log(|tr| + 2) per word of the representation given by generator matrices
std::vector<double> trace_coordinates(const std::vector<Moebius>& gens,
                                      const std::vector<std::vector<int>>& words);

// normalize by the maximum entry; zero vector stays zero
std::vector<double> projectivize(std::vector<double> v);

} // namespace eslab
