#pragma once
// quadratic differentials q dz^2 on planar charts: flat metric, holonomy of
// segments, the correction term beta, and the estimates that need it

#include "eslab/poly.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace eslab {

using cx = std::complex<double>;

enum class ChartKind { Plane, Disk, Annulus };

struct Chart {
  ChartKind kind = ChartKind::Plane;
  double r0 = 0.0, r1 = 0.0; // disk: |z| < r1; annulus: r0 < |z| < r1
};

struct CriticalPoint {
  cx z;
  int order; // positive for zeros; pole order for poles
};

struct SingularSegment : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PlanarDifferential {
  RatFn<cx> q;
  Chart chart;
  cx scale{1.0, 0.0};
  std::vector<CriticalPoint> zeros;
  std::vector<CriticalPoint> poles;

  cx eval(cx z) const { return scale * q.eval(z); }
};

// computes and caches zeros/poles; rejects poles of order > 2
PlanarDifferential make_differential(RatFn<cx> q, Chart chart = {}, cx scale = cx{1.0});

// throws SingularSegment when the segment passes too close to a zero or pole;
// include_zeros = false restricts the check to poles (the ODE is regular at zeros)
void check_segment_margin(const PlanarDifferential& d, cx a, cx b,
                          double margin_frac = 1e-6, bool include_zeros = true);

PlanarDifferential from_poly(std::initializer_list<cx> coeffs, Chart chart = {});

PlanarDifferential beta(const PlanarDifferential& d);
PlanarDifferential phi_hat(const PlanarDifferential& d);

// integral of sqrt(q) along the straight segment a -> b with a continuously
// tracked branch; result sign normalized to Im >= 0 (Re >= 0 when Im ~ 0)
cx segment_holonomy(const PlanarDifferential& d, cx a, cx b,
                    double margin_frac = 1e-6, double tol = 1e-11);

// same continuation through a polyline without the final sign normalization
cx path_holonomy(const PlanarDifferential& d, const std::vector<cx>& waypoints,
                 double margin_frac = 1e-6, double tol = 1e-11);

// integral of |q|^{1/2} |dz| along the straight segment (flat length)
double phi_length(const PlanarDifferential& d, cx a, cx b, double tol = 1e-11);

// flat distance to the zero set, measured along straight segments to each zero
double dist_to_zeros(const PlanarDifferential& d, cx z);

struct EpsSample {
  cx z;
  double eps = 0.0;      // |beta/q|
  double grad = 0.0;     // flat gradient norm of eps
  double dist = 0.0;     // flat distance to the zero set
  bool pass_eps = false; // eps <= 6/dist^2
  bool pass_grad = false;
  bool excluded = false; // sample at or too close to a zero
};

std::vector<EpsSample> epsilon_bound_check(const PlanarDifferential& d,
                                           const std::vector<cx>& samples);

struct CompareSegment {
  cx a, b;
  double L_phi = 0.0, L_psi = 0.0;
  double w_phi = 0.0, h_phi = 0.0, w_psi = 0.0, h_psi = 0.0;
  bool hypothesis_ok = false;
  bool pass = false; // max deviation < delta * L_phi
  double deviation = 0.0;
};

struct CompareReport {
  double delta = 0.0; // certified sup of |psi - phi| / |phi| over the region
  std::vector<CompareSegment> segments;
  bool all_pass = true;
};

// region: disk about center of given radius, sampled segments inside it
CompareReport compare_differentials(const PlanarDifferential& phi,
                                    const PlanarDifferential& psi, cx center,
                                    double radius,
                                    const std::vector<std::pair<cx, cx>>& segments);

} // namespace eslab
