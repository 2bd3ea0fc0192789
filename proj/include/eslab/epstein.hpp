#pragma once
// envelope map of a conformal metric into upper half-space, its specialization
// to the flat metric of a quadratic differential through a developing map,
// fundamental forms, leaf tracing, and collapse diagnostics

#include "eslab/develop.hpp"
#include "eslab/halfspace.hpp"
#include "eslab/qdiff.hpp"

#include <array>
#include <functional>
#include <vector>

namespace eslab {

// 2-jet of the log-density eta of a conformal metric e^eta |dw|
struct MetricJet {
  double eta = 0.0;
  cx eta_w{0.0};
  cx eta_ww{0.0};       // B(flat, sigma) = eta_ww - eta_w^2
  double eta_wwbar = 0.0; // curvature K = -4 e^{-2 eta} eta_wwbar
};

struct EpsteinFrame {
  Pt3 point{cx{0.0}, 1.0};
  cx ideal{0.0};   // boundary point the unit normal flows toward
  Moebius frame;   // point = frame . (0, 0, 2)
};

// frame [[1,w],[0,1]] [[1,0],[eta_w,1]] diag(e^{-eta/2}, e^{eta/2}) and its
// orbit point; throws std::domain_error at a metric zero (eta = -inf)
EpsteinFrame epstein_point(cx w, const MetricJet& jet);

// envelope map of sqrt(2)|q|^{1/2}|dz| pushed through the developing germ:
// eta' o f = eta - log|f'|, eta'_w = (eta_z - f''/(2f')) / f'
EpsteinFrame epstein_schwarz(const PlanarDifferential& d, const DevelopingJet& jet);

struct FormsAtPoint {
  cx I20{0.0};      // (2,0) coefficient of the first fundamental form
  double I11 = 0.0; // (1,1) coefficient
  double II = 0.0;  // (1,1) coefficient of the second fundamental form
  cx II20{0.0};     // vanishes when K = 0
  double n_h = 0.0, n_v = 0.0; // image speeds of doubled-metric unit vectors
  double kappa_h = 0.0, kappa_v = 0.0;
  double eps = 0.0; // |(phi - phi_hat)/phi|
  bool immersed = true;
};

// closed forms from the metric jet and the relative Schwarzian term B
FormsAtPoint general_fundamental_forms(const MetricJet& jet, cx B);

// same quantities from phi = q(z), phi_hat(z); kappa_h reported as infinite
// when |kappa_v| < 1e-10
FormsAtPoint epstein_forms(const PlanarDifferential& d, cx z);
FormsAtPoint forms_from_values(cx phi, cx hat);

// polyline along a trajectory of phi_hat through z0, arclength parameterized
// by the doubled metric sqrt(2|phi_hat|)|dz|; negative length reverses
std::vector<cx> trace_leaf(const PlanarDifferential& d, cx z0, double length,
                           bool vertical, int nsamples, int substeps = 16);

// envelope image of a polyline, jet continued from the first waypoint
std::vector<Pt3> image_of_path(const PlanarDifferential& d,
                               const std::vector<cx>& path,
                               double tol = 1e-12);

struct LeafCurvature {
  double k = 0.0;
  double bound = 0.0;   // 12 / d^2
  double standoff = 0.0;
  bool hypothesis_ok = false; // d > 2 sqrt(3)
  bool pass = false;
};

// geodesic curvature of the image of the vertical leaf through z,
// Richardson-extrapolated centered differences
LeafCurvature leaf_curvature(const PlanarDifferential& d, cx z, double h = 0.05);

enum class SegmentKind { Horizontal, Vertical, General };

struct CollapseReport {
  SegmentKind kind = SegmentKind::Horizontal;
  double length = 0.0;        // doubled-metric length of the domain segment
  double standoff = 0.0;      // flat distance of the segment to the zero set
  double image_diameter = 0.0;
  double endpoint_distance = 0.0;
  double width = 0.0, height = 0.0; // |Re|, |Im| of the doubled-metric period
  double bound = 0.0;
  bool hypothesis_ok = false; // standoff > 4
  bool pass = false;
  std::vector<Pt3> points;
};

// horizontal/vertical: leaf of the given doubled-metric length from z0;
// general: straight segment z0 -> z1 (dir ignored for leaf kinds)
CollapseReport collapse_report(const PlanarDifferential& d, cx z0, double length,
                               SegmentKind kind, int nsamples = 33);
CollapseReport collapse_segment_report(const PlanarDifferential& d, cx z0, cx z1,
                                       int nsamples = 33);

struct MeshVertex {
  cx z;
  Pt3 point{cx{0.0}, 1.0};
  double kappa_v = 0.0;
  double eps = 0.0;
  double dist = 0.0; // flat distance to the zero set
  bool valid = false;
};

struct EpsteinMesh {
  int nx = 0, ny = 0;
  std::vector<MeshVertex> vertices;           // row-major, ny rows of nx
  std::vector<std::array<int, 3>> faces;      // omitted across |phi_hat| = |phi|
};

// rectangular grid spanned by opposite corners; vertices closer than standoff
// to a zero are kept in the grid but marked invalid
EpsteinMesh epstein_mesh(const PlanarDifferential& d, cx corner0, cx corner1,
                         int nx, int ny, double standoff);

// max |Re| of the upper-left entry of E^{-1} dE over the two coordinate
// directions, finite differences of step h
double legendrian_defect(const std::function<MetricJet(cx)>& jet_fn, cx w,
                         double h = 1e-4);
double legendrian_defect(const PlanarDifferential& d, cx z, double h = 1e-4);

} // namespace eslab
