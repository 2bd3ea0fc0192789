#pragma once
// scales and centers of isometric actions, dual-tree length functions,
// straight-map checking, and closed-form survey harnesses for rescaled limits

#include "eslab/halfspace.hpp"
#include "eslab/qdiff.hpp"
#include "eslab/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eslab {

// R(rho, x) = max displacement of x under the generator set
double scale_at(const std::vector<Moebius>& sigma, const Pt3& x);

// coarse-to-fine lattice descent; throws std::domain_error when the
// generators share a fixed point (the infimum need not be achieved)
std::pair<Pt3, double> approximate_center(const std::vector<Moebius>& sigma,
                                          const Pt3& guess, double C = 1.05);

struct HeightFunction {
  std::map<std::array<int, 2>, double> values;
  double operator()(const std::array<int, 2>& c) const { return values.at(c); }
};

// transverse heights of translation classes on a one-polygon torus carrying
// the differential scale * dz^2; the class (m, n) is m u + n v in the two
// gluing periods u (horizontal-most) and v
HeightFunction dual_length_function(const HalfTranslationSurface& s, cx scale,
                                    const std::vector<std::array<int, 2>>& classes);

struct TreeMapSample {
  std::vector<cx> source;                        // chart points
  std::vector<std::vector<double>> target_dist;  // image distance matrix

  void validate(double tol = 1e-9) const; // symmetry + triangle inequality
};

struct StraightnessItem {
  int i = 0, j = 0;
  double h = 0.0;    // flat height of the source segment
  double d = 0.0;    // target distance
  double err = 0.0;
  bool pushed = false;  // rerouted around a simple zero
  bool skipped = false; // zero of higher order in the way
  bool pass = false;
};

struct StraightnessReport {
  std::vector<StraightnessItem> items;
  bool all_pass = true;
};

// checks d_T(f x, f y) = height(x, y) per listed segment; segments grazing a
// listed simple zero are checked through both push-offs
StraightnessReport straightness_check(const TreeMapSample& sample, cx scale,
                                      const std::vector<std::pair<int, int>>& segments,
                                      double tol = 1e-9,
                                      const std::vector<CriticalPoint>& zeros = {});

// family rho_t with diagonal holonomy: the word with period p has multiplier
// exp(i sqrt(2 t) p / 2); heights |Im p| are the dual-tree limit data
struct TranslationFamily {
  std::vector<cx> periods;
  double base_offset = 1.0; // horizontal offset of the probed base point
};

TranslationFamily cylinder_family(int nmax);                 // periods i..nmax*i
TranslationFamily torus_family(const std::vector<std::array<int, 2>>& classes);

// d(x, g x) in H^3 for g = diag(e^w, e^-w)-quotients: r = e^w, overflow-safe
double diag_pair_distance(cx w, double x0);

// log(|2 cosh(mu)| + 2), overflow-safe
double stable_log_trace(cx mu);

struct SurveyRow {
  double t = 0.0;
  std::vector<double> log_traces;
  std::vector<double> proj;
  std::vector<double> lengths;
  double scale = 0.0; // R at the base point over one-letter words
  double delta = 0.0; // four-point defect of the orbit metric rescaled by R
};

struct SurveyReport {
  std::vector<SurveyRow> rows;
  std::vector<double> limit_heights; // projectivized |Im p|
  double sup_norm_gap = 0.0;         // proj traces vs heights at the last t
  double delta_slope = 0.0;          // log-log slope of delta against t
  double length_drift = 0.0;         // max relative drift of l/sqrt t, top decade
};

SurveyReport ms_limit_survey(const TranslationFamily& fam,
                             const std::vector<double>& ts);

struct GrowthReport {
  double A = 0.0, B = 0.0;        // log(1 + max trace coord) ~ A sqrt t + B
  double fit_residual = 0.0;      // max relative residual of that fit
  double c = 0.0, C = 0.0;        // envelope of l / sqrt t over positive-height words
  std::vector<double> ratio_at_tmax; // l / sqrt t per word at the largest t
};

GrowthReport growth_survey(const TranslationFamily& fam,
                           const std::vector<double>& ts);

// matrix with a separate log-magnitude factor; true matrix = e^{log_scale} m
struct ScaledMoebius {
  Moebius m;
  double log_scale = 0.0;
};

// word product with per-step renormalization; entries stay O(1) even when the
// true product overflows double range
ScaledMoebius scaled_evaluate(const std::vector<Moebius>& gens,
                              const std::vector<int>& word);

// d(x, w x) assuming the true matrix has determinant 1; overflow-safe
double displacement_at(const ScaledMoebius& w, const Pt3& x);

// two-generator family: translations of length sqrt(2t) along the crossing
// axes (0, infinity) and (-1, 1); orbit four-point defect rescaled by the
// generator displacement at the base point
struct FreeFamilyReport {
  std::vector<double> ts;
  std::vector<double> deltas;
  double slope = 0.0; // log-log regression of delta against t
};

FreeFamilyReport free_family_delta(const std::vector<double>& ts,
                                   const std::vector<std::vector<int>>& words,
                                   const Pt3& base);

} // namespace eslab
