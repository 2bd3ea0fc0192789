#pragma once
// file formats: differential JSON, mesh PLY (half-space or ball model),
// trajectory SVG/CSV, survey CSV

#include "eslab/epstein.hpp"
#include "eslab/qdiff.hpp"
#include "eslab/trees.hpp"

#include <string>
#include <vector>

namespace eslab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"num": [[re,im],...], "den": [[re,im],...], "scale": [re,im]?,
//  "chart": {"kind": "plane|disk|annulus", "r0"?, "r1"?}?}
PlanarDifferential parse_differential(const std::string& json_text);
PlanarDifferential load_differential(const std::string& path);

// half-space -> unit ball isometry taking (0, 0, 1) to the origin
std::array<double, 3> ball_point(const Pt3& p);

// ascii PLY with per-vertex principal curvature ratio, correction size,
// and flat distance to the zero set
void write_mesh_ply(const EpsteinMesh& mesh, const std::string& path, bool ball);

// polar mesh between radii r0 < r1, jets continued along each spoke
EpsteinMesh annulus_mesh(const PlanarDifferential& d, double r0, double r1,
                         int nspokes, int nradial, double standoff);

// unit-flat-speed trajectory of the differential through z0 at the given
// angle to the horizontal direction; branch-continuous, RK4
std::vector<cx> flat_trajectory(const PlanarDifferential& d, cx z0, double angle,
                                double length, int nsamples);

void write_polylines_svg(const std::vector<std::vector<cx>>& lines,
                         const std::string& path);
void write_polylines_csv(const std::vector<std::vector<cx>>& lines,
                         const std::string& path);
void write_survey_csv(const SurveyReport& rep, const std::string& path);

} // namespace eslab
