#pragma once
// flat surfaces glued from Euclidean polygons by maps z -> +-z + c:
// validation, cone angles, geodesics by unfolding, cylinder detection

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace eslab {

using cx = std::complex<double>;

struct EdgeRef {
  int poly = 0;
  int edge = 0;
  bool operator==(const EdgeRef& o) const { return poly == o.poly && edge == o.edge; }
};

// identifies edge `from` with edge `to` via z -> sign*z + offset;
// the map sends start(from) to end(to) and end(from) to start(to)
struct Gluing {
  EdgeRef from, to;
  int sign = 1;
  cx offset{0.0};
};

struct ConeClass {
  std::vector<std::pair<int, int>> corners; // (poly, vertex)
  double angle = 0.0;                       // total cone angle, multiple of pi
  int k = 0;                                // angle = (k+2) pi
};

struct HalfTranslationSurface {
  std::vector<std::vector<cx>> polys; // ccw vertex lists
  std::vector<Gluing> gluings;
  std::vector<ConeClass> cones; // filled by validate()

  cx vertex(int p, int v) const {
    auto& P = polys[p];
    return P[((v % (int)P.size()) + P.size()) % P.size()];
  }
  int nedges(int p) const { return (int)polys[p].size(); }
  double total_area() const;

  // checks edge length matching, cone angle quantization, positive area;
  // throws std::invalid_argument on failure and fills `cones` on success
  void validate(double tol = 1e-10);
};

HalfTranslationSurface square_torus();
HalfTranslationSurface regular_octagon_surface();
// genus 2 from an L shape: outer width/height a+b with a square notch
HalfTranslationSurface l_shaped_surface(double a, double b);

struct SurfacePoint {
  int poly = 0;
  cx z{0.0};
};

struct GeodesicLeg {
  cx hol;        // developed vector of the straight piece
  double length; // |hol|
  std::optional<int> end_cone; // cone class index the piece ends at
};

struct FlatPath {
  std::vector<GeodesicLeg> legs;
  double length = 0.0;
  bool cone_angles_ok = true; // >= pi on both sides at every interior cone point
};

struct DepthExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// locally shortest path p -> q, straight pieces meeting only at cone points
FlatPath flat_geodesic(const HalfTranslationSurface& s, SurfacePoint p,
                       SurfacePoint q, int depth = 16);

struct FlatCylinder {
  double circumference = 0.0;
  double width = 0.0;
  double theta = 0.0;      // direction angle
  SurfacePoint core_point; // a point on the core orbit
  bool certified = false;  // first return map is a translation on a transversal
};

std::vector<FlatCylinder> detect_cylinders(const HalfTranslationSurface& s,
                                           const std::vector<double>& angles,
                                           double max_circumference);

// straight line flow from p in direction dir until a cone point, closure,
// or the length cap; returns accumulated length and what stopped it
struct RayResult {
  enum class Stop { Closed, Cone, LengthCap } stop;
  double length = 0.0;
  SurfacePoint end;
  cx end_dir{1.0};
};

RayResult trace_ray(const HalfTranslationSurface& s, SurfacePoint p, cx dir,
                    double max_len, double tol = 1e-9);

} // namespace eslab
