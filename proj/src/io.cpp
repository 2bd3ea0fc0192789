#include "eslab/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace eslab {

namespace {

using nlohmann::json;

cx parse_cx(const json& v, const std::string& where) {
  if (v.is_number()) return cx{v.get<double>()};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return cx{v[0].get<double>(), v[1].get<double>()};
  throw ParseError(where + ": expected number or [re, im]");
}

Poly<cx> parse_poly(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected coefficient array");
  std::vector<cx> c;
  for (size_t i = 0; i < v.size(); ++i)
    c.push_back(parse_cx(v[i], where + "[" + std::to_string(i) + "]"));
  return Poly<cx>(std::move(c));
}

} // namespace

PlanarDifferential parse_differential(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("differential: ") + e.what());
  }
  if (!j.is_object() || !j.contains("num"))
    throw ParseError("differential: missing field \"num\"");
  Poly<cx> num = parse_poly(j["num"], "num");
  Poly<cx> den = j.contains("den") ? parse_poly(j["den"], "den") : Poly<cx>{cx{1.0}};
  cx scale = j.contains("scale") ? parse_cx(j["scale"], "scale") : cx{1.0};
  Chart chart;
  if (j.contains("chart")) {
    auto& c = j["chart"];
    std::string kind = c.value("kind", "plane");
    if (kind == "disk")
      chart.kind = ChartKind::Disk;
    else if (kind == "annulus")
      chart.kind = ChartKind::Annulus;
    else if (kind != "plane")
      throw ParseError("chart.kind: unknown value " + kind);
    chart.r0 = c.value("r0", 0.0);
    chart.r1 = c.value("r1", 0.0);
  }
  return make_differential(RatFn<cx>{std::move(num), std::move(den)}, chart, scale);
}

PlanarDifferential load_differential(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_differential(ss.str());
}

std::array<double, 3> ball_point(const Pt3& p) {
  double x = p.z.real(), y = p.z.imag(), t = p.t;
  double D = x * x + y * y + (t + 1.0) * (t + 1.0);
  return {2.0 * x / D, 2.0 * y / D, (x * x + y * y + t * t - 1.0) / D};
}

void write_mesh_ply(const EpsteinMesh& mesh, const std::string& path, bool ball) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << "ply\nformat ascii 1.0\n";
  out << "comment model " << (ball ? "ball (origin at halfspace (0,0,1))" : "halfspace")
      << "\n";
  out << "element vertex " << mesh.vertices.size() << "\n";
  for (const char* p : {"x", "y", "z"}) out << "property float " << p << "\n";
  out << "property float kappa_v\nproperty float eps\nproperty float dist\n";
  out << "element face " << mesh.faces.size() << "\n";
  out << "property list uchar int vertex_indices\nend_header\n";
  out.precision(9);
  for (auto& v : mesh.vertices) {
    std::array<double, 3> p;
    if (ball)
      p = ball_point(v.point);
    else
      p = {v.point.z.real(), v.point.z.imag(), v.point.t};
    out << p[0] << " " << p[1] << " " << p[2] << " " << v.kappa_v << " " << v.eps
        << " " << v.dist << "\n";
  }
  for (auto& f : mesh.faces) out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
}

EpsteinMesh annulus_mesh(const PlanarDifferential& d, double r0, double r1,
                         int nspokes, int nradial, double standoff) {
  EpsteinMesh mesh;
  mesh.nx = nspokes;
  mesh.ny = nradial;
  mesh.vertices.resize(size_t(nspokes) * nradial);
  for (int k = 0; k < nspokes; ++k) {
    double th = 2.0 * M_PI * k / nspokes;
    cx dir = std::exp(cx{0.0, th});
    std::optional<DevelopingJet> jet;
    for (int j = 0; j < nradial; ++j) {
      double r = r0 + (r1 - r0) * j / double(nradial - 1);
      cx z = r * dir;
      MeshVertex v;
      v.z = z;
      v.dist = dist_to_zeros(d, z);
      if (v.dist > standoff && std::abs(d.eval(z)) > 0.0) {
        try {
          cx prev = (j == 0) ? z : mesh.vertices[size_t(k) * nradial + j - 1].z;
          jet = continue_jet(d, {jet ? prev : z, z}, 1e-10, jet);
          v.point = epstein_schwarz(d, *jet).point;
          auto f = epstein_forms(d, z);
          v.kappa_v = f.kappa_v;
          v.eps = f.eps;
          v.valid = true;
        } catch (const std::exception&) {
          jet.reset();
        }
      }
      mesh.vertices[size_t(k) * nradial + j] = v;
    }
  }
  auto at = [&](int k, int j) { return (k % nspokes) * nradial + j; };
  for (int k = 0; k < nspokes; ++k)
    for (int j = 0; j + 1 < nradial; ++j) {
      int a = at(k, j), b = at(k + 1, j), c = at(k + 1, j + 1), e = at(k, j + 1);
      if (!(mesh.vertices[a].valid && mesh.vertices[b].valid &&
            mesh.vertices[c].valid && mesh.vertices[e].valid))
        continue;
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, e});
    }
  return mesh;
}

std::vector<cx> flat_trajectory(const PlanarDifferential& d, cx z0, double angle,
                                double length, int nsamples) {
  std::vector<cx> out{z0};
  cx rot = std::exp(cx{0.0, angle});
  cx prev_dir{0.0};
  auto vel = [&](cx z) {
    cx q = d.eval(z);
    if (std::abs(q) == 0.0) throw SingularSegment("trajectory hit a zero");
    // unit flat speed along the angle-rotated horizontal direction
    cx u = rot * std::exp(cx{0.0, -std::arg(q) / 2.0});
    if (prev_dir != cx{0.0} && (u * std::conj(prev_dir)).real() < 0.0) u = -u;
    prev_dir = u;
    return u / std::sqrt(std::abs(q));
  };
  double ds = length / (nsamples - 1);
  cx z = z0;
  for (int i = 1; i < nsamples; ++i) {
    try {
      cx k1 = vel(z);
      cx k2 = vel(z + 0.5 * ds * k1);
      cx k3 = vel(z + 0.5 * ds * k2);
      cx k4 = vel(z + ds * k3);
      z += ds / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } catch (const SingularSegment&) {
      break;
    }
    out.push_back(z);
  }
  return out;
}

void write_polylines_svg(const std::vector<std::vector<cx>>& lines,
                         const std::string& path) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (auto& l : lines)
    for (cx z : l) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
  if (x0 > x1) x0 = y0 = 0.0, x1 = y1 = 1.0;
  double pad = 0.05 * std::max(x1 - x0, y1 - y0) + 1e-9;
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 - pad << " "
      << -(y1 + pad) << " " << (x1 - x0) + 2 * pad << " " << (y1 - y0) + 2 * pad
      << "\">\n";
  double w = 0.002 * std::max(x1 - x0, y1 - y0);
  for (auto& l : lines) {
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << w
        << "\" points=\"";
    for (cx z : l) out << z.real() << "," << -z.imag() << " ";
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

void write_polylines_csv(const std::vector<std::vector<cx>>& lines,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out.precision(12);
  out << "line,index,re,im\n";
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = 0; j < lines[i].size(); ++j)
      out << i << "," << j << "," << lines[i][j].real() << "," << lines[i][j].imag()
          << "\n";
}

void write_survey_csv(const SurveyReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out.precision(12);
  out << "t,scale,delta";
  for (size_t i = 0; i < rep.limit_heights.size(); ++i)
    out << ",log_trace_" << i << ",proj_" << i << ",length_" << i;
  out << "\n";
  for (auto& r : rep.rows) {
    out << r.t << "," << r.scale << "," << r.delta;
    for (size_t i = 0; i < r.log_traces.size(); ++i)
      out << "," << r.log_traces[i] << "," << r.proj[i] << "," << r.lengths[i];
    out << "\n";
  }
}

} // namespace eslab
