// command-line front end: mesh export, trajectory rendering, holonomy,
// flat geodesics, cylinder detection, and the verification suites
#include "eslab/develop.hpp"
#include "eslab/epstein.hpp"
#include "eslab/io.hpp"
#include "eslab/surface.hpp"
#include "eslab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>

using namespace eslab;
using nlohmann::json;

namespace {

HalfTranslationSurface named_surface(const std::string& name) {
  if (name == "square-torus") return square_torus();
  if (name == "octagon") return regular_octagon_surface();
  if (name == "l-shape") return l_shaped_surface(1.0, 1.0);
  throw std::invalid_argument("unknown surface " + name +
                              " (square-torus, octagon, l-shape)");
}

cx parse_point(const std::string& s) {
  double re = 0.0, im = 0.0;
  if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) < 1)
    throw std::invalid_argument("expected re,im: " + s);
  return {re, im};
}

std::vector<cx> parse_loop(const std::string& s) {
  std::vector<cx> pts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(';', pos);
    if (next == std::string::npos) next = s.size();
    pts.push_back(parse_point(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return pts;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

json moebius_json(const Moebius& m) {
  auto c = [](cx v) { return json::array({v.real(), v.imag()}); };
  return {{"a", c(m.a)}, {"b", c(m.b)}, {"c", c(m.c)}, {"d", c(m.d)},
          {"trace", c(m.tr())},
          {"translation_length", translation_length(m)}};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational laboratory for envelope maps of quadratic "
               "differentials and their holonomy limits"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized sampling (default 0)");

  // surface: envelope mesh export
  auto* sc_surface = app.add_subcommand("surface", "export the envelope image mesh");
  std::string diff_path, grid = "annulus:4:12:200", model = "half", out_path;
  double standoff = 2.0;
  sc_surface->add_option("--diff", diff_path, "differential JSON")->required();
  sc_surface->add_option("--grid", grid,
                         "annulus:r0:r1:n or rect:x0:y0:x1:y1:nx:ny");
  sc_surface->add_option("--model", model, "half or ball")->check(CLI::IsMember({"half", "ball"}));
  sc_surface->add_option("--out", out_path, "output PLY")->required();
  sc_surface->add_option("--standoff", standoff, "flat standoff below which vertices are dropped (default 2)");

  // trajectories
  auto* sc_traj = app.add_subcommand("trajectories", "render flat trajectories");
  double angle = 0.0, traj_len = 8.0;
  int traj_grid = 9, traj_samples = 257;
  std::string traj_out;
  double jitter = 0.0;
  sc_traj->add_option("--diff", diff_path, "differential JSON")->required();
  sc_traj->add_option("--angle", angle, "angle to the horizontal direction (radians)");
  sc_traj->add_option("--len", traj_len, "flat length per trajectory (default 8)");
  sc_traj->add_option("--grid", traj_grid, "seed grid side (default 9)");
  sc_traj->add_option("--jitter", jitter, "seed jitter amplitude (default 0)");
  sc_traj->add_option("--out", traj_out, "output .svg or .csv")->required();

  // holonomy
  auto* sc_hol = app.add_subcommand("holonomy", "holonomy of a loop or deck element");
  std::string method = "ode", loop_str, gamma_str, z0_str = "0,1";
  double hol_tol = 1e-10;
  sc_hol->add_option("--diff", diff_path, "differential JSON (the deformation form for darboux)")->required();
  sc_hol->add_option("--method", method, "ode or darboux")->check(CLI::IsMember({"ode", "darboux"}));
  sc_hol->add_option("--loop", loop_str, "waypoints re,im;re,im;... (ode)");
  sc_hol->add_option("--gamma", gamma_str, "matrix a;b;c;d as re,im each (darboux)");
  sc_hol->add_option("--base", z0_str, "base point re,im (darboux, default 0,1)");
  sc_hol->add_option("--tol", hol_tol, "transport tolerance (default 1e-10)");
  sc_hol->add_option("--out", out_path, "output JSON (default stdout)");

  // geodesic
  auto* sc_geo = app.add_subcommand("geodesic", "locally shortest flat path");
  std::string surf_name = "square-torus", from_str, to_str;
  int from_poly_idx = 0, to_poly_idx = 0;
  sc_geo->add_option("--surface", surf_name, "square-torus, octagon, l-shape");
  sc_geo->add_option("--from", from_str, "start point re,im")->required();
  sc_geo->add_option("--to", to_str, "end point re,im")->required();
  sc_geo->add_option("--from-poly", from_poly_idx, "start polygon index");
  sc_geo->add_option("--to-poly", to_poly_idx, "end polygon index");
  sc_geo->add_option("--out", out_path, "output JSON (default stdout)");

  // cylinders
  auto* sc_cyl = app.add_subcommand("cylinders", "detect flat cylinders");
  int nangles = 16;
  double max_circ = 8.0;
  sc_cyl->add_option("--surface", surf_name, "square-torus, octagon, l-shape");
  sc_cyl->add_option("--angles", nangles, "number of probed directions (default 16)");
  sc_cyl->add_option("--max-circumference", max_circ, "circumference cap (default 8)");
  sc_cyl->add_option("--out", out_path, "output JSON (default stdout)");

  // verify / report
  auto* sc_verify = app.add_subcommand("verify", "run one verification suite");
  std::string suite;
  sc_verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  sc_verify->add_option("--out", out_path, "report JSON (default stdout)");

  auto* sc_report = app.add_subcommand("report", "run all suites, aggregate JSON");
  sc_report->add_option("--out", out_path, "report JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_surface->parsed()) {
      auto d = load_differential(diff_path);
      EpsteinMesh mesh;
      double a0, a1, x0, y0, x1, y1;
      int n, nx, ny;
      if (std::sscanf(grid.c_str(), "annulus:%lf:%lf:%d", &a0, &a1, &n) == 3)
        mesh = annulus_mesh(d, a0, a1, n, std::max(8, n / 4), standoff);
      else if (std::sscanf(grid.c_str(), "rect:%lf:%lf:%lf:%lf:%d:%d", &x0, &y0,
                           &x1, &y1, &nx, &ny) == 6)
        mesh = epstein_mesh(d, cx{x0, y0}, cx{x1, y1}, nx, ny, standoff);
      else
        throw std::invalid_argument("bad --grid: " + grid);
      write_mesh_ply(mesh, out_path, model == "ball");
      std::printf("wrote %zu vertices, %zu faces to %s\n", mesh.vertices.size(),
                  mesh.faces.size(), out_path.c_str());
    } else if (sc_traj->parsed()) {
      auto d = load_differential(diff_path);
      std::mt19937 rng(seed);
      std::uniform_real_distribution<double> jit(-jitter, jitter);
      std::vector<std::vector<cx>> lines;
      for (int i = 0; i < traj_grid; ++i)
        for (int j = 0; j < traj_grid; ++j) {
          cx z0{-3.0 + 6.0 * i / (traj_grid - 1.0) + jit(rng),
                -3.0 + 6.0 * j / (traj_grid - 1.0) + jit(rng)};
          if (std::abs(d.eval(z0)) == 0.0) continue;
          // collision pruning against already drawn lines
          bool close = false;
          for (auto& l : lines)
            for (cx w : l)
              if (std::abs(w - z0) < 3.0 / traj_grid) close = true;
          if (close) continue;
          auto fwd = flat_trajectory(d, z0, angle, traj_len / 2, traj_samples / 2);
          auto bwd = flat_trajectory(d, z0, angle + M_PI, traj_len / 2, traj_samples / 2);
          std::reverse(bwd.begin(), bwd.end());
          bwd.insert(bwd.end(), fwd.begin() + 1, fwd.end());
          lines.push_back(std::move(bwd));
        }
      if (traj_out.size() > 4 && traj_out.substr(traj_out.size() - 4) == ".csv")
        write_polylines_csv(lines, traj_out);
      else
        write_polylines_svg(lines, traj_out);
      std::printf("wrote %zu trajectories to %s\n", lines.size(), traj_out.c_str());
    } else if (sc_hol->parsed()) {
      json outj;
      if (method == "ode") {
        if (loop_str.empty()) throw std::invalid_argument("--loop required for ode");
        auto d = load_differential(diff_path);
        Moebius m = monodromy(d, parse_loop(loop_str), hol_tol);
        outj = moebius_json(m);
      } else {
        if (gamma_str.empty())
          throw std::invalid_argument("--gamma required for darboux");
        auto pts = parse_loop(gamma_str);
        if (pts.size() != 4) throw std::invalid_argument("--gamma needs 4 entries");
        Moebius gamma{pts[0], pts[1], pts[2], pts[3]};
        auto d = load_differential(diff_path);
        Moebius m = darboux_holonomy(d.q * d.scale, gamma, parse_point(z0_str), hol_tol);
        outj = moebius_json(m);
      }
      write_text(out_path, outj.dump(2) + "\n");
    } else if (sc_geo->parsed()) {
      auto s = named_surface(surf_name);
      s.validate();
      auto path = flat_geodesic(s, {from_poly_idx, parse_point(from_str)},
                                {to_poly_idx, parse_point(to_str)});
      json legs = json::array();
      for (auto& l : path.legs)
        legs.push_back({{"hol", {l.hol.real(), l.hol.imag()}},
                        {"length", l.length},
                        {"end_cone", l.end_cone ? json(*l.end_cone) : json()}});
      json outj{{"length", path.length},
                {"cone_angles_ok", path.cone_angles_ok},
                {"legs", legs}};
      write_text(out_path, outj.dump(2) + "\n");
    } else if (sc_cyl->parsed()) {
      auto s = named_surface(surf_name);
      s.validate();
      std::vector<double> angles;
      for (int i = 0; i < nangles; ++i) angles.push_back(M_PI * i / nangles);
      auto cyls = detect_cylinders(s, angles, max_circ);
      json arr = json::array();
      for (auto& c : cyls)
        arr.push_back({{"circumference", c.circumference},
                       {"width", c.width},
                       {"theta", c.theta},
                       {"certified", c.certified}});
      write_text(out_path, json{{"cylinders", arr}}.dump(2) + "\n");
    } else if (sc_verify->parsed()) {
      auto r = verify_suite(suite);
      write_text(out_path, report_json({r}) + "\n");
      return r.pass ? 0 : 1;
    } else if (sc_report->parsed()) {
      std::vector<SuiteResult> all;
      bool ok = true;
      for (auto& n : suite_names()) {
        all.push_back(verify_suite(n));
        ok = ok && all.back().pass;
      }
      write_text(out_path, report_json(all) + "\n");
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return 1;
  }
  return 0;
}
