// python bindings for the main operations: differentials and their flat
// calculus, developing transport and holonomy, envelope maps and diagnostics,
// rescaled limit surveys, flat surfaces, and the verification suites
#include "eslab/develop.hpp"
#include "eslab/epstein.hpp"
#include "eslab/fourpoint.hpp"
#include "eslab/io.hpp"
#include "eslab/surface.hpp"
#include "eslab/trees.hpp"
#include "eslab/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eslab;

namespace {

PlanarDifferential make_poly_diff(const std::vector<cx>& coeffs, cx scale) {
  return make_differential(RatFn<cx>::from_poly(Poly<cx>(std::vector<cx>(coeffs))),
                           Chart{}, scale);
}

PlanarDifferential make_rational_diff(const std::vector<cx>& num,
                                      const std::vector<cx>& den, cx scale) {
  return make_differential(RatFn<cx>{Poly<cx>(std::vector<cx>(num)),
                                     Poly<cx>(std::vector<cx>(den))},
                           Chart{}, scale);
}

py::dict forms_dict(const FormsAtPoint& f) {
  py::dict d;
  d["I20"] = f.I20;
  d["I11"] = f.I11;
  d["II"] = f.II;
  d["n_h"] = f.n_h;
  d["n_v"] = f.n_v;
  d["kappa_h"] = f.kappa_h;
  d["kappa_v"] = f.kappa_v;
  d["eps"] = f.eps;
  d["immersed"] = f.immersed;
  return d;
}

py::dict suite_dict(const SuiteResult& s) {
  py::list checks;
  for (auto& c : s.checks) {
    py::dict e;
    e["id"] = c.id;
    e["pass"] = c.pass;
    e["measured"] = c.measured;
    e["bound"] = c.bound;
    checks.append(e);
  }
  py::dict d;
  d["suite"] = s.suite;
  d["pass"] = s.pass;
  d["checks"] = checks;
  return d;
}

} // namespace

PYBIND11_MODULE(_eslab, m) {
  m.doc() = "envelope maps of quadratic differentials and holonomy limits";

  py::class_<Pt3>(m, "Pt3")
      .def(py::init([](cx z, double t) { return Pt3{z, t}; }), py::arg("z"),
           py::arg("t"))
      .def_readwrite("z", &Pt3::z)
      .def_readwrite("t", &Pt3::t)
      .def("__repr__", [](const Pt3& p) {
        return "Pt3(" + std::to_string(p.z.real()) + "+" +
               std::to_string(p.z.imag()) + "j, " + std::to_string(p.t) + ")";
      });

  py::class_<Moebius>(m, "Moebius")
      .def(py::init([](cx a, cx b, cx c, cx d) { return Moebius{a, b, c, d}; }),
           py::arg("a") = cx{1.0}, py::arg("b") = cx{0.0}, py::arg("c") = cx{0.0},
           py::arg("d") = cx{1.0})
      .def_readwrite("a", &Moebius::a)
      .def_readwrite("b", &Moebius::b)
      .def_readwrite("c", &Moebius::c)
      .def_readwrite("d", &Moebius::d)
      .def("det", &Moebius::det)
      .def("tr", &Moebius::tr)
      .def("inverse", &Moebius::inverse)
      .def("normalized", &Moebius::normalized)
      .def("apply", &Moebius::apply)
      .def("boundary", &Moebius::boundary)
      .def("__mul__", &Moebius::operator*);

  m.def("dist", &dist, "hyperbolic distance in the upper half-space");
  m.def("translation_length", &translation_length);
  m.def("evaluate_word", &evaluate_word, py::arg("gens"), py::arg("word"));
  m.def("four_point_delta", &four_point_delta, py::arg("dist_matrix"), py::arg("n"));

  py::class_<PlanarDifferential>(m, "Differential")
      .def("eval", &PlanarDifferential::eval)
      .def_property_readonly("zeros",
                             [](const PlanarDifferential& d) {
                               std::vector<std::pair<cx, int>> out;
                               for (auto& z : d.zeros) out.push_back({z.z, z.order});
                               return out;
                             })
      .def_readonly("scale", &PlanarDifferential::scale);

  m.def("from_poly", &make_poly_diff, py::arg("coeffs"), py::arg("scale") = cx{1.0},
        "differential from ascending polynomial coefficients");
  m.def("from_rational", &make_rational_diff, py::arg("num"), py::arg("den"),
        py::arg("scale") = cx{1.0});
  m.def("parse_differential", &parse_differential, py::arg("json_text"));
  m.def("beta", [](const PlanarDifferential& d) { return beta(d); },
        "flat-metric correction term of the differential");
  m.def("phi_hat", [](const PlanarDifferential& d) { return phi_hat(d); });
  m.def("segment_holonomy", &segment_holonomy, py::arg("d"), py::arg("a"),
        py::arg("b"), py::arg("margin_frac") = 1e-6, py::arg("tol") = 1e-11);
  m.def("phi_length", &phi_length, py::arg("d"), py::arg("a"), py::arg("b"),
        py::arg("tol") = 1e-11);
  m.def("dist_to_zeros", &dist_to_zeros);

  m.def("transport_matrix", &transport_matrix, py::arg("d"), py::arg("path"),
        py::arg("tol") = 1e-10);
  m.def("monodromy", &monodromy, py::arg("d"), py::arg("loop"), py::arg("tol") = 1e-10);
  m.def("darboux_holonomy",
        [](const PlanarDifferential& phi, const Moebius& gamma, cx z0, double tol) {
          return darboux_holonomy(phi.q * phi.scale, gamma, z0, tol);
        },
        py::arg("phi"), py::arg("gamma"), py::arg("z0"), py::arg("tol") = 1e-10);
  m.def("trace_coordinates", &trace_coordinates, py::arg("gens"), py::arg("words"));
  m.def("projectivize", &projectivize);

  m.def("epstein_point", [](const PlanarDifferential& d, cx z) {
    return image_of_path(d, {z, z}).front();
  }, "envelope image of one point under the identity-germ developing map");
  m.def("image_of_path", &image_of_path, py::arg("d"), py::arg("path"),
        py::arg("tol") = 1e-12);
  m.def("epstein_forms",
        [](const PlanarDifferential& d, cx z) { return forms_dict(epstein_forms(d, z)); });
  m.def("trace_leaf", &trace_leaf, py::arg("d"), py::arg("z0"), py::arg("length"),
        py::arg("vertical"), py::arg("nsamples"), py::arg("substeps") = 16);
  m.def("leaf_curvature", [](const PlanarDifferential& d, cx z, double h) {
    auto lc = leaf_curvature(d, z, h);
    py::dict out;
    out["k"] = lc.k;
    out["bound"] = lc.bound;
    out["standoff"] = lc.standoff;
    out["pass"] = lc.pass;
    return out;
  }, py::arg("d"), py::arg("z"), py::arg("h") = 0.05);
  m.def("collapse_report",
        [](const PlanarDifferential& d, cx z0, double length, const std::string& kind) {
          SegmentKind k = kind == "horizontal" ? SegmentKind::Horizontal
                          : kind == "vertical" ? SegmentKind::Vertical
                                               : throw std::invalid_argument(
                                                     "kind: horizontal or vertical");
          auto r = collapse_report(d, z0, length, k);
          py::dict out;
          out["length"] = r.length;
          out["standoff"] = r.standoff;
          out["image_diameter"] = r.image_diameter;
          out["endpoint_distance"] = r.endpoint_distance;
          out["bound"] = r.bound;
          out["pass"] = r.pass;
          return out;
        },
        py::arg("d"), py::arg("z0"), py::arg("length"), py::arg("kind"));

  m.def("scale_at", &scale_at, py::arg("gens"), py::arg("x"));
  m.def("approximate_center",
        [](const std::vector<Moebius>& gens, const Pt3& guess) {
          auto [p, r] = approximate_center(gens, guess);
          return py::make_tuple(p, r);
        },
        py::arg("gens"), py::arg("guess"));
  m.def("ms_limit_survey",
        [](const std::vector<cx>& periods, const std::vector<double>& ts) {
          TranslationFamily fam;
          fam.periods = periods;
          auto rep = ms_limit_survey(fam, ts);
          py::dict out;
          out["limit_heights"] = rep.limit_heights;
          out["sup_norm_gap"] = rep.sup_norm_gap;
          out["length_drift"] = rep.length_drift;
          py::list rows;
          for (auto& r : rep.rows) {
            py::dict row;
            row["t"] = r.t;
            row["log_traces"] = r.log_traces;
            row["proj"] = r.proj;
            row["lengths"] = r.lengths;
            row["delta"] = r.delta;
            rows.append(row);
          }
          out["rows"] = rows;
          return out;
        },
        py::arg("periods"), py::arg("ts"));
  m.def("free_family_delta",
        [](const std::vector<double>& ts, const std::vector<std::vector<int>>& words) {
          auto rep = free_family_delta(ts, words, Pt3{cx{0.0}, 1.0});
          return py::make_tuple(rep.deltas, rep.slope);
        },
        py::arg("ts"), py::arg("words"));

  m.def("flat_geodesic_length",
        [](const std::string& name, int p0, cx from, int p1, cx to) {
          HalfTranslationSurface s =
              name == "square-torus" ? square_torus()
              : name == "octagon"    ? regular_octagon_surface()
              : name == "l-shape"
                  ? l_shaped_surface(1.0, 1.0)
                  : throw std::invalid_argument("unknown surface " + name);
          s.validate();
          return flat_geodesic(s, {p0, from}, {p1, to}).length;
        },
        py::arg("surface"), py::arg("from_poly"), py::arg("from_z"),
        py::arg("to_poly"), py::arg("to_z"));

  m.def("suite_names", &suite_names);
  m.def("verify_suite",
        [](const std::string& name) { return suite_dict(verify_suite(name)); });
}
