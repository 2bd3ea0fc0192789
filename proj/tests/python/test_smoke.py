import cmath
import math
import os
import sys

if "ESLAB_MODULE_DIR" in os.environ:
    sys.path.insert(0, os.environ["ESLAB_MODULE_DIR"])

import _eslab as es


def test_differential_and_correction():
    d = es.from_poly([0.0, 1.0])  # q = z
    assert d.eval(2.0) == 2.0
    assert d.zeros == [(0.0, 1)]
    hat = es.phi_hat(d)
    z = 2.0 + 0.0j
    assert abs(hat.eval(z) - (z + 5.0 / (8.0 * z * z))) < 1e-12


def test_holonomy_oracle():
    t = 2.3
    d = es.from_poly([t])
    c = 1.0 + 0.7j
    m = es.transport_matrix(d, [0.0, c])
    want = 2.0 * cmath.cos(cmath.sqrt(t / 2.0) * c)
    assert abs(m.tr() - want) < 1e-8 * abs(want)
    assert abs(es.translation_length(m) - math.sqrt(2 * t) * 0.7) < 1e-8


def test_moebius_and_distance():
    g = es.Moebius(2.0, 0.0, 0.0, 0.5)
    p = es.Pt3(0.0, 1.0)
    assert abs(es.dist(p, g.apply(p)) - 2.0 * math.log(2.0)) < 1e-12
    assert abs((g * g.inverse()).tr() - 2.0) < 1e-15


def test_envelope_collapse():
    d = es.from_poly([1.0])  # constant differential
    rep = es.collapse_report(d, 0.0, 3.0, "horizontal")
    assert rep["image_diameter"] < 1e-9
    forms = es.epstein_forms(es.from_poly([0.0, 1.0]), 2.0)
    assert abs(forms["kappa_v"] - 5.0 / 133.0) < 1e-12


def test_limit_survey():
    rep = es.ms_limit_survey([1j, 2j], [1e2, 1e4, 1e6])
    assert rep["limit_heights"] == [0.5, 1.0]
    assert rep["sup_norm_gap"] < 1e-3


def test_geodesic():
    l = es.flat_geodesic_length("square-torus", 0, 0.2 + 0.2j, 0, 0.7 + 0.8j)
    assert abs(l - abs(-0.5 + -0.4j)) < 1e-9


def test_verify_suite():
    r = es.verify_suite("straightness")
    assert r["pass"]
    assert any(c["id"] == "fold-detected" for c in r["checks"])
