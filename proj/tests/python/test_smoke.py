import math

import numpy as np
import pytest

import nckit


def test_reduce_commutator():
    assert nckit.reduce("x1*x2 - x2*x1", t12="t") == "i*t"
    assert nckit.reduce("~ (x1*x2)", t12="t") == "x1.x2 - 1/2*i*t"
    assert nckit.reduce("d(x1)") == "dx1"


def test_reduce_is_deterministic():
    expr = "(x1 + t*x2)*(x2*x3) - D1(x1*x1*x2)"
    first = nckit.reduce(expr, t12="t^2", t23="1 - t")
    assert all(nckit.reduce(expr, t12="t^2", t23="1 - t") == first for _ in range(5))


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="column 4"):
        nckit.reduce("x1*")


def test_star_suite_report():
    report = nckit.run_suite("star", seed=7, cases=10)
    assert report["schema"] == nckit.REPORT_SCHEMA == "nckit-report/1"
    assert report["status"] == "pass"
    assert all(p["failed"] == 0 for p in report["properties"])
    with pytest.raises(ValueError):
        nckit.run_suite("unknown")


def test_planewave_harmonics():
    report = nckit.planewave_report(
        "[theta]\nt12 = t\n[planewave]\nomega = 3\nk = 1 2 2\np = 1 2 -1 0\nprofile = cos\n"
    )
    spectrum = {h["n"]: h["amplitude"]["value"] for h in report["harmonics"]}
    assert spectrum == pytest.approx({1: 0.25, 3: -0.25}, abs=1e-12)
    assert report["cubic"]["matches"]


def test_planewave_zero_polarisation_vector():
    report = nckit.planewave_report("[planewave]\nomega = 3\nk = 1 2 2\np = 0 0 0 0\nprofile = 0 1\n")
    assert report["quadratic"]["computed"]["value"] == 0
    assert report["cubic"]["vanishes"]


def test_grid_star_phase_law():
    n, box, theta = 64, 2 * math.pi * 4, 1.5
    x = np.arange(n) * box / n
    X1, X2 = np.meshgrid(x, x, indexing="ij")
    kk = 2 * math.pi / box
    a, b = (1, 2), (-3, 1)
    fa = np.exp(1j * kk * (a[0] * X1 + a[1] * X2))
    fb = np.exp(1j * kk * (b[0] * X1 + b[1] * X2))
    phase = np.exp(-0.5j * theta * kk * kk * (a[0] * b[1] - a[1] * b[0]))
    expected = phase * np.exp(1j * kk * ((a[0] + b[0]) * X1 + (a[1] + b[1]) * X2))
    got = nckit.grid_star(fa, fb, box, theta)
    assert np.max(np.abs(got - expected)) < 1e-10
    assert nckit.phase_law_error(n, box, theta, a, b) < 1e-10


def test_grid_round_trip_and_check(tmp_path):
    n, box, theta = 32, 2 * math.pi * 2, 1.0
    x = np.arange(n) * box / n
    X1, X2 = np.meshgrid(x, x, indexing="ij")
    values = np.cos(2 * math.pi * X1 / box) + 1j * np.sin(4 * math.pi * X2 / box)
    path = tmp_path / "field.ncgrid"
    nckit.write_grid(str(path), values, box, theta)
    back, box2, theta2 = nckit.read_grid(str(path))
    assert np.array_equal(back, values) and box2 == box and theta2 == theta
    report = nckit.grid_check(str(path))
    assert report["status"] == "pass"
    assert report["trace"]["relative"] < 1e-10
