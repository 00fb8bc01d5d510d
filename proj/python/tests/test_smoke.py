import math

import pytest

import tricontain as tc


def test_disk_is_symmetric():
    disk = tc.disk()
    assert tc.area(disk) == pytest.approx(1.0, abs=1e-12)
    res = tc.probability(disk)
    assert res.value == pytest.approx(0.25, abs=1e-9)
    assert res.method == "quadrature_eq15"
    assert tc.symmetry_defect(disk) < 1e-10


def test_limacon_quadrature_matches_closed_form():
    closed = tc.closed_forms.limacon_probability(2.0)
    assert closed == pytest.approx(0.25 - 272.0 / (243.0 * math.pi**2), abs=1e-14)
    quad = tc.probability(tc.limacon(2.0)).value
    assert quad == pytest.approx(closed, abs=1e-8)


def test_square_monte_carlo_agrees():
    closed = tc.closed_forms.square_probability(1 / 3, 1 / 3)
    est = tc.estimate_probability(tc.square(), (1 / 3, 1 / 3), n=200000, seed=7)
    assert abs(est.p_hat - closed) < 5 * est.std_err
    assert est.n == 200000
    again = tc.estimate_probability(tc.square(), (1 / 3, 1 / 3), n=200000, seed=7)
    assert again.p_hat == est.p_hat  # seed determinism


def test_triangle_closed_form_value():
    centroid = tc.closed_forms.triangle_probability(1 / 3, 1 / 3, 1 / 3)
    assert centroid == pytest.approx(2 / 27 + 20 * math.log(2) / 81, abs=1e-12)


def test_bounds_sandwich():
    rep = tc.bounds(tc.equilateral_triangle(), (0.0, 3 ** -0.25 / math.sqrt(3)))
    assert rep.h == pytest.approx(4 / 9, abs=1e-9)
    assert rep.lower <= rep.p <= rep.upper + 1e-9


def test_resolve_region_shorthands():
    region, anchor = tc.resolve_region("limacon:a=2")
    assert anchor == (0.0, 0.0)
    assert tc.probability(region, anchor).value == pytest.approx(
        tc.closed_forms.limacon_probability(2.0), abs=1e-8
    )
    with pytest.raises(tc.RegionParseError):
        tc.resolve_region("nonagon")


def test_polygon_factory_and_domain_errors():
    tri = tc.polygon([(0, 0), (2, 0), (0, 2)])
    assert tc.area(tri) == pytest.approx(2.0, abs=1e-12)
    assert tc.contains(tri, (0.5, 0.5))
    with pytest.raises(tc.DomainError):
        tc.closed_forms.limacon_probability(0.5)
    with pytest.raises(tc.DomainError):
        tc.polygon([(0, 0), (1, 0)])
