import math

import mpmath
import numpy as np
import pytest

from ihara.errors import DomainViolationError, SingularTermError
from ihara.graph import cycle_graph
from ihara.lattice import (
    ConvergenceTable,
    QuadratureSpec,
    laplacian_form_reciprocal,
    limit_reciprocal_closed_form,
    limit_reciprocal_quadrature,
    theorem4_table,
    zeta_cn_reciprocal,
    zeta_lattice,
)
from ihara.walk import det_I_minus_uU_polynomial
from ihara.zeta import Route


def midpoint_oracle(u, N):
    """The midpoint nodes are the N-th roots of -1, so prod |1 - u e^{ix_j}|^2 = |1 + u^N|^2."""
    if abs(u) < 1:
        return abs(1 + u**N) ** (2 / N)
    return u * u * abs(1 + u ** (-N)) ** (2 / N)


def integral_oracle(u):
    f = lambda x: mpmath.log((1 + u * u) - 2 * u * mpmath.cos(x))
    return float(mpmath.exp(mpmath.quad(f, [0, mpmath.pi, 2 * mpmath.pi]) / (2 * mpmath.pi)))


def test_quadrature_spec():
    spec = QuadratureSpec(8)
    assert spec.nodes[0] == pytest.approx(np.pi / 8)
    assert np.all(spec.nodes > 0) and np.all(spec.nodes < 2 * np.pi)
    with pytest.raises(ValueError):
        QuadratureSpec(3)
    with pytest.raises(ValueError):
        QuadratureSpec(8, rule="gauss")


@pytest.mark.parametrize("n, u, expected", [
    (4, 0.5, (15 / 16) ** 0.5),
    (3, 0.5, (7 / 8) ** (2 / 3)),
])
def test_cn_examples(n, u, expected):
    ev = zeta_cn_reciprocal(n, u)
    assert ev.value == pytest.approx(expected, abs=1e-12)
    assert ev.route is Route.SPECTRAL_SUM


def test_cn_at_zero():
    for n in (3, 10, 100):
        assert zeta_cn_reciprocal(n, 0.0).value == 1.0


def test_cn_singular():
    with pytest.raises(SingularTermError):
        zeta_cn_reciprocal(5, 1.0)
    with pytest.raises(SingularTermError):
        zeta_cn_reciprocal(5, -1)


@pytest.mark.parametrize("n", range(3, 13))
@pytest.mark.parametrize("u", [-0.8, -0.35, 0.2, 0.6, 0.95])
def test_identity_chain(n, u):
    via_sum = zeta_cn_reciprocal(n, u).value
    via_grover = det_I_minus_uU_polynomial(cycle_graph(n))(u) ** (1 / n)
    closed = (1 - u**n) ** (2 / n)
    assert via_sum == pytest.approx(closed, abs=1e-12)
    assert via_grover == pytest.approx(closed, abs=1e-12)


def test_cn_extended_precision():
    ev = zeta_cn_reciprocal(64, 0.5, dps=60)
    with mpmath.workdps(60):
        expected = (1 - mpmath.mpf(0.5) ** 64) ** (mpmath.mpf(2) / 64)
        assert abs(ev.value - expected) < mpmath.mpf(10) ** -55


@pytest.mark.parametrize("u", [0.1, 0.5, -0.7, 0.99, 1.5, -2.0, 3.0])
@pytest.mark.parametrize("N", [4, 16, 100, 1024])
def test_midpoint_matches_root_of_unity_oracle(u, N):
    got = limit_reciprocal_quadrature(u, QuadratureSpec(N)).value
    assert got == pytest.approx(midpoint_oracle(u, N), rel=1e-13)


@pytest.mark.parametrize("u", [-2.0, -0.6, 0.3, 0.8, 1.2, 4.0])
def test_closed_form_matches_adaptive_quadrature(u):
    assert limit_reciprocal_closed_form(u).value == pytest.approx(integral_oracle(u), rel=1e-12)


def test_quadrature_examples():
    spec = QuadratureSpec(1024)
    assert abs(limit_reciprocal_quadrature(0.5, spec).value - 1.0) <= 1e-10
    assert abs(limit_reciprocal_quadrature(2.0, spec).value - 4.0) <= 1e-8
    assert limit_reciprocal_quadrature(0.0, QuadratureSpec(5)).value == 1.0
    assert laplacian_form_reciprocal(0.0).value == 1.0


def test_closed_form_examples():
    assert limit_reciprocal_closed_form(0.5).value == 1.0
    assert limit_reciprocal_closed_form(2.0).value == 4.0
    assert limit_reciprocal_closed_form(1.0).value == 1.0
    for u in np.linspace(-3, 3, 61):
        assert limit_reciprocal_closed_form(u).value == pytest.approx(max(1.0, u * u), rel=1e-15)


def test_unit_circle_warns():
    with pytest.warns(RuntimeWarning):
        ev = limit_reciprocal_quadrature(1.0, QuadratureSpec(4096))
    assert ev.warnings
    # midpoint product gives 2^{2/N} exactly, so the error is O(1/N)
    assert ev.value == pytest.approx(2 ** (2 / 4096), rel=1e-12)


@pytest.mark.parametrize("u", [-0.9, -0.3, 0.5, 0.95, 1.7, -2.5])
def test_laplacian_form_matches(u):
    spec = QuadratureSpec(1024)
    a = laplacian_form_reciprocal(u, spec).value
    b = limit_reciprocal_quadrature(u, spec).value
    assert abs(a - b) <= 1e-14


def test_laplacian_integrand_identity():
    x = QuadratureSpec(256).nodes
    for u in (-0.4, 0.3, 0.8):
        lhs = (1 - 2 * u + u * u) + 2 * u * (1 - np.cos(x))
        rhs = (1 + u * u) - 2 * u * np.cos(x)
        np.testing.assert_allclose(lhs, rhs, rtol=1e-14)


def test_lattice_zeta():
    ev = zeta_lattice(0.4)
    assert ev.value == 1.0 and not ev.reciprocal


def test_theorem4_table_examples():
    tab = theorem4_table(0.5, [4, 8, 16, 32])
    assert tab.strictly_decreasing()
    for n, value, err in tab.rows:
        assert float(err) == pytest.approx(abs((1 - 0.5**n) ** (2 / n) - 1), rel=1e-9)
    zero = theorem4_table(0.0, [4, 8])
    assert all(v == 1.0 and e == 0.0 for _, v, e in zero.rows)
    assert float(theorem4_table(0.9, [8, 64, 512]).errors[-1]) < 1e-3


def test_theorem4_table_errors_track_closed_form():
    # error = 1 - (1 - u^n)^{2/n}, which falls far below double precision
    tab = theorem4_table(0.3, [64, 256])
    for n, _, err in tab.rows:
        with mpmath.workdps(200):
            expected = 1 - (1 - mpmath.mpf(0.3) ** n) ** (mpmath.mpf(2) / n)
            assert abs(err - expected) <= expected * mpmath.mpf(10) ** -20


def test_theorem4_table_double_precision_flatlines():
    tab = theorem4_table(0.5, [64, 128], extended=False)
    assert tab.errors == [0.0, 0.0]
    assert not tab.strictly_decreasing()


def test_theorem4_domain():
    with pytest.raises(DomainViolationError):
        theorem4_table(1.0, [4])
    with pytest.raises(ValueError):
        theorem4_table(0.5, [8, 4])


def test_table_serialisation():
    tab = theorem4_table(0.5, [4, 8])
    csv_text = tab.to_csv().splitlines()
    assert csv_text[0] == "n,value,abs_error"
    assert csv_text[1].startswith("4,0.968245836551854,")
    js = tab.to_json()
    assert js["limit"] == 1.0 and [r["n"] for r in js["rows"]] == [4, 8]
    assert isinstance(tab, ConvergenceTable)


@pytest.mark.parametrize("u", np.round(np.arange(-0.9, 0.91, 0.15), 2))
def test_riemann_sum_converges(u):
    err = abs(zeta_cn_reciprocal(1024, u).value - limit_reciprocal_closed_form(u).value)
    assert err < 1e-3


def test_real_only():
    with pytest.raises(TypeError):
        limit_reciprocal_quadrature(0.5j)
