"""Cross-check suites comparing independent routes to the same quantity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Polynomial
from .cycles import count_reduced_cycles, hashimoto_trace_counts
from .graph import complete_graph, cycle_graph, petersen
from .lattice import (
    QuadratureSpec,
    laplacian_form_reciprocal,
    limit_reciprocal_closed_form,
    limit_reciprocal_quadrature,
    theorem4_table,
)
from .walk import (
    det_I_minus_uU_polynomial,
    grover_char_poly,
    grover_matrix,
    grover_spectrum,
    multiset_distance,
)
from .zeta import (
    cjk_evaluate,
    generalized_zeta_reciprocal,
    ihara_reciprocal_polynomial,
    series_from_counts,
)

KONNO_SATO_RTOL = 1e-8
SPECTRUM_TOL = 1e-8
CJK_TOL = 1e-10
QUAD_TOL = 1e-8
THEOREM4_FINAL = 1e-3


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    tolerance: float = 0.0

    def to_json(self):
        return {"name": self.name, "passed": bool(self.passed),
                "detail": self.detail, "tolerance": self.tolerance}


def default_graphs():
    return [cycle_graph(n) for n in range(3, 9)] + [complete_graph(4), petersen()]


def konno_sato_check(g):
    """Exact char poly against numeric det(lambda I - U) at 4m+1 points on |lambda| = 1/2."""
    poly = grover_char_poly(g)
    U = grover_matrix(g).U
    size = U.shape[0]
    npts = 4 * g.m + 1
    lam = 0.5 * np.exp(2j * np.pi * (np.arange(npts) + 0.25) / npts)
    worst = 0.0
    for z in lam:
        direct = np.linalg.det(z * np.eye(size) - U)
        worst = max(worst, abs(poly(complex(z)) - direct) / abs(direct))
    return Check(f"konno-sato {g.name}", worst <= KONNO_SATO_RTOL,
                 f"max relative deviation {worst:.3g}", KONNO_SATO_RTOL)


def spectrum_check(g):
    mapped, direct, _ = grover_spectrum(g)
    dist = multiset_distance(mapped.values, direct.values)
    return Check(f"spectral-mapping {g.name}", dist <= SPECTRUM_TOL,
                 f"multiset distance {dist:.3g}", SPECTRUM_TOL)


def konno_sato_suite(graphs=None):
    graphs = default_graphs() if graphs is None else graphs
    out = []
    for g in graphs:
        out.append(konno_sato_check(g))
        if g.is_regular():
            out.append(spectrum_check(g))
    return out


def series_duality_check(g, order):
    counts = count_reduced_cycles(g, order).counts
    prod = series_from_counts(counts, order) * ihara_reciprocal_polynomial(g).to_series(order)
    return Check(f"series*determinant {g.name} mod u^{order + 1}", prod.is_one(), "exact")


def oracle_check(g, k_max):
    a = count_reduced_cycles(g, k_max).counts
    b = hashimoto_trace_counts(g, k_max).counts
    return Check(f"dfs-vs-hashimoto {g.name} k<={k_max}", a == b, f"{list(a)} vs {list(b)}")


def cjk_check(g, grid):
    q = g.regular_degree() - 1
    worst = 0.0
    for u in grid:
        if abs(u) < 1 / q:
            a = cjk_evaluate(g, u).value
            b = generalized_zeta_reciprocal(g, u).value
            worst = max(worst, abs(a - b))
    return Check(f"cjk-vs-nth-root {g.name}", worst <= CJK_TOL,
                 f"max abs deviation {worst:.3g}", CJK_TOL)


def cycle_identity_check(n):
    target = Polynomial.binomial_power(1, -1, n, 2)
    g = cycle_graph(n)
    ok = ihara_reciprocal_polynomial(g) == target == det_I_minus_uU_polynomial(g)
    return Check(f"(1-u^{n})^2 identity C{n}", ok, "exact")


U_GRID = [s * k * 0.05 for k in range(1, 9) for s in (1, -1)]


def routes_suite(graphs=None, order=8):
    graphs = default_graphs() if graphs is None else graphs
    out = []
    for g in graphs:
        out.append(oracle_check(g, order))
        out.append(series_duality_check(g, order))
        if g.vertex_transitive:
            out.append(cjk_check(g, U_GRID))
        if g.regular_degree() == 2:
            out.append(cycle_identity_check(g.n))
    return out


THEOREM4_U = (0.3, 0.5, 0.7, 0.9)
THEOREM4_N = tuple(2**k for k in range(2, 11))
QUAD_U = (0.1, 0.3, 0.5, 0.7, 0.9, 1.5, 2.0)


def theorem4_suite():
    out = []
    for u in THEOREM4_U:
        tab = theorem4_table(u, THEOREM4_N)
        final = float(tab.errors[-1])
        ok = tab.strictly_decreasing() and final < THEOREM4_FINAL
        out.append(Check(f"C_n -> Z convergence u={u}", ok,
                         f"final error {final:.3g}, strictly decreasing={tab.strictly_decreasing()}",
                         THEOREM4_FINAL))
    spec = QuadratureSpec(2048)
    for u in [s * x for x in QUAD_U for s in (1, -1)]:
        quad = limit_reciprocal_quadrature(u, spec).value
        dev = abs(quad - limit_reciprocal_closed_form(u).value)
        out.append(Check(f"quadrature vs closed form u={u}", dev <= QUAD_TOL,
                         f"deviation {dev:.3g}", QUAD_TOL))
        lap = laplacian_form_reciprocal(u, spec).value
        out.append(Check(f"laplacian form u={u}", abs(lap - quad) <= 1e-14,
                         f"deviation {abs(lap - quad):.3g}", 1e-14))
    return out


SUITES = {
    "konno-sato": konno_sato_suite,
    "routes": routes_suite,
    "theorem4": theorem4_suite,
}
