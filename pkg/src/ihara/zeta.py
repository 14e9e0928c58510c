"""Ihara zeta functions: determinant formula, cycle series, generalized zeta.

Everything polynomial or series valued here is exact over Q. Floating point
only appears in :class:`ZetaEvaluation` values at concrete points.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from .algebra import Polynomial, PowerSeries, det_bareiss, polynomial_determinant
from .cycles import DEFAULT_BUDGET, count_reduced_cycles, count_rooted_reduced_cycles
from .errors import BranchAmbiguityError, DomainWarning, NonTransitiveError
from .graph import Graph, betti

__all__ = [
    "Route",
    "ZetaEvaluation",
    "ihara_reciprocal_polynomial",
    "ihara_reciprocal_at",
    "zeta_series_truncated",
    "rooted_zeta_series",
    "series_from_counts",
    "generalized_zeta_reciprocal",
    "cjk_evaluate",
]


class Route(str, Enum):
    SERIES = "series"
    IHARA_BASS = "ihara_bass"
    GROVER_DET = "grover_det"
    CJK = "cjk"
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"
    SPECTRAL_SUM = "spectral_sum"


@dataclass(frozen=True)
class ZetaEvaluation:
    """A value of a zeta function (or its reciprocal) tagged with how it was computed."""

    u: complex
    value: complex
    route: Route
    reciprocal: bool = True
    warnings: tuple[str, ...] = field(default=())

    def __float__(self):
        return float(self.value.real if isinstance(self.value, complex) else self.value)

    def to_json(self):
        from .report import fmt_number

        return {
            "u": fmt_number(self.u),
            "value": fmt_number(self.value),
            "route": self.route.value,
            "reciprocal": self.reciprocal,
            "warnings": list(self.warnings),
        }


def ihara_reciprocal_polynomial(g: Graph) -> Polynomial:
    """Z(G, u)^{-1} = (1 - u^2)^{r-1} det(I - uA + u^2 (D - I)) as an exact polynomial."""
    A = [[int(x) for x in row] for row in g.adjacency]
    deg = [int(d) for d in g.degrees]
    n = g.n

    def at(u):
        return [[(1 + u * u * (deg[i] - 1) if i == j else 0) - u * A[i][j]
                 for j in range(n)] for i in range(n)]

    det = polynomial_determinant(at, 2 * n, exact_det=det_bareiss)
    r = betti(g)
    one_minus_u2 = Polynomial([1, 0, -1])
    if r >= 1:
        return det * one_minus_u2 ** (r - 1)
    # trees: r = 0 and the determinant carries the (1 - u^2) factor
    return det.exact_div(one_minus_u2)


def ihara_reciprocal_at(g: Graph, u) -> ZetaEvaluation:
    poly = ihara_reciprocal_polynomial(g)
    return ZetaEvaluation(u, poly(u), Route.IHARA_BASS)


def series_from_counts(counts, order) -> PowerSeries:
    """exp(sum_k N_k u^k / k) truncated at ``order``; ``counts[k-1]`` is N_k."""
    log_coeffs = [Fraction(0)] + [Fraction(c, k) for k, c in enumerate(counts[:order], start=1)]
    return PowerSeries(log_coeffs, order).exp()


def zeta_series_truncated(g: Graph, K, budget=DEFAULT_BUDGET) -> PowerSeries:
    """Taylor series of Z(G, u) through u^K from brute-force cycle counts."""
    counts = count_reduced_cycles(g, K, budget=budget).counts
    return series_from_counts(counts, K)


def rooted_zeta_series(g: Graph, x0, K, budget=DEFAULT_BUDGET) -> PowerSeries:
    """Taylor series of the generalized zeta exp(sum_m N0_m u^m / m) rooted at ``x0``."""
    rooted = count_rooted_reduced_cycles(g, x0, K, budget=budget).rooted
    return series_from_counts(rooted, K)


def _require_transitive(g):
    if not g.vertex_transitive:
        raise NonTransitiveError(
            f"{g!r} is not flagged vertex-transitive; the generalized zeta needs it")


def generalized_zeta_reciprocal(g: Graph, u) -> ZetaEvaluation:
    """zeta_G(u)^{-1} = Z(G, u)^{-1/n}, taking the real positive root."""
    _require_transitive(g)
    u = float(u)
    if not -1 < u < 1:
        raise ValueError(f"u must lie in (-1, 1), got {u}")
    z_inv = ihara_reciprocal_polynomial(g)(Fraction(u))
    if z_inv <= 0:
        raise BranchAmbiguityError(
            f"Z(G, u)^-1 = {float(z_inv):.6g} <= 0 at u={u}; no positive real root")
    return ZetaEvaluation(u, float(z_inv) ** (1.0 / g.n), Route.IHARA_BASS)


def cjk_evaluate(g: Graph, u) -> ZetaEvaluation:
    """Chinta-Jorgenson-Karlsson formula with the empirical Laplacian spectral measure.

    Returns zeta_G(u)^{-1} = (1 - u^2)^{(q-1)/2} exp(mean_lambda log(1 - (q+1-lambda)u + q u^2)).
    Outside the domain where every logarithm argument is positive, the
    principal complex branch is used and a :class:`DomainWarning` is issued.
    """
    _require_transitive(g)
    d = g.regular_degree()
    if d is None:
        raise NonTransitiveError(f"{g!r} is not regular")
    q = d - 1
    u = float(u)
    lap = (np.diag(g.degrees) - g.adjacency).astype(float)
    lam = np.sort(np.linalg.eigvalsh(lap))
    args = 1.0 - (q + 1 - lam) * u + q * u * u
    notes = []
    if np.all(args > 0):
        log_mean = math.fsum(np.log(args)) / g.n
    else:
        notes.append("log argument <= 0; principal complex branch used")
        log_mean = sum(cmath.log(complex(a)) for a in args) / g.n
    base = 1.0 - u * u
    expo = (q - 1) / 2
    if base > 0 or expo == int(expo):
        prefactor = base**expo
    else:
        notes.append("(1 - u^2) < 0 with half-integer exponent; principal branch used")
        prefactor = complex(base) ** expo
    for note in notes:
        warnings.warn(note, DomainWarning, stacklevel=2)
    value = prefactor * (cmath.exp(log_mean) if notes else math.exp(log_mean))
    return ZetaEvaluation(u, value, Route.CJK, warnings=tuple(notes))
