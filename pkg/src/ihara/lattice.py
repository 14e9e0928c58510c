"""Generalized zeta of the cycle graph C_n and its limit on the integer lattice.

For C_n the generalized zeta reciprocal is the exponentiated average of
``log((1 + u^2) - 2u cos(2 pi k / n))`` over k. As n grows the average becomes
the integral over [0, 2 pi), whose value is ``max(1, u^2)``. Z has no reduced
cycles, so its generalized zeta is identically 1 and the cycle-graph values
converge to it for |u| < 1.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass, field

import mpmath
import numpy as np

from .errors import DomainViolationError, SingularTermError
from .report import fmt_number
from .zeta import Route, ZetaEvaluation

__all__ = [
    "QuadratureSpec",
    "ConvergenceTable",
    "zeta_cn_reciprocal",
    "zeta_lattice",
    "limit_reciprocal_quadrature",
    "limit_reciprocal_closed_form",
    "laplacian_form_reciprocal",
    "theorem4_table",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Uniform midpoint rule on [0, 2 pi); nodes never touch x = 0."""

    node_count: int = 1024
    rule: str = "midpoint_uniform"

    def __post_init__(self):
        if self.node_count < 4:
            raise ValueError(f"node_count must be >= 4, got {self.node_count}")
        if self.rule != "midpoint_uniform":
            raise ValueError(f"unknown quadrature rule {self.rule!r}")

    @property
    def nodes(self) -> np.ndarray:
        N = self.node_count
        return 2 * np.pi * (np.arange(N) + 0.5) / N


@dataclass(frozen=True)
class ConvergenceTable:
    """Rows ``(n, value, abs_error)`` of zeta_{C_n}(u)^{-1} against ``limit``.

    Values and errors are kept at the working precision used to build the
    table (``mpmath.mpf`` when extended precision was needed).
    """

    u: float
    limit: float
    rows: tuple = field(default=())

    @property
    def errors(self):
        return [r[2] for r in self.rows]

    def strictly_decreasing(self):
        errs = self.errors
        return all(b < a for a, b in zip(errs, errs[1:]))

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value", "abs_error"])
        for n, value, err in self.rows:
            w.writerow([n, _fmt(value), _fmt(err)])
        return buf.getvalue()

    def to_json(self):
        return {
            "u": fmt_number(self.u),
            "limit": fmt_number(self.limit),
            "rows": [{"n": n, "value": _fmt(v), "abs_error": _fmt(e)} for n, v, e in self.rows],
        }


def _fmt(x):
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, 15)
    return fmt_number(x)


def _check_real(u):
    if isinstance(u, complex):
        raise TypeError("only real u is supported here")
    return float(u)


def zeta_cn_reciprocal(n, u, dps=None) -> ZetaEvaluation:
    """zeta_{C_n}(u)^{-1} as an exponentiated spectral average.

    With ``dps`` set, the sum is carried out in mpmath at that many decimal
    digits and the value is an ``mpmath.mpf``.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    u = _check_real(u)
    if abs(u) == 1:
        raise SingularTermError(f"u = {u}: the k = 0 term is log 0")
    if dps is None:
        theta = 2 * np.pi * np.arange(n) / n
        logs = np.log((1 + u * u) - 2 * u * np.cos(theta))
        value = math.exp(math.fsum(logs) / n)
    else:
        with mpmath.workdps(dps):
            uu = mpmath.mpf(u)
            total = mpmath.fsum(
                mpmath.log((1 + uu * uu) - 2 * uu * mpmath.cos(2 * mpmath.pi * k / n))
                for k in range(n))
            value = +mpmath.exp(total / n)
    return ZetaEvaluation(u, value, Route.SPECTRAL_SUM)


def zeta_lattice(u) -> ZetaEvaluation:
    """zeta_Z(u): Z has no reduced cycles, so every count is 0 and the zeta is 1."""
    u = _check_real(u)
    return ZetaEvaluation(u, 1.0, Route.CLOSED_FORM, reciprocal=False)


def _midpoint_mean_log(arg_fn, u, spec):
    notes = []
    if abs(u) == 1:
        notes.append("|u| = 1: integrable log singularity, accuracy O(log N / N)")
        warnings.warn(notes[-1], RuntimeWarning, stacklevel=3)
    if u == 0:
        return 1.0, notes
    vals = arg_fn(spec.nodes)
    return math.exp(math.fsum(np.log(vals)) / spec.node_count), notes


def limit_reciprocal_quadrature(u, spec: QuadratureSpec = QuadratureSpec()) -> ZetaEvaluation:
    """Midpoint rule for exp(int_0^{2pi} log((1 + u^2) - 2u cos x) dx / 2pi)."""
    u = _check_real(u)
    value, notes = _midpoint_mean_log(lambda x: (1 + u * u) - 2 * u * np.cos(x), u, spec)
    return ZetaEvaluation(u, value, Route.QUADRATURE, warnings=tuple(notes))


def laplacian_form_reciprocal(u, spec: QuadratureSpec = QuadratureSpec()) -> ZetaEvaluation:
    """Same limit written over the Laplacian spectrum 2(1 - cos x) of Z."""
    u = _check_real(u)
    value, notes = _midpoint_mean_log(
        lambda x: (1 - 2 * u + u * u) + 2 * u * (1 - np.cos(x)), u, spec)
    return ZetaEvaluation(u, value, Route.QUADRATURE, warnings=tuple(notes))


def limit_reciprocal_closed_form(u) -> ZetaEvaluation:
    """(u^2 + 1 + |u^2 - 1|) / 2, i.e. 1 for |u| < 1 and u^2 otherwise."""
    u = _check_real(u)
    return ZetaEvaluation(u, (u * u + 1 + abs(u * u - 1)) / 2, Route.CLOSED_FORM)


def _digits_needed(n, u):
    # error ~ 2 |u|^n / n must stay visible above the working precision
    return int(n * math.log10(1 / abs(u))) + 30


def theorem4_table(u, n_list, extended=True) -> ConvergenceTable:
    """Convergence of zeta_{C_n}(u)^{-1} to zeta_Z(u)^{-1} = 1 for |u| < 1.

    With ``extended`` (the default) each spectral sum runs in mpmath at enough
    digits to resolve |value - 1|, which falls below double precision within a
    few dozen n. Without it the sums are in double precision.
    """
    u = _check_real(u)
    if abs(u) >= 1:
        raise DomainViolationError(f"the lattice limit is stated for |u| < 1, got u={u}")
    n_list = [int(n) for n in n_list]
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be strictly ascending")
    limit = float(zeta_lattice(u).value)
    rows = []
    for n in n_list:
        if u == 0:
            rows.append((n, 1.0, 0.0))
            continue
        if extended:
            dps = _digits_needed(n, u)
            val = zeta_cn_reciprocal(n, u, dps=dps).value
            with mpmath.workdps(dps):
                err = abs(val - limit)
            rows.append((n, val, err))
        else:
            val = zeta_cn_reciprocal(n, u).value
            rows.append((n, val, abs(val - limit)))
    return ConvergenceTable(u, limit, tuple(rows))
