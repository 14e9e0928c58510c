"""Coined quantum walks on graphs and the Grover matrix.

States and operators are indexed by the canonical arc order of
:func:`ihara.graph.arcs`. The coin at vertex ``u`` acts on the arcs that
terminate at ``u``; the shift sends each arc to its reverse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Polynomial, det_bareiss, det_fraction, polynomial_determinant
from .errors import BadCoinError, IharaError, MappingDomainError, NormDriftError
from .graph import Graph, arcs, matrices
from .zeta import Route, ZetaEvaluation

UNITARY_TOL = 1e-10
STEP_NORM_TOL = 1e-10
DRIFT_TOL = 1e-8
MATCH_TOL = 1e-8

__all__ = [
    "EvolutionMatrix",
    "WalkState",
    "SpectrumReport",
    "grover_coins",
    "validate_coins",
    "coin_operator",
    "shift_operator",
    "coined_matrix",
    "grover_matrix",
    "evolve",
    "uniform_state",
    "arc_state",
    "vertex_state",
    "random_state",
    "grover_char_poly",
    "det_I_minus_uU_polynomial",
    "det_I_minus_uU",
    "grover_spectrum",
    "multiset_distance",
]


@dataclass(frozen=True)
class EvolutionMatrix:
    U: np.ndarray
    kind: str  # "grover" or "general_coined"

    @property
    def dim(self):
        return self.U.shape[0]

    def unitarity_defect(self):
        """max |(U U* - I)_ij|"""
        return float(np.abs(self.U @ self.U.conj().T - np.eye(self.dim)).max())


@dataclass(frozen=True)
class WalkState:
    psi: np.ndarray
    t: int = 0

    def norm(self):
        return float(np.linalg.norm(self.psi))

    def to_json(self):
        from .report import fmt_number

        return {"t": self.t, "psi": [fmt_number(complex(z)) for z in self.psi]}


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalue multiset together with the matrix and method it came from."""

    values: np.ndarray
    source: str

    def multiplicities(self, tol=MATCH_TOL):
        """Cluster eigenvalues closer than ``tol``; returns ``[(value, count), ...]``."""
        groups = []
        for z in sorted(self.values, key=lambda z: (round(z.real, 6), round(z.imag, 6))):
            for grp in groups:
                if abs(grp[0] - z) <= tol:
                    grp[1] += 1
                    break
            else:
                groups.append([complex(z), 1])
        return [(v, c) for v, c in groups]

    def to_json(self):
        from .report import fmt_number

        return {"source": self.source,
                "values": [fmt_number(complex(z)) for z in self.values]}


def grover_coins(g: Graph) -> np.ndarray:
    """Row ``u`` is the unit vector with entries 1/sqrt(d_u) on the arcs entering ``u``."""
    A = arcs(g)
    alpha = np.zeros((g.n, len(A)), dtype=complex)
    for e, (_, t) in enumerate(A.arcs):
        alpha[t, e] = 1.0 / np.sqrt(g.degrees[t])
    return alpha


def validate_coins(g: Graph, coins) -> np.ndarray:
    """Check each coin is a unit vector supported exactly on D(u), nonzero there."""
    A = arcs(g)
    coins = np.asarray(coins, dtype=complex)
    if coins.shape != (g.n, len(A)):
        raise BadCoinError(f"coins must have shape {(g.n, len(A))}, got {coins.shape}")
    for u in range(g.n):
        inside = np.array([t == u for _, t in A.arcs])
        if np.any(coins[u, ~inside] != 0):
            raise BadCoinError(f"coin at vertex {u} has support outside D({u})")
        if np.any(coins[u, inside] == 0):
            raise BadCoinError(f"coin at vertex {u} vanishes on an arc of D({u})")
        norm = np.linalg.norm(coins[u])
        if abs(norm - 1) > 1e-12:
            raise BadCoinError(f"coin at vertex {u} has norm {norm!r}")
    return coins


def coin_operator(g: Graph, coins) -> np.ndarray:
    """C = 2 sum_u |alpha_u><alpha_u| - I."""
    coins = validate_coins(g, coins)
    C = 2 * coins.T @ coins.conj() - np.eye(coins.shape[1])
    return C


def shift_operator(g: Graph) -> np.ndarray:
    A = arcs(g)
    S = np.zeros((len(A), len(A)))
    for e, f in enumerate(A.inv):
        S[e, f] = 1.0
    return S


def coined_matrix(g: Graph, coins) -> EvolutionMatrix:
    """Time evolution U = S C for an arbitrary coin family."""
    U = shift_operator(g) @ coin_operator(g, coins)
    ev = EvolutionMatrix(U, "general_coined")
    if ev.unitarity_defect() > UNITARY_TOL:
        raise IharaError(f"coined matrix not unitary: defect {ev.unitarity_defect():.3g}")
    return ev


def grover_matrix(g: Graph) -> EvolutionMatrix:
    """Grover matrix built entrywise, then checked against S C with uniform coins."""
    A = arcs(g)
    deg = g.degrees
    size = len(A)
    U = np.zeros((size, size))
    for e, (oe, _) in enumerate(A.arcs):
        for f, (_, tf) in enumerate(A.arcs):
            if tf == oe:
                U[e, f] = 2.0 / deg[tf] - (1.0 if f == A.inv[e] else 0.0)
    ref = (shift_operator(g) @ coin_operator(g, grover_coins(g))).real
    if np.abs(U - ref).max() > 1e-12:
        raise IharaError("entrywise Grover matrix disagrees with S C")
    ev = EvolutionMatrix(U, "grover")
    if ev.unitarity_defect() > UNITARY_TOL:
        raise IharaError(f"Grover matrix not unitary: defect {ev.unitarity_defect():.3g}")
    return ev


def evolve(U: EvolutionMatrix, psi0: WalkState, t: int) -> WalkState:
    """Apply ``U`` ``t`` times, checking the norm after each step."""
    psi = np.asarray(psi0.psi, dtype=complex)
    if abs(np.linalg.norm(psi) - 1) > STEP_NORM_TOL:
        raise ValueError("initial state must have unit norm")
    for step in range(t):
        psi = U.U @ psi
        drift = abs(np.linalg.norm(psi) - 1)
        if drift > DRIFT_TOL:
            raise NormDriftError(f"norm drifted by {drift:.3g} after {step + 1} steps")
    return WalkState(psi, psi0.t + t)


def uniform_state(g: Graph) -> WalkState:
    size = 2 * g.m
    return WalkState(np.full(size, 1 / np.sqrt(size), dtype=complex))


def arc_state(g: Graph, e) -> WalkState:
    psi = np.zeros(2 * g.m, dtype=complex)
    psi[e] = 1
    return WalkState(psi)


def vertex_state(g: Graph, u) -> WalkState:
    """Uniform superposition over the arcs entering ``u``."""
    into = arcs(g).into(u)
    psi = np.zeros(2 * g.m, dtype=complex)
    psi[into] = 1 / np.sqrt(len(into))
    return WalkState(psi)


def random_state(g: Graph, rng=None) -> WalkState:
    rng = np.random.default_rng(rng)
    z = rng.standard_normal(2 * g.m) + 1j * rng.standard_normal(2 * g.m)
    return WalkState(z / np.linalg.norm(z))


def _signed_power(poly_base, k):
    if k >= 0:
        return lambda p: p * poly_base**k
    return lambda p: p.exact_div(poly_base ** (-k))


def grover_char_poly(g: Graph) -> Polynomial:
    """det(lambda I - U) = (lambda^2 - 1)^{m-n} det((lambda^2 + 1) I - 2 lambda T).

    The n x n determinant is also computed in the form
    det((lambda^2 + 1) D - 2 lambda A) / prod(d) and the two must agree exactly.
    """
    n = g.n
    T = matrices(g).T
    A = g.adjacency
    deg = [int(d) for d in g.degrees]

    def t_form(x):
        return [[(x * x + 1 if i == j else 0) - 2 * x * T[i, j] for j in range(n)]
                for i in range(n)]

    def da_form(x):
        return [[(x * x + 1) * deg[i] * (i == j) - 2 * x * int(A[i, j]) for j in range(n)]
                for i in range(n)]

    det_t = polynomial_determinant(t_form, 2 * n, exact_det=det_fraction)
    det_da = polynomial_determinant(da_form, 2 * n, exact_det=det_bareiss)
    norm = 1
    for d in deg:
        norm *= d
    if det_t * norm != det_da:
        raise IharaError("T-form and D/A-form determinants disagree")
    return _signed_power(Polynomial([-1, 0, 1]), g.m - g.n)(det_t)


def det_I_minus_uU_polynomial(g: Graph) -> Polynomial:
    """det(I - uU) = (1 - u^2)^{m-n} det((1 + u^2) I - 2u T)."""
    n = g.n
    T = matrices(g).T

    def at(x):
        return [[(1 + x * x if i == j else 0) - 2 * x * T[i, j] for j in range(n)]
                for i in range(n)]

    det = polynomial_determinant(at, 2 * n, exact_det=det_fraction)
    return _signed_power(Polynomial([1, 0, -1]), g.m - g.n)(det)


def det_I_minus_uU(g: Graph, u) -> ZetaEvaluation:
    """det(I - uU) at a point: exact for int/Fraction ``u``, floating otherwise."""
    value = det_I_minus_uU_polynomial(g)(u)
    return ZetaEvaluation(u, value, Route.GROVER_DET)


def _is_bipartite(g: Graph):
    color = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors[v]:
            if w not in color:
                color[w] = 1 - color[v]
                stack.append(w)
            elif color[w] == color[v]:
                return False
    return True


def _mapped_spectrum(g: Graph):
    deg = g.degrees.astype(float)
    s = 1 / np.sqrt(deg)
    # D^{-1/2} A D^{-1/2} is symmetric and similar to T
    sym = s[:, None] * g.adjacency * s[None, :]
    mu = np.linalg.eigvalsh(sym)
    if np.any(np.abs(mu) > 1 + 1e-12):
        raise MappingDomainError(f"transition eigenvalue {mu[np.abs(mu).argmax()]!r} outside [-1, 1]")
    mu = np.clip(mu, -1.0, 1.0)
    # lambda = mu +- i sqrt(1 - mu^2) turns a 1e-16 error at mu = +-1 into 1e-8,
    # so place the eigenvalues known exactly: 1 (connected), -1 (iff bipartite)
    mu[-1] = 1.0
    if _is_bipartite(g):
        mu[0] = -1.0
    root = np.sqrt(1 - mu * mu)
    vals = list(mu + 1j * root) + list(mu - 1j * root)
    extra = g.m - g.n
    if extra >= 0:
        vals += [1.0 + 0j] * extra + [-1.0 + 0j] * extra
    else:
        for target in (1.0, -1.0):
            for _ in range(-extra):
                vals.pop(int(np.argmin([abs(v - target) for v in vals])))
    return np.array(vals, dtype=complex), mu


def grover_spectrum(g: Graph):
    """Grover spectrum by spectral mapping from T and by direct eigensolve of U.

    Returns ``(mapped, direct, transition)`` spectrum reports.
    """
    mapped, mu = _mapped_spectrum(g)
    direct = np.linalg.eigvals(grover_matrix(g).U)
    return (SpectrumReport(mapped, "mapping:T"),
            SpectrumReport(direct, "eigensolve:U"),
            SpectrumReport(mu.astype(complex), "eigensolve:T"))


def multiset_distance(a, b) -> float:
    """Largest pair distance in a globally-greedy nearest matching of two multisets."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return float("inf")
    dist = np.abs(a[:, None] - b[None, :])
    order = np.argsort(dist, axis=None, kind="stable")
    used_a = np.zeros(len(a), bool)
    used_b = np.zeros(len(b), bool)
    worst = 0.0
    matched = 0
    for flat in order:
        i, j = divmod(int(flat), len(b))
        if used_a[i] or used_b[j]:
            continue
        used_a[i] = used_b[j] = True
        worst = max(worst, float(dist[i, j]))
        matched += 1
        if matched == len(a):
            break
    return worst
