"""Exact rational polynomials, truncated power series and determinants."""

from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = [
    "Polynomial",
    "PowerSeries",
    "det_bareiss",
    "det_fraction",
    "interpolate",
    "polynomial_determinant",
]


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs or [Fraction(0)]


class Polynomial:
    """Dense univariate polynomial over Q, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(0,)):
        self.coeffs = tuple(_trim(Fraction(c) for c in coeffs))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def binomial_power(cls, a, b, k, power):
        """(a + b x^k) ** power for a non-negative integer power."""
        out = [Fraction(0)] * (k * power + 1)
        for j in range(power + 1):
            out[k * j] = comb(power, j) * Fraction(a) ** (power - j) * Fraction(b) ** j
        return cls(out)

    @property
    def degree(self):
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self):
        return self.coeffs == (0,)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        for i in range(len(rem) - 1 - dq, -1, -1):
            c = rem[i + dq] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [0])

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction, float/complex otherwise."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def to_series(self, order):
        return PowerSeries(self.coeffs[: order + 1], order)

    def to_json(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items):
        return cls(Fraction(s) for s in items)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*x^{k}")
        return "Polynomial(" + (" + ".join(terms) or "0") + ")"


def _as_poly(x):
    return x if isinstance(x, Polynomial) else Polynomial([x])


class PowerSeries:
    """Rational power series truncated after the u^order term."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        c = [Fraction(x) for x in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def _check(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries([other], self.order)
        return other, min(self.order, other.order)

    def __add__(self, other):
        other, K = self._check(other)
        return PowerSeries([self[i] + other[i] for i in range(K + 1)], K)

    def __mul__(self, other):
        other, K = self._check(other)
        out = [Fraction(0)] * (K + 1)
        for i in range(K + 1):
            if self[i]:
                for j in range(K + 1 - i):
                    out[i + j] += self[i] * other[j]
        return PowerSeries(out, K)

    def __pow__(self, k):
        out = PowerSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def exp(self):
        """exp(f) for f with zero constant term, via n g_n = sum_k k f_k g_{n-k}."""
        if self[0] != 0:
            raise ValueError("exp needs a zero constant term for an exact result")
        K = self.order
        g = [Fraction(0)] * (K + 1)
        g[0] = Fraction(1)
        for n in range(1, K + 1):
            g[n] = sum(k * self[k] * g[n - k] for k in range(1, n + 1)) / n
        return PowerSeries(g, K)

    def log(self):
        """log(g) for g with constant term 1."""
        if self[0] != 1:
            raise ValueError("log needs constant term 1")
        K = self.order
        f = [Fraction(0)] * (K + 1)
        for n in range(1, K + 1):
            f[n] = self[n] - sum((k * f[k] * self[n - k] for k in range(1, n)), Fraction(0)) / n
        return PowerSeries(f, K)

    def inverse(self):
        if self[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        K = self.order
        h = [Fraction(0)] * (K + 1)
        h[0] = 1 / self[0]
        for n in range(1, K + 1):
            h[n] = -sum(self[k] * h[n - k] for k in range(1, n + 1)) / self[0]
        return PowerSeries(h, K)

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def to_json(self):
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def det_bareiss(matrix) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    M = [[int(x) for x in row] for row in matrix]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def det_fraction(matrix) -> Fraction:
    """Determinant of a rational matrix by Gaussian elimination over Q."""
    M = [[Fraction(x) for x in row] for row in matrix]
    n = len(M)
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if M[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            M[k], M[pivot] = M[pivot], M[k]
            det = -det
        det *= M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                for j in range(k, n):
                    M[i][j] -= f * M[k][j]
    return det


def interpolate(xs, ys) -> Polynomial:
    """Unique polynomial of degree < len(xs) through the points, via Newton differences."""
    xs = [Fraction(x) for x in xs]
    dd = [Fraction(y) for y in ys]
    n = len(xs)
    if len(set(xs)) != n:
        raise ValueError("interpolation nodes must be distinct")
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = Polynomial([dd[-1]])
    for i in range(n - 2, -1, -1):
        poly = poly * Polynomial([-xs[i], 1]) + dd[i]
    return poly


def polynomial_determinant(entry_matrix, degree_bound, exact_det=det_fraction) -> Polynomial:
    """det of a matrix whose entries are polynomials, by evaluation and interpolation.

    ``entry_matrix(x)`` returns the matrix evaluated at the integer ``x``.
    The determinant must have degree at most ``degree_bound``.
    """
    # symmetric small nodes keep the intermediate integers short
    xs = [0]
    k = 1
    while len(xs) < degree_bound + 1:
        xs += [k, -k]
        k += 1
    xs = xs[: degree_bound + 1]
    ys = [exact_det(entry_matrix(x)) for x in xs]
    return interpolate(xs, ys)
