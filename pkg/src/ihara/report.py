"""JSON/CSV formatting shared by the report-producing functions."""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Complex, Integral, Real

SIG_DIGITS = 15


def _real(x):
    if isinstance(x, Integral):
        return int(x)
    return float(f"{float(x):.{SIG_DIGITS}g}")


def fmt_number(x):
    """Round to 15 significant digits; complex numbers become ``[re, im]``.

    Exact rationals become ``"p/q"`` strings.
    """
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (bool, Integral)):
        return int(x)
    if isinstance(x, Real):
        return _real(x)
    if isinstance(x, Complex):
        return [_real(x.real), _real(x.imag)]
    # mpmath and numpy scalars
    try:
        return _real(x)
    except TypeError:
        c = complex(x)
        return [_real(c.real), _real(c.imag)]


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True)
