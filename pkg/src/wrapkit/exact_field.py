"""Exact arithmetic over Q(sqrt(d)).

``Rational`` is :class:`fractions.Fraction`. ``QuadExt`` comes from the compiled
``_quadc`` extension when it is importable, else from the pure-Python
``_quadpy`` module. Set ``WRAPKIT_PURE_PYTHON=1`` to force the fallback.
"""
import os
from fractions import Fraction
from math import isqrt

from ._intmath import squarefree_decompose
from .errors import DivisionByZero, IncompatibleRadicands

Rational = Fraction

if os.environ.get("WRAPKIT_PURE_PYTHON"):
    from ._quadpy import QuadExt
    BACKEND = "python"
else:
    try:
        from ._quadc import QuadExt
        BACKEND = "cython"
    except ImportError:
        from ._quadpy import QuadExt
        BACKEND = "python"

__all__ = [
    "BACKEND", "DivisionByZero", "IncompatibleRadicands", "QuadExt", "Rational",
    "qx", "qx_arith", "conjugate", "sign", "qx_floor", "qx_ceil",
    "rational_sqrt", "normalize_radical", "common_radicand",
]

ZERO = QuadExt(0)
ONE = QuadExt(1)


def qx(value):
    """Coerce an int, Fraction or QuadExt to QuadExt."""
    return QuadExt.coerce(value)


def qx_arith(x, y, op):
    """Apply ``op`` in {"add", "sub", "mul", "div", "neg"}; ``y`` is ignored for neg."""
    x = qx(x)
    if op == "neg":
        return -x
    y = qx(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def conjugate(x):
    return qx(x).conjugate()


def sign(x):
    return qx(x).sign()


def qx_floor(x):
    return qx(x).floor()


def qx_ceil(x):
    return -(-qx(x)).floor()


def rational_sqrt(q):
    """Nonnegative rational square root of ``q``, or None if there is none."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    # a reduced fraction is a rational square iff numerator and denominator are squares
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def normalize_radical(c, D):
    """Return ``c * sqrt(D)`` with squarefree radicand (rational if D is a square)."""
    if D < 0:
        raise ValueError("radicand must be nonnegative")
    c = Fraction(c)
    if c == 0 or D == 0:
        return QuadExt(0)
    s, k = squarefree_decompose(D)
    if s == 1:
        return QuadExt(c * k)
    return QuadExt(0, c * k, s)


def common_radicand(values):
    """The shared radicand of ``values`` (0 if all rational)."""
    d = 0
    for v in values:
        v = qx(v)
        if v.d:
            if d and v.d != d:
                raise IncompatibleRadicands(f"sqrt({d}) vs sqrt({v.d})")
            d = v.d
    return d
