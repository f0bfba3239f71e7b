"""Which envelope widths b admit a wrapping, and the (p, r, sign) form of b.

A 1 x b envelope can be wrapped iff b = p + sign * sqrt(p^2 - r^2) with
rationals p >= r >= 0.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentStripData, InvalidParams, NonPositiveB
from .exact_field import QuadExt, normalize_radical, qx, rational_sqrt


@dataclass(frozen=True)
class WrapParams:
    p: Fraction
    r: Fraction
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "r", Fraction(self.r))
        if self.sign not in (1, -1):
            raise InvalidParams(f"sign must be +1 or -1, got {self.sign!r}")

    def __str__(self):
        return f"p = {self.p}, r = {self.r}, sign = {'+' if self.sign > 0 else '-'}"


def b_from_params(w):
    p, r = w.p, w.r
    if r < 0 or p < r:
        raise InvalidParams(f"need p >= r >= 0, got p = {p}, r = {r}")
    disc = p * p - r * r
    # sqrt(N/D) = sqrt(N*D) / D
    root = normalize_radical(Fraction(1, disc.denominator), disc.numerator * disc.denominator)
    b = QuadExt(p) + root * w.sign
    if b.sign() <= 0:
        raise InvalidParams(f"b = {b} is not positive")
    return b


def decide_wrappable(b):
    """Canonical WrapParams for b, or None when no 1 x b wrapping exists."""
    b = qx(b)
    if b.sign() <= 0:
        raise NonPositiveB(f"b must be positive, got {b}")
    if b.is_rational:
        return WrapParams(b.a / 2, 0, 1)
    norm = b.norm()
    if norm < 0:
        return None
    r = rational_sqrt(norm)
    if r is None:
        return None
    return WrapParams(b.a, r, 1 if b.c > 0 else -1)


def explain_undecidable(b):
    """Short reason why decide_wrappable(b) is None (for CLI messages)."""
    b = qx(b)
    norm = b.norm()
    if norm < 0:
        return f"norm = {norm} < 0"
    return f"norm = {norm} is not the square of a rational"


def params_from_strip_data(q1, q2, g, b):
    """Recover (p, r, sign) from strip projection counts and the square count g.

    With squares of area a^2 = 2b/g, the strip-normal identity
    q1^2 + q2^2 b^2 = 2 g b gives b^2 - (2g/q2^2) b + (q1/q2)^2 = 0 for q2 != 0,
    i.e. p = g/q2^2 and r = q1/q2. For q2 == 0 it forces q1^2 = 2 g b, so b is
    rational and (b/2, 0, +) is returned.
    """
    b = qx(b)
    if q1 < 0 or q2 < 0 or g < 1 or (q1 == 0 and q2 == 0):
        raise InconsistentStripData(f"bad strip data q1={q1}, q2={q2}, g={g}")
    if b.sign() <= 0:
        raise NonPositiveB(f"b must be positive, got {b}")
    if q2 == 0:
        if not b.is_rational or b * (2 * g) != q1 * q1:
            raise InconsistentStripData(f"q2 = 0 needs q1^2 = 2 g b; got q1={q1}, g={g}, b={b}")
        return WrapParams(b.a / 2, 0, 1)
    p = Fraction(g, q2 * q2)
    r = Fraction(q1, q2)
    if b * b - b * (2 * p) + r * r != 0:
        raise InconsistentStripData(
            f"b^2 - (2g/q2^2) b + (q1/q2)^2 != 0 for q1={q1}, q2={q2}, g={g}, b={b}")
    for s in (1, -1):
        w = WrapParams(p, r, s)
        try:
            if b_from_params(w) == b:
                return w
        except InvalidParams:
            continue
    raise InconsistentStripData(f"no sign reproduces b = {b} from p = {p}, r = {r}")
