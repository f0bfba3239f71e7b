"""Build an explicit wrapping from (p, r, sign).

With r = n/m in lowest terms, the tilted rectangle K spanned by the long side
(2bm, 2n) and the short side w = (bn, -b^2 m) / (b^2 m^2 + n^2) has area 2b and
side ratio 4 m^2 p = u/v. Cutting K into a u x v grid gives g = u v equal
squares; the verifier checks that they wrap the envelope.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .characterize import WrapParams, b_from_params
from .exact_field import QuadExt
from .geometry import ConvexPolygon, make_square, rot90, vadd, vscale


@dataclass(frozen=True)
class ConstructionParams:
    w: WrapParams
    m: int
    n: int
    u: int
    v: int
    b: QuadExt

    @classmethod
    def from_params(cls, w):
        b = b_from_params(w)
        # Fraction(0) has denominator 1, so r = 0 becomes n = 0, m = 1
        m, n = w.r.denominator, w.r.numerator
        ratio = 4 * m * m * w.p
        return cls(w, m, n, ratio.numerator, ratio.denominator, b)

    @property
    def g(self):
        return self.u * self.v

    def as_dict(self):
        return {"p": str(self.w.p), "r": str(self.w.r),
                "sign": "plus" if self.w.sign > 0 else "minus",
                "m": self.m, "n": self.n, "u": self.u, "v": self.v}


@dataclass
class WrappingSpec:
    b: QuadExt
    squares: list
    side_sq: QuadExt
    params: ConstructionParams = field(default=None, compare=False)

    @property
    def g(self):
        return len(self.squares)


def _frame(cp):
    b, m, n = cp.b, cp.m, cp.n
    s = b * b * (m * m) + n * n
    corner = (-(b * m), QuadExt(-n))
    long_side = (b * (2 * m), QuadExt(2 * n))
    short_side = (b * n / s, -(b * b * m) / s)
    return corner, long_side, short_side


def build_rectangle_K(cp):
    corner, long_side, short_side = _frame(cp)
    p1 = vadd(corner, short_side)
    return ConvexPolygon([corner, p1, vadd(p1, long_side), vadd(corner, long_side)])


def grid_cut(cp):
    corner, long_side, short_side = _frame(cp)
    step_i = vscale(long_side, Fraction(1, cp.u))
    step_j = vscale(short_side, Fraction(1, cp.v))
    # the square edge step_j turns +90 degrees onto step_i
    assert rot90(step_j) == step_i
    squares = []
    for j in range(cp.v):
        row = vadd(corner, vscale(step_j, j))
        for i in range(cp.u):
            squares.append(make_square(vadd(row, vscale(step_i, i)), step_j))
    return WrappingSpec(cp.b, squares, squares[0].side_sq, cp)


def construct_wrapping(w):
    return grid_cut(ConstructionParams.from_params(w))
