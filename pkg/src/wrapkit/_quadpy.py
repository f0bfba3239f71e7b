"""Pure-Python exact arithmetic in Q(sqrt(d)).

This is the fallback for the compiled ``_quadc`` extension; the two must stay
behaviourally identical (tests/test_backends.py checks this).
"""
from fractions import Fraction
from math import gcd, isqrt

from ._intmath import squarefree_decompose
from .errors import DivisionByZero, IncompatibleRadicands


def _sgn(n):
    return (n > 0) - (n < 0)


class QuadExt:
    """Exact number ``(A + C*sqrt(d)) / D`` stored over one common denominator.

    ``d`` is squarefree and >= 2 when ``C != 0``; rationals carry ``d == 0``.
    """

    __slots__ = ("num_a", "num_c", "den", "d")

    def __init__(self, a=0, c=0, d=0):
        a = Fraction(a)
        c = Fraction(c)
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if c == 0 or d == 0:
            c, d = Fraction(0), 0
        else:
            s, k = squarefree_decompose(int(d))
            c *= k
            if s == 1:
                a, c, d = a + c, Fraction(0), 0
            else:
                d = s
        den = a.denominator * c.denominator // gcd(a.denominator, c.denominator)
        self._set(a.numerator * (den // a.denominator),
                  c.numerator * (den // c.denominator), den, d)

    def _set(self, A, C, D, d):
        if D < 0:
            A, C, D = -A, -C, -D
        if C == 0:
            d = 0
        g = gcd(gcd(A, C), D)
        if g != 1:
            A //= g
            C //= g
            D //= g
        self.num_a = A
        self.num_c = C
        self.den = D
        self.d = d

    @classmethod
    def _raw(cls, A, C, D, d):
        obj = cls.__new__(cls)
        obj._set(A, C, D, d)
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, cls):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 1, 0)
        if isinstance(x, Fraction):
            return cls._raw(x.numerator, 0, x.denominator, 0)
        raise TypeError(f"cannot use {type(x).__name__} as an exact number")

    # -- accessors --------------------------------------------------------
    @property
    def a(self):
        return Fraction(self.num_a, self.den)

    @property
    def c(self):
        return Fraction(self.num_c, self.den)

    @property
    def is_rational(self):
        return self.num_c == 0

    def to_fraction(self):
        if self.num_c:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.num_a, self.den)

    def conjugate(self):
        return QuadExt._raw(self.num_a, -self.num_c, self.den, self.d)

    def norm(self):
        return Fraction(self.num_a * self.num_a - self.num_c * self.num_c * self.d,
                        self.den * self.den)

    def trace(self):
        return Fraction(2 * self.num_a, self.den)

    def sign(self):
        A, C = self.num_a, self.num_c
        sa, sc = _sgn(A), _sgn(C)
        if sc == 0:
            return sa
        if sa == 0 or sa == sc:
            return sc
        t = A * A - C * C * self.d
        if t > 0:
            return sa
        if t < 0:
            return sc
        return 0

    def floor(self):
        C = self.num_c
        if C == 0:
            return self.num_a // self.den
        r = isqrt(C * C * self.d)
        if C > 0:
            s = r
        else:
            s = -r if r * r == C * C * self.d else -r - 1
        # floor(x / D) == floor(floor(x) / D) for integer D > 0
        return (self.num_a + s) // self.den

    # -- arithmetic -------------------------------------------------------
    def _field(self, other):
        if self.num_c and other.num_c and self.d != other.d:
            raise IncompatibleRadicands(f"sqrt({self.d}) vs sqrt({other.d})")
        return self.d or other.d

    def __add__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field(other)
        D1, D2 = self.den, other.den
        if D1 == D2:
            return QuadExt._raw(self.num_a + other.num_a, self.num_c + other.num_c, D1, d)
        return QuadExt._raw(self.num_a * D2 + other.num_a * D1,
                            self.num_c * D2 + other.num_c * D1, D1 * D2, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._raw(-self.num_a, -self.num_c, self.den, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field(other)
        A1, C1, A2, C2 = self.num_a, self.num_c, other.num_a, other.num_c
        return QuadExt._raw(A1 * A2 + C1 * C2 * d, A1 * C2 + A2 * C1,
                            self.den * other.den, d)

    __rmul__ = __mul__

    def inverse(self):
        A, C, D, d = self.num_a, self.num_c, self.den, self.d
        n = A * A - C * C * d
        if n == 0:
            raise DivisionByZero("division by zero")
        # 1/x = D * (A - C sqrt d) / (A^2 - C^2 d)
        return QuadExt._raw(A * D, -C * D, n, d)

    def __truediv__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        self._field(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = QuadExt._raw(1, 0, 1, 0)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        try:
            other = QuadExt.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.num_a == other.num_a and self.num_c == other.num_c
                and self.den == other.den and self.d == other.d)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def _cmp(self, other):
        return (self - other).sign()

    def __lt__(self, other):
        try:
            return self._cmp(QuadExt.coerce(other)) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(QuadExt.coerce(other)) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(QuadExt.coerce(other)) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(QuadExt.coerce(other)) >= 0
        except TypeError:
            return NotImplemented

    def __bool__(self):
        return self.num_a != 0 or self.num_c != 0

    def __hash__(self):
        if self.num_c == 0:
            return hash(Fraction(self.num_a, self.den))
        return hash((self.num_a, self.num_c, self.den, self.d))

    def __float__(self):
        value = float(Fraction(self.num_a, self.den))
        if self.num_c:
            value += float(Fraction(self.num_c, self.den)) * self.d ** 0.5
        return value

    def __reduce__(self):
        return (QuadExt._raw, (self.num_a, self.num_c, self.den, self.d))

    def __str__(self):
        a = Fraction(self.num_a, self.den)
        text = f"{a.numerator}/{a.denominator}"
        if self.num_c:
            c = Fraction(self.num_c, self.den)
            text += f" + {c.numerator}/{c.denominator}*sqrt({self.d})"
        return text

    def __repr__(self):
        return f"QuadExt('{self}')"
