# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exact arithmetic in Q(sqrt(d)); mirror of ``_quadpy.QuadExt``."""
from fractions import Fraction
from math import gcd, isqrt

from wrapkit._intmath import squarefree_decompose
from wrapkit.errors import DivisionByZero, IncompatibleRadicands


cdef inline int _sgn(object n):
    if n > 0:
        return 1
    if n < 0:
        return -1
    return 0


cdef QuadExt _make(object A, object C, object D, object d):
    cdef QuadExt obj = QuadExt.__new__(QuadExt)
    if D < 0:
        A = -A
        C = -C
        D = -D
    if C == 0:
        d = 0
    g = gcd(gcd(A, C), D)
    if g != 1:
        A //= g
        C //= g
        D //= g
    obj.num_a = A
    obj.num_c = C
    obj.den = D
    obj.d = d
    return obj


cdef QuadExt _coerce(object x):
    if isinstance(x, QuadExt):
        return <QuadExt>x
    if isinstance(x, int):
        return _make(x, 0, 1, 0)
    if isinstance(x, Fraction):
        return _make(x.numerator, 0, x.denominator, 0)
    return None


cdef object _field(QuadExt x, QuadExt y):
    if x.num_c != 0 and y.num_c != 0 and x.d != y.d:
        raise IncompatibleRadicands(f"sqrt({x.d}) vs sqrt({y.d})")
    return x.d or y.d


cdef QuadExt _add(QuadExt x, QuadExt y):
    d = _field(x, y)
    if x.den == y.den:
        return _make(x.num_a + y.num_a, x.num_c + y.num_c, x.den, d)
    return _make(x.num_a * y.den + y.num_a * x.den,
                 x.num_c * y.den + y.num_c * x.den, x.den * y.den, d)


cdef QuadExt _mul(QuadExt x, QuadExt y):
    d = _field(x, y)
    return _make(x.num_a * y.num_a + x.num_c * y.num_c * d,
                 x.num_a * y.num_c + y.num_a * x.num_c, x.den * y.den, d)


cdef QuadExt _inv(QuadExt x):
    n = x.num_a * x.num_a - x.num_c * x.num_c * x.d
    if n == 0:
        raise DivisionByZero("division by zero")
    return _make(x.num_a * x.den, -x.num_c * x.den, n, x.d)


cdef int _sign(QuadExt x):
    cdef int sa = _sgn(x.num_a)
    cdef int sc = _sgn(x.num_c)
    if sc == 0:
        return sa
    if sa == 0 or sa == sc:
        return sc
    t = x.num_a * x.num_a - x.num_c * x.num_c * x.d
    if t > 0:
        return sa
    if t < 0:
        return sc
    return 0


cdef class QuadExt:
    """Exact number ``(A + C*sqrt(d)) / D`` stored over one common denominator."""

    cdef readonly object num_a
    cdef readonly object num_c
    cdef readonly object den
    cdef readonly object d

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
        cdef QuadExt tmp = _make(a.numerator * (den // a.denominator),
                                 c.numerator * (den // c.denominator), den, d)
        self.num_a = tmp.num_a
        self.num_c = tmp.num_c
        self.den = tmp.den
        self.d = tmp.d

    @classmethod
    def _raw(cls, A, C, D, d):
        return _make(A, C, D, d)

    @classmethod
    def coerce(cls, x):
        cdef QuadExt y = _coerce(x)
        if y is None:
            raise TypeError(f"cannot use {type(x).__name__} as an exact number")
        return y

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
        return _make(self.num_a, -self.num_c, self.den, self.d)

    def norm(self):
        return Fraction(self.num_a * self.num_a - self.num_c * self.num_c * self.d,
                        self.den * self.den)

    def trace(self):
        return Fraction(2 * self.num_a, self.den)

    def sign(self):
        return _sign(self)

    def floor(self):
        C = self.num_c
        if C == 0:
            return self.num_a // self.den
        r = isqrt(C * C * self.d)
        if C > 0:
            s = r
        else:
            s = -r if r * r == C * C * self.d else -r - 1
        return (self.num_a + s) // self.den

    def inverse(self):
        return _inv(self)

    def __add__(self, other):
        cdef QuadExt x = _coerce(self)
        cdef QuadExt y = _coerce(other)
        if x is None or y is None:
            return NotImplemented
        return _add(x, y)

    def __radd__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return _add(y, self)

    def __sub__(self, other):
        cdef QuadExt x = _coerce(self)
        cdef QuadExt y = _coerce(other)
        if x is None or y is None:
            return NotImplemented
        return _add(x, _make(-y.num_a, -y.num_c, y.den, y.d))

    def __rsub__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return _add(y, _make(-self.num_a, -self.num_c, self.den, self.d))

    def __mul__(self, other):
        cdef QuadExt x = _coerce(self)
        cdef QuadExt y = _coerce(other)
        if x is None or y is None:
            return NotImplemented
        return _mul(x, y)

    def __rmul__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return _mul(y, self)

    def __truediv__(self, other):
        cdef QuadExt x = _coerce(self)
        cdef QuadExt y = _coerce(other)
        if x is None or y is None:
            return NotImplemented
        _field(x, y)
        return _mul(x, _inv(y))

    def __rtruediv__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return _mul(y, _inv(self))

    def __neg__(self):
        return _make(-self.num_a, -self.num_c, self.den, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        if _sign(self) < 0:
            return _make(-self.num_a, -self.num_c, self.den, self.d)
        return self

    def __pow__(self, k, mod):
        if not isinstance(k, int) or mod is not None:
            return NotImplemented
        cdef QuadExt base = self if k >= 0 else _inv(self)
        k = abs(k)
        cdef QuadExt result = _make(1, 0, 1, 0)
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return result

    def __eq__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return (self.num_a == y.num_a and self.num_c == y.num_c
                and self.den == y.den and self.d == y.d)

    def __ne__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return not (self.num_a == y.num_a and self.num_c == y.num_c
                    and self.den == y.den and self.d == y.d)

    def __lt__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return _sign(_add(self, _make(-y.num_a, -y.num_c, y.den, y.d))) < 0

    def __le__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return _sign(_add(self, _make(-y.num_a, -y.num_c, y.den, y.d))) <= 0

    def __gt__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return _sign(_add(self, _make(-y.num_a, -y.num_c, y.den, y.d))) > 0

    def __ge__(self, other):
        cdef QuadExt y = _coerce(other)
        if y is None:
            return NotImplemented
        return _sign(_add(self, _make(-y.num_a, -y.num_c, y.den, y.d))) >= 0

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
        return (_rebuild, (self.num_a, self.num_c, self.den, self.d))

    def __str__(self):
        a = Fraction(self.num_a, self.den)
        text = f"{a.numerator}/{a.denominator}"
        if self.num_c:
            c = Fraction(self.num_c, self.den)
            text += f" + {c.numerator}/{c.denominator}*sqrt({self.d})"
        return text

    def __repr__(self):
        return f"QuadExt('{self}')"


def _rebuild(A, C, D, d):
    return _make(A, C, D, d)
