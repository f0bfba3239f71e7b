"""The lattice {(m b, n)} of a 1 x b envelope and its point-reflection group.

Every group element is ``x -> s x + (2b t1, 2 t2)`` with ``s = +-1`` and
integers ``t1, t2``: a translation when ``s = +1`` and the point reflection in
the node ``(b t1, t2)`` when ``s = -1``.
"""
from dataclasses import dataclass

from .errors import NonPositiveB
from .exact_field import QuadExt, qx, qx_floor


@dataclass(frozen=True)
class Lattice:
    b: QuadExt

    def __post_init__(self):
        object.__setattr__(self, "b", qx(self.b))
        if self.b.sign() <= 0:
            raise NonPositiveB(f"envelope width must be positive, got {self.b}")

    def node(self, m, n):
        return (self.b * m, QuadExt(n))

    @property
    def cell_width(self):
        return self.b * 2

    @property
    def fundamental_area(self):
        return self.b * 2


@dataclass(frozen=True)
class GroupElement:
    reflect: bool = False
    t1: int = 0
    t2: int = 0

    @classmethod
    def identity(cls):
        return cls(False, 0, 0)

    @classmethod
    def translation(cls, t1, t2):
        return cls(False, t1, t2)

    @classmethod
    def reflection_at(cls, m, n):
        """Point reflection in the lattice node (m b, n)."""
        return cls(True, m, n)

    def t(self, lattice):
        return (lattice.b * (2 * self.t1), QuadExt(2 * self.t2))

    def apply(self, p, lattice):
        tx, ty = self.t(lattice)
        if self.reflect:
            return (tx - p[0], ty - p[1])
        return (p[0] + tx, p[1] + ty)

    def inverse(self):
        if self.reflect:
            return self
        return GroupElement(False, -self.t1, -self.t2)


def compose(g, h):
    """g after h."""
    s = -1 if g.reflect else 1
    return GroupElement(g.reflect != h.reflect, s * h.t1 + g.t1, s * h.t2 + g.t2)


def reduce_translation(p, lattice):
    """Residue of p in the translation cell [0, 2b) x [0, 2) and the cell index."""
    k1 = qx_floor(p[0] / lattice.cell_width)
    k2 = qx_floor(qx(p[1]) / 2)
    return (p[0] - lattice.b * (2 * k1), p[1] - 2 * k2), (k1, k2)


def fold_point(p, lattice):
    """Representative of p in [0, 2b) x [0, 1] and the element g with g(p) = it."""
    p = (qx(p[0]), qx(p[1]))
    (x, y), (k1, k2) = reduce_translation(p, lattice)
    g = GroupElement.translation(-k1, -k2)
    if y > 1:
        x, y = lattice.cell_width - x, 2 - y
        g = compose(GroupElement.reflection_at(1, 1), g)
        if x >= lattice.cell_width:
            x = x - lattice.cell_width
            g = compose(GroupElement.translation(-1, 0), g)
    return (x, y), g


def equivalent(p, q, lattice):
    p = (qx(p[0]), qx(p[1]))
    q = (qx(q[0]), qx(q[1]))
    rp, _ = reduce_translation(p, lattice)
    rq, _ = reduce_translation(q, lattice)
    if rp == rq:
        return True
    # the reflection in the origin, reduced back into the cell
    sigma, _ = reduce_translation((-rp[0], -rp[1]), lattice)
    return sigma == rq
