"""Exact convex planar geometry over one quadratic field.

Points are plain ``(x, y)`` tuples of QuadExt. Only convex polygons are
supported; every shape in the pipeline (squares, the rectangle K, folded
pieces, windows) is convex.
"""
from dataclasses import dataclass

from .errors import DegeneratePolygon, MalformedSquare, ZeroEdge
from .exact_field import QuadExt, qx

ZERO = QuadExt(0)


def point(x, y):
    return (qx(x), qx(y))


def vadd(p, q):
    return (p[0] + q[0], p[1] + q[1])


def vsub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def vscale(p, k):
    return (p[0] * k, p[1] * k)


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def orient(o, a, b):
    """Sign of the turn o -> a -> b (+1 counterclockwise)."""
    return ((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])).sign()


def rot90(v):
    return (-v[1], v[0])


def _shoelace2(verts):
    s = ZERO
    n = len(verts)
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        s = s + (x0 * y1 - x1 * y0)
    return s


def _cleanup(verts):
    """Drop repeated and collinear vertices; None if fewer than 3 remain."""
    out = []
    for v in verts:
        if not out or out[-1] != v:
            out.append(v)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    changed = True
    while changed and len(out) >= 3:
        changed = False
        n = len(out)
        for i in range(n):
            if orient(out[i - 1], out[i], out[(i + 1) % n]) == 0:
                del out[i]
                changed = True
                break
    if len(out) < 3:
        return None
    return out


class ConvexPolygon:
    """Strictly convex polygon, vertices stored counterclockwise."""

    __slots__ = ("vertices", "_area")

    def __init__(self, vertices, _trusted=False):
        verts = [(qx(x), qx(y)) for x, y in vertices] if not _trusted else list(vertices)
        if not _trusted:
            verts = _cleanup(verts)
            if verts is None:
                raise DegeneratePolygon("polygon has fewer than 3 non-collinear vertices")
            if _shoelace2(verts).sign() < 0:
                verts.reverse()
            n = len(verts)
            for i in range(n):
                if orient(verts[i - 1], verts[i], verts[(i + 1) % n]) <= 0:
                    raise DegeneratePolygon("polygon is not strictly convex")
        self.vertices = tuple(verts)
        self._area = None

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    def __repr__(self):
        return f"ConvexPolygon({[(str(x), str(y)) for x, y in self.vertices]})"

    @property
    def area(self):
        if self._area is None:
            self._area = _shoelace2(self.vertices) / 2
        return self._area

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def halfplanes(self):
        """(normal, offset) pairs with the polygon on the side normal.X <= offset."""
        out = []
        for a, b in self.edges():
            ex, ey = b[0] - a[0], b[1] - a[1]
            out.append(((ey, -ex), ey * a[0] - ex * a[1]))
        return out

    def bounds(self):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def float_bounds(self):
        xs = [float(v[0]) for v in self.vertices]
        ys = [float(v[1]) for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def contains(self, p, strict=False):
        for a, b in self.edges():
            s = orient(a, b, p)
            if s < 0 or (strict and s == 0):
                return False
        return True

    def map(self, fn):
        """Image under an orientation-preserving map of points."""
        return ConvexPolygon([fn(v) for v in self.vertices], _trusted=True)


def polygon_area(P):
    return P.area


def _clip_vertices(verts, nx, ny, off):
    vals = [(nx * x + ny * y - off) for x, y in verts]
    signs = [v.sign() for v in vals]
    if all(s <= 0 for s in signs):
        return list(verts), False
    if all(s >= 0 for s in signs):
        return [], True
    out = []
    n = len(verts)
    for i in range(n):
        p, sp, fp = verts[i], signs[i], vals[i]
        j = (i + 1) % n
        q, sq, fq = verts[j], signs[j], vals[j]
        if sp <= 0:
            out.append(p)
        if (sp < 0 and sq > 0) or (sp > 0 and sq < 0):
            t = fp / (fp - fq)
            out.append((p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t))
    return out, True


def clip_halfplane(P, normal, offset):
    """Intersection of P with {X : normal.X <= offset}; None if it has no interior."""
    nx, ny = qx(normal[0]), qx(normal[1])
    verts, changed = _clip_vertices(P.vertices, nx, ny, qx(offset))
    if not changed:
        return P
    verts = _cleanup(verts)
    if verts is None:
        return None
    return ConvexPolygon(verts, _trusted=True)


def clip_box(P, x0, y0, x1, y1):
    """Clip to the axis-aligned box [x0, x1] x [y0, y1]."""
    one, mone = QuadExt(1), QuadExt(-1)
    for normal, off in (((mone, ZERO), -qx(x0)), ((one, ZERO), qx(x1)),
                        ((ZERO, mone), -qx(y0)), ((ZERO, one), qx(y1))):
        P = clip_halfplane(P, normal, off)
        if P is None:
            return None
    return P


def convex_intersection(P, Q):
    R = P
    for normal, off in Q.halfplanes():
        R = clip_halfplane(R, normal, off)
        if R is None:
            return None
    return R


def convex_intersection_area(P, Q):
    R = convex_intersection(P, Q)
    return ZERO if R is None else R.area


def interiors_disjoint(P, Q):
    """Exact separating-axis test: True iff the interiors of P and Q do not meet.

    For convex polygons the interiors are disjoint exactly when some edge line
    of one polygon weakly separates the two.
    """
    for A, B in ((P, Q), (Q, P)):
        for (nx, ny), off in A.halfplanes():
            for x, y in B.vertices:
                if (nx * x + ny * y - off).sign() < 0:
                    break
            else:
                return True
    return False


@dataclass(frozen=True)
class SquareShape:
    """Four counterclockwise vertices plus the common squared side length."""

    vertices: tuple
    side_sq: QuadExt

    def polygon(self):
        return ConvexPolygon(self.vertices, _trusted=True)

    @property
    def edge(self):
        return vsub(self.vertices[1], self.vertices[0])

    def key(self):
        return frozenset(self.vertices)

    def translated(self, t):
        return SquareShape(tuple(vadd(v, t) for v in self.vertices), self.side_sq)

    def is_valid(self):
        return square_defect(self.vertices, self.side_sq) is None


def square_defect(vertices, side_sq):
    """None if ``vertices`` form a counterclockwise square of squared side ``side_sq``."""
    if len(vertices) != 4:
        return "square needs exactly 4 vertices"
    edges = [vsub(vertices[(i + 1) % 4], vertices[i]) for i in range(4)]
    for i, e in enumerate(edges):
        if dot(e, e) != side_sq:
            return f"edge {i} has squared length {dot(e, e)}, expected {side_sq}"
        nxt = edges[(i + 1) % 4]
        if dot(e, nxt) != 0:
            return f"corner {i + 1} is not a right angle"
        if cross(e, nxt).sign() <= 0:
            return "vertices are not counterclockwise"
    if qx(side_sq).sign() <= 0:
        return "side must be positive"
    return None


def make_square(v0, edge):
    """Square v0, v0+e, v0+e+rot90(e), v0+rot90(e)."""
    v0 = (qx(v0[0]), qx(v0[1]))
    e = (qx(edge[0]), qx(edge[1]))
    side_sq = dot(e, e)
    if not side_sq:
        raise ZeroEdge("square edge must be nonzero")
    p = rot90(e)
    v1 = vadd(v0, e)
    return SquareShape((v0, v1, vadd(v1, p), vadd(v0, p)), side_sq)


def square_from_vertices(vertices, side_sq=None):
    verts = tuple((qx(x), qx(y)) for x, y in vertices)
    if side_sq is None:
        side_sq = dot(vsub(verts[1], verts[0]), vsub(verts[1], verts[0]))
    problem = square_defect(verts, side_sq)
    if problem:
        raise MalformedSquare(problem)
    return SquareShape(verts, qx(side_sq))


@dataclass(frozen=True)
class Box:
    """Axis-aligned box [x0, x1] x [y0, y1] with exact bounds."""

    x0: QuadExt
    y0: QuadExt
    x1: QuadExt
    y1: QuadExt

    @classmethod
    def of(cls, x0, y0, x1, y1):
        return cls(qx(x0), qx(y0), qx(x1), qx(y1))

    @property
    def area(self):
        return (self.x1 - self.x0) * (self.y1 - self.y0)

    def has_interior(self):
        return self.x1 > self.x0 and self.y1 > self.y0

    def polygon(self):
        return ConvexPolygon([(self.x0, self.y0), (self.x1, self.y0),
                              (self.x1, self.y1), (self.x0, self.y1)])

    def expanded(self, mx, my):
        return Box(self.x0 - mx, self.y0 - my, self.x1 + mx, self.y1 + my)

    def contains_box(self, other):
        return (self.x0 <= other.x0 and self.y0 <= other.y0
                and other.x1 <= self.x1 and other.y1 <= self.y1)

    def clip(self, P):
        return clip_box(P, self.x0, self.y0, self.x1, self.y1)


def candidate_pairs(bounds, pad=1e-9):
    """Index pairs (i < j) whose float bounding boxes come within ``pad``.

    A coarse uniform-grid prefilter only: every returned pair is re-checked
    exactly by the caller, and ``pad`` keeps float rounding conservative.
    """
    n = len(bounds)
    if n < 2:
        return []
    span = max(max(b[2] for b in bounds) - min(b[0] for b in bounds),
               max(b[3] for b in bounds) - min(b[1] for b in bounds), 1e-300)
    pad = pad * max(span, 1.0)
    size = sum(max(b[2] - b[0], b[3] - b[1]) for b in bounds) / n or span
    grid = {}
    for i, (x0, y0, x1, y1) in enumerate(bounds):
        for gx in range(int((x0 - pad) // size), int((x1 + pad) // size) + 1):
            for gy in range(int((y0 - pad) // size), int((y1 + pad) // size) + 1):
                grid.setdefault((gx, gy), []).append(i)
    seen = set()
    pairs = []
    for members in grid.values():
        for a in range(len(members)):
            i = members[a]
            bi = bounds[i]
            for b in range(a + 1, len(members)):
                j = members[b]
                key = (i, j) if i < j else (j, i)
                if key in seen:
                    continue
                bj = bounds[j]
                if (bi[0] <= bj[2] + pad and bj[0] <= bi[2] + pad
                        and bi[1] <= bj[3] + pad and bj[1] <= bi[3] + pad):
                    seen.add(key)
                    pairs.append(key)
    pairs.sort()
    return pairs
