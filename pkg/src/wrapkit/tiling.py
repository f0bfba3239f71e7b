"""Plane tilings generated by a wrapping, and their decomposition into strips.

Applying every group element to every square of a wrapping tiles the plane,
and the tiling is symmetric under the point reflections in lattice nodes. The
tiling splits into strips: bi-infinite rows of squares in which neighbours
share a full side and non-neighbours share no vertex. The strip normal then
yields integer projection counts (q1, q2) of the periods (2b, 0) and (0, 2).
"""
from dataclasses import dataclass
from math import isqrt

from .errors import (
    AmbiguousAtBoundary, InvalidSpec, MarginTooSmall, NonIntegerProjection,
)
from .exact_field import QuadExt, qx, qx_ceil, qx_floor
from .geometry import (
    Box, SquareShape, candidate_pairs, cross, dot, rot90, vadd, vscale, vsub,
)
from .quotient import GroupElement, Lattice
from .verify import find_overlaps, verify_wrapping

ZERO = QuadExt(0)


@dataclass
class TilingPatch:
    squares: list
    window: Box
    lattice: Lattice
    outer: Box
    side_sq: QuadExt
    g: int
    sources: list = None

    def covered_area(self, box):
        total = ZERO
        for sq in self.squares:
            piece = box.clip(sq.polygon())
            if piece is not None:
                total = total + piece.area
        return total

    def keys(self):
        return {sq.key(): i for i, sq in enumerate(self.squares)}


@dataclass
class StripReport:
    strips: list
    direction: tuple
    case_tag: str
    q1: int
    q2: int
    g: int

    def lines(self):
        dx, dy = self.direction
        return [
            f"case: {self.case_tag}",
            f"strip direction: ({dx}, {dy})",
            f"strips: {len(self.strips)} (lengths {sorted({len(s) for s in self.strips})})",
            f"q1 = {self.q1}",
            f"q2 = {self.q2}",
            f"g = {self.g}",
        ]


def _image(sq, elem, lattice):
    return SquareShape(tuple(elem.apply(v, lattice) for v in sq.vertices), sq.side_sq)


def _bounds(sq):
    xs = [v[0] for v in sq.vertices]
    ys = [v[1] for v in sq.vertices]
    return min(xs), min(ys), max(xs), max(ys)


def expand_orbit(spec, window, margin=None, check_spec=True):
    """Every orbit image of the wrapping's squares meeting window plus margin.

    ``margin`` is an (mx, my) pair and defaults to one translation cell,
    (2b, 2), on every side; the margin is what makes the patch usable for
    reflection checks about nodes on the window boundary.
    """
    if check_spec and not verify_wrapping(spec).is_valid:
        raise InvalidSpec("squares do not wrap the envelope")
    lattice = Lattice(spec.b)
    width = lattice.cell_width
    if margin is None:
        margin = (width, QuadExt(2))
    outer = window.expanded(qx(margin[0]), qx(margin[1]))
    found = {}
    if outer.has_interior():
        for src, sq in enumerate(spec.squares):
            x0, y0, x1, y1 = _bounds(sq)
            for reflect in (False, True):
                if reflect:
                    r1 = range(qx_ceil((outer.x0 + x0) / width), qx_floor((outer.x1 + x1) / width) + 1)
                    r2 = range(qx_ceil((outer.y0 + y0) / 2), qx_floor((outer.y1 + y1) / 2) + 1)
                else:
                    r1 = range(qx_ceil((outer.x0 - x1) / width), qx_floor((outer.x1 - x0) / width) + 1)
                    r2 = range(qx_ceil((outer.y0 - y1) / 2), qx_floor((outer.y1 - y0) / 2) + 1)
                for t1 in r1:
                    for t2 in r2:
                        image = _image(sq, GroupElement(reflect, t1, t2), lattice)
                        key = image.key()
                        if key in found:
                            continue
                        if outer.clip(image.polygon()) is not None:
                            found[key] = (image, src)
    ordered = sorted(found.values(), key=lambda item: (_bounds(item[0])[1], _bounds(item[0])[0]))
    squares = [sq for sq, _ in ordered]
    patch = TilingPatch(squares, window, lattice, outer, spec.side_sq, len(spec.squares),
                        [src for _, src in ordered])
    if squares:
        overlaps = find_overlaps([s.polygon() for s in squares], first_only=True)
        if overlaps:
            (i, j), area = overlaps[0]
            raise InvalidSpec(f"orbit squares {i} and {j} overlap with area {area}")
        if patch.covered_area(outer) != outer.area:
            raise InvalidSpec("orbit squares do not cover the window")
    return patch


def check_invariance(patch, node):
    """Does the point reflection in lattice node (m b, n) map the tiling to itself?

    Every patch square meeting the window is reflected and looked up among the
    patch squares; the reflected window must lie inside the patch's outer box.
    """
    m, n = node
    lattice = patch.lattice
    elem = GroupElement.reflection_at(m, n)
    w = patch.window
    cx, cy = lattice.b * (2 * m), QuadExt(2 * n)
    mirrored = Box(cx - w.x1, cy - w.y1, cx - w.x0, cy - w.y0)
    if not w.has_interior() or not patch.outer.contains_box(mirrored):
        raise MarginTooSmall(f"reflected window around node ({m}b, {n}) leaves the patch")
    keys = patch.keys()
    for sq in patch.squares:
        if w.clip(sq.polygon()) is None:
            continue
        if _image(sq, elem, lattice).key() not in keys:
            return False
    return True


def _center(sq):
    return vscale(vadd(sq.vertices[0], sq.vertices[2]), QuadExt(1) / 2)


def _normalized(v):
    if v[0].sign() < 0 or (v[0].sign() == 0 and v[1].sign() < 0):
        return (-v[0], -v[1])
    return v


def _contacts(s, t):
    """(is_full, edge_vector) for each collinear, positive-length side contact."""
    out = []
    sv, tv = s.vertices, t.vertices
    for i in range(4):
        a, b = sv[i], sv[(i + 1) % 4]
        e = vsub(b, a)
        length = dot(e, e)
        for j in range(4):
            c, d = tv[j], tv[(j + 1) % 4]
            if cross(e, vsub(c, a)) or cross(e, vsub(d, a)):
                continue
            tc, td = dot(vsub(c, a), e), dot(vsub(d, a), e)
            lo = max(ZERO, min(tc, td))
            hi = min(length, max(tc, td))
            if hi > lo:
                out.append(({c, d} == {a, b}, e))
    return out


def strip_decomposition(patch):
    squares = patch.squares
    if len(squares) < 2:
        raise AmbiguousAtBoundary("patch needs at least two squares")
    e = squares[0].edge
    f = rot90(e)
    for k, sq in enumerate(squares):
        if cross(sq.edge, e) and dot(sq.edge, e):
            raise InvalidSpec(f"square {k} is not aligned with square 0")

    partial_dirs = set()
    first_full = None
    for i, j in candidate_pairs([s.polygon().float_bounds() for s in squares]):
        for full, edge in _contacts(squares[i], squares[j]):
            if full:
                if first_full is None:
                    first_full = (i, j)
            else:
                partial_dirs.add("e" if not cross(edge, e) else "f")
    if len(partial_dirs) > 1:
        raise InvalidSpec("partial side contacts in two directions")
    if first_full is None:
        raise AmbiguousAtBoundary("no full-side contacts in the patch")
    if partial_dirs:
        case_tag = "offset"
        direction = _normalized(e if partial_dirs == {"e"} else f)
    else:
        # grid: either side direction gives strips; take the first contact's
        case_tag = "grid"
        i, j = first_full
        direction = _normalized(vsub(_center(squares[j]), _center(squares[i])))
        if direction != _normalized(e) and direction != _normalized(f):
            raise InvalidSpec("first contact is not a side translate")

    index = patch.keys()
    back = vscale(direction, -1)
    strips = []
    for k, sq in enumerate(squares):
        if sq.translated(back).key() in index:
            continue
        strip = [k]
        nxt = sq.translated(direction).key()
        while nxt in index:
            strip.append(index[nxt])
            nxt = squares[strip[-1]].translated(direction).key()
        strips.append(strip)
    if sum(len(s) for s in strips) != len(squares):
        raise InvalidSpec("strips do not partition the patch")
    for strip in strips:
        _check_strip(squares, strip)
    q1, q2 = _projection_counts(direction, patch.lattice.b, patch.side_sq)
    return StripReport(strips, direction, case_tag, q1, q2, patch.g)


def _check_strip(squares, strip):
    """Neighbours share exactly a side; non-neighbours share no vertex."""
    seen = {}
    for pos, k in enumerate(strip):
        verts = set(squares[k].vertices)
        if pos and len(verts & set(squares[strip[pos - 1]].vertices)) != 2:
            raise InvalidSpec("consecutive strip squares do not share a side")
        for v in verts:
            seen.setdefault(v, []).append(pos)
    for positions in seen.values():
        if max(positions) - min(positions) > 1:
            raise InvalidSpec("non-consecutive strip squares share a vertex")


def _integer_root(value, label):
    if not value.is_rational:
        raise NonIntegerProjection(f"{label}^2 = {value} is irrational")
    q = value.to_fraction()
    if q.denominator != 1 or q < 0:
        raise NonIntegerProjection(f"{label}^2 = {q} is not a nonnegative integer")
    root = isqrt(q.numerator)
    if root * root != q.numerator:
        raise NonIntegerProjection(f"{label}^2 = {q} is not a perfect square")
    return root


def _projection_counts(direction, b, side_sq):
    nx, ny = rot90(direction)
    nn = nx * nx + ny * ny
    p1 = b * (-2) * nx
    p2 = ny * 2
    q1 = _integer_root(p1 * p1 / (nn * side_sq), "q1")
    q2 = _integer_root(p2 * p2 / (nn * side_sq), "q2")
    return q1, q2


def strip_direction_and_q(patch, report):
    """Projection counts of (-2b, 0) and (0, 2) onto the strip normal, in sides."""
    return _projection_counts(report.direction, patch.lattice.b, patch.side_sq)
