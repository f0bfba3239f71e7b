"""Exact check that a set of squares wraps the envelope, plus a float oracle.

Squares are folded into the fundamental domain [0, 2b] x [0, 1]: clipped to
the translation cells of width 2b and height 2, moved into the base cell, and
their parts above y = 1 turned back down by the point reflection in (b, 1).
The squares wrap the envelope iff they are equal, the folded pieces have
pairwise disjoint interiors, and the folded area is exactly 2b (disjoint
pieces inside a region of area 2b that add up to 2b must cover it).
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedSquare
from .exact_field import QuadExt, qx_floor
from .geometry import (
    ConvexPolygon, candidate_pairs, clip_halfplane, convex_intersection_area,
    interiors_disjoint, square_defect,
)
from .quotient import GroupElement, Lattice, compose

ZERO = QuadExt(0)
ONE = QuadExt(1)
MONE = QuadExt(-1)


@dataclass(frozen=True)
class FoldedPiece:
    polygon: ConvexPolygon
    source: int
    element: GroupElement


@dataclass
class VerificationReport:
    is_valid: bool
    squares_equal: bool
    folded_area: QuadExt
    target_area: QuadExt
    overlap_found: tuple = None
    piece_count: int = 0
    problems: list = field(default_factory=list)

    def lines(self):
        out = [
            f"valid: {'yes' if self.is_valid else 'no'}",
            f"squares equal: {'yes' if self.squares_equal else 'no'}",
            f"folded area: {self.folded_area}",
            f"target area (2b): {self.target_area}",
            f"pieces: {self.piece_count}",
        ]
        if self.overlap_found is not None:
            (i, j), area = self.overlap_found
            out.append(f"overlap: pieces {i} and {j}, area {area}")
        else:
            out.append("overlap: none")
        out.extend(f"problem: {p}" for p in self.problems)
        return out


def _cell_range(lo, hi, width):
    return range(qx_floor(lo / width), qx_floor(hi / width) + 1)


def fold_square(square, index, lattice):
    width = lattice.cell_width
    poly = square.polygon()
    x0, y0, x1, y1 = poly.bounds()
    pieces = []
    for k1 in _cell_range(x0, x1, width):
        col = poly
        left, right = width * k1, width * (k1 + 1)
        if x0 < left:
            col = clip_halfplane(col, (MONE, ZERO), -left)
        if col is not None and x1 > right:
            col = clip_halfplane(col, (ONE, ZERO), right)
        if col is None:
            continue
        for k2 in range(qx_floor(y0 / 2), qx_floor(y1 / 2) + 1):
            frag = col
            if y0 < 2 * k2:
                frag = clip_halfplane(frag, (ZERO, MONE), QuadExt(-2 * k2))
            if frag is not None and y1 > 2 * k2 + 2:
                frag = clip_halfplane(frag, (ZERO, ONE), QuadExt(2 * k2 + 2))
            if frag is None:
                continue
            g = GroupElement.translation(-k1, -k2)
            frag = frag.map(lambda p, g=g: g.apply(p, lattice))
            lower = clip_halfplane(frag, (ZERO, ONE), ONE)
            upper = clip_halfplane(frag, (ZERO, MONE), MONE)
            if lower is not None:
                pieces.append(FoldedPiece(lower, index, g))
            if upper is not None:
                h = compose(GroupElement.reflection_at(1, 1), g)
                r = GroupElement.reflection_at(1, 1)
                pieces.append(FoldedPiece(upper.map(lambda p: r.apply(p, lattice)), index, h))
    return pieces


def fold_wrapping(spec):
    lattice = Lattice(spec.b)
    pieces = []
    for i, sq in enumerate(spec.squares):
        problem = square_defect(sq.vertices, sq.side_sq)
        if problem:
            raise MalformedSquare(f"square {i}: {problem}")
        pieces.extend(fold_square(sq, i, lattice))
    return pieces


def find_overlaps(polygons, first_only=False):
    """Exact ((i, j), area) for every pair of polygons whose interiors meet."""
    found = []
    pairs = candidate_pairs([p.float_bounds() for p in polygons])
    for i, j in pairs:
        if interiors_disjoint(polygons[i], polygons[j]):
            continue
        area = convex_intersection_area(polygons[i], polygons[j])
        if area.sign() > 0:
            found.append(((i, j), area))
            if first_only:
                break
    return found


def verify_wrapping(spec):
    b = spec.b
    target = b * 2
    problems = []
    squares_equal = bool(spec.squares)
    for i, sq in enumerate(spec.squares):
        if sq.side_sq != spec.side_sq:
            squares_equal = False
            problems.append(f"square {i} has side^2 {sq.side_sq}, expected {spec.side_sq}")
        problem = square_defect(sq.vertices, sq.side_sq)
        if problem:
            squares_equal = False
            problems.append(f"square {i}: {problem}")
    if not squares_equal:
        return VerificationReport(False, False, ZERO, target, None, 0,
                                  problems or ["no squares"])
    pieces = fold_wrapping(spec)
    folded = ZERO
    for piece in pieces:
        folded = folded + piece.polygon.area
    overlaps = find_overlaps([p.polygon for p in pieces], first_only=True)
    overlap = overlaps[0] if overlaps else None
    if folded != target:
        problems.append(f"folded area {folded} differs from 2b = {target}")
    is_valid = overlap is None and folded == target
    return VerificationReport(is_valid, True, folded, target, overlap, len(pieces), problems)


def monte_carlo_multiplicity(spec, samples, seed, pieces=None):
    """Per-sample count of folded pieces covering uniform points of [0, 2b) x [0, 1).

    Points come from numpy's PCG64 generator seeded with ``seed``; geometry is
    double precision. This is an independent float oracle, never used by the
    exact verifier.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if pieces is None:
        pieces = fold_wrapping(spec)
    rng = np.random.Generator(np.random.PCG64(seed))
    width = 2.0 * float(spec.b)
    xs = rng.random(samples) * width
    ys = rng.random(samples)
    order = np.argsort(xs, kind="stable")
    xs_sorted, ys_sorted = xs[order], ys[order]
    counts = np.zeros(samples, dtype=np.int64)
    for piece in pieces:
        verts = np.array([(float(x), float(y)) for x, y in piece.polygon.vertices])
        lo = np.searchsorted(xs_sorted, verts[:, 0].min(), side="left")
        hi = np.searchsorted(xs_sorted, verts[:, 0].max(), side="right")
        if lo >= hi:
            continue
        px, py = xs_sorted[lo:hi], ys_sorted[lo:hi]
        inside = (py >= verts[:, 1].min()) & (py <= verts[:, 1].max())
        nxt = np.roll(verts, -1, axis=0)
        for (ax, ay), (bx, by) in zip(verts, nxt):
            inside &= (bx - ax) * (py - ay) - (by - ay) * (px - ax) >= 0.0
        counts[order[lo:hi][inside]] += 1
    return counts


def monte_carlo_check(spec, samples, seed):
    """(coverage_fraction, mean_multiplicity) from ``samples`` random points."""
    counts = monte_carlo_multiplicity(spec, samples, seed)
    return float(np.mean(counts >= 1)), float(np.mean(counts))
