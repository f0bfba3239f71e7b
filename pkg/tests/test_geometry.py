from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wrapkit.errors import DegeneratePolygon, ZeroEdge
from wrapkit.exact_field import QuadExt
from wrapkit.geometry import (
    ConvexPolygon, clip_halfplane, convex_intersection_area, interiors_disjoint,
    make_square, polygon_area, square_defect,
)

R3 = QuadExt(0, 1, 3)
UNIT = ConvexPolygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def shifted(P, dx, dy=0):
    return ConvexPolygon([(x + dx, y + dy) for x, y in P.vertices])


def test_area_examples():
    assert polygon_area(UNIT) == 1
    # clockwise input is reoriented
    assert ConvexPolygon([(0, 0), (0, 1), (1, 1), (1, 0)]).area == 1


def test_degenerate_rejected():
    with pytest.raises(DegeneratePolygon):
        ConvexPolygon([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(DegeneratePolygon):
        ConvexPolygon([(0, 0), (2, 0), (1, Fraction(1, 2)), (1, 2)])


def test_rectangle_K_area():
    # the tilted rectangle for b = 2 + sqrt 3, m = n = 1 has area 2b
    b = QuadExt(2, 1, 3)
    s = b * b + 1
    w = (b / s, -(b * b) / s)
    K = ConvexPolygon([(-b, -1), (-b + w[0], -1 + w[1]), (b + w[0], 1 + w[1]), (b, 1)])
    assert K.area == QuadExt(4, 2, 3)


def test_clip_examples():
    half = clip_halfplane(UNIT, (1, 0), Fraction(1, 2))
    assert half.area == Fraction(1, 2)
    assert clip_halfplane(UNIT, (1, 0), 5) is UNIT
    assert clip_halfplane(UNIT, (1, 0), 0) is None


def test_clip_tilted_square_complementary():
    sq = make_square((Fraction(1, 3), 0), (R3 / 2, Fraction(1, 2))).polygon()
    lower = clip_halfplane(sq, (0, 1), 1)
    upper = clip_halfplane(sq, (0, -1), -1)
    assert lower.area + upper.area == sq.area
    assert all(v.d in (0, 3) for p in lower.vertices for v in p)


def test_intersection_examples():
    assert convex_intersection_area(UNIT, UNIT) == 1
    assert convex_intersection_area(UNIT, shifted(UNIT, 1)) == 0
    assert convex_intersection_area(UNIT, shifted(UNIT, Fraction(1, 2))) == Fraction(1, 2)
    assert interiors_disjoint(UNIT, shifted(UNIT, 1))
    assert interiors_disjoint(UNIT, shifted(UNIT, 1, 1))
    assert not interiors_disjoint(UNIT, shifted(UNIT, Fraction(1, 2)))


def test_make_square_examples():
    assert make_square((0, 0), (1, 0)).polygon() == UNIT
    assert make_square((0, 0), (1, 1)).side_sq == 2
    sq = make_square((R3, 1), (R3, 1 + R3))
    assert square_defect(sq.vertices, sq.side_sq) is None
    with pytest.raises(ZeroEdge):
        make_square((0, 0), (0, 0))


small = st.fractions(min_value=-3, max_value=3, max_denominator=6)


@st.composite
def squares(draw):
    a, b, c = draw(small), draw(small), draw(small)
    e = (QuadExt(draw(small), draw(small), 3), QuadExt(draw(small)))
    if not (e[0] or e[1]):
        e = (QuadExt(1), e[1])
    return make_square((QuadExt(a, b, 3), QuadExt(c)), e)


lines = st.tuples(small, small, small).filter(lambda t: t[0] or t[1])


@given(squares(), lines)
def test_clip_partitions_area(sq, line):
    P = sq.polygon()
    nx, ny, off = line
    a = clip_halfplane(P, (nx, ny), off)
    b = clip_halfplane(P, (-nx, -ny), -off)
    area_a = a.area if a else 0
    area_b = b.area if b else 0
    assert area_a + area_b == P.area
    assert area_a <= P.area


@given(squares(), squares())
def test_intersection_symmetric_and_bounded(s, t):
    P, Q = s.polygon(), t.polygon()
    a = convex_intersection_area(P, Q)
    assert a == convex_intersection_area(Q, P)
    assert 0 <= a <= min(P.area, Q.area)
    assert interiors_disjoint(P, Q) == (a == 0)
