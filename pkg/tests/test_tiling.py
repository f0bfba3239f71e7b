from fractions import Fraction

import pytest

from wrapkit.characterize import b_from_params, params_from_strip_data
from wrapkit.construct import WrappingSpec
from wrapkit.errors import AmbiguousAtBoundary, InvalidSpec, MarginTooSmall
from wrapkit.exact_field import QuadExt
from wrapkit.geometry import Box, make_square
from wrapkit.quotient import Lattice
from wrapkit.tiling import (
    TilingPatch, check_invariance, expand_orbit, strip_decomposition, strip_direction_and_q,
)

CASES = [("2", "1", 1), ("1/2", "0", 1), ("1", "1", 1), ("3", "1", 1), ("2", "1", -1),
         ("3/2", "1/3", 1), ("5/6", "5/6", 1)]
NODES = [(0, 0), (1, 0), (0, 1), (1, 1), (-1, 2), (3, -1)]


def base_window(b):
    return Box.of(0, 0, 2 * b, 2)


def test_unit_grid_patch(wrapping):
    spec = wrapping("1/2", "0", 1)
    patch = expand_orbit(spec, Box.of(0, 0, 2, 2), margin=(0, 0))
    assert len(patch.squares) == 4
    expected = {frozenset(make_square((i, j), (1, 0)).vertices) for i in range(2) for j in range(2)}
    assert {sq.key() for sq in patch.squares} == expected


def test_zero_area_window(wrapping):
    spec = wrapping("1/2", "0", 1)
    patch = expand_orbit(spec, Box.of(1, 1, 1, 1), margin=(0, 0))
    assert patch.squares == []


def test_invalid_spec_rejected(wrapping):
    spec = wrapping("2", "1", 1)
    with pytest.raises(InvalidSpec):
        expand_orbit(WrappingSpec(spec.b, spec.squares[1:], spec.side_sq), base_window(spec.b))


@pytest.mark.parametrize("case", CASES)
def test_patch_exact_cover(wrapping, case):
    spec = wrapping(*case)
    window = base_window(spec.b)
    patch = expand_orbit(spec, window)
    assert patch.covered_area(window) == window.area
    assert patch.covered_area(patch.outer) == patch.outer.area


@pytest.mark.parametrize("case", CASES[:5])
def test_invariance_at_nodes(wrapping, case):
    spec = wrapping(*case)
    patch = expand_orbit(spec, base_window(spec.b), margin=(4 * spec.b, 4))
    for node in NODES:
        assert check_invariance(patch, node)


def test_invariance_detects_displaced_square(wrapping):
    spec = wrapping("2", "1", 1)
    patch = expand_orbit(spec, base_window(spec.b))
    squares = list(patch.squares)
    # move one square that meets the window
    k = next(i for i, sq in enumerate(squares) if patch.window.clip(sq.polygon()) is not None)
    squares[k] = squares[k].translated((QuadExt(Fraction(1, 7)), QuadExt(0)))
    broken = TilingPatch(squares, patch.window, patch.lattice, patch.outer, patch.side_sq, patch.g)
    assert not all(check_invariance(broken, node) for node in [(0, 0), (1, 0), (0, 1), (1, 1)])


def test_margin_too_small(wrapping):
    spec = wrapping("2", "1", 1)
    patch = expand_orbit(spec, base_window(spec.b), margin=(0, 0))
    with pytest.raises(MarginTooSmall):
        check_invariance(patch, (0, 0))
    assert check_invariance(patch, (1, 1))


def test_unit_grid_strips(wrapping):
    spec = wrapping("1/2", "0", 1)
    patch = expand_orbit(spec, base_window(spec.b))
    rep = strip_decomposition(patch)
    assert rep.case_tag == "grid"
    assert rep.direction == (1, 0)
    assert (rep.q1, rep.q2) == (0, 2)


def test_tilted_unit_strips(wrapping):
    spec = wrapping("1", "1", 1)
    patch = expand_orbit(spec, base_window(spec.b))
    rep = strip_decomposition(patch)
    assert rep.direction[0] == rep.direction[1] or rep.direction[0] == -rep.direction[1]
    assert strip_direction_and_q(patch, rep) == (2, 2)


def test_offset_strips_follow_long_side(wrapping):
    spec = wrapping("2", "1", 1)
    b = spec.b
    patch = expand_orbit(spec, base_window(b))
    rep = strip_decomposition(patch)
    assert rep.case_tag == "offset"
    dx, dy = rep.direction
    assert dx * 1 - dy * b == 0  # parallel to (b, 1)
    assert (rep.q1, rep.q2, rep.g) == (2, 2, 8)


def test_single_strip_patch(wrapping):
    spec = wrapping("2", "1", 1)
    patch = TilingPatch(list(spec.squares), base_window(spec.b), Lattice(spec.b),
                        base_window(spec.b), spec.side_sq, 8)
    rep = strip_decomposition(patch)
    assert len(rep.strips) == 1 and len(rep.strips[0]) == 8


def test_ambiguous_patch():
    sq = make_square((0, 0), (1, 0))
    lattice = Lattice(QuadExt(1))
    patch = TilingPatch([sq], Box.of(0, 0, 1, 1), lattice, Box.of(0, 0, 1, 1), sq.side_sq, 2)
    with pytest.raises(AmbiguousAtBoundary):
        strip_decomposition(patch)


@pytest.mark.parametrize("case", CASES)
def test_necessity_round_trip(wrapping, case):
    spec = wrapping(*case)
    patch = expand_orbit(spec, base_window(spec.b))
    rep = strip_decomposition(patch)
    squares = patch.squares
    for strip in rep.strips:
        for pos in range(1, len(strip)):
            shared = set(squares[strip[pos]].vertices) & set(squares[strip[pos - 1]].vertices)
            assert len(shared) == 2
        for i in range(len(strip)):
            for j in range(i + 2, len(strip)):
                assert not set(squares[strip[i]].vertices) & set(squares[strip[j]].vertices)
    w = params_from_strip_data(rep.q1, rep.q2, rep.g, spec.b)
    assert b_from_params(w) == spec.b
    b = spec.b
    if rep.q2:
        assert b * b - b * Fraction(2 * rep.g, rep.q2 ** 2) + Fraction(rep.q1, rep.q2) ** 2 == 0
    else:
        assert 2 * b == rep.g * spec.side_sq
        assert rep.q1 ** 2 == 2 * rep.g * b


def test_vertical_strips_give_q2_zero(wrapping):
    spec = wrapping("1/2", "0", 1)
    patch = expand_orbit(spec, base_window(spec.b))
    rep = strip_decomposition(patch)
    rep.direction = (QuadExt(0), QuadExt(1))
    q1, q2 = strip_direction_and_q(patch, rep)
    assert (q1, q2) == (2, 0)
    assert 2 * spec.b == rep.g * spec.side_sq
    assert b_from_params(params_from_strip_data(q1, q2, rep.g, spec.b)) == 1
