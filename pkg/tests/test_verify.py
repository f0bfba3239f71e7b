import random
from fractions import Fraction

import pytest

from wrapkit.construct import WrappingSpec
from wrapkit.errors import MalformedSquare
from wrapkit.exact_field import QuadExt
from wrapkit.geometry import SquareShape, make_square, vscale
from wrapkit.quotient import GroupElement, Lattice, equivalent
from wrapkit.verify import (
    fold_wrapping, monte_carlo_check, monte_carlo_multiplicity, verify_wrapping,
)

CASES = [("2", "1", 1), ("1/2", "0", 1), ("1", "1", 1), ("3", "1", 1), ("2", "1", -1),
         ("5/6", "5/6", 1), ("3/2", "1/3", 1)]


def _total(polys):
    total = QuadExt(0)
    for p in polys:
        total = total + p.area
    return total


def shift_one(spec, k=0, frac=Fraction(1, 10)):
    sq = spec.squares[k]
    moved = sq.translated(vscale(sq.edge, frac))
    return WrappingSpec(spec.b, spec.squares[:k] + [moved] + spec.squares[k + 1:], spec.side_sq)


def test_fold_b1_two_squares(wrapping):
    spec = wrapping("1/2", "0", 1)
    pieces = fold_wrapping(spec)
    assert _total(p.polygon for p in pieces) == 2
    assert verify_wrapping(spec).is_valid
    for p in pieces:
        x0, y0, x1, y1 = p.polygon.bounds()
        assert 0 <= x0 and x1 <= 2 and 0 <= y0 and y1 <= 1


def test_square_inside_base_cell_is_one_piece():
    sq = make_square((Fraction(1, 4), Fraction(1, 8)), (Fraction(1, 2), 0))
    spec = WrappingSpec(QuadExt(2, 1, 3), [sq], sq.side_sq)
    pieces = fold_wrapping(spec)
    assert len(pieces) == 1
    assert pieces[0].element == GroupElement.identity()
    assert pieces[0].polygon == sq.polygon()


def test_fold_b1_tilted(wrapping):
    spec = wrapping("1", "1", 1)
    pieces = fold_wrapping(spec)
    assert _total(p.polygon for p in pieces) == 2
    assert verify_wrapping(spec).is_valid
    cov, mult = monte_carlo_check(spec, 20000, 5)
    assert cov == 1.0 and mult == 1.0


@pytest.mark.parametrize("case", CASES)
def test_fold_conservation_and_elements(wrapping, case):
    spec = wrapping(*case)
    lattice = Lattice(spec.b)
    pieces = fold_wrapping(spec)
    assert _total(p.polygon for p in pieces) == _total(s.polygon() for s in spec.squares)
    for piece in pieces:
        inv = piece.element.inverse()
        for v in piece.polygon.vertices:
            src = inv.apply(v, lattice)
            assert spec.squares[piece.source].polygon().contains(src)
            assert equivalent(src, v, lattice)


def test_verify_end_to_end(wrapping):
    rep = verify_wrapping(wrapping("2", "1", 1))
    assert rep.is_valid and rep.squares_equal and rep.overlap_found is None
    assert rep.folded_area == rep.target_area == QuadExt(4, 2, 3)


def test_deleted_square(wrapping):
    spec = wrapping("2", "1", 1)
    cut = WrappingSpec(spec.b, spec.squares[1:], spec.side_sq)
    rep = verify_wrapping(cut)
    assert not rep.is_valid and rep.overlap_found is None
    assert rep.folded_area == 2 * spec.b - spec.side_sq


def test_duplicated_square(wrapping):
    spec = wrapping("2", "1", 1)
    rep = verify_wrapping(WrappingSpec(spec.b, spec.squares + [spec.squares[3]], spec.side_sq))
    assert not rep.is_valid and rep.overlap_found is not None


def test_shifted_square(wrapping):
    spec = wrapping("2", "1", 1)
    rep = verify_wrapping(shift_one(spec, 2))
    assert not rep.is_valid
    assert rep.overlap_found is not None and rep.overlap_found[1] > 0
    assert rep.folded_area == 2 * spec.b


@pytest.mark.parametrize("case", CASES[:5])
def test_perturbations_flip_validity(wrapping, case):
    spec = wrapping(*case)
    rng = random.Random(hash(case) & 0xFFFF)
    k = rng.randrange(len(spec.squares))
    sq = spec.squares
    for bad in (sq[:k] + sq[k + 1:], sq + [sq[k]]):
        assert not verify_wrapping(WrappingSpec(spec.b, bad, spec.side_sq)).is_valid
    assert not verify_wrapping(shift_one(spec, k)).is_valid


def test_unequal_squares_reported():
    a = make_square((0, 0), (1, 0))
    b = make_square((1, 0), (Fraction(1, 2), 0))
    rep = verify_wrapping(WrappingSpec(QuadExt(1), [a, b], a.side_sq))
    assert not rep.squares_equal and not rep.is_valid


def test_malformed_square_rejected_by_fold():
    bad = SquareShape(((QuadExt(0), QuadExt(0)), (QuadExt(1), QuadExt(0)),
                       (QuadExt(1), QuadExt(2)), (QuadExt(0), QuadExt(2))), QuadExt(1))
    with pytest.raises(MalformedSquare):
        fold_wrapping(WrappingSpec(QuadExt(1), [bad], QuadExt(1)))
    assert not verify_wrapping(WrappingSpec(QuadExt(1), [bad], QuadExt(1))).is_valid


def test_monte_carlo_valid_and_deficit(wrapping):
    spec = wrapping("2", "1", 1)
    cov, mult = monte_carlo_check(spec, 100_000, 1)
    assert cov >= 0.999 and 0.99 <= mult <= 1.01
    cut = WrappingSpec(spec.b, spec.squares[1:], spec.side_sq)
    cov, mult = monte_carlo_check(cut, 100_000, 1)
    expected = 1 - float(spec.side_sq / (2 * spec.b))
    sigma = (expected * (1 - expected) / 100_000) ** 0.5
    assert abs(cov - expected) <= 3 * sigma


def test_monte_carlo_deterministic(wrapping):
    spec = wrapping("3", "1", 1)
    a = monte_carlo_multiplicity(spec, 5000, 42)
    b = monte_carlo_multiplicity(spec, 5000, 42)
    assert (a == b).all()
    with pytest.raises(ValueError):
        monte_carlo_check(spec, 0, 1)
