"""Half-integer bookkeeping and the flattened basis order."""

from fractions import Fraction

import pytest

from poincarerep.spins import HalfInt, Spin, SpinPair, flatten_index


def test_halfint_value_and_arithmetic():
    h = HalfInt(3)
    assert h.value == Fraction(3, 2)
    assert (h + HalfInt(1)).twice == 4
    assert (h - 1).twice == 1
    assert (-h).twice == -3
    assert HalfInt(2) == 1
    assert HalfInt(1) < HalfInt(2)
    assert not HalfInt(3).is_integral()


def test_halfint_immutable():
    h = HalfInt(1)
    with pytest.raises(AttributeError):
        h.twice = 5


def test_spin_rejects_negative():
    with pytest.raises(ValueError):
        Spin(-1)


def test_spin_multiplicity_and_projections():
    s = Spin(3)
    assert s.multiplicity == 4
    assert [p.twice for p in s.projections()] == [3, 1, -1, -3]


def test_spinpair_dimension_and_basis_order():
    pair = SpinPair(Spin(1), Spin(1))
    assert pair.dimension == 4
    assert [(a.twice, b.twice) for a, b in pair.basis()] == [
        (1, 1), (1, -1), (-1, 1), (-1, -1)
    ]


def test_flatten_index_examples():
    half_half = SpinPair(Spin(1), Spin(1))
    assert flatten_index(half_half, HalfInt(1), HalfInt(1)) == 0
    assert flatten_index(half_half, HalfInt(-1), HalfInt(1)) == 2
    one_half = SpinPair(Spin(2), Spin(1))
    assert flatten_index(one_half, HalfInt(0), HalfInt(-1)) == 3


def test_flatten_index_bijective():
    pair = SpinPair(Spin(2), Spin(3))
    seen = {flatten_index(pair, a, b) for a, b in pair.basis()}
    assert seen == set(range(pair.dimension))
    assert [flatten_index(pair, a, b) for a, b in pair.basis()] == list(
        range(pair.dimension)
    )


def test_flatten_index_rejects_out_of_range():
    pair = SpinPair(Spin(1), Spin(1))
    with pytest.raises(ValueError):
        flatten_index(pair, HalfInt(3), HalfInt(1))
    with pytest.raises(ValueError):
        flatten_index(pair, HalfInt(0), HalfInt(1))  # wrong parity for spin 1/2
