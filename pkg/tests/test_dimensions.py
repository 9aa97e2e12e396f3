"""Three skew-dimension routes against each other and a filling counter."""

import itertools

import pytest
from hypothesis import given

from hookchar import (
    Partition,
    SkewShape,
    dim_hlf,
    enumerate_partitions,
    enumerate_subdiagrams,
    skew_dim_det,
    skew_dim_oracle,
)

from conftest import partitions_st

KNOWN_DIMS = [
    ((), 1),
    ((1,), 1),
    ((5,), 1),
    ((1, 1, 1, 1), 1),
    ((2, 1), 2),
    ((2, 2), 2),
    ((3, 2), 5),
    ((3, 3, 3), 42),
    ((4, 3, 3), 210),
    ((5, 5, 5, 2), 291720),
]


@pytest.mark.parametrize("parts, expected", KNOWN_DIMS)
def test_known_dimensions(parts, expected):
    assert dim_hlf(Partition(parts)) == expected


def _fillings_by_brute_force(outer, inner):
    """Count standard fillings literally; usable only for tiny shapes."""
    cells = [
        (i, j)
        for i in range(1, len(outer) + 1)
        for j in range(inner.part(i) + 1, outer.part(i) + 1)
    ]
    count = 0
    for perm in itertools.permutations(range(1, len(cells) + 1)):
        fill = dict(zip(cells, perm))
        ok = all(
            fill.get((i, j - 1), 0) < v and fill.get((i - 1, j), 0) < v
            for (i, j), v in fill.items()
            if (i, j - 1) in fill or (i - 1, j) in fill
        )
        count += ok
    return count


@pytest.mark.parametrize("n", range(6))
def test_plain_dimension_matches_literal_fillings(n):
    empty = Partition(())
    for lam in enumerate_partitions(n):
        assert dim_hlf(lam) == _fillings_by_brute_force(lam, empty)


def test_skew_routes_match_literal_fillings():
    for outer_parts, inner_parts in [
        ((3, 2), (1,)),
        ((3, 3), (2, 1)),
        ((4, 2, 1), (2,)),
        ((3, 2, 1), (2, 1)),
    ]:
        shape = SkewShape(Partition(outer_parts), Partition(inner_parts))
        brute = _fillings_by_brute_force(shape.outer, shape.inner)
        assert skew_dim_det(shape) == brute
        assert skew_dim_oracle(shape) == brute


def test_worked_skew_dimension():
    shape = SkewShape(Partition((5, 5, 5, 2)), Partition((3, 2, 1, 1)))
    assert skew_dim_det(shape) == 1230
    assert skew_dim_oracle(shape) == 1230


@pytest.mark.parametrize("n", range(1, 8))
def test_det_equals_oracle_exhaustively(n):
    for lam in enumerate_partitions(n):
        for mu in enumerate_subdiagrams(lam):
            shape = SkewShape(lam, mu)
            assert skew_dim_det(shape) == skew_dim_oracle(shape)


def test_det_with_empty_inner_is_plain_dimension():
    for lam in enumerate_partitions(7):
        assert skew_dim_det(SkewShape(lam, Partition(()))) == dim_hlf(lam)


def test_full_inner_gives_one():
    lam = Partition((4, 3, 3))
    assert skew_dim_det(SkewShape(lam, lam)) == 1
    assert skew_dim_oracle(SkewShape(lam, lam)) == 1


def test_oracle_cap_enforced():
    shape = SkewShape(Partition((5, 5, 5, 2)), Partition(()))
    with pytest.raises(ValueError):
        skew_dim_oracle(shape, cap=10)
    assert skew_dim_oracle(shape, cap=17) == 291720


def test_skew_shape_requires_containment():
    with pytest.raises(ValueError):
        SkewShape(Partition((2, 2)), Partition((3,)))


def test_skew_shape_size_and_text():
    shape = SkewShape(Partition((3, 2)), Partition((1,)))
    assert shape.size == 4
    assert str(shape) == "[3,2]\\[1]"


@given(partitions_st(max_part=7, max_len=7))
def test_dimension_invariant_under_conjugation(p):
    assert dim_hlf(p) == dim_hlf(p.conjugate())


@given(partitions_st(max_part=5, max_len=4))
def test_skew_det_invariant_under_conjugation(outer):
    for inner in enumerate_subdiagrams(outer):
        plain = skew_dim_det(SkewShape(outer, inner))
        flipped = skew_dim_det(SkewShape(outer.conjugate(), inner.conjugate()))
        assert plain == flipped
