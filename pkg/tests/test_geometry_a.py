from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cy2torsion.counting import s
from cy2torsion.geometry_a import (
    Diagonal,
    DiagonalSet,
    GeometryError,
    all_diagonals,
    cross,
    is_k_periodic,
    is_ptolemy,
    ptolemy_closure,
    ptolemy_consequences,
    rotate,
)

M = 9
DIAGS = all_diagonals(M)
subsets = st.sets(st.sampled_from(DIAGS), max_size=6).map(lambda u: DiagonalSet(M, frozenset(u)))
PROPS = settings(max_examples=1000, deadline=None)


def test_diagonal_is_canonical():
    d = Diagonal.of(7, 2, 9)
    assert (d.i, d.j) == (2, 7)
    assert Diagonal.of(11, 13, 9) == Diagonal(2, 4, 9)
    assert d.length == 4 and d.short_form() == (7, 11)


@pytest.mark.parametrize("a,b", [(1, 2), (9, 1), (3, 3)])
def test_edges_rejected(a, b):
    with pytest.raises(GeometryError):
        Diagonal.of(a, b, 9)


def test_small_polygon_rejected():
    with pytest.raises(GeometryError):
        all_diagonals(3)


def test_counts_of_diagonals():
    for m in range(4, 12):
        assert len(all_diagonals(m)) == m * (m - 3) // 2


def test_crossing_examples():
    assert cross(Diagonal(1, 3, 6), Diagonal(2, 4, 6))
    assert not cross(Diagonal(1, 3, 6), Diagonal(3, 5, 6))
    assert not cross(Diagonal(1, 4, 6), Diagonal(1, 3, 6))
    assert not cross(Diagonal(1, 4, 9), Diagonal(1, 4, 9))


@PROPS
@given(st.sampled_from(DIAGS), st.sampled_from(DIAGS))
def test_cross_symmetric_irreflexive(a, b):
    assert cross(a, b) == cross(b, a)
    assert not cross(a, a)


def test_consequences_of_square():
    got = set(ptolemy_consequences(Diagonal(1, 3, 6), Diagonal(2, 4, 6)))
    assert got == {Diagonal(1, 4, 6)}
    got = set(ptolemy_consequences(Diagonal(1, 4, 8), Diagonal(2, 6, 8)))
    assert got == {Diagonal(1, 6, 8), Diagonal(2, 4, 8), Diagonal(4, 6, 8)}


@PROPS
@given(subsets)
def test_closure_operator_laws(u):
    c = ptolemy_closure(u)
    assert u <= c
    assert ptolemy_closure(c) == c
    assert is_ptolemy(c)


@PROPS
@given(subsets, subsets)
def test_closure_monotone(u, v):
    assert ptolemy_closure(u) <= ptolemy_closure(u | v)


@PROPS
@given(subsets, st.integers(-20, 20))
def test_closure_commutes_with_rotation(u, k):
    assert ptolemy_closure(u.rotated(k)) == ptolemy_closure(u).rotated(k)


@pytest.mark.parametrize("m", [4, 5, 6])
def test_ptolemy_diagrams_of_small_polygons(m):
    diags = all_diagonals(m)
    found = sum(
        1
        for r in range(len(diags) + 1)
        for pick in combinations(diags, r)
        if is_ptolemy(DiagonalSet.of(m, pick))
    )
    assert found == s(m)


def test_periodicity():
    u = ptolemy_closure(DiagonalSet.of(9, [(1, 3), (4, 6), (7, 9)]))
    assert is_k_periodic(u, 3)
    assert not is_k_periodic(DiagonalSet.of(9, [(1, 3)]), 3)
    with pytest.raises(GeometryError):
        is_k_periodic(u, 4)


def test_rotate_wraps():
    assert rotate(Diagonal(1, 3, 9), 1) == Diagonal(2, 9, 9)


@PROPS
@given(subsets)
def test_json_round_trip(u):
    assert DiagonalSet.from_json(u.to_json()) == u


def test_mixed_polygons_rejected():
    with pytest.raises(GeometryError):
        DiagonalSet(9, frozenset({Diagonal(1, 3, 8)}))
