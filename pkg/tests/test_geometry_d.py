import pytest
from hypothesis import given, settings, strategies as st

from cy2torsion.geometry_a import DiagonalSet, GeometryError, is_ptolemy, ptolemy_closure
from cy2torsion.geometry_d import (
    GREEN,
    RED,
    ArcPair,
    ArcSetD,
    Diameter,
    F_d,
    all_arcs,
    arc_from_json,
    check_F_ambient,
    cross_d,
    is_F_periodic,
    is_ptolemy_d,
    phi_d,
    ptolemy_closure_d,
    ptolemy_consequences_d,
    tau_d,
)

U = 4  # D(1,1) lives on the 8-gon
ARCS = all_arcs(U)
PAIRS = [a for a in ARCS if isinstance(a, ArcPair)]
PROPS = settings(max_examples=1000, deadline=None)
arc_sets = st.sets(st.sampled_from(ARCS), max_size=5).map(lambda s: ArcSetD(U, frozenset(s)))
pair_sets = st.sets(st.sampled_from(PAIRS), max_size=4).map(lambda s: ArcSetD(U, frozenset(s)))


def lift(s: ArcSetD) -> DiagonalSet:
    return DiagonalSet.of(2 * s.u, [arc for a in s for arc in a.arcs])


def test_arc_pair_normal_form():
    a = ArcPair.of(7, 1, U)
    assert a == ArcPair.of(1, 7, U) == ArcPair.of(3, 5, U)
    assert {frozenset(arc) for arc in a.arcs} == {frozenset({1, 7}), frozenset({3, 5})}
    assert ArcPair.of(1, 3, U) == ArcPair.of(5, 7, U)
    assert a.length == 2


def test_arc_pair_rejects_diameters_and_edges():
    with pytest.raises(GeometryError):
        ArcPair.of(1, 5, 4)
    with pytest.raises(GeometryError):
        ArcPair.of(1, 2, 4)


def test_diameter_normalised():
    assert Diameter.of(5, GREEN, 4) == Diameter.of(1, GREEN, 4)
    assert Diameter.of(5, GREEN, 4) != Diameter.of(1, RED, 4)
    with pytest.raises(GeometryError):
        Diameter.of(1, "blue", 4)


def test_universe_size():
    # non-diameter chords come in antipodal pairs; each diameter comes in two colours
    for u in (2, 3, 4, 6):
        m = 2 * u
        chords = m * (m - 3) // 2
        assert len(all_arcs(u)) == (chords - u) // 2 + 2 * u


def test_diameter_crossing_rules():
    g1, r1, g2, r2 = (Diameter.of(i, c, U) for i, c in ((1, GREEN), (1, RED), (2, GREEN), (2, RED)))
    assert not cross_d(g1, r1)  # paired diameters
    assert not cross_d(g1, g2)
    assert cross_d(g1, r2) and cross_d(r2, g1)
    assert cross_d(g1, ArcPair.of(2, 8, U))
    assert not cross_d(g1, ArcPair.of(1, 3, U))


@PROPS
@given(st.sampled_from(ARCS), st.sampled_from(ARCS))
def test_cross_symmetric_irreflexive(a, b):
    assert cross_d(a, b) == cross_d(b, a)
    assert not cross_d(a, a)


@pytest.mark.parametrize("u", [4, 6, 8])
def test_tau_and_F_orders(u):
    n = u // 2 - 1  # t = 1
    for a in all_arcs(u):
        assert tau_d(a, u) == a
        assert phi_d(phi_d(a)) == a
        assert F_d(F_d(a, n), n) == a
        assert F_d(a, n, 2) == a
    check_F_ambient(u, n, 1)


def test_tau_flips_diameters():
    assert tau_d(Diameter.of(2, GREEN, U)) == Diameter.of(1, RED, U)
    assert tau_d(Diameter.of(2, GREEN, U), 2) == Diameter.of(4, GREEN, U)


def test_F_ambient_mismatch():
    with pytest.raises(GeometryError):
        check_F_ambient(6, 1, 1)


def test_pt1_opposite_endpoints_gives_both_colours():
    out = ptolemy_consequences_d(ArcPair.of(1, 4, U), ArcPair.of(2, 5, U))
    assert Diameter.of(1, GREEN, U) in out and Diameter.of(1, RED, U) in out


def test_pt2_pt3_examples():
    out = ptolemy_consequences_d(Diameter.of(1, GREEN, U), ArcPair.of(2, 8, U))
    assert out == {Diameter.of(2, GREEN, U), Diameter.of(4, GREEN, U)}
    out = ptolemy_consequences_d(Diameter.of(1, GREEN, U), Diameter.of(2, RED, U))
    assert out == {ArcPair.of(1, 6, U), ArcPair.of(2, 5, U)}


@PROPS
@given(arc_sets)
def test_closure_operator_laws(s):
    c = ptolemy_closure_d(s)
    assert s <= c
    assert ptolemy_closure_d(c) == c
    assert is_ptolemy_d(c)


@PROPS
@given(arc_sets, arc_sets)
def test_closure_monotone(s, t):
    assert ptolemy_closure_d(s) <= ptolemy_closure_d(s | t)


@PROPS
@given(arc_sets, st.integers(0, 2 * U))
def test_closure_equivariant(s, k):
    moved = ArcSetD(U, frozenset(tau_d(a, k) for a in s))
    assert ptolemy_closure_d(moved).members == {tau_d(a, k) for a in ptolemy_closure_d(s)}
    flipped = ArcSetD(U, frozenset(phi_d(a) for a in s))
    assert ptolemy_closure_d(flipped).members == {phi_d(a) for a in ptolemy_closure_d(s)}


@PROPS
@given(pair_sets)
def test_without_diameters_matches_type_a(s):
    assert is_ptolemy_d(s) == is_ptolemy(lift(s))
    closed_a = ptolemy_closure(lift(s))
    closed_d = ptolemy_closure_d(s)
    if all(abs(d.j - d.i) != U for d in closed_a):
        assert lift(closed_d) == closed_a
    else:
        assert closed_d.has_diameters()


def test_F_periodic():
    s = ArcSetD.of(U, [ArcPair.of(1, 3, U), ArcPair.of(3, 5, U)])
    assert is_F_periodic(s, 1, 1)
    assert not is_F_periodic(ArcSetD.of(U, [Diameter.of(1, GREEN, U)]), 1, 1)
    assert is_F_periodic(ArcSetD.of(U, [Diameter.of(1, GREEN, U), Diameter.of(3, RED, U)]), 1, 1)


@PROPS
@given(arc_sets)
def test_json_round_trip(s):
    assert ArcSetD.from_json(s.to_json()) == s


def test_arc_from_json_forms():
    assert arc_from_json([2, 4], U) == ArcPair.of(2, 4, U)
    assert arc_from_json({"diam": 5, "color": "r"}, U) == Diameter.of(1, RED, U)
    assert arc_from_json({"pair": [1, 3]}, U) == ArcPair.of(1, 3, U)
