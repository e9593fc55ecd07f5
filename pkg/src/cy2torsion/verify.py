"""The acceptance grid behind ``cy2 verify``.

Every check returns ``(name, passed, detail)``; the detail strings never
contain timings so the printed table is reproducible byte for byte.
"""

from __future__ import annotations

import time
from typing import Callable, Iterable

from . import fixtures
from . import geometry_a as ga
from . import geometry_d as gd
from .category import CategorySpec, CategoryTables, get_tables, iter_bits
from .counting import T, count_ptolemy, count_torsion_pairs_formula, s, t_n1
from .torsion import (
    brute_force_halves,
    check_t_structures,
    enumerate_torsion_pairs,
    wing_decomposition,
)

Check = tuple[str, bool, str]

GRID = [
    CategorySpec("A", 1, 1),
    CategorySpec("A", 1, 2),
    CategorySpec("A", 1, 3),
    CategorySpec("A", 1, 4),
    CategorySpec("A", 2, 1),
    CategorySpec("A", 2, 2),
    CategorySpec("A", 3, 1),
    CategorySpec("A", 3, 2),
    CategorySpec("D", 1, 1),
    CategorySpec("D", 1, 2),
    CategorySpec("D", 2, 1),
    CategorySpec("D", 1, 3),
]

BRUTE_FORCE_MAX = 20


def _timed(fn: Callable):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def check_counts(workers: int = 1) -> list[Check]:
    expected = [
        (CategorySpec("A", 2, 2), 32, T(3)),
        (CategorySpec("A", 2, 1), 20, T(3) - t_n1(2)),
        (CategorySpec("D", 1, 2), 6, T(2)),
        (CategorySpec("D", 1, 1), 10, T(2) + 2 * t_n1(1)),
    ]
    out = []
    for spec, value, formula in expected:
        recs, secs = _timed(lambda: enumerate_torsion_pairs(get_tables(spec), workers=workers))
        ok = len(recs) == value == formula and secs < 10
        out.append((f"count {spec}", ok, f"enumerated={len(recs)} expected={value}"))
    (a, b), secs = _timed(
        lambda: tuple(
            len(enumerate_torsion_pairs(get_tables(CategorySpec("A", 1, t)), workers=workers))
            for t in (2, 3)
        )
    )
    ok = a == b == T(2) == 6 and secs < 60
    out.append(("count A(1,2) = A(1,3) = T(2)", ok, f"{a} {b}"))
    for spec in GRID:
        n_enum = len(enumerate_torsion_pairs(get_tables(spec), workers=workers, with_wings=False))
        formula = count_torsion_pairs_formula(spec)
        out.append((f"formula {spec}", n_enum == formula, f"enumerated={n_enum} formula={formula}"))
    return out


def _pairs_match(tables: CategoryTables, listing, halves: set[int]) -> tuple[bool, str]:
    for xs, perp in listing:
        x = tables.parse_set(xs)
        if x not in halves:
            return False, f"{xs} is not an enumerated half"
        got = tables.shift(tables.right_perp(x), -1)
        want = tables.full if perp is None else tables.parse_set(perp)
        if got != want:
            return False, f"perp of {xs} is {tables.labels(got)}"
    return True, f"{len(listing)} listed halves"


def check_fixtures() -> list[Check]:
    out = []
    a22 = get_tables(CategorySpec("A", 2, 2))
    recs = enumerate_torsion_pairs(a22)
    halves = {r.x for r in recs}
    ok, detail = _pairs_match(a22, fixtures.A22_PAIRS, halves)
    rigid = {r.x for r in recs if r.x_all_rigid}
    listed = {a22.parse_set(xs) for xs, _ in fixtures.A22_PAIRS}
    ok = ok and rigid == listed
    out.append(("fixtures A(2,2)", ok, detail))

    d11 = get_tables(CategorySpec("D", 1, 1))
    halves = {r.x for r in enumerate_torsion_pairs(d11)}
    ok, detail = _pairs_match(d11, fixtures.D11_PAIRS, halves)
    listed = {d11.parse_set(xs) for xs, _ in fixtures.D11_PAIRS}
    # the listed halves together with both perps of each reach every torsion class
    both = listed | {d11.left_perp(x) for x in listed} | {d11.right_perp(x) for x in listed}
    out.append(("fixtures D(1,1)", ok and both == halves, detail))

    more = ((CategorySpec("A", 2, 1), fixtures.A21_PAIRS), (CategorySpec("D", 1, 2), fixtures.D12_PAIRS))
    for spec, listing in more:
        tables = get_tables(spec)
        halves = {r.x for r in enumerate_torsion_pairs(tables, with_wings=False)}
        ok, detail = _pairs_match(tables, listing, halves)
        out.append((f"fixtures {spec}", ok, detail))
    return out


def check_oracle(workers: int = 1) -> list[Check]:
    out = []
    for spec in GRID:
        tables = get_tables(spec)
        if tables.size > BRUTE_FORCE_MAX:
            continue
        fast = [r.x for r in enumerate_torsion_pairs(tables, workers=workers, with_wings=False)]
        slow = brute_force_halves(tables)
        out.append((f"oracle {spec}", fast == slow, f"{len(fast)} halves over {tables.size}"))
    return out


def _geometric_orbits(spec: CategorySpec) -> list[frozenset]:
    if spec.family == "A":
        universe = ga.all_diagonals(spec.ngon)
        step = lambda d: ga.rotate(d, spec.period)  # noqa: E731
    else:
        universe = gd.all_arcs(spec.u)
        step = lambda a: gd.F_d(a, spec.n)  # noqa: E731
    seen, orbits = set(), []
    for e in universe:
        if e in seen:
            continue
        orb = {e}
        cur = step(e)
        while cur != e:
            orb.add(cur)
            cur = step(cur)
        seen |= orb
        orbits.append(frozenset(orb))
    return orbits


def periodic_ptolemy_diagrams(spec: CategorySpec) -> set[frozenset]:
    """All periodic Ptolemy diagrams, by Ganter's next-closure over orbit atoms.

    Works on the polygon only: orbits are generated by the rotation (or ``F``)
    and closures by the geometric Ptolemy saturation.
    """
    orbits = _geometric_orbits(spec)
    k = len(orbits)
    owner = {e: i for i, orb in enumerate(orbits) for e in orb}
    if spec.family == "A":
        def close(atoms: int) -> int:
            base = ga.DiagonalSet(spec.ngon, frozenset(e for i in iter_bits(atoms) for e in orbits[i]))
            closed = ga.ptolemy_closure(base)
            return sum(1 << i for i in {owner[e] for e in closed.members})
    else:
        def close(atoms: int) -> int:
            base = gd.ArcSetD(spec.u, frozenset(e for i in iter_bits(atoms) for e in orbits[i]))
            closed = gd.ptolemy_closure_d(base)
            return sum(1 << i for i in {owner[e] for e in closed.members})

    def lift(atoms: int) -> frozenset:
        return frozenset(e for i in iter_bits(atoms) for e in orbits[i])

    # lectic order with atom 0 most significant; bit i is atom i
    found = []
    current = close(0)
    while True:
        found.append(current)
        for i in range(k - 1, -1, -1):
            bit = 1 << i
            if current & bit:
                continue
            prefix = current & (bit - 1)
            candidate = close(prefix | bit)
            if candidate & (bit - 1) == prefix:
                current = candidate
                break
        else:
            break
    return {lift(x) for x in found}


def check_bijection() -> list[Check]:
    out = []
    for spec in (CategorySpec("A", 2, 2), CategorySpec("D", 1, 2)):
        tables = get_tables(spec)
        halves = [r.x for r in enumerate_torsion_pairs(tables, with_wings=False)]
        lifted = {tables.lift(x).members for x in halves}
        geometric = periodic_ptolemy_diagrams(spec)
        out.append((f"bijection {spec}", lifted == geometric, f"{len(lifted)} diagrams"))
    return out


def check_properties() -> list[Check]:
    out = []
    for spec in GRID:
        tables = get_tables(spec)
        k = tables.size
        recs = enumerate_torsion_pairs(tables, with_wings=False)
        pairs = {(r.x, r.y) for r in recs}
        sym = all(tables.ext_matrix[a][b] == tables.ext_matrix[b][a] for a in range(k) for b in range(k))
        rot = all((y, tables.shift(x, 2)) in pairs for x, y in pairs)
        trivial = {(r.x, r.y) for r in check_t_structures(tables, recs)}
        triv_ok = trivial == {(0, tables.full), (tables.full, 0)}
        rigid = all(ind.rigid == (ind.level <= spec.n) for ind in tables.indecs)
        out.append(
            (
                f"properties {spec}",
                sym and rot and triv_ok and rigid,
                f"ext_sym={sym} cy2_rotation={rot} trivial_t={triv_ok} rigid_level={rigid}",
            )
        )
    return out


def check_counting() -> list[Check]:
    ok = all(s(m) == count_ptolemy(m) for m in range(4, 9))
    out = [("s(m) = count_ptolemy(m), 4 <= m <= 8", ok, "")]
    try:
        for n in range(1, 31):
            s(n + 2)
            t_n1(n)
            T(n + 1)
        out.append(("divisibility n <= 30", True, ""))
    except AssertionError as exc:
        out.append(("divisibility n <= 30", False, str(exc)))
    return out


def check_wings() -> list[Check]:
    tables = get_tables(CategorySpec("A", 2, 2))
    recs = enumerate_torsion_pairs(tables)
    by_x = {r.x: r for r in recs}
    ok = True
    detail = ""
    for (xs, _), expected in zip(fixtures.A22_PAIRS, fixtures.A22_WINGS):
        x = tables.parse_set(xs)
        got = [(w.apex, w.members) for w in wing_decomposition(tables, x)]
        want = [(tables.id_of(tables.element(a)), tables.parse_set(m)) for a, m in expected]
        if sorted(got) != sorted(want) or by_x[x].wings is None:
            ok, detail = False, f"mismatch at {xs}"
            break
    ok = ok and all(r.wings is not None for r in recs if r.x_all_rigid)
    return [("wings A(2,2)", ok, detail)]


def run_all(workers: int = 1) -> list[Check]:
    checks: list[Check] = []
    for part in (
        check_counts(workers),
        check_fixtures(),
        check_oracle(workers),
        check_bijection(),
        check_properties(),
        check_counting(),
        check_wings(),
    ):
        checks.extend(part)
    return checks


def format_table(checks: Iterable[Check]) -> str:
    lines = []
    for name, ok, detail in checks:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name:<40} {detail}".rstrip())
    return "\n".join(lines)
