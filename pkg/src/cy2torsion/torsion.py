"""Torsion pairs ``(X, X^perp)`` in a built orbit category.

Two independent enumeration routes are provided:

* :func:`enumerate_torsion_pairs` walks the closed sets of the periodic
  Ptolemy closure with close-by-one canonical augmentation and keeps the
  ones satisfying ``X == left_perp(right_perp(X))``;
* :func:`brute_force_halves` tests that identity on every subset.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from . import geometry_a as ga
from . import geometry_d as gd
from .category import (
    CategoryError,
    CategorySpec,
    CategoryTables,
    UnsupportedOperation,
    get_tables,
    iter_bits,
    popcount,
)
from .geometry_d import Diameter

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 24


class WingError(CategoryError):
    pass


@dataclass(frozen=True)
class Wing:
    apex: int
    members: int
    wing: int


@dataclass
class TorsionPairRecord:
    x: int
    y: int
    core: int
    is_t_structure: bool
    x_all_rigid: bool
    y_all_rigid: bool
    d_case: str | None = None
    wings: list[Wing] | None = None
    heart: dict | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        out = {
            "x": list(iter_bits(self.x)),
            "y": list(iter_bits(self.y)),
            "core": list(iter_bits(self.core)),
            "t_structure": self.is_t_structure,
            "x_all_rigid": self.x_all_rigid,
            "y_all_rigid": self.y_all_rigid,
            "wings": None
            if self.wings is None
            else [{"apex": w.apex, "members": list(iter_bits(w.members))} for w in self.wings],
        }
        if self.d_case is not None:
            out["d_case"] = self.d_case
        if self.heart is not None:
            out["heart"] = self.heart
        return out

    @classmethod
    def from_json(cls, data: dict, tables: CategoryTables) -> "TorsionPairRecord":
        wings = data.get("wings")
        if wings is not None:
            wings = [
                Wing(w["apex"], tables.mask(w["members"]), wing_of(tables, w["apex"]))
                for w in wings
            ]
        return cls(
            x=tables.mask(data["x"]),
            y=tables.mask(data["y"]),
            core=tables.mask(data["core"]),
            is_t_structure=data["t_structure"],
            x_all_rigid=data["x_all_rigid"],
            y_all_rigid=data["y_all_rigid"],
            d_case=data.get("d_case"),
            wings=wings,
            heart=data.get("heart"),
        )


# -- closure on orbit classes ---------------------------------------------


def _implication_table(tables: CategoryTables) -> list[list[int]]:
    """``imp[a][b]``: orbit classes forced by the crossings of ``rep(a)`` with lifts of ``b``."""
    spec = tables.spec
    k = tables.size
    imp = [[0] * k for _ in range(k)]
    for a in range(k):
        rep = tables.indecs[a].rep
        for b in range(k):
            forced = 0
            for other in tables.orbits[b]:
                if spec.family == "A":
                    if ga.cross(rep, other):
                        for c in ga.ptolemy_consequences(rep, other):
                            forced |= 1 << tables.id_of(c)
                elif gd.cross_d(rep, other):
                    for c in gd.ptolemy_consequences_d(rep, other):
                        forced |= 1 << tables.id_of(c)
            imp[a][b] = forced
    return imp


class OrbitClosure:
    """Periodic Ptolemy closure computed directly on orbit bitmasks."""

    def __init__(self, tables: CategoryTables):
        self.tables = tables
        imp = _implication_table(tables)
        # sparse rows: only partners that actually force something
        self._partners = [
            [(1 << b, imp[a][b]) for b in range(tables.size) if imp[a][b]]
            for a in range(tables.size)
        ]

    def __call__(self, x: int) -> int:
        closed = 0
        pending = x
        while pending:
            low = pending & -pending
            pending ^= low
            if closed & low:
                continue
            a = low.bit_length() - 1
            closed |= low
            for bit, forced in self._partners[a]:
                if closed & bit:
                    pending |= forced & ~closed
        return closed


# -- recognition ------------------------------------------------------------


def is_torsion_half(tables: CategoryTables, x: int) -> bool:
    return tables.left_perp(tables.right_perp(x)) == x


def _all_rigid(tables: CategoryTables, x: int) -> bool:
    return x & ~tables.rigid_mask == 0


def make_record(tables: CategoryTables, x: int, with_wings: bool = True) -> TorsionPairRecord:
    y = tables.right_perp(x)
    core = x & tables.shift(y, -1)
    x_rigid = _all_rigid(tables, x)
    rec = TorsionPairRecord(
        x=x,
        y=y,
        core=core,
        is_t_structure=core == 0,
        x_all_rigid=x_rigid,
        y_all_rigid=_all_rigid(tables, y),
    )
    if tables.spec.family == "D" and tables.spec.t == 1:
        rec.d_case = classify_d1(tables, rec)
    if with_wings and x_rigid:
        rec.wings = wing_decomposition(tables, x)
    return rec


# -- enumeration --------------------------------------------------------------


def _cbo(closure: OrbitClosure, start: int, start_from: int, size: int, out: list[int]) -> None:
    """Close-by-one from closed set ``start``; only adds attributes ``>= start_from``."""
    stack = [(start, start_from)]
    while stack:
        closed, first = stack.pop()
        out.append(closed)
        for j in range(first, size):
            bit = 1 << j
            if closed & bit:
                continue
            nxt = closure(closed | bit)
            prefix = bit - 1
            if nxt & prefix == closed & prefix:
                stack.append((nxt, j + 1))


def _branch(spec: CategorySpec, j: int) -> list[int]:
    tables = get_tables(spec)
    closure = OrbitClosure(tables)
    root = closure(0)
    bit = 1 << j
    if root & bit:
        return []
    nxt = closure(root | bit)
    if nxt & (bit - 1) != root & (bit - 1):
        return []
    out: list[int] = []
    _cbo(closure, nxt, j + 1, tables.size, out)
    return out


def ptolemy_closed_sets(tables: CategoryTables, workers: int = 1) -> list[int]:
    """All orbit sets whose lift is a periodic Ptolemy diagram, sorted."""
    closure = OrbitClosure(tables)
    root = closure(0)
    found = [root]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            branches = pool.map(_branch, [tables.spec] * tables.size, range(tables.size))
            for part in branches:
                found.extend(part)
    else:
        for j in range(tables.size):
            bit = 1 << j
            if root & bit:
                continue
            nxt = closure(root | bit)
            if nxt & (bit - 1) == root & (bit - 1):
                _cbo(closure, nxt, j + 1, tables.size, found)
    if len(set(found)) != len(found):
        raise AssertionError("canonical augmentation produced a duplicate closed set")
    return sorted(found)


def enumerate_torsion_pairs(
    tables: CategoryTables, workers: int = 1, with_wings: bool = True
) -> list[TorsionPairRecord]:
    halves = []
    for x in ptolemy_closed_sets(tables, workers=workers):
        if is_torsion_half(tables, x):
            halves.append(x)
        else:
            logger.warning("%s: Ptolemy-closed set %s is not a torsion half", tables.spec, x)
    return [make_record(tables, x, with_wings) for x in halves]


def _chunk_tables(rows: list[int], size: int, width: int = 8) -> list[list[int]]:
    """OR-lookup per ``width``-bit chunk of a subset mask."""
    out = []
    for start in range(0, size, width):
        span = min(width, size - start)
        table = [0] * (1 << span)
        for v in range(1, 1 << span):
            low = v & -v
            table[v] = table[v ^ low] | rows[start + low.bit_length() - 1]
        out.append(table)
    return out


def brute_force_halves(tables: CategoryTables) -> list[int]:
    """Every ``x`` with ``x == left_perp(right_perp(x))``, by exhaustive search."""
    k = tables.size
    if k > BRUTE_FORCE_LIMIT:
        raise UnsupportedOperation(f"2^{k} subsets is beyond the brute-force limit")
    full = tables.full
    rows = _chunk_tables(tables.hom_rows, k)
    cols = _chunk_tables(tables.hom_cols, k)
    width = 8
    mask = (1 << width) - 1
    halves = []
    for x in range(1 << k):
        hit = 0
        v = x
        for table in rows:
            hit |= table[v & mask]
            v >>= width
        y = full & ~hit
        hit = 0
        v = y
        for table in cols:
            hit |= table[v & mask]
            v >>= width
        if full & ~hit == x:
            halves.append(x)
    return halves


def enumerate_brute_force(tables: CategoryTables, with_wings: bool = True) -> list[TorsionPairRecord]:
    return [make_record(tables, x, with_wings) for x in brute_force_halves(tables)]


def check_t_structures(tables: CategoryTables, records: Iterable[TorsionPairRecord] | None = None):
    if records is None:
        records = enumerate_torsion_pairs(tables, with_wings=False)
    return [r for r in records if r.is_t_structure]


# -- wings --------------------------------------------------------------------


def _intervals(tables: CategoryTables, ident: int) -> list[tuple[int, int]]:
    """Short-side intervals ``(s, s + L)`` of every lift of ``ident``."""
    out = []
    for e in tables.orbits[ident]:
        if isinstance(e, Diameter):
            raise WingError(f"{tables.indecs[ident].label} is a diameter and has no wing")
        out.extend(e.short_forms() if isinstance(e, gd.ArcPair) else [e.short_form()])
    return out


def _contains(outer: tuple[int, int], inner: tuple[int, int], m: int) -> bool:
    s, e = outer
    a, b = inner
    off = (a - s) % m
    return off + (b - a) <= e - s


def wing_of(tables: CategoryTables, apex: int) -> int:
    """All orbit classes overarched by the representative of ``apex``."""
    m = tables.spec.ngon
    outer = _intervals(tables, apex)[0]
    if outer[1] - outer[0] >= m // 2:
        raise WingError(f"{tables.indecs[apex].label} is too long to carry a wing")
    wing = 0
    for ind in tables.indecs:
        if ind.is_diameter or ind.length > outer[1] - outer[0]:
            continue
        if any(_contains(outer, iv, m) for iv in _intervals(tables, ind.id)):
            wing |= 1 << ind.id
    return wing


def wing_decomposition(tables: CategoryTables, x: int) -> list[Wing]:
    """Split a rigid torsion half into apexes and the parts of their wings it meets.

    Apexes are the members whose lifts are not overarched by a longer lift of
    another member.  The separation condition ``W[a][1] & W[b] == 0`` is checked
    for every ordered pair of distinct apexes.
    """
    for i in iter_bits(x):
        if not tables.indecs[i].rigid:
            raise WingError(f"{tables.indecs[i].label} is not rigid; no wing decomposition")
    m = tables.spec.ngon
    lifted = [(iv, i) for i in iter_bits(x) for iv in _intervals(tables, i)]
    top = []
    for iv, i in lifted:
        covered = [
            j for jv, j in lifted if jv != iv and (jv[1] - jv[0]) > (iv[1] - iv[0])
            and _contains(jv, iv, m)
        ]
        if not covered:
            top.append((iv, i))
    apexes = sorted({i for _, i in top})
    wings = []
    for a in apexes:
        outers = [iv for iv, i in top if i == a]
        members = 0
        for iv, i in lifted:
            if _contains(outers[0], iv, m):
                members |= 1 << i
        wings.append(Wing(a, members, wing_of(tables, a)))
    union = 0
    for w in wings:
        if union & w.members:
            raise WingError(f"wings overlap inside {tables.labels(x)}")
        union |= w.members
    if union != x:
        raise WingError(f"wings do not cover {tables.labels(x)}")
    for w in wings:
        for v in wings:
            if w is not v and tables.shift(w.wing, 1) & v.wing:
                raise WingError(
                    f"apexes {tables.indecs[w.apex].label} and {tables.indecs[v.apex].label}"
                    " violate wing separation"
                )
    return wings


# -- type D with t = 1 --------------------------------------------------------

PAIRED_IN_X = "paired_diameter_in_x"
PAIRED_IN_Y = "paired_diameter_in_y"
SPLIT = "split_diameters"


def _diameter_profile(tables: CategoryTables, x: int) -> tuple[bool, int]:
    """(contains both colours of one diameter, number of diameter classes)."""
    diams = [tables.indecs[i].rep for i in iter_bits(x) if tables.indecs[i].is_diameter]
    spots = {}
    for d in diams:
        spots.setdefault(d.i, set()).add(d.color)
    return any(len(c) == 2 for c in spots.values()), len(diams)


def classify_d1(tables: CategoryTables, rec: TorsionPairRecord) -> str:
    spec = tables.spec
    if spec.family != "D" or spec.t != 1:
        raise UnsupportedOperation(f"classify_d1 needs family D with t = 1, got {spec}")
    x_paired, x_diams = _diameter_profile(tables, rec.x)
    y_paired, y_diams = _diameter_profile(tables, rec.y)
    if x_paired and _all_rigid(tables, rec.y):
        case = PAIRED_IN_X
    elif y_paired and _all_rigid(tables, rec.x):
        case = PAIRED_IN_Y
    elif (
        x_diams == 1
        and y_diams == 1
        and popcount(rec.x & ~tables.rigid_mask) == 1
        and popcount(rec.y & ~tables.rigid_mask) == 1
    ):
        case = SPLIT
    else:
        raise CategoryError(
            f"torsion pair {tables.labels(rec.x)} | {tables.labels(rec.y)} fits neither case"
        )
    return case
