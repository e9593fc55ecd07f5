"""Closed-form torsion pair counts and an exhaustive Ptolemy diagram counter."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .category import CategorySpec, UnsupportedOperation
from .geometry_a import all_diagonals, cross, ptolemy_consequences


class CountError(ValueError):
    pass


def T(m: int) -> int:
    """Torsion pairs in the cluster tube of rank ``m``."""
    if m < 2:
        raise CountError(f"T(m) needs m >= 2, got {m}")
    n = m - 1
    return sum(
        2 ** (l + 1) * comb(n + l, l) * comb(2 * n + 1, n - 2 * l) for l in range(n // 2 + 1)
    )


def s(m: int) -> int:
    """Ptolemy diagrams of the m-gon."""
    if m < 3:
        raise CountError(f"s(m) needs m >= 3, got {m}")
    n = m - 2
    total = sum(2**l * comb(n + l, l) * comb(2 * n, n - 2 * l) for l in range(n // 2 + 1))
    q, r = divmod(total, n + 1)
    assert r == 0, f"sum for s({m}) = {total} is not divisible by {n + 1}"
    return q


def t_n1(n: int) -> int:
    if n < 1:
        raise CountError(f"t_n1 needs n >= 1, got {n}")
    return (n + 1) * s(n + 2)


def count_torsion_pairs_formula(spec: CategorySpec) -> int:
    base = T(spec.n + 1)
    if spec.family == "A":
        return base - t_n1(spec.n) if spec.t == 1 else base
    if spec.family == "D":
        return base + 2 * t_n1(spec.n) if spec.t == 1 else base
    raise UnsupportedOperation(f"no count formula for family {spec.family!r}")


def count_ptolemy(m: int) -> int:
    """Count Ptolemy diagrams of the m-gon by include/exclude search.

    Each diagonal is decided in turn.  A branch dies as soon as a crossing
    pair of included diagonals forces one that was already excluded.
    """
    if not 3 <= m <= 12:
        raise CountError(f"count_ptolemy is limited to 3 <= m <= 12, got {m}")
    if m == 3:
        return 1
    diags = all_diagonals(m)
    index = {d: k for k, d in enumerate(diags)}
    size = len(diags)
    forced = [[0] * size for _ in range(size)]
    for a, da in enumerate(diags):
        for b, db in enumerate(diags):
            if a != b and cross(da, db):
                for c in ptolemy_consequences(da, db):
                    forced[a][b] |= 1 << index[c]

    def walk(k: int, included: int, excluded: int, required: int) -> int:
        if k == size:
            return 1
        bit = 1 << k
        total = 0
        if not required & bit:
            total += walk(k + 1, included, excluded | bit, required)
        need = required
        for b in range(k):
            if included >> b & 1:
                need |= forced[k][b]
        if not need & excluded:
            total += walk(k + 1, included | bit, excluded, need)
        return total

    return walk(0, 0, 0, 0)


@dataclass
class CountReport:
    spec: CategorySpec
    formula_value: int
    enumerated_value: int | None = None

    @property
    def agree(self) -> bool | None:
        if self.enumerated_value is None:
            return None
        return self.formula_value == self.enumerated_value

    def to_json(self) -> dict:
        return {
            "formula": self.formula_value,
            "enumerated": self.enumerated_value,
            "agree": self.agree,
        }


def count_report(spec: CategorySpec, verify: bool = False, workers: int = 1) -> CountReport:
    report = CountReport(spec, count_torsion_pairs_formula(spec))
    if verify:
        from .category import get_tables
        from .torsion import ptolemy_closed_sets, is_torsion_half

        tables = get_tables(spec)
        closed = ptolemy_closed_sets(tables, workers=workers)
        report.enumerated_value = sum(1 for x in closed if is_torsion_half(tables, x))
    return report
