"""Diagonals of a convex N-gon and the type-A Ptolemy condition.

Vertices are labelled ``1..N`` clockwise.  One application of the
Auslander-Reiten translation moves every vertex one step counterclockwise,
so ``rotate((i, j), 1, N) == (i - 1, j - 1)`` (mod N).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class GeometryError(ValueError):
    """Raised for invalid diagonals, polygons or periodicity parameters."""


def _wrap(v: int, m: int) -> int:
    return (v - 1) % m + 1


def between(x: int, a: int, b: int, m: int) -> bool:
    """True if vertex ``x`` lies strictly inside the clockwise run from ``a`` to ``b``."""
    return 0 < (x - a) % m < (b - a) % m


def interleave(a1: int, a2: int, b1: int, b2: int, m: int) -> bool:
    """Endpoints ``{a1, a2}`` and ``{b1, b2}`` alternate around an m-gon."""
    if len({a1 % m, a2 % m, b1 % m, b2 % m}) < 4:
        return False
    return between(b1, a1, a2, m) != between(b2, a1, a2, m)


def is_edge_or_point(a: int, b: int, m: int) -> bool:
    d = (a - b) % m
    return d in (0, 1, m - 1)


@dataclass(frozen=True, order=True)
class Diagonal:
    """A diagonal ``{i, j}`` of an N-gon, stored with ``1 <= i < j <= N``."""

    i: int
    j: int
    ngon: int

    def __post_init__(self) -> None:
        if self.ngon < 4:
            raise GeometryError(f"polygon with {self.ngon} vertices has no diagonals")
        if not (1 <= self.i < self.j <= self.ngon):
            raise GeometryError(f"non-canonical diagonal {(self.i, self.j)}; use Diagonal.of")
        if is_edge_or_point(self.i, self.j, self.ngon):
            raise GeometryError(
                f"({self.i},{self.j}) joins neighbouring vertices of the {self.ngon}-gon"
            )

    @classmethod
    def of(cls, a: int, b: int, ngon: int) -> "Diagonal":
        a, b = _wrap(a, ngon), _wrap(b, ngon)
        if a > b:
            a, b = b, a
        return cls(a, b, ngon)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.i, self.j)

    def short_form(self) -> tuple[int, int]:
        """``(s, s + L)`` with ``L`` the shorter boundary distance between the endpoints."""
        d = self.j - self.i
        if d <= self.ngon - d:
            return (self.i, self.j)
        return (self.j, self.i + self.ngon)

    @property
    def length(self) -> int:
        d = self.j - self.i
        return min(d, self.ngon - d)

    def to_json(self) -> list[int]:
        return [self.i, self.j]

    def __repr__(self) -> str:
        return f"({self.i},{self.j})"


def cross(a: Diagonal, b: Diagonal, ngon: int | None = None) -> bool:
    m = ngon or a.ngon
    if a.ngon != m or b.ngon != m:
        raise GeometryError("diagonals belong to different polygons")
    return interleave(a.i, a.j, b.i, b.j, m)


def rotate(a: Diagonal, k: int, ngon: int | None = None) -> Diagonal:
    """Apply the translation ``k`` times (negative ``k`` rotates clockwise)."""
    m = ngon or a.ngon
    return Diagonal.of(a.i - k, a.j - k, m)


def all_diagonals(ngon: int) -> list[Diagonal]:
    if ngon < 4:
        raise GeometryError(f"polygon with {ngon} vertices has no diagonals")
    return [
        Diagonal(i, j, ngon)
        for i in range(1, ngon + 1)
        for j in range(i + 2, ngon + 1)
        if not (i == 1 and j == ngon)
    ]


@dataclass(frozen=True)
class DiagonalSet:
    ngon: int
    members: frozenset[Diagonal]

    def __post_init__(self) -> None:
        if self.ngon < 4:
            raise GeometryError(f"polygon with {self.ngon} vertices has no diagonals")
        for d in self.members:
            if d.ngon != self.ngon:
                raise GeometryError(f"{d!r} is not a diagonal of the {self.ngon}-gon")

    @classmethod
    def of(cls, ngon: int, pairs: Iterable[tuple[int, int] | Diagonal] = ()) -> "DiagonalSet":
        members = []
        for p in pairs:
            members.append(p if isinstance(p, Diagonal) else Diagonal.of(p[0], p[1], ngon))
        return cls(ngon, frozenset(members))

    def __iter__(self) -> Iterator[Diagonal]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, d: object) -> bool:
        return d in self.members

    def __or__(self, other: "DiagonalSet") -> "DiagonalSet":
        return DiagonalSet(self.ngon, self.members | other.members)

    def __le__(self, other: "DiagonalSet") -> bool:
        return self.members <= other.members

    def rotated(self, k: int) -> "DiagonalSet":
        return DiagonalSet(self.ngon, frozenset(rotate(d, k) for d in self.members))

    def to_json(self) -> dict:
        return {"ngon": self.ngon, "diagonals": [d.to_json() for d in sorted(self.members)]}

    @classmethod
    def from_json(cls, data: dict) -> "DiagonalSet":
        return cls.of(data["ngon"], [tuple(p) for p in data["diagonals"]])


def ptolemy_consequences(a: Diagonal, b: Diagonal) -> list[Diagonal]:
    """Diagonals joining an endpoint of ``a`` to an endpoint of ``b``.

    Only meaningful when ``a`` and ``b`` cross; sides of the polygon are skipped.
    """
    m = a.ngon
    out = []
    for x in a.endpoints:
        for y in b.endpoints:
            if not is_edge_or_point(x, y, m):
                out.append(Diagonal.of(x, y, m))
    return out


def is_ptolemy(u: DiagonalSet) -> bool:
    members = u.members
    for a, b in combinations(members, 2):
        if cross(a, b) and not all(c in members for c in ptolemy_consequences(a, b)):
            return False
    return True


def ptolemy_closure(u: DiagonalSet) -> DiagonalSet:
    """Smallest Ptolemy diagram containing ``u`` (worklist saturation)."""
    closed: set[Diagonal] = set()
    pending = list(u.members)
    while pending:
        d = pending.pop()
        if d in closed:
            continue
        for e in list(closed):
            if cross(d, e):
                for c in ptolemy_consequences(d, e):
                    if c not in closed:
                        pending.append(c)
        closed.add(d)
    return DiagonalSet(u.ngon, frozenset(closed))


def is_k_periodic(u: DiagonalSet, k: int) -> bool:
    if k <= 0 or u.ngon % k:
        raise GeometryError(f"period {k} does not divide {u.ngon}")
    return u.rotated(k).members == u.members
