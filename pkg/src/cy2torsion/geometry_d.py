"""Type-D arc model on a regular 2u-gon.

Non-diameter arcs come in 180-degree pairs and are stored once per pair
(:class:`ArcPair`).  Diameters exist in two colours, green and red
(:class:`Diameter`).  The translation rotates everything one vertex
counterclockwise and additionally swaps the colour of diameters; ``phi``
only swaps colours.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Union

from .geometry_a import GeometryError, interleave, is_edge_or_point

GREEN = "g"
RED = "r"
_OTHER = {GREEN: RED, RED: GREEN}


def _wrap(v: int, m: int) -> int:
    return (v - 1) % m + 1


@dataclass(frozen=True, order=True)
class ArcPair:
    """The pair ``{i, j}``, ``{i + u, j + u}`` of non-diameter arcs.

    Stored as the lexicographically smallest of the two sorted arcs.
    """

    i: int
    j: int
    u: int

    @classmethod
    def of(cls, a: int, b: int, u: int) -> "ArcPair":
        m = 2 * u
        if u < 2:
            raise GeometryError(f"2u-gon needs u >= 2, got u={u}")
        a, b = _wrap(a, m), _wrap(b, m)
        if is_edge_or_point(a, b, m):
            raise GeometryError(f"({a},{b}) joins neighbouring vertices of the {m}-gon")
        if (a - b) % m == u:
            raise GeometryError(f"({a},{b}) is a diameter; give it a colour")
        first = tuple(sorted((a, b)))
        second = tuple(sorted((_wrap(a + u, m), _wrap(b + u, m))))
        i, j = min(first, second)
        return cls(i, j, u)

    @property
    def arcs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        m = 2 * self.u
        return ((self.i, self.j), (_wrap(self.i + self.u, m), _wrap(self.j + self.u, m)))

    @property
    def length(self) -> int:
        d = (self.j - self.i) % (2 * self.u)
        return min(d, 2 * self.u - d)

    def short_forms(self) -> list[tuple[int, int]]:
        """Both arcs as ``(s, s + L)`` with ``L`` the short boundary distance."""
        m, out = 2 * self.u, []
        for a, b in self.arcs:
            if (b - a) % m == self.length:
                out.append((a, a + self.length))
            else:
                out.append((b, b + self.length))
        return out

    def to_json(self) -> dict:
        return {"pair": [self.i, self.j]}

    def __repr__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class Diameter:
    """The diameter ``{i, i + u}`` in one of two colours; ``1 <= i <= u``."""

    i: int
    color: str
    u: int

    @classmethod
    def of(cls, i: int, color: str, u: int) -> "Diameter":
        if color not in (GREEN, RED):
            raise GeometryError(f"unknown diameter colour {color!r}")
        return cls((i - 1) % u + 1, color, u)

    @property
    def arcs(self) -> tuple[tuple[int, int]]:
        return ((self.i, self.i + self.u),)

    @property
    def length(self) -> int:
        return self.u

    def to_json(self) -> dict:
        return {"diam": self.i, "color": self.color}

    def __repr__(self) -> str:
        return f"({self.i},{self.i + self.u}){self.color}"


ArcD = Union[ArcPair, Diameter]


def arc_from_json(data: object, u: int) -> ArcD:
    if isinstance(data, dict) and "pair" in data:
        a, b = data["pair"]
        return ArcPair.of(a, b, u)
    if isinstance(data, dict) and "diam" in data:
        return Diameter.of(data["diam"], data.get("color", ""), u)
    if isinstance(data, (list, tuple)) and len(data) == 2:
        return ArcPair.of(data[0], data[1], u)
    raise GeometryError(f"cannot read type-D arc from {data!r}")


def _sort_key(a: ArcD) -> tuple:
    if isinstance(a, ArcPair):
        return (0, a.i, a.j, "")
    return (1, a.i, a.i + a.u, a.color)


def all_arcs(u: int) -> list[ArcD]:
    m = 2 * u
    pairs = {
        ArcPair.of(a, b, u)
        for a in range(1, m + 1)
        for b in range(a + 2, m + 1)
        if not is_edge_or_point(a, b, m) and b - a != u
    }
    diams = [Diameter(i, c, u) for i in range(1, u + 1) for c in (GREEN, RED)]
    return sorted(pairs, key=_sort_key) + diams


def cross_d(a: ArcD, b: ArcD) -> bool:
    if a.u != b.u:
        raise GeometryError(f"arcs live on different polygons (u={a.u} vs u={b.u})")
    m = 2 * a.u
    if isinstance(a, Diameter) and isinstance(b, Diameter):
        return a.color != b.color and a.i != b.i
    return any(interleave(p, q, r, s, m) for p, q in a.arcs for r, s in b.arcs)


def tau_d(a: ArcD, k: int = 1) -> ArcD:
    """Apply the translation ``k`` times."""
    if isinstance(a, ArcPair):
        return ArcPair.of(a.i - k, a.j - k, a.u)
    color = a.color if k % 2 == 0 else _OTHER[a.color]
    return Diameter.of(a.i - k, color, a.u)


def phi_d(a: ArcD) -> ArcD:
    if isinstance(a, ArcPair):
        return a
    return Diameter(a.i, _OTHER[a.color], a.u)


def F_d(a: ArcD, n: int, r: int = 1) -> ArcD:
    """Apply ``F**r`` where ``F = tau**(n+1) phi**n``.

    Colour flips ``r * (2n + 1)`` times, i.e. exactly when ``r`` is odd.
    """
    b = tau_d(a, r * (n + 1))
    if (r * n) % 2:
        b = phi_d(b)
    return b


def ptolemy_consequences_d(a: ArcD, b: ArcD) -> set[ArcD]:
    """Arcs forced into a type-D Ptolemy diagram by the crossing of ``a`` and ``b``."""
    u = a.u
    m = 2 * u
    out: set[ArcD] = set()

    def add_arc(x: int, y: int) -> None:
        if is_edge_or_point(x, y, m):
            return
        if (x - y) % m == u:
            out.add(Diameter.of(x, GREEN, u))
            out.add(Diameter.of(x, RED, u))
        else:
            out.add(ArcPair.of(x, y, u))

    if isinstance(a, Diameter) and isinstance(b, Diameter):
        if not cross_d(a, b):
            return out
        i, k = a.i, b.i
        for x in (i, i + u):
            for y in (k, k + u):
                add_arc(x, y)
        return out

    if isinstance(b, Diameter):
        a, b = b, a
    if isinstance(a, Diameter):
        i, j = a.arcs[0]
        for k, l in b.arcs:
            if not interleave(i, j, k, l, m):
                continue
            kk, ll = k + u, l + u
            for x in (i, j):
                for y in (k, l):
                    if is_edge_or_point(x, y, m) or interleave(x, y, kk, ll, m):
                        continue
                    add_arc(x, y)
            out.add(Diameter.of(k, a.color, u))
            out.add(Diameter.of(l, a.color, u))
        return out

    for i, j in a.arcs:
        for k, l in b.arcs:
            if interleave(i, j, k, l, m):
                for x in (i, j):
                    for y in (k, l):
                        add_arc(x, y)
    return out


@dataclass(frozen=True)
class ArcSetD:
    u: int
    members: frozenset

    def __post_init__(self) -> None:
        for a in self.members:
            if a.u != self.u:
                raise GeometryError(f"{a!r} does not belong to the {2 * self.u}-gon")

    @classmethod
    def of(cls, u: int, arcs: Iterable[ArcD] = ()) -> "ArcSetD":
        return cls(u, frozenset(arcs))

    def __iter__(self) -> Iterator[ArcD]:
        return iter(sorted(self.members, key=_sort_key))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __le__(self, other: "ArcSetD") -> bool:
        return self.members <= other.members

    def __or__(self, other: "ArcSetD") -> "ArcSetD":
        return ArcSetD(self.u, self.members | other.members)

    def has_diameters(self) -> bool:
        return any(isinstance(a, Diameter) for a in self.members)

    def to_json(self) -> dict:
        return {"u": self.u, "arcs": [a.to_json() for a in self]}

    @classmethod
    def from_json(cls, data: dict) -> "ArcSetD":
        return cls.of(data["u"], [arc_from_json(a, data["u"]) for a in data["arcs"]])


def is_ptolemy_d(s: ArcSetD) -> bool:
    members = s.members
    for a, b in combinations(members, 2):
        if cross_d(a, b) and not ptolemy_consequences_d(a, b) <= members:
            return False
    return True


def ptolemy_closure_d(s: ArcSetD) -> ArcSetD:
    closed: set = set()
    pending = list(s.members)
    while pending:
        a = pending.pop()
        if a in closed:
            continue
        for b in list(closed):
            if cross_d(a, b):
                pending.extend(ptolemy_consequences_d(a, b) - closed)
        closed.add(a)
    return ArcSetD(s.u, frozenset(closed))


def check_F_ambient(u: int, n: int, t: int) -> None:
    if u != 2 * t * (n + 1):
        raise GeometryError(f"u={u} does not match 2t(n+1) for n={n}, t={t}")


def is_F_periodic(s: ArcSetD, n: int, t: int) -> bool:
    check_F_ambient(s.u, n, t)
    return {F_d(a, n) for a in s.members} == s.members
