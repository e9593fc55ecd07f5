"""Finite orbit categories as tables of indecomposables.

Family ``A`` with parameters ``(n, t)`` is the quotient of the cluster category
of the ``N``-gon, ``N = (2t+1)(n+1)``, by rotation through ``n+1`` vertices.
Family ``D`` is the quotient of the type-D model on the ``2u``-gon,
``u = 2t(n+1)``, by ``F = tau**(n+1) phi**n``.

Subcategories are plain ``int`` bitmasks over the indecomposables of one
table; bit ``k`` stands for ``tables.indecs[k]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

from . import geometry_a as ga
from . import geometry_d as gd
from .geometry_a import Diagonal, DiagonalSet
from .geometry_d import ArcPair, ArcSetD, Diameter

Rep = Union[Diagonal, ArcPair, Diameter]


class CategoryError(ValueError):
    pass


class UnsupportedOperation(CategoryError):
    pass


class NotPeriodicError(CategoryError):
    def __init__(self, element: object, image: object):
        super().__init__(f"{element!r} is in the set but its periodic image {image!r} is not")
        self.element = element
        self.image = image


@dataclass(frozen=True)
class CategorySpec:
    family: str
    n: int
    t: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D"):
            raise UnsupportedOperation(f"family {self.family!r} has no polygon model")
        if self.n < 1 or self.t < 1:
            raise CategoryError(f"need n >= 1 and t >= 1, got n={self.n}, t={self.t}")

    @property
    def period(self) -> int:
        return self.n + 1

    @property
    def ngon(self) -> int:
        """Number of polygon vertices of the covering model."""
        if self.family == "A":
            return (2 * self.t + 1) * (self.n + 1)
        return 2 * self.u

    @property
    def u(self) -> int:
        if self.family != "D":
            raise UnsupportedOperation("u is only defined for family D")
        return 2 * self.t * (self.n + 1)

    @property
    def group_order(self) -> int:
        return 2 * self.t + 1 if self.family == "A" else 2 * self.t

    @property
    def key(self) -> str:
        return f"{self.family}{self.n}_{self.t}"

    def __str__(self) -> str:
        return f"{self.family}({self.n},{self.t})"


@dataclass(frozen=True)
class Indec:
    """One indecomposable: an orbit, named by its representative ``rep``.

    ``coord`` is the AR-quiver coordinate ``(i, j)`` of the representative with
    ``1 <= i <= n+1``; diameters carry their colour in ``label``.
    """

    id: int
    rep: Rep
    coord: tuple[int, int]
    level: int
    length: int
    rigid: bool

    @property
    def label(self) -> str:
        i, j = self.coord
        suffix = self.rep.color if isinstance(self.rep, Diameter) else ""
        return f"({i},{j}){suffix}"

    @property
    def is_diameter(self) -> bool:
        return isinstance(self.rep, Diameter)


def _forms(d: Rep) -> list[tuple[int, int]]:
    if isinstance(d, ArcPair):
        return d.short_forms()
    return [d.arcs[0]] if isinstance(d, Diameter) else [(d.i, d.j)]


def _coord_key(d: Rep, period: int) -> tuple | None:
    """Smallest ``(j, i, colour)`` over the forms of ``d`` starting in ``1..period``."""
    color = d.color if isinstance(d, Diameter) else ""
    keys = [(j, i, color) for i, j in _forms(d) if i <= period]
    return min(keys) if keys else None


def _rep_key(d: Rep) -> tuple:
    if isinstance(d, Diameter):
        return (d.i + d.u, d.i, d.color)
    return (d.j, d.i, "")


@dataclass
class CategoryTables:
    """Indecomposables of one orbit category with Ext/Hom tables.

    ``ext_matrix[a][b]`` is true when some lift of ``b`` crosses the
    representative of ``a``; ``hom_matrix[a][b] == ext_matrix[a][b[-1]]``.
    ``shift_perm[a]`` is the id of ``a[1]``.
    """

    spec: CategorySpec
    indecs: list[Indec]
    orbits: list[tuple[Rep, ...]]
    ext_matrix: list[list[bool]]
    hom_matrix: list[list[bool]]
    hom_dims: list[list[int]] | None
    shift_perm: list[int]
    _index: dict = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.indecs)

    @property
    def size(self) -> int:
        return len(self.indecs)

    @cached_property
    def full(self) -> int:
        return (1 << len(self.indecs)) - 1

    @cached_property
    def hom_rows(self) -> list[int]:
        return [_row_mask(row) for row in self.hom_matrix]

    @cached_property
    def hom_cols(self) -> list[int]:
        k = len(self.indecs)
        return [_row_mask([self.hom_matrix[a][b] for a in range(k)]) for b in range(k)]

    @cached_property
    def ext_rows(self) -> list[int]:
        return [_row_mask(row) for row in self.ext_matrix]

    @cached_property
    def rigid_mask(self) -> int:
        return sum(1 << x.id for x in self.indecs if x.rigid)

    @cached_property
    def _inverse_shift(self) -> list[int]:
        inv = [0] * len(self.shift_perm)
        for a, b in enumerate(self.shift_perm):
            inv[b] = a
        return inv

    # lookups

    def id_of(self, element: Rep) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise CategoryError(f"{element!r} is not an indecomposable of {self.spec}") from None

    def mask(self, ids: Iterable[int]) -> int:
        m = 0
        for i in ids:
            if not 0 <= i < len(self.indecs):
                raise CategoryError(f"no indecomposable with id {i} in {self.spec}")
            m |= 1 << i
        return m

    def members(self, x: int) -> list[Indec]:
        return [self.indecs[i] for i in iter_bits(x)]

    def labels(self, x: int) -> list[str]:
        return [ind.label for ind in self.members(x)]

    def element(self, raw: object) -> Rep:
        """Build a polygon element of this category's model from JSON-ish input.

        Accepts ``[i, j]``, the arc JSON objects of the type-D model, or a
        label string such as ``"(1,3)"`` or ``"(1,5)g"``.
        """
        if isinstance(raw, str):
            match = _LABEL.fullmatch(raw.replace(" ", ""))
            if not match:
                raise CategoryError(f"cannot read element label {raw!r}")
            i, j, color = int(match[1]), int(match[2]), match[3]
            if color:
                if self.spec.family != "D" or (j - i) % self.spec.ngon != self.spec.u:
                    raise CategoryError(f"{raw!r} is not a coloured diameter of {self.spec}")
                return gd.Diameter.of(i, color, self.spec.u)
            raw = [i, j]
        if self.spec.family == "A":
            if isinstance(raw, dict) or not isinstance(raw, (list, tuple)) or len(raw) != 2:
                raise CategoryError(f"expected [i, j] for a diagonal, got {raw!r}")
            return Diagonal.of(int(raw[0]), int(raw[1]), self.spec.ngon)
        return gd.arc_from_json(raw, self.spec.u)

    def parse_set(self, raw: Sequence[object]) -> int:
        """Orbit-representative input (any member of each orbit) to a bitmask."""
        x = 0
        for item in raw:
            try:
                x |= 1 << self.id_of(self.element(item))
            except CategoryError:
                raise
            except (ga.GeometryError, TypeError, ValueError) as exc:
                raise CategoryError(f"invalid element {item!r}: {exc}") from None
        return x

    # operations

    def shift(self, x: int, k: int = 1) -> int:
        perm = self.shift_perm if k >= 0 else self._inverse_shift
        for _ in range(abs(k) % self._shift_order):
            x = _permute(x, perm)
        return x

    @cached_property
    def _shift_order(self) -> int:
        order, x = 1, self.shift_perm
        ident = list(range(len(x)))
        cur = list(x)
        while cur != ident:
            cur = [x[c] for c in cur]
            order += 1
        return order

    def right_perp(self, x: int) -> int:
        """Indecomposables ``b`` with ``Hom(a, b) = 0`` for every ``a`` in ``x``."""
        hit = 0
        for a in iter_bits(x):
            hit |= self.hom_rows[a]
        return self.full & ~hit

    def left_perp(self, y: int) -> int:
        hit = 0
        for b in iter_bits(y):
            hit |= self.hom_cols[b]
        return self.full & ~hit

    def hom_nonzero(self, a: int, b: int) -> bool:
        return self.hom_matrix[a][b]

    def ext_nonzero(self, a: int, b: int) -> bool:
        return self.ext_matrix[a][b]

    def hom_dim(self, a: int, b: int) -> int:
        if self.hom_dims is None:
            raise UnsupportedOperation("Hom dimensions are only tabulated for family A")
        return self.hom_dims[a][b]

    def is_rigid(self, x: int) -> bool:
        return all(not (self.ext_rows[a] & x) for a in iter_bits(x))

    # lifting

    def lift(self, x: int) -> DiagonalSet | ArcSetD:
        elems = [e for i in iter_bits(x) for e in self.orbits[i]]
        if self.spec.family == "A":
            return DiagonalSet(self.spec.ngon, frozenset(elems))
        return ArcSetD(self.spec.u, frozenset(elems))

    def project(self, s: DiagonalSet | ArcSetD) -> int:
        """Inverse of :meth:`lift`; raises :class:`NotPeriodicError` on a non-periodic set."""
        members = s.members
        x = 0
        for e in sorted(members, key=_rep_key):
            img = self._generator(e)
            if img not in members:
                raise NotPeriodicError(e, img)
            x |= 1 << self.id_of(e)
        return x

    def _generator(self, e: Rep) -> Rep:
        if self.spec.family == "A":
            return ga.rotate(e, self.spec.period)
        return gd.F_d(e, self.spec.n)

    # serialization

    def to_json(self) -> dict:
        return {
            "family": self.spec.family,
            "n": self.spec.n,
            "t": self.spec.t,
            "ngon": self.spec.ngon,
            "indecs": [
                {
                    "id": x.id,
                    "rep": x.rep.to_json(),
                    "coord": list(x.coord),
                    "label": x.label,
                    "level": x.level,
                    "rigid": x.rigid,
                }
                for x in self.indecs
            ],
            "ext": [_bits(row) for row in self.ext_matrix],
            "hom": [_bits(row) for row in self.hom_matrix],
            "hom_dims": self.hom_dims,
            "shift": self.shift_perm,
        }


_LABEL = re.compile(r"\((-?\d+),(-?\d+)\)([gr]?)")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


def _row_mask(row: Sequence[bool]) -> int:
    return sum(1 << k for k, v in enumerate(row) if v)


def _bits(row: Sequence[bool]) -> str:
    return "".join("1" if v else "0" for v in row)


def _permute(x: int, perm: Sequence[int]) -> int:
    y = 0
    for i in iter_bits(x):
        y |= 1 << perm[i]
    return y


def _orbit(e: Rep, spec: CategorySpec) -> tuple[Rep, ...]:
    out = [e]
    gen = (lambda d: ga.rotate(d, spec.period)) if spec.family == "A" else (
        lambda a: gd.F_d(a, spec.n)
    )
    cur = gen(e)
    while cur != e:
        out.append(cur)
        cur = gen(cur)
    return tuple(out)


def _level_length(e: Rep) -> tuple[int, int]:
    return e.length - 1, e.length


def build(spec: CategorySpec) -> CategoryTables:
    if spec.family == "A":
        universe: list[Rep] = ga.all_diagonals(spec.ngon)
        cross = ga.cross
        tau = lambda e, k: ga.rotate(e, k)  # noqa: E731
    else:
        universe = gd.all_arcs(spec.u)
        cross = gd.cross_d
        tau = gd.tau_d

    seen: set = set()
    orbits = []
    for e in universe:
        if e in seen:
            continue
        orb = _orbit(e, spec)
        if len(orb) != spec.group_order:
            raise CategoryError(f"orbit of {e!r} has size {len(orb)}, expected {spec.group_order}")
        seen.update(orb)
        keyed = [(_coord_key(d, spec.period), d) for d in orb]
        key, rep = min((k, d) for k, d in keyed if k is not None)
        orbits.append((rep, orb, (key[1], key[0])))

    def order_key(item):
        rep, _, coord = item
        level, _ = _level_length(rep)
        return (level, coord[0], coord[1], _rep_key(rep))

    orbits.sort(key=order_key)
    index = {}
    indecs = []
    for k, (rep, orb, _) in enumerate(orbits):
        for d in orb:
            index[d] = k

    size = len(orbits)
    ext_dims = [[0] * size for _ in range(size)]
    hom_dims = [[0] * size for _ in range(size)]
    for a, (rep_a, _, _) in enumerate(orbits):
        for b, (_, orb_b, _) in enumerate(orbits):
            ext_dims[a][b] = sum(1 for d in orb_b if cross(rep_a, d))
            # Hom(a, b) = Ext^1(a, b[-1]) and [1] = tau.
            hom_dims[a][b] = sum(1 for d in orb_b if cross(rep_a, tau(d, -1)))

    for k, (rep, _, coord) in enumerate(orbits):
        level, length = _level_length(rep)
        indecs.append(Indec(k, rep, coord, level, length, rigid=ext_dims[k][k] == 0))

    shift_perm = [index[tau(rep, 1)] for rep, _, _ in orbits]
    return CategoryTables(
        spec=spec,
        indecs=indecs,
        orbits=[orb for _, orb, _ in orbits],
        ext_matrix=[[v > 0 for v in row] for row in ext_dims],
        hom_matrix=[[v > 0 for v in row] for row in hom_dims],
        hom_dims=hom_dims if spec.family == "A" else None,
        shift_perm=shift_perm,
        _index=index,
    )


_CACHE: dict[CategorySpec, CategoryTables] = {}


def get_tables(spec: CategorySpec) -> CategoryTables:
    """Memoized :func:`build`; tables are never mutated after construction."""
    if spec not in _CACHE:
        _CACHE[spec] = build(spec)
    return _CACHE[spec]
