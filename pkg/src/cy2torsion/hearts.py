"""Cores of cotorsion pairs and the End(I) data that determines their hearts."""

from __future__ import annotations

from dataclasses import dataclass

from .category import CategoryError, CategoryTables, iter_bits, popcount
from .torsion import TorsionPairRecord


@dataclass(frozen=True)
class CatalogEntry:
    category: str
    quiver: str
    relations: tuple[str, ...]
    k_range: str


# Heart algebras up to mutation, per family of categories.
HEART_CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("A_{n,t}", "linear A_k: 1 -> 2 -> ... -> k", (), "1 <= k <= n"),
    CatalogEntry("A_{n,t}", "linear A_k with loop alpha at k", ("alpha^2",), "1 <= k <= n"),
    CatalogEntry("A_{n,t}", "mutations of the two quivers above", (), "1 <= k <= n"),
    CatalogEntry("D_{n,t}", "linear A_k: 1 -> 2 -> ... -> k", (), "1 <= k <= n"),
    CatalogEntry("D_{n,t}", "linear A_k with loop alpha at k", ("alpha^2",), "1 <= k <= n"),
    CatalogEntry("D_{n,t}", "mutations of the two quivers above", (), "1 <= k <= n"),
    CatalogEntry("D^b(E7)/tau^2", "one vertex with loop alpha", ("alpha^3",), "k = 1"),
    CatalogEntry("D^b(E7)/tau^5", "one vertex with loop alpha", ("alpha^2",), "k = 1"),
    CatalogEntry(
        "D^b(E7)/tau^5",
        "two vertices with loops alpha, gamma and arrow beta",
        ("beta alpha - gamma beta", "alpha^2", "gamma^2"),
        "k = 2",
    ),
)


@dataclass
class HeartReport:
    core: int
    num_simples: int
    hom_matrix: list[list[int]] | None
    algebra_dim: int | None
    catalog_note: str

    @property
    def is_zero(self) -> bool:
        return self.num_simples == 0

    def to_json(self) -> dict:
        out = {
            "core": list(iter_bits(self.core)),
            "num_simples": self.num_simples,
            "catalog_note": self.catalog_note,
        }
        if self.hom_matrix is not None:
            out["hom_matrix"] = self.hom_matrix
            out["algebra_dim"] = self.algebra_dim
        return out


def _note(num_simples: int, algebra_dim: int | None) -> str:
    if num_simples == 0:
        return "zero heart (t-structure)"
    if num_simples == 1 and algebra_dim == 1:
        return "field k (A_1 quiver)"
    if num_simples == 1 and algebra_dim == 2:
        return "loop alpha with relation alpha^2, k=1"
    return "undetermined: see catalog"


def heart_report(record: TorsionPairRecord, tables: CategoryTables) -> HeartReport:
    core = record.x & tables.shift(record.y, -1)
    if core != record.core:
        raise CategoryError("record core disagrees with x & y[-1]")
    if not tables.is_rigid(core):
        raise CategoryError(f"core {tables.labels(core)} is not rigid")
    ids = list(iter_bits(core))
    matrix = None
    dim = None
    if tables.hom_dims is not None:
        matrix = [[tables.hom_dim(a, b) for b in ids] for a in ids]
        dim = sum(map(sum, matrix))
    k = popcount(core)
    return HeartReport(core, k, matrix, dim, _note(k, dim))
