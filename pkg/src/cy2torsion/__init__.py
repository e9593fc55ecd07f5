"""Torsion pairs in the 2-Calabi-Yau orbit categories of types A and D."""

from .category import CategorySpec, get_tables
from .torsion import enumerate_torsion_pairs

__version__ = "0.1.0"

__all__ = ["CategorySpec", "get_tables", "enumerate_torsion_pairs", "__version__"]
