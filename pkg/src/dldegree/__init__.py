"""Exact computation of the degree of odd unitary Deligne-Lusztig varieties."""

from .multipoly import MultiPoly, degree_via_coeff
from .partitions import Partition, SkewShape
from .qseries import QPoly, q_double_factorial, q_int
from .schubert import GrassBox, SchubertExpr, degree_via_schubert, dl_class

__all__ = [
    "GrassBox",
    "MultiPoly",
    "Partition",
    "QPoly",
    "SchubertExpr",
    "SkewShape",
    "degree_via_coeff",
    "degree_via_schubert",
    "dl_class",
    "q_double_factorial",
    "q_int",
]
