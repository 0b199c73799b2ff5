"""Exact symmetric-function computations for the McKay correspondence on Hilbert schemes.

The main entry points are :func:`mckay.product.odot` and
:func:`mckay.product.odot_table`; the operators live in
:mod:`mckay.operators` and the Macdonald machinery in :mod:`mckay.macdonald`.
"""

from .exactring import PoleError, Poly, RationalFunction, TruncSeries
from .partitions import Partition, partitions_of
from .symfunc import SymFunc, p, s
from .zpoly import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Partition",
    "PoleError",
    "Poly",
    "RationalFunction",
    "SymFunc",
    "TruncSeries",
    "p",
    "partitions_of",
    "s",
]
