"""Integer partitions, Young diagrams and hook statistics.

Diagrams use the matrix convention: cell ``(i, j)`` sits in row ``i`` (counted
downwards from 0) and column ``j``; arms point right, legs point down.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .exactring import Poly


class Partition(tuple):
    """Non-increasing tuple of positive integers.

    Ordering is plain tuple comparison, so sorting in reverse gives the
    canonical reverse-lexicographic order used to index every matrix.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if p)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self):
        for i, row in enumerate(self):
            for j in range(row):
                yield (i, j)

    def __repr__(self):
        return f"Partition({list(self)})"

    def label(self):
        """Comma-separated parts, e.g. ``2,1,1``."""
        return ",".join(map(str, self))


def partition(parts):
    return parts if isinstance(parts, Partition) else Partition(sorted(parts, reverse=True))


def _gen(n, maxpart):
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _gen(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition(p) for p in _gen(n, n))


@lru_cache(maxsize=None)
def index_of(n):
    return {lam: i for i, lam in enumerate(partitions_of(n))}


@dataclass(frozen=True)
class CellData:
    cell: tuple
    arm: int
    leg: int
    hook: int


@dataclass(frozen=True)
class PartitionStats:
    z: Fraction
    n_stat: int
    age: int
    part_product: int
    length: int
    conjugate: Partition
    hook_product: int


@lru_cache(maxsize=None)
def cell_data(lam):
    lam = partition(lam)
    conj = lam.conjugate()
    out = []
    for i, j in lam.cells():
        arm = lam[i] - j - 1
        leg = conj[j] - i - 1
        out.append(CellData((i, j), arm, leg, 1 + arm + leg))
    return tuple(out)


def z_value(lam):
    return prod(factorial(a) * r**a for r, a in Counter(lam).items())


@lru_cache(maxsize=None)
def stats(lam):
    lam = partition(lam)
    n = lam.weight
    return PartitionStats(
        z=Fraction(z_value(lam)),
        n_stat=sum(i * p for i, p in enumerate(lam)),
        age=n - len(lam),
        part_product=prod(lam),
        length=len(lam),
        conjugate=lam.conjugate(),
        hook_product=prod(c.hook for c in cell_data(lam)),
    )


def age(lam):
    return sum(lam) - len(lam)


def n_stat(lam):
    return sum(i * p for i, p in enumerate(lam))


def b_weight(mu, j, A):
    """``B_mu(q**j, t**j)`` on the curve ``q = t**A``: sum of ``t**(j*(i + A*c))``."""
    if j < 1 or A < 1:
        raise ValueError("need j >= 1 and A >= 1")
    mu = partition(mu)
    deg = max((j * (i + A * c) for i, c in mu.cells()), default=0)
    coeffs = [0] * (deg + 1)
    for i, c in mu.cells():
        coeffs[j * (i + A * c)] += 1
    return Poly(coeffs)
