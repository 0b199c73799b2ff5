"""Characters of the symmetric group and the class algebra of its centre.

Character values come from the Murnaghan-Nakayama rule, implemented on beta
sets: removing a rim hook of length ``k`` is moving one bead ``k`` positions
down, with sign given by the beads jumped over.
"""

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, age, index_of, partitions_of, stats


class CalibrationMissing(RuntimeError):
    """The graded cup product was requested before a normalization was fixed."""


@lru_cache(maxsize=None)
def mn_character(lam, mu):
    """``chi^lam`` evaluated on the class of cycle type ``mu``."""
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beads:
            continue
        sign = -1 if sum(1 for c in beta if nb < c < b) % 2 else 1
        moved = sorted((c for c in beta if c != b), reverse=True)
        moved.append(nb)
        moved.sort(reverse=True)
        shape = tuple(moved[i] - (ell - 1 - i) for i in range(ell))
        total += sign * mn_character(Partition(shape), rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple
    chi: tuple  # chi[i][j] = chi^{lambda_i} at class mu_j

    def value(self, lam, mu):
        idx = index_of(self.n)
        return self.chi[idx[Partition(lam)]][idx[Partition(mu)]]

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["chi"] + [str(list(mu)) for mu in self.partitions])
        for lam, row in zip(self.partitions, self.chi):
            w.writerow([str(list(lam))] + list(row))
        return buf.getvalue()


@lru_cache(maxsize=None)
def character_table(n):
    if n < 1:
        raise ValueError("n must be >= 1")
    parts = partitions_of(n)
    chi = tuple(tuple(mn_character(lam, mu) for mu in parts) for lam in parts)
    return CharacterTable(n, parts, chi)


def class_size(mu):
    mu = Partition(mu)
    return factorial(mu.weight) // int(stats(mu).z)


@lru_cache(maxsize=None)
def class_constants(lam, mu):
    """Structure constants ``a^nu`` of ``C_lam * C_mu`` in the class algebra."""
    lam, mu = Partition(lam), Partition(mu)
    n = lam.weight
    if mu.weight != n:
        raise ValueError("classes of different symmetric groups")
    table = character_table(n)
    idx = index_of(n)
    i, j = idx[lam], idx[mu]
    one = idx[Partition([1] * n)]
    pref = Fraction(class_size(lam) * class_size(mu), factorial(n))
    out = {}
    for k, nu in enumerate(table.partitions):
        s = sum(
            Fraction(row[i] * row[j] * row[k], row[one]) for row in table.chi
        )
        a = pref * s
        if a:
            out[nu] = a
    return out


@dataclass(frozen=True)
class CupNormalization:
    """Candidate identification ``p_lam <-> c(lam) * C_lam`` of Lambda^n with the centre.

    ``c(lam) = eps**age(lam) * z_lam**e_z * <lam>**e_prod``.
    """

    eps: int
    e_z: int
    e_prod: int

    def c(self, lam):
        st = stats(lam)
        return Fraction(self.eps) ** st.age * st.z**self.e_z * Fraction(st.part_product) ** self.e_prod

    def __str__(self):
        return f"c(lam) = ({self.eps:+d})^age * z^{self.e_z} * <lam>^{self.e_prod}"


def normalization_family():
    return [
        CupNormalization(eps, e_z, e_prod)
        for eps in (1, -1)
        for e_z in (-1, 0, 1)
        for e_prod in (-1, 0, 1)
    ]


_calibration = None


def set_calibration(norm):
    global _calibration
    _calibration = norm


def get_calibration():
    if _calibration is None:
        raise CalibrationMissing("no cup-product normalization has been calibrated")
    return _calibration


def cup_graded(x, y, norm=None):
    """Age-graded class-algebra product transported to Lambda^n.

    Only the structure constants landing in age ``age(lam) + age(mu)`` are
    kept, so the result is the associated graded product.
    """
    from .symfunc import SymFunc

    if norm is None:
        norm = get_calibration()
    if x.n != y.n:
        raise ValueError("weights differ")
    x, y = x.to_basis("p"), y.to_basis("p")
    out = {}
    for lam, a in x.coeffs.items():
        cl = norm.c(lam)
        for mu, b in y.coeffs.items():
            target = age(lam) + age(mu)
            cm = norm.c(mu)
            for nu, k in class_constants(lam, mu).items():
                if age(nu) == target:
                    out[nu] = out.get(nu, 0) + a * b * k * cl * cm / norm.c(nu)
    return SymFunc(x.n, "p", out)
