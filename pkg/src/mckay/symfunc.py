"""Homogeneous symmetric functions in the power-sum and Schur bases.

Coefficients live in any exact ring supporting ``+``, ``*`` and truth testing
(int, Fraction, :class:`~mckay.exactring.Poly`,
:class:`~mckay.exactring.RationalFunction`).
"""

from fractions import Fraction

from .characters import character_table
from .exactring import parse_rat, rat_str
from .partitions import Partition, index_of, partitions_of, stats

BASES = ("p", "s")


class WeightMismatch(ValueError):
    pass


class SymFunc:
    """Element of Lambda^n stored as a sparse map partition -> coefficient."""

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n, basis, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.n = n
        self.basis = basis
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if lam.weight != n:
                raise WeightMismatch(f"{list(lam)} is not a partition of {n}")
            if c:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def basis_element(cls, basis, lam, coeff=1):
        lam = Partition(lam)
        return cls(lam.weight, basis, {lam: coeff})

    @classmethod
    def zero(cls, n, basis="p"):
        return cls(n, basis)

    def __getitem__(self, lam):
        return self.coeffs.get(Partition(lam), 0)

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(sorted(self.coeffs.items(), reverse=True))

    def vector(self):
        """Coefficients in canonical partition order."""
        return [self[lam] for lam in partitions_of(self.n)]

    @classmethod
    def from_vector(cls, n, basis, vec):
        return cls(n, basis, dict(zip(partitions_of(n), vec)))

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.basis != other.basis:
            other = other.to_basis(self.basis)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.basis, frozenset(self.coeffs.items())))

    def _check(self, other):
        if self.n != other.n:
            raise WeightMismatch(f"weights {self.n} and {other.n}")
        return other.to_basis(self.basis)

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.n, self.basis, out)

    def __neg__(self):
        return SymFunc(self.n, self.basis, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, SymFunc):
            return NotImplemented
        return SymFunc(self.n, self.basis, {k: c * scalar for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def map_coeffs(self, fn):
        return SymFunc(self.n, self.basis, {k: fn(c) for k, c in self.coeffs.items()})

    def to_basis(self, target):
        return convert(self, target)

    def __repr__(self):
        return f"SymFunc({self.n}, {self.basis!r}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in self:
            parts.append(f"({c})*{self.basis}[{lam.label()}]")
        return " + ".join(parts)

    def to_json(self):
        return {
            "n": self.n,
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": _coeff_str(c)} for lam, c in self
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["n"],
            data["basis"],
            {Partition(t["partition"]): parse_rat(t["coeff"]) for t in data["terms"]},
        )


def _coeff_str(c):
    if isinstance(c, (int, Fraction)):
        return rat_str(c)
    return str(c)


def convert(f, target):
    """Exact change of basis between ``p`` and ``s`` via the character table."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target or f.n == 0:
        return SymFunc(f.n, target, f.coeffs)
    table = character_table(f.n)
    idx = index_of(f.n)
    out = {}
    if target == "s":
        # p_mu = sum_lam chi^lam_mu s_lam
        for mu, c in f.coeffs.items():
            j = idx[mu]
            for i, lam in enumerate(table.partitions):
                x = table.chi[i][j]
                if x:
                    out[lam] = out.get(lam, 0) + c * x
    else:
        # s_lam = sum_mu chi^lam_mu / z_mu p_mu
        for lam, c in f.coeffs.items():
            row = table.chi[idx[lam]]
            for j, mu in enumerate(table.partitions):
                if row[j]:
                    out[mu] = out.get(mu, 0) + c * Fraction(row[j]) / stats(mu).z
    return SymFunc(f.n, target, out)


def hall(f, g, basis="p"):
    """Hall scalar product, computed in the requested basis."""
    if f.n != g.n:
        raise WeightMismatch(f"weights {f.n} and {g.n}")
    f, g = f.to_basis(basis), g.to_basis(basis)
    total = 0
    for lam, c in f.coeffs.items():
        d = g.coeffs.get(lam)
        if d:
            w = stats(lam).z if basis == "p" else 1
            total = total + c * d * w
    return total


def omega(f):
    """Involution with ``p_k -> -p_k``; on Lambda^n, ``s_lam -> (-1)^n s_lam'``."""
    if f.basis == "p":
        return SymFunc(
            f.n, "p", {lam: (c if len(lam) % 2 == 0 else -c) for lam, c in f.coeffs.items()}
        )
    sign = -1 if f.n % 2 else 1
    return SymFunc(f.n, "s", {lam.conjugate(): c * sign for lam, c in f.coeffs.items()})


def omega_classical(f):
    """Involution with ``p_k -> (-1)^(k-1) p_k``, i.e. ``s_lam -> s_lam'``."""
    if f.basis == "p":
        return SymFunc(
            f.n,
            "p",
            {lam: (c if (f.n - len(lam)) % 2 == 0 else -c) for lam, c in f.coeffs.items()},
        )
    return SymFunc(f.n, "s", {lam.conjugate(): c for lam, c in f.coeffs.items()})


def pi_iso(f):
    """Algebra isomorphism ``p_r -> -(1/r) p_r``."""
    f = f.to_basis("p")
    return SymFunc(
        f.n,
        "p",
        {
            lam: c * Fraction((-1) ** len(lam), stats(lam).part_product)
            for lam, c in f.coeffs.items()
        },
    )


def pi_iso_inverse(f):
    f = f.to_basis("p")
    return SymFunc(
        f.n,
        "p",
        {lam: c * ((-1) ** len(lam) * stats(lam).part_product) for lam, c in f.coeffs.items()},
    )


def pleth_scale(f, u):
    """Plethystic rescaling ``p_k -> u(k) p_k`` (``f[X*c]`` with ``p_k[c] = u(k)``)."""
    f = f.to_basis("p")
    out = {}
    for lam, c in f.coeffs.items():
        w = c
        for k in lam:
            w = w * u(k)
        out[lam] = w
    return SymFunc(f.n, "p", out)


def multiply(f, g):
    """Ordinary product of symmetric functions (power-sum basis)."""
    f, g = f.to_basis("p"), g.to_basis("p")
    out = {}
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            nu = Partition(sorted(lam + mu, reverse=True))
            out[nu] = out.get(nu, 0) + a * b
    return SymFunc(f.n + g.n, "p", out)


def p(*parts):
    return SymFunc.basis_element("p", Partition(sorted(parts, reverse=True)))


def s(*parts):
    return SymFunc.basis_element("s", Partition(sorted(parts, reverse=True)))
