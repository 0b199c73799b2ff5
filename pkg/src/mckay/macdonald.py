"""Modified Macdonald polynomials on the curve ``q = t**A``.

The operator Delta is written in the power-sum basis by its closed subset
expansion, and each ``H~_mu`` is extracted as the one-dimensional kernel of
``Delta - eta_mu`` by fraction-free elimination over Z[t].  Restricting to
``q = t**A`` with ``A > n`` keeps all arithmetic univariate while the
eigenvalues ``1 - (1-q)(1-t) B_mu`` stay pairwise distinct (the exponents
``i + A*j`` of ``B_mu`` encode the diagram in base ``A``).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

from . import zpoly
from .characters import character_table
from .exactring import Poly, RationalFunction, as_rf
from .linalg import LinOperator, kernel_vector
from .partitions import Partition, b_weight, cell_data, n_stat, partitions_of, index_of, stats
from .symfunc import SymFunc, hall, omega, pleth_scale


class DegenerateSpecialization(ArithmeticError):
    """The chosen curve ``q = t**A`` collapses data that must stay distinct."""


class DegenerateEigenvalue(DegenerateSpecialization):
    pass


@dataclass(frozen=True)
class Specialization:
    n: int
    A: int

    def __post_init__(self):
        if self.A <= self.n:
            raise DegenerateSpecialization(f"need A > n, got A={self.A}, n={self.n}")

    @classmethod
    def default(cls, n):
        return cls(n, n + 2)

    def q_power(self, k):
        """``q**k`` as a monomial in ``t`` (``k >= 0``)."""
        return Poly.monomial(self.A * k)


def _c(k, A):
    # (1 - t^k)(1 - q^k) with q = t^A
    return Poly.from_int((1,) + (0,) * (k - 1) + (-1,)) * Poly.from_int((1,) + (0,) * (A * k - 1) + (-1,))


@lru_cache(maxsize=None)
def _signed_e(m):
    """``(-1)^m e_m`` in the power-sum basis: ``sum (-1)^l(mu) / z_mu p_mu``."""
    return {mu: Fraction((-1) ** len(mu)) / stats(mu).z for mu in partitions_of(m)}


def delta_images(lam, A):
    """Image of ``p_lam`` under Delta as a dict partition -> Poly."""
    lam = Partition(lam)
    out = {}
    idx = range(len(lam))
    for r in range(len(lam) + 1):
        for chosen in combinations(idx, r):
            coef = Poly.from_int((1,))
            for i in chosen:
                coef = coef * _c(lam[i], A)
            rest = [lam[i] for i in idx if i not in chosen]
            m = sum(lam[i] for i in chosen)
            for mu, e in _signed_e(m).items():
                nu = Partition(sorted(rest + list(mu), reverse=True))
                out[nu] = out.get(nu, 0) + coef * e
    return out


@lru_cache(maxsize=None)
def delta_matrix(n, spec):
    """Delta on Lambda^n (power-sum basis) with polynomial entries in ``t``."""
    parts = partitions_of(n)
    cols = [delta_images(lam, spec.A) for lam in parts]
    zero = Poly()
    return LinOperator(n, "p", [[cols[j].get(nu, zero) for j in range(len(parts))] for nu in parts])


def eigenvalue(mu, spec):
    """``1 - (1-q)(1-t) B_mu(q, t)`` on the curve."""
    return 1 - _c(1, spec.A) * b_weight(mu, 1, spec.A)


@dataclass(frozen=True)
class MacdonaldBasis:
    spec: Specialization
    K: tuple  # K[i][j] = K~_{lambda_i, mu_j}, RationalFunction entries

    @property
    def n(self):
        return self.spec.n

    def H(self, mu):
        """``H~_mu`` in the Schur basis."""
        j = index_of(self.n)[Partition(mu)]
        return SymFunc.from_vector(self.n, "s", [row[j] for row in self.K])

    def entry(self, lam, mu):
        idx = index_of(self.n)
        return self.K[idx[Partition(lam)]][idx[Partition(mu)]]

    def as_operator(self):
        return LinOperator(self.n, "s", self.K)


def _integer_matrix(op):
    den = 1
    for row in op.entries:
        for e in row:
            den = lcm(den, e.int_coeffs[1])
    return den, [[zpoly.scale(e.int_coeffs[0], den // e.int_coeffs[1]) for e in row] for row in op.entries]


@lru_cache(maxsize=None)
def macdonald_basis(n, spec):
    if spec.n != n:
        raise ValueError("specialization built for a different n")
    parts = partitions_of(n)
    etas = [eigenvalue(mu, spec) for mu in parts]
    if len(set(etas)) != len(etas):
        raise DegenerateEigenvalue(f"repeated Delta eigenvalue for n={n}, A={spec.A}")
    den, dm = _integer_matrix(delta_matrix(n, spec))
    chi = character_table(n).chi
    size = len(parts)
    columns = []
    for j, mu in enumerate(parts):
        eta_c, eta_d = etas[j].int_coeffs
        shifted = zpoly.scale(eta_c, den // eta_d)
        m = [
            [zpoly.sub(dm[r][c], shifted) if r == c else dm[r][c] for c in range(size)]
            for r in range(size)
        ]
        v = kernel_vector(m)
        # p-coordinates -> s-coordinates: s-coeff of lam is sum_nu chi^lam_nu v_nu
        vs = []
        for i in range(size):
            acc = ()
            for k in range(size):
                if chi[i][k] and v[k]:
                    acc = zpoly.add(acc, zpoly.scale(v[k], chi[i][k]))
            vs.append(Poly.from_int(acc))
        lead = vs[0]
        if not lead:
            raise DegenerateSpecialization(f"s_({n}) coefficient vanishes for mu={list(mu)}")
        col = []
        for x in vs:
            try:
                col.append(as_rf(x.exact_div(lead)))
            except ArithmeticError:
                col.append(RationalFunction(x, lead))
        columns.append(col)
    K = tuple(tuple(columns[j][i] for j in range(size)) for i in range(size))
    return MacdonaldBasis(spec, K)


def dual_weight(lam, mu, mb):
    """``K~_{lam,mu}(q^-1, t^-1)`` on the curve, i.e. the specialized entry at ``1/t``."""
    k = mb.entry(lam, mu)
    if not k.is_polynomial():
        raise DegenerateSpecialization("Kostka entry is not a polynomial")
    rev, shift = k.num.substitute_inverse()
    return RationalFunction(rev, Poly.monomial(shift))


def _laurent_one_minus(e):
    """``1 - t**e`` for any integer ``e`` as a rational function."""
    if e >= 0:
        return as_rf(Poly.from_int((1,) + (0,) * (e - 1) + (-1,)) if e else Poly())
    # 1 - t^-k = (t^k - 1) / t^k
    k = -e
    return RationalFunction(Poly.from_int((-1,) + (0,) * (k - 1) + (1,)), Poly.monomial(k))


def bott_denominator(mu, spec):
    """``prod_x (1 - t^{1+l} q^{-a}) (1 - t^{-l} q^{1+a})`` on the curve."""
    out = as_rf(1)
    for cd in cell_data(mu):
        out = out * _laurent_one_minus(1 + cd.leg - spec.A * cd.arm)
        out = out * _laurent_one_minus(spec.A * (1 + cd.arm) - cd.leg)
    return out


def mcmahon_series(n, spec):
    """``s_(n)[X / ((1-t)(1-q))]`` in the power-sum basis."""
    out = {}
    for lam in partitions_of(n):
        den = Poly.from_int((1,))
        for k in lam:
            den = den * _c(k, spec.A)
        out[lam] = RationalFunction(Poly([1 / stats(lam).z]), den)
    return SymFunc(n, "p", out)


def bott_identity_check(n, spec, report=None):
    """Fixed-point sum of ``H~_mu`` against the McMahon series, exactly.

    Returns True/False; on mismatch the differing p-coefficients are stored in
    ``report`` (a dict) when one is supplied.
    """
    mb = macdonald_basis(n, spec)
    lhs = SymFunc.zero(n, "p")
    for mu in partitions_of(n):
        h = mb.H(mu).to_basis("p")
        lhs = lhs + h * (as_rf(1) / bott_denominator(mu, spec))
    rhs = mcmahon_series(n, spec)
    diff = {lam: str(lhs[lam] - rhs[lam]) for lam in partitions_of(n) if lhs[lam] != rhs[lam]}
    if report is not None:
        report["mismatches"] = diff
    return not diff


def eigen_relation_holds(n, spec):
    mb = macdonald_basis(n, spec)
    delta = delta_matrix(n, spec)
    for mu in partitions_of(n):
        h = mb.H(mu).to_basis("p")
        if delta(h) != h * as_rf(eigenvalue(mu, spec)):
            return False
    return True


def duality_matrix(n, spec):
    """Gram matrix ``<H~_mu, omega H~_lam[X(1-q)(1-t)]>`` indexed ``[mu][lam]``."""
    mb = macdonald_basis(n, spec)
    parts = partitions_of(n)
    u = lambda k: _c(k, spec.A)
    hp = [mb.H(mu).to_basis("p") for mu in parts]
    twisted = [omega(pleth_scale(h, u)) for h in hp]
    return [[hall(hp[i], twisted[j]) for j in range(len(parts))] for i in range(len(parts))]


def normalization_report(n, spec):
    """Check row ``(n)`` is all ones and row ``(1^n)`` is ``t^{n(mu) + A n(mu')}``."""
    mb = macdonald_basis(n, spec)
    parts = partitions_of(n)
    top = all(x == 1 for x in mb.K[0])
    bottom = all(
        mb.K[-1][j] == Poly.monomial(n_stat(mu) + spec.A * n_stat(mu.conjugate()))
        for j, mu in enumerate(parts)
    )
    return {"row_n_all_ones": top, "row_1n_monomial": bottom}


def kostka_nonnegative(n, spec):
    mb = macdonald_basis(n, spec)
    for row in mb.K:
        for x in row:
            if not x.is_polynomial():
                return False
            c, _ = x.num.int_coeffs
            if x.num.int_coeffs[1] != 1 or any(v < 0 for v in c):
                return False
    return True
