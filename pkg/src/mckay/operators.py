"""The operators D, E, Gamma and the transport of fixed-point weights.

``op_D`` and ``op_E`` are the closed subset sums; ``op_Gamma`` evaluates the
character/Taylor-coefficient formula.  ``nabla_F`` diagonalises on the
Macdonald basis and ``bkr_transport`` forms ``(omega nabla* omega)`` at
``q = t = 1``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm, prod

from . import zpoly
from .characters import character_table
from .exactring import Poly, PoleError, RationalFunction, TruncSeries, as_rf, rf_eval, series_divide
from .linalg import LinOperator, SingularMatrix, graded_component, scaled_inverse
from .macdonald import dual_weight, eigenvalue, macdonald_basis
from .partitions import Partition, b_weight, cell_data, index_of, partitions_of, stats
from .symfunc import SymFunc, omega, omega_classical


class PoleAtOne(PoleError):
    """A transported entry is not regular at ``t = 1``."""


class SingularK(SingularMatrix):
    pass


def _subset_images(lam, weight):
    lam = Partition(lam)
    out = {}
    idx = range(len(lam))
    for r in range(1, len(lam) + 1):
        for chosen in combinations(idx, r):
            sel = [lam[i] for i in chosen]
            rest = [lam[i] for i in idx if i not in chosen]
            nu = Partition(sorted(rest + [sum(sel)], reverse=True))
            out[nu] = out.get(nu, 0) + weight(sel)
    return SymFunc(lam.weight, "p", out)


@lru_cache(maxsize=None)
def op_D(n):
    """``D(p_lam) = sum_{I != {}} (-1)^{|I|-1} <lam_I> p_{|lam_I|} p_{lam_Ibar}``."""
    return LinOperator.from_images(
        n, "p", lambda lam: _subset_images(lam, lambda sel: (-1) ** (len(sel) - 1) * prod(sel))
    )


@lru_cache(maxsize=None)
def op_E(n):
    """``E(p_lam) = sum_{I != {}} |lam_I| p_{|lam_I|} p_{lam_Ibar}``."""
    return LinOperator.from_images(n, "p", lambda lam: _subset_images(lam, sum))


def pi_matrix(n):
    parts = partitions_of(n)
    return LinOperator.diagonal(
        n, "p", [Fraction((-1) ** len(lam), stats(lam).part_product) for lam in parts]
    )


def gamma_series(lam, mu, order):
    """Unit part ``U`` of ``P_{lam,mu}(t) = t^{n - l(mu)} U(t)``."""
    num = TruncSeries.exp(-stats(lam).n_stat, order)
    for cd in cell_data(lam):
        num = num * TruncSeries.one_minus_exp_over_t(cd.hook, order)
    den = TruncSeries([1], order)
    for m in mu:
        den = den * TruncSeries.one_minus_exp_over_t(m, order)
    return series_divide(num, den, 0)


def gamma_coefficient(lam, mu, k, n):
    """``Coeff(t^k, P_{lam,mu})``."""
    v = n - len(mu)
    if k < v:
        return Fraction(0)
    return gamma_series(lam, mu, n + 1)[k - v]


@lru_cache(maxsize=None)
def op_Gamma(n):
    parts = partitions_of(n)
    table = character_table(n)
    idx = index_of(n)
    series = {
        (lam, mu): gamma_series(lam, mu, n + 1) for lam in parts for mu in parts
    }
    cols = []
    for mu in parts:
        j = idx[mu]
        col = []
        for nu in parts:
            k = idx[nu]
            shift = len(mu) - len(nu)
            if shift < 0:
                col.append(Fraction(0))
                continue
            acc = Fraction(0)
            for i, lam in enumerate(parts):
                c = table.chi[i][k] * table.chi[i][j]
                if c:
                    acc += Fraction(c, stats(lam).hook_product) * series[(lam, mu)][shift]
            col.append(acc / stats(nu).z)
        cols.append(col)
    size = len(parts)
    return LinOperator(n, "p", [[cols[j][i] for j in range(size)] for i in range(size)])


# -- fixed-point weights and the transport ---------------------------------


@dataclass(frozen=True)
class FixedPointWeights:
    n: int
    spec: object
    w: dict  # Partition -> Poly | RationalFunction

    def vector(self):
        return [as_rf(self.w[mu]) for mu in partitions_of(self.n)]

    @classmethod
    def constant(cls, n, spec, c=1):
        return cls(n, spec, {mu: as_rf(c) for mu in partitions_of(n)})

    @classmethod
    def tautological(cls, n, spec, j=1):
        """Weights ``B_mu(q^j, t^j)`` of the Adams power ``psi^j B_n``."""
        return cls(n, spec, {mu: b_weight(mu, j, spec.A) for mu in partitions_of(n)})

    @classmethod
    def delta_eigenvalues(cls, n, spec):
        return cls(n, spec, {mu: eigenvalue(mu, spec) for mu in partitions_of(n)})

    @classmethod
    def dual_isotypic(cls, lam, mb):
        """Weights ``K~_{lam,mu}(q^-1, t^-1)`` of ``P_lam^*``."""
        n = mb.n
        return cls(n, mb.spec, {mu: dual_weight(lam, mu, mb) for mu in partitions_of(n)})


class _KData:
    """Integer-polynomial form of the Kostka matrix and its scaled inverse."""

    def __init__(self, mb):
        size = len(mb.K)
        self.size = size
        kint = []
        for row in mb.K:
            r = []
            for x in row:
                if not x.is_polynomial() or x.num.int_coeffs[1] != 1:
                    raise SingularK("Kostka entries must be integer polynomials")
                r.append(x.num.int_coeffs[0])
            kint.append(r)
        self.K = kint
        try:
            self.R, self.d = scaled_inverse(kint)
        except SingularMatrix as exc:
            raise SingularK(str(exc)) from exc
        self._prods = {}

    def prods(self, i, j):
        # K[i][mu] * R[mu][j] for every mu
        key = (i, j)
        if key not in self._prods:
            self._prods[key] = [zpoly.mul(self.K[i][m], self.R[m][j]) for m in range(self.size)]
        return self._prods[key]


_kdata_cache = {}


def _kdata(mb):
    key = (mb.spec.n, mb.spec.A)
    if key not in _kdata_cache:
        _kdata_cache[key] = _KData(mb)
    return _kdata_cache[key]


def _common_form(weights):
    """Integer numerators ``h_mu`` and a common denominator ``D`` with F_mu = h_mu / D."""
    rfs = weights.vector()
    denom = Poly.from_int((1,))
    for f in rfs:
        if not f.den.is_constant():
            g = denom if denom.is_constant() else None
            if g is None:
                from .exactring import poly_gcd

                g = poly_gcd(denom, f.den)
                denom = denom * f.den.exact_div(g)
            else:
                denom = f.den
    scaled = [f.num * denom.exact_div(f.den) for f in rfs]
    ll = 1
    for s in scaled:
        ll = lcm(ll, s.int_coeffs[1])
    h = [zpoly.scale(s.int_coeffs[0], ll // s.int_coeffs[1]) for s in scaled]
    return h, denom * ll


def nabla_F(weights, mb):
    """``K diag(F) K^{-1}`` in the Schur basis, entries reduced in Q(t)."""
    if weights.spec != mb.spec:
        raise ValueError("weights and Macdonald basis use different specializations")
    kd = _kdata(mb)
    h, denom = _common_form(weights)
    d = Poly.from_int(kd.d)
    rows = []
    for i in range(kd.size):
        row = []
        for j in range(kd.size):
            acc = ()
            for pm, hm in zip(kd.prods(i, j), h):
                if pm and hm:
                    acc = zpoly.add(acc, zpoly.mul(pm, hm))
            num = Poly.from_int(acc)
            try:
                row.append(RationalFunction(num.exact_div(d), denom))
            except ArithmeticError:
                row.append(RationalFunction(num, d * denom))
        rows.append(row)
    return LinOperator(mb.n, "s", rows)


def omega_matrix(n, convention="signed"):
    fn = omega if convention == "signed" else omega_classical
    return LinOperator.from_images(n, "s", lambda lam: fn(SymFunc.basis_element("s", lam)))


def bkr_transport(nabla, convention="signed"):
    """``(omega nabla^* omega)`` evaluated at ``t = 1`` (Schur basis).

    The adjoint is the plain transpose because the Schur basis is orthonormal.
    """
    nabla = nabla.to_basis("s")
    w = omega_matrix(nabla.n, convention)
    sandwich = w @ nabla.transpose() @ w

    def at_one(x):
        try:
            return rf_eval(as_rf(x), 1)
        except PoleError as exc:
            raise PoleAtOne(str(exc)) from exc

    return sandwich.map(at_one)


def transport(weights, mb, convention="signed"):
    return bkr_transport(nabla_F(weights, mb), convention)


__all__ = [
    "PoleAtOne",
    "SingularK",
    "op_D",
    "op_E",
    "op_Gamma",
    "pi_matrix",
    "gamma_coefficient",
    "FixedPointWeights",
    "nabla_F",
    "bkr_transport",
    "transport",
    "graded_component",
    "omega_matrix",
    "macdonald_basis",
]
