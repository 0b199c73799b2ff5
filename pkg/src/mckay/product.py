"""The ring structure on Lambda^n pulled back from tensor products.

Multiplication by ``s_lam`` is the transported operator of the dual
isotypic bundle ``P_lam^*``; everything else (tables, Adams powers, the
comparison with the class-algebra cup product) is built on top of that.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import (
    CalibrationMissing,
    cup_graded,
    get_calibration,
    normalization_family,
    set_calibration,
)
from .linalg import LinOperator, graded_component
from .macdonald import DegenerateSpecialization, Specialization, macdonald_basis
from .operators import FixedPointWeights, PoleAtOne, op_E, op_Gamma, pi_matrix, transport
from .partitions import Partition, age, partitions_of
from .symfunc import SymFunc

MAX_A_RETRIES = 8

_dual_cache = {}


def _with_retry(n, A, build):
    """Run ``build(mb)`` on ``q = t**A``, bumping ``A`` on degenerate curves."""
    A = n + 2 if A is None else A
    last = None
    for a in range(A, A + MAX_A_RETRIES):
        try:
            spec = Specialization(n, a)
            return a, build(macdonald_basis(n, spec))
        except (PoleAtOne, DegenerateSpecialization) as exc:
            last = exc
    raise last


def dual_operators(n, A=None):
    """``{lam: E_{P_lam^*}}`` in the Schur basis, plus the ``A`` actually used."""
    key = (n, A)
    if key not in _dual_cache:
        def build(mb):
            return {
                lam: transport(FixedPointWeights.dual_isotypic(lam, mb), mb)
                for lam in partitions_of(n)
            }

        _dual_cache[key] = _with_retry(n, A, build)
    return _dual_cache[key]


def odot(x, y, A=None):
    """``x (.) y``, returned in the basis of ``x``."""
    if x.n != y.n:
        raise ValueError("weights differ")
    _, ops = dual_operators(x.n, A)
    ys = y.to_basis("s")
    out = SymFunc.zero(x.n, "s")
    for lam, c in x.to_basis("s").coeffs.items():
        out = out + ops[lam](ys) * c
    return out.to_basis(x.basis)


def odot_via_p(x, y, A=None):
    """Same product assembled from the p-basis table by bilinearity."""
    xp, yp = x.to_basis("p"), y.to_basis("p")
    out = SymFunc.zero(x.n, "p")
    for lam, a in xp.coeffs.items():
        for mu, b in yp.coeffs.items():
            out = out + odot(SymFunc.basis_element("p", lam), SymFunc.basis_element("p", mu), A) * (a * b)
    return out.to_basis(x.basis)


@dataclass
class ProductTable:
    n: int
    basis: str
    A: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        lam, mu = key
        return self.entries[(Partition(lam), Partition(mu))]


def odot_table(n, basis, A=None):
    a_used, _ = dual_operators(n, A)
    parts = partitions_of(n)
    table = ProductTable(n, basis, a_used)
    for i, lam in enumerate(parts):
        x = SymFunc.basis_element(basis, lam)
        for mu in parts[i:]:
            v = odot(x, SymFunc.basis_element(basis, mu), A)
            table.entries[(lam, mu)] = v
            table.entries[(mu, lam)] = v
    return table


def unit(n):
    return SymFunc.basis_element("s", (n,))


def in_filtration(f, d):
    """``f`` lies in the span of ``p_nu`` with ``age(nu) >= d``."""
    return all(age(nu) >= d for nu in f.to_basis("p").coeffs)


def graded_part(f, d):
    f = f.to_basis("p")
    return SymFunc(f.n, "p", {nu: c for nu, c in f.coeffs.items() if age(nu) == d})


# -- Adams operations -------------------------------------------------------


def adams_operator(n, j, A=None):
    """Transported action of ``psi^j B_n`` in the p-basis."""
    if j < 1:
        raise ValueError("j must be >= 1; psi^0 is handled by the report")
    _, op = _with_retry(n, A, lambda mb: transport(FixedPointWeights.tautological(n, mb.spec, j), mb))
    return op.to_basis("p")


def adams_prediction(n, j):
    """``sum_k j^k E_k``."""
    e = op_E(n)
    total = LinOperator.zero(n, "p")
    for k in range(n):
        total = total + graded_component(e, k) * Fraction(j) ** k
    return total


def adams_conjecture_check(n_max=4, j_max=4):
    """One record per ``(n, j)`` comparing both sides; never raises on a mismatch."""
    rows = []
    for n in range(1, n_max + 1):
        for j in range(0, j_max + 1):
            pred = adams_prediction(n, j)
            if j == 0:
                # psi^0 of a rank-n bundle is n times the trivial class
                lhs = LinOperator.identity(n, "p") * n
                note = "psi^0 = rank (n Id); the literal reading psi^0 B_n -> Id disagrees for n > 1"
            else:
                lhs = adams_operator(n, j)
                note = ""
            rows.append({"n": n, "j": j, "equal": lhs == pred, "note": note})
    return rows


# -- comparison with the class algebra --------------------------------------


def gamma0(n):
    return pi_matrix(n) * (-1) ** n


def graded_transfer_holds(n, norm, A=None):
    """``Gamma_0(gr(p_lam (.) p_mu)) = cup(Gamma_0 p_lam, Gamma_0 p_mu)`` on all pairs."""
    g0 = gamma0(n)
    parts = partitions_of(n)
    for i, lam in enumerate(parts):
        x = SymFunc.basis_element("p", lam)
        for mu in parts[i:]:
            y = SymFunc.basis_element("p", mu)
            prod_ = graded_part(odot(x, y, A), age(lam) + age(mu))
            if g0(prod_) != cup_graded(g0(x), g0(y), norm):
                return False
    return True


def full_transfer_holds(n, norm, A=None):
    """``Gamma(x (.) y) = cup(Gamma x, Gamma y)`` with the full Gamma."""
    g = op_Gamma(n)
    parts = partitions_of(n)
    for i, lam in enumerate(parts):
        x = SymFunc.basis_element("p", lam)
        for mu in parts[i:]:
            y = SymFunc.basis_element("p", mu)
            if g(odot(x, y, A)) != cup_graded(g(x), g(y), norm):
                return False
    return True


def calibrate_cup(fit=(2, 3), validate=(4, 5)):
    """Search the normalization family; install and return the first survivor."""
    fitted = [c for c in normalization_family() if all(graded_transfer_holds(n, c) for n in fit)]
    validated = [c for c in fitted if all(graded_transfer_holds(n, c) for n in validate)]
    report = {
        "fitted": [str(c) for c in fitted],
        "validated": [str(c) for c in validated],
        "status": "resolved" if validated else "unresolved",
        "chosen": None,
    }
    if validated:
        set_calibration(validated[0])
        report["chosen"] = str(validated[0])
    return report


def gamma_transfer_check(n, A=None):
    norm = get_calibration()
    return {
        "n": n,
        "graded": graded_transfer_holds(n, norm, A),
        "full": full_transfer_holds(n, norm, A),
    }


# -- ring axioms ------------------------------------------------------------


def _basis(n):
    return [SymFunc.basis_element("p", lam) for lam in partitions_of(n)]


def _random_element(n, rng):
    return SymFunc(n, "p", {lam: rng.randint(-3, 3) for lam in partitions_of(n)})


def ring_axiom_failures(n, triples=None, seed=0):
    """List of failed axioms on basis elements (all triples unless a count is given)."""
    basis = _basis(n)
    failures = []
    one = unit(n)
    for x in basis:
        if odot(one, x) != x:
            failures.append(("unit", x))
    for i, x in enumerate(basis):
        for y in basis[i:]:
            if odot(x, y) != odot(y, x):
                failures.append(("commutative", x, y))
    lams = partitions_of(n)
    for x_l in lams:
        for y_l in lams:
            xy = odot(SymFunc.basis_element("p", x_l), SymFunc.basis_element("p", y_l))
            if not in_filtration(xy, age(x_l) + age(y_l)):
                failures.append(("filtration", x_l, y_l))
    if triples is None:
        picks = [(x, y, z) for x in basis for y in basis for z in basis]
    else:
        rng = random.Random(seed)
        picks = [tuple(_random_element(n, rng) for _ in range(3)) for _ in range(triples)]
    for x, y, z in picks:
        if odot(odot(x, y), z) != odot(x, odot(y, z)):
            failures.append(("associative", x, y, z))
    return failures


def a_independent(n):
    base = n + 2
    for basis in ("p", "s"):
        t1 = odot_table(n, basis, base)
        t2 = odot_table(n, basis, base + 1)
        if t1.entries != t2.entries:
            return False
    return True


__all__ = [
    "CalibrationMissing",
    "ProductTable",
    "odot",
    "odot_via_p",
    "odot_table",
    "unit",
    "in_filtration",
    "graded_part",
    "adams_operator",
    "adams_prediction",
    "adams_conjecture_check",
    "calibrate_cup",
    "gamma_transfer_check",
    "graded_transfer_holds",
    "full_transfer_holds",
    "ring_axiom_failures",
    "a_independent",
]
