"""Fock-space action of the Heisenberg algebra on the power sums.

``b_k`` (k > 0) multiplies by ``p_k``; ``b_{-k}`` acts as ``-k d/dp_k``;
``b_0`` is zero.  Only normally ordered words ``b_m b_{-nu_1} ... b_{-nu_l}``
are represented, truncated to annihilation weight ``<= n``.  Dropping the
heavier terms is exact on Lambda^n because they differentiate more power
sums than a weight-n monomial contains.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .linalg import LinOperator
from .partitions import Partition, partitions_of
from .symfunc import SymFunc


@dataclass(frozen=True, order=True)
class HeisenbergTerm:
    creation: int
    annihilations: Partition
    scalar: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "annihilations", Partition(sorted(self.annihilations, reverse=True)))
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        if self.creation < 1 or not self.annihilations:
            raise ValueError("a term needs one creation b_m (m >= 1) and at least one annihilation")

    def word(self):
        return [self.creation] + [-k for k in self.annihilations]

    def __str__(self):
        ann = "".join(f"b_{{-{k}}}" for k in self.annihilations)
        return f"({self.scalar}) b_{{{self.creation}}}{ann}"


def _apply_generator(k, f):
    if k == 0:
        return SymFunc.zero(f.n, "p")
    if k > 0:
        return SymFunc(f.n + k, "p", {Partition(sorted(lam + (k,), reverse=True)): c for lam, c in f.coeffs.items()})
    k = -k
    out = {}
    for lam, c in f.coeffs.items():
        mult = lam.count(k)
        if mult:
            parts = list(lam)
            parts.remove(k)
            nu = Partition(parts)
            out[nu] = out.get(nu, 0) + c * (-k * mult)
    return SymFunc(f.n - k, "p", out)


def apply_word(word, f):
    """Apply ``b_{w_1} ... b_{w_r}`` to ``f`` (rightmost generator first)."""
    f = f.to_basis("p")
    for k in reversed(word):
        f = _apply_generator(k, f)
    return f


def apply(term, f):
    return apply_word(term.word(), f) * term.scalar


class HeisenbergSum:
    """Finite sum of normally ordered terms, like terms merged.

    Terms may also be given as ``(m, nu, scalar)`` triples; a triple involving
    ``b_0`` is the zero operator and is dropped.
    """

    def __init__(self, terms=()):
        acc = {}
        for t in terms:
            if not isinstance(t, HeisenbergTerm):
                m, nu, c = t
                if m == 0 or 0 in nu:
                    continue
                t = HeisenbergTerm(m, nu, c)
            key = (t.creation, t.annihilations)
            acc[key] = acc.get(key, 0) + t.scalar
        self.terms = tuple(
            HeisenbergTerm(m, nu, c) for (m, nu), c in sorted(acc.items()) if c
        )

    def __eq__(self, other):
        return isinstance(other, HeisenbergSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __call__(self, f):
        out = SymFunc.zero(f.n, "p")
        for t in self.terms:
            # D and E preserve weight; other terms are skipped
            if t.creation == sum(t.annihilations):
                out = out + apply(t, f)
        return out

    def matrix(self, n):
        return LinOperator.from_images(n, "p", lambda lam: self(SymFunc.basis_element("p", lam)))


def _multiplicity_factor(nu):
    return prod(factorial(nu.count(k)) for k in set(nu))


def expand_named(name, n):
    """Normally ordered expansion of ``D`` or ``E`` truncated for Lambda^n.

    An ordered tuple and its permutations give the same word, so each
    multiset ``nu`` of length ``l`` appears ``l! / prod m_i!`` times; the
    ``1/l!`` of the series leaves ``1/prod m_i!``.
    """
    terms = []
    for w in range(1, n + 1):
        for nu in partitions_of(w):
            ell = len(nu)
            mult = _multiplicity_factor(nu)
            if name == "D":
                c = Fraction(-1, mult)
            elif name == "E":
                c = Fraction((-1) ** ell * w, mult * prod(nu))
            else:
                raise ValueError(f"unknown operator {name!r}")
            terms.append(HeisenbergTerm(w, nu, c))
    return HeisenbergSum(terms)


def _rescale(s, fn):
    return HeisenbergSum(
        HeisenbergTerm(t.creation, t.annihilations, t.scalar * fn(t)) for t in s
    )


def omega_hat(s):
    """``b_k -> -k b_k``, ``b_{-k} -> -(1/k) b_{-k}``."""
    return _rescale(s, lambda t: -t.creation * prod(Fraction(-1, k) for k in t.annihilations))


def omega_hat_inverse(s):
    return _rescale(s, lambda t: Fraction(-1, t.creation) * prod(-k for k in t.annihilations))


def commutator_holds(a, n):
    """``[b_a, b_{-a}] = a`` on every basis element of Lambda^n."""
    for lam in partitions_of(n):
        f = SymFunc.basis_element("p", lam)
        lhs = apply_word([a, -a], f) - apply_word([-a, a], f)
        if lhs != f * a:
            return False
    return True
