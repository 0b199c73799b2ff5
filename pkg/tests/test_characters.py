"""Characters and class constants, with a brute-force permutation oracle."""

from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
import sympy

from mckay.characters import (
    CalibrationMissing,
    CupNormalization,
    character_table,
    class_constants,
    class_size,
    cup_graded,
    mn_character,
)
from mckay.partitions import Partition, partitions_of, stats
from mckay.symfunc import SymFunc, p


def cycle_type(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i not in seen:
            k, j = 0, i
            while j not in seen:
                seen.add(j)
                j = perm[j]
                k += 1
            out.append(k)
    return Partition(sorted(out, reverse=True))


def compose(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def convolution_constants(lam, mu, n):
    """Coefficients of C_lam * C_mu by multiplying all pairs of permutations."""
    perms = list(permutations(range(n)))
    cl = [g for g in perms if cycle_type(g) == lam]
    cm = [g for g in perms if cycle_type(g) == mu]
    counts = Counter(cycle_type(compose(a, b)) for a in cl for b in cm)
    return {nu: Fraction(c, class_size(nu)) for nu, c in counts.items()}


def frobenius_character(lam, mu):
    """chi^lam_mu as the coefficient of x^(lam+delta) in a_delta * p_mu."""
    n = len(lam) if lam else 1
    xs = sympy.symbols(f"x0:{n}")
    delta = list(range(n - 1, -1, -1))
    a_delta = sympy.Matrix(n, n, lambda i, j: xs[j] ** delta[i]).det()
    pm = sympy.prod([sum(x**k for x in xs) for k in mu])
    target = [lam[i] + delta[i] for i in range(n)]
    poly = sympy.Poly(sympy.expand(a_delta * pm), *xs)
    return poly.coeff_monomial(sympy.prod([x**e for x, e in zip(xs, target)]))


def test_examples():
    assert all(mn_character(Partition([3]), mu) == 1 for mu in partitions_of(3))
    assert mn_character(Partition([1, 1, 1]), Partition([2, 1])) == -1
    assert mn_character(Partition([2, 1]), Partition([3])) == -1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_against_frobenius_formula(n):
    table = character_table(n)
    for i, lam in enumerate(table.partitions):
        for j, mu in enumerate(table.partitions):
            assert table.chi[i][j] == frobenius_character(lam, mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality(n):
    table = character_table(n)
    parts = table.partitions
    size = len(parts)
    for a in range(size):
        for b in range(size):
            row = sum(Fraction(table.chi[a][k] * table.chi[b][k]) / stats(parts[k]).z for k in range(size))
            assert row == (a == b)
            col = sum(table.chi[k][a] * table.chi[k][b] for k in range(size))
            assert col == (stats(parts[a]).z if a == b else 0)
    one = parts.index(Partition([1] * n))
    for i, lam in enumerate(parts):
        assert table.chi[i][one] == factorial(n) // stats(lam).hook_product


def test_class_constants_s3_example():
    c = class_constants(Partition([2, 1]), Partition([2, 1]))
    assert c == {Partition([3]): 3, Partition([1, 1, 1]): 3}


@pytest.mark.parametrize("n", [3, 4])
def test_class_constants_against_convolution(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert class_constants(lam, mu) == convolution_constants(lam, mu, n)


@pytest.mark.parametrize("n", range(2, 7))
def test_class_constants_integral_and_counted(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            c = class_constants(lam, mu)
            assert c == class_constants(mu, lam)
            assert all(v.denominator == 1 and v > 0 for v in c.values())
            assert sum(v * class_size(nu) for nu, v in c.items()) == class_size(lam) * class_size(mu)


def test_unit_class():
    for mu in partitions_of(4):
        assert class_constants(Partition([1] * 4), mu) == {mu: 1}


def test_csv_header():
    assert character_table(2).to_csv().splitlines()[0] == "chi,[2],\"[1, 1]\""


NORM = CupNormalization(1, 1, 0)


def test_cup_examples():
    n = 3
    # p_lam <-> c(lam) C_lam, so the identity class is p_{1^n} / c(1^n)
    for norm, unit in ((CupNormalization(1, 0, 0), p(1, 1, 1)), (NORM, p(1, 1, 1) * Fraction(1, factorial(n)))):
        for mu in partitions_of(n):
            y = SymFunc.basis_element("p", mu)
            assert cup_graded(unit, y, norm) == y
    assert not cup_graded(p(3), p(3), NORM)


@pytest.mark.parametrize("n", range(2, 6))
def test_cup_associative_commutative(n):
    basis = [SymFunc.basis_element("p", lam) for lam in partitions_of(n)]
    for x in basis:
        for y in basis:
            assert cup_graded(x, y, NORM) == cup_graded(y, x, NORM)
            for z in basis:
                assert cup_graded(cup_graded(x, y, NORM), z, NORM) == cup_graded(x, cup_graded(y, z, NORM), NORM)


def test_calibration_missing():
    import mckay.characters as ch

    saved = ch._calibration
    ch.set_calibration(None)
    try:
        with pytest.raises(CalibrationMissing):
            cup_graded(p(1, 1), p(2))
    finally:
        ch.set_calibration(saved)
