"""Specialized modified Macdonald polynomials on the curve q = t**A."""

import pytest

from mckay.exactring import Poly, RationalFunction, as_rf
from mckay.macdonald import (
    DegenerateSpecialization,
    Specialization,
    bott_identity_check,
    delta_matrix,
    duality_matrix,
    eigen_relation_holds,
    eigenvalue,
    kostka_nonnegative,
    macdonald_basis,
    normalization_report,
)
from mckay.partitions import Partition, partitions_of
from mckay.symfunc import s


def qt(terms, A):
    """``sum c q^a t^b`` on the curve, from ``{(a, b): c}``."""
    out = Poly()
    for (a, b), c in terms.items():
        out = out + Poly.monomial(A * a + b) * c
    return out


# Classical q,t-Kostka tables, keyed mu -> {lam: {(a, b): c}}.
KOSTKA = {
    2: {
        (2,): {(2,): {(0, 0): 1}, (1, 1): {(1, 0): 1}},
        (1, 1): {(2,): {(0, 0): 1}, (1, 1): {(0, 1): 1}},
    },
    3: {
        (3,): {(3,): {(0, 0): 1}, (2, 1): {(1, 0): 1, (2, 0): 1}, (1, 1, 1): {(3, 0): 1}},
        (2, 1): {(3,): {(0, 0): 1}, (2, 1): {(1, 0): 1, (0, 1): 1}, (1, 1, 1): {(1, 1): 1}},
        (1, 1, 1): {(3,): {(0, 0): 1}, (2, 1): {(0, 1): 1, (0, 2): 1}, (1, 1, 1): {(0, 3): 1}},
    },
    4: {
        (2, 2): {
            (4,): {(0, 0): 1},
            (3, 1): {(1, 0): 1, (0, 1): 1, (1, 1): 1},
            (2, 2): {(2, 0): 1, (0, 2): 1},
            (2, 1, 1): {(1, 1): 1, (2, 1): 1, (1, 2): 1},
            (1, 1, 1, 1): {(2, 2): 1},
        },
    },
}


@pytest.mark.parametrize("n,A", [(2, 3), (2, 5), (3, 5), (3, 7), (4, 6)])
def test_against_classical_kostka(n, A):
    mb = macdonald_basis(n, Specialization(n, A))
    for mu, row in KOSTKA[n].items():
        for lam in partitions_of(n):
            want = qt(row.get(tuple(lam), {}), A)
            assert mb.entry(lam, mu) == as_rf(want), (lam, mu)


def test_n2_h_values():
    mb = macdonald_basis(2, Specialization(2, 3))
    t3 = as_rf(Poly.monomial(3))
    t1 = as_rf(Poly.monomial(1))
    assert mb.H((2,)) == s(2) + s(1, 1) * t3
    assert mb.H((1, 1)) == s(2) + s(1, 1) * t1


def test_specialization_guard():
    with pytest.raises(DegenerateSpecialization):
        Specialization(3, 3)
    with pytest.raises(ValueError):
        macdonald_basis(3, Specialization(2, 4))


def test_eigenvalues_distinct_by_default():
    for n in range(1, 8):
        spec = Specialization.default(n)
        etas = [eigenvalue(mu, spec) for mu in partitions_of(n)]
        assert len(set(etas)) == len(etas)


@pytest.mark.parametrize("n", range(1, 6))
def test_structural_checks(n):
    spec = Specialization.default(n)
    assert eigen_relation_holds(n, spec)
    assert all(normalization_report(n, spec).values())
    assert kostka_nonnegative(n, spec)
    gram = duality_matrix(n, spec)
    size = len(gram)
    for i in range(size):
        for j in range(size):
            assert bool(gram[i][j]) == (i == j)


@pytest.mark.parametrize("n", range(1, 5))
def test_bott_identity(n):
    report = {}
    assert bott_identity_check(n, Specialization.default(n), report)
    assert report["mismatches"] == {}


def test_delta_trace_is_eigenvalue_sum():
    n, spec = 3, Specialization.default(3)
    d = delta_matrix(n, spec)
    trace = sum((d.entries[i][i] for i in range(3)), Poly())
    assert trace == sum((eigenvalue(mu, spec) for mu in partitions_of(n)), Poly())


@pytest.mark.parametrize("A", [5, 6, 9])
def test_entries_are_polynomials(A):
    mb = macdonald_basis(4, Specialization(4, A))
    assert all(isinstance(x, RationalFunction) and x.is_polynomial() for row in mb.K for x in row)
    assert mb.entry(Partition([4]), Partition([1, 1, 1, 1])) == as_rf(Poly([1]))
