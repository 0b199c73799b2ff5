from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mckay.partitions import Partition, partitions_of
from mckay.symfunc import (
    SymFunc,
    WeightMismatch,
    hall,
    multiply,
    omega,
    omega_classical,
    p,
    pi_iso,
    pi_iso_inverse,
    s,
)


def test_conversion_examples():
    assert p(1, 1).to_basis("s") == s(2) + s(1, 1)
    assert p(2).to_basis("s") == s(2) - s(1, 1)
    assert s(2).to_basis("p") == (p(1, 1) + p(2)) * Fraction(1, 2)
    assert p(3).to_basis("s") == s(3) - s(2, 1) + s(1, 1, 1)


def test_omega_examples():
    assert omega(p(2, 1)) == p(2, 1)
    assert omega(p(3)) == -p(3)
    assert omega(s(2, 1)) == -s(2, 1)
    assert omega_classical(s(3, 1)) == s(2, 1, 1)
    assert omega_classical(p(2)) == -p(2)


def test_pi_iso_example():
    assert pi_iso(p(2, 1)) == p(2, 1) * Fraction(1, 2)
    assert pi_iso(p(3)) == p(3) * Fraction(-1, 3)


def test_multiply_and_weights():
    assert multiply(p(1), p(1)) == p(1, 1)
    assert multiply(s(1), s(1)).to_basis("s") == s(2) + s(1, 1)
    with pytest.raises(WeightMismatch):
        hall(p(1), p(2))
    with pytest.raises((WeightMismatch, ValueError)):
        p(1) + p(2)


def elements(n, basis):
    parts = partitions_of(n)
    coeff = st.fractions(min_value=-20, max_value=20, max_denominator=12)
    return st.lists(coeff, min_size=len(parts), max_size=len(parts)).map(
        lambda v: SymFunc.from_vector(n, basis, v)
    )


any_element = st.tuples(st.integers(1, 6), st.sampled_from(["p", "s"])).flatmap(lambda a: elements(*a))


@given(any_element)
def test_round_trip(f):
    other = "s" if f.basis == "p" else "p"
    assert f.to_basis(other).to_basis(f.basis) == f


@given(any_element)
def test_omega_involutions(f):
    assert omega(omega(f)) == f
    assert omega_classical(omega_classical(f)) == f
    assert omega(f).to_basis("p") == omega(f.to_basis("p"))
    assert omega(f).to_basis("s") == omega(f.to_basis("s")).to_basis("s")


@given(any_element)
def test_pi_iso_inverse(f):
    assert pi_iso_inverse(pi_iso(f)) == f.to_basis("p")


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(elements(n, "p"), elements(n, "s"))))
def test_hall_basis_independent(fg):
    f, g = fg
    assert hall(f, g, "p") == hall(f, g, "s")
    assert hall(f, g) == hall(g, f)


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_orthonormal(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            a = SymFunc.basis_element("s", lam)
            b = SymFunc.basis_element("s", mu)
            assert hall(a, b, "p") == (lam == mu)


@given(any_element)
def test_json_round_trip(f):
    assert SymFunc.from_json(f.to_json()) == f


def test_basis_element_partition_normalized():
    assert p(1, 2) == SymFunc.basis_element("p", Partition([2, 1]))
