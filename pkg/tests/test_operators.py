from fractions import Fraction
from math import prod

import pytest

from mckay.exactring import Poly, RationalFunction, as_rf
from mckay.linalg import LinOperator, graded_component
from mckay.macdonald import Specialization, delta_matrix, macdonald_basis
from mckay.operators import (
    FixedPointWeights,
    PoleAtOne,
    bkr_transport,
    gamma_coefficient,
    nabla_F,
    op_D,
    op_E,
    op_Gamma,
    pi_matrix,
    transport,
)
from mckay.partitions import age, partitions_of
from mckay.symfunc import p


def test_D_examples():
    assert op_D(2)(p(1, 1)) == p(1, 1) * 2 - p(2)
    assert op_D(2)(p(2)) == p(2) * 2
    assert op_D(1)(p(1)) == p(1)


def test_E_examples():
    assert op_E(2)(p(1, 1)) == p(1, 1) * 2 + p(2) * 2
    assert op_E(2)(p(2)) == p(2) * 2
    assert op_E(1)(p(1)) == p(1)


def test_Gamma_examples():
    assert op_Gamma(2)(p(2)) == p(2) * Fraction(-1, 2)
    assert op_Gamma(2)(p(1, 1)) == p(1, 1) + p(2) * Fraction(1, 2)
    assert op_Gamma(1)(p(1)) == p(1)


@pytest.mark.parametrize("n", range(1, 7))
def test_gamma_leading_term(n):
    # Gamma(p_mu) = (-1)^(n - l(mu)) / <mu> p_mu + terms with fewer parts
    g = op_Gamma(n)
    for mu in partitions_of(n):
        img = g(p(*mu))
        lead = Fraction((-1) ** (n - len(mu)), prod(mu))
        assert img[mu] == lead
        assert all(len(nu) < len(mu) for nu in img.coeffs if nu != mu)


def test_gamma_coefficient_vanishes_below_valuation():
    # P_{lam,mu} has valuation n - l(mu)
    assert gamma_coefficient((2, 1), (3,), 0, 3) == 0
    assert gamma_coefficient((2, 1), (3,), 1, 3) == 0
    assert gamma_coefficient((2, 1), (3,), 2, 3) != 0


@pytest.mark.parametrize("n", range(1, 7))
def test_identities(n):
    D, E, G, P = op_D(n), op_E(n), op_Gamma(n), pi_matrix(n)
    assert P @ E == D @ P
    assert G @ E == D @ G
    ident = LinOperator.identity(n, "p")
    assert graded_component(E, 0) == ident * n
    assert graded_component(D, 0) == ident * n
    assert graded_component(G, 0) == P * (-1) ** n
    assert graded_component(E, n).is_zero()
    for op in (D, E, G):
        for k in range(-(n - 1), 0):
            assert graded_component(op, k).is_zero()


@pytest.mark.parametrize("n", range(1, 6))
def test_E_raises_age(n):
    e = op_E(n)
    for lam in partitions_of(n):
        assert all(age(nu) >= age(lam) for nu in e(p(*lam)).coeffs)


def test_nabla_constant_weights_is_identity():
    spec = Specialization.default(3)
    mb = macdonald_basis(3, spec)
    nab = nabla_F(FixedPointWeights.constant(3, spec), mb)
    assert nab == LinOperator.identity(3, "s", as_rf(1))
    assert bkr_transport(LinOperator.identity(3, "s", as_rf(1))) == LinOperator.identity(3, "s")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_nabla_delta_eigenvalues_reproduce_delta(n):
    spec = Specialization.default(n)
    mb = macdonald_basis(n, spec)
    nab = nabla_F(FixedPointWeights.delta_eigenvalues(n, spec), mb)
    assert nab == delta_matrix(n, spec).map(as_rf).to_basis("s")


@pytest.mark.parametrize("n", range(1, 6))
def test_pipeline_gives_E(n):
    spec = Specialization.default(n)
    mb = macdonald_basis(n, spec)
    w = FixedPointWeights.tautological(n, spec)
    assert transport(w, mb).to_basis("p") == op_E(n)
    assert transport(w, mb, "signed") == transport(w, mb, "classical")


def test_unit_weights_transport_to_identity():
    spec = Specialization.default(3)
    mb = macdonald_basis(3, spec)
    w = FixedPointWeights.dual_isotypic((3,), mb)
    assert transport(w, mb) == LinOperator.identity(3, "s")


def test_pole_at_one():
    # a weight 1/(1-t) on one fixed point cannot be evaluated at t = 1
    spec = Specialization.default(2)
    mb = macdonald_basis(2, spec)
    w = FixedPointWeights(2, spec, {
        mu: RationalFunction(Poly([1]), Poly([1, -1])) if i == 0 else as_rf(1)
        for i, mu in enumerate(partitions_of(2))
    })
    with pytest.raises(PoleAtOne):
        transport(w, mb)


def test_mismatched_specialization():
    mb = macdonald_basis(2, Specialization(2, 4))
    with pytest.raises(ValueError):
        nabla_F(FixedPointWeights.constant(2, Specialization(2, 5)), mb)
