from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mckay.heisenberg import (
    HeisenbergSum,
    HeisenbergTerm,
    apply,
    apply_word,
    commutator_holds,
    expand_named,
    omega_hat,
    omega_hat_inverse,
)
from mckay.operators import op_D, op_E
from mckay.partitions import partitions_of
from mckay.symfunc import SymFunc, p


def one():
    return SymFunc.basis_element("p", ())


def test_commutator_on_vacuum():
    assert apply_word([1, -1], one()) == SymFunc.zero(0, "p")
    assert apply_word([-1, 1], one()) == -one()


def test_annihilation_examples():
    assert apply_word([-2], p(2, 2)) == p(2) * -4
    assert not apply_word([-3], p(2))
    assert not apply_word([0], p(2))


def test_expansion_examples():
    assert expand_named("D", 2)(p(1, 1)) == p(1, 1) * 2 - p(2)
    assert expand_named("E", 2)(p(2)) == p(2) * 2
    # the single-part term of D is -b_k b_{-k}, which acts on p_k as k p_k
    assert apply(HeisenbergTerm(3, (3,), -1), p(3)) == p(3) * 3
    with pytest.raises(ValueError):
        expand_named("F", 2)


def test_omega_hat_example():
    s = omega_hat(HeisenbergSum([HeisenbergTerm(2, (1, 1), 1)]))
    assert s.terms[0].scalar == -2


def test_b0_terms_dropped():
    s = HeisenbergSum([(2, (1, 1), 1), (0, (1,), 5), (2, (2, 0), 3)])
    assert len(s) == 1


def test_like_terms_merge():
    s = HeisenbergSum([(2, (1, 1), 1), (2, (1, 1), -1), (1, (1,), 2)])
    assert [t.scalar for t in s] == [2]


@pytest.mark.parametrize("n", range(1, 7))
def test_expansions_match_subset_sums(n):
    d, e = expand_named("D", n), expand_named("E", n)
    assert d.matrix(n) == op_D(n)
    assert e.matrix(n) == op_E(n)
    assert omega_hat(d) == e
    assert omega_hat_inverse(e) == d


@pytest.mark.parametrize("n", range(1, 7))
def test_commutators(n):
    for a in range(1, n + 1):
        assert commutator_holds(a, n)


terms = st.builds(
    lambda nu, c: HeisenbergTerm(sum(nu), nu, c),
    st.lists(st.integers(1, 4), min_size=1, max_size=4),
    st.fractions(max_denominator=9).filter(bool),
)


@given(st.lists(terms, max_size=5))
def test_omega_hat_invertible(ts):
    s = HeisenbergSum(ts)
    assert omega_hat_inverse(omega_hat(s)) == s
    assert omega_hat(omega_hat_inverse(s)) == s


@given(st.integers(1, 4), st.integers(1, 4))
def test_distinct_modes_commute(a, b):
    f = p(2, 1, 1)
    if a != b:
        assert apply_word([a, -b], f) == apply_word([-b, a], f)
    assert apply_word([a, b], f) == apply_word([b, a], f)


def test_term_rendering():
    assert str(HeisenbergTerm(2, (1, 1), Fraction(1, 2))) == "(1/2) b_{2}b_{-1}b_{-1}"
