import random
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cuntzsum.words import ArityError, Poly, is_reduced, multiply_words, normalize
from cuntzsum.randomgen import random_poly, rng_for

from conftest import raw_inputs, seeds


def gen(n, i):
    return Poly.generator(n, i)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_cuntz_relations(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            expected = Poly.unit(n) if i == j else Poly.zero(n)
            assert gen(n, i).adjoint() * gen(n, j) == expected
    total = Poly.zero(n)
    for i in range(1, n + 1):
        total = total + gen(n, i) * gen(n, i).adjoint()
    assert total == Poly.unit(n)


def test_rewrite_rule_example():
    # s_2 s_2^* in O_2 is rewritten through the range projection relation
    p = Poly.word(2, (2,), (2,))
    assert p.terms == {((), ()): 1, ((1,), (1,)): -1}


def test_rewrite_recurses():
    assert normalize(2, {((1, 2), (2, 2)): 1}) == {
        ((1,), (2,)): 1, ((1, 1), (2, 1)): -1}


def test_reduced_predicate():
    assert is_reduced(3, (3,), (1,))
    assert not is_reduced(3, (1, 3), (3,))
    assert is_reduced(3, (), (3,))
    assert not is_reduced(1, (1,), ())


def test_o1_collapses():
    assert Poly.generator(1, 1) == Poly.unit(1)
    assert normalize(1, {((1, 1), (1,)): 2, ((), ()): 3}) == {((), ()): 5}


def test_arity_errors():
    with pytest.raises(ArityError, match="index 3 exceeds arity 2"):
        Poly.generator(2, 3)
    with pytest.raises(ArityError):
        Poly.word(2, (0,), ())
    with pytest.raises(ArityError):
        gen(2, 1) + gen(3, 1)
    with pytest.raises(ArityError):
        multiply_words((2, (1,), ()), (3, (1,), ()))


def test_zero_coefficients_purged():
    p = gen(2, 1) - gen(2, 1)
    assert p.terms == {}
    assert not p


@given(raw_inputs(), seeds)
def test_normal_form_independent_of_rewrite_order(case, seed):
    n, raw = case
    assert normalize(n, raw, rng=random.Random(seed)) == normalize(n, raw)


@given(raw_inputs())
def test_normal_form_is_reduced_and_idempotent(case):
    n, raw = case
    out = normalize(n, raw)
    assert all(is_reduced(n, J, K) for J, K in out)
    assert normalize(n, out) == out


@st.composite
def polys(draw, n=None):
    n = n or draw(st.integers(min_value=2, max_value=4))
    return random_poly(rng_for(draw(seeds)), n, 3)


@given(st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.tuples(polys(n), polys(n), polys(n))))
def test_associative_and_distributive(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.integers(min_value=2, max_value=4).flatmap(lambda n: st.tuples(polys(n), polys(n))))
def test_star_laws(t):
    a, b = t
    assert (a * b).adjoint() == b.adjoint() * a.adjoint()
    assert a.adjoint().adjoint() == a
    assert (a + b).adjoint() == a.adjoint() + b.adjoint()


def test_scalars_and_unit():
    p = Poly.word(3, (1, 2), (3,), coeff=Fraction(2, 3))
    assert Poly.unit(3) * p == p == p * Poly.unit(3)
    assert 3 * p == p.scale(3)
    assert (p * 0).terms == {}
