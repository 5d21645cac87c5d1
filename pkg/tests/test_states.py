from fractions import Fraction

import pytest
from hypothesis import given

from cuntzsum.algebra import Element
from cuntzsum.bialgebra import reduced_words
from cuntzsum.states import (check_haar_property, check_kms, check_kms_on_words,
                             compression_is_positive, counit_functional, derive_kms_state,
                             haar_evaluate, haar_state, haar_uniqueness_solver, kms_evaluate,
                             kms_state, mixture_evaluate, mixture_state, perturbed_kms_state,
                             validate_weights)

from conftest import elements

s = Element.generator


def test_haar_picks_adjoined_unit_coefficient():
    assert haar_evaluate(Element.one(3) + Element.unit(2) + s(5, 1)) == 3
    assert haar_evaluate(Element.unit(1)) == 0


@given(elements(max_n=10))
def test_haar_property(x):
    assert check_haar_property(haar_state(), x)


def test_counit_is_not_haar():
    r = check_haar_property(counit_functional(), Element.unit(2))
    assert not r


@pytest.mark.parametrize("N, L", [(1, 0), (4, 0), (6, 1), (12, 1)])
def test_haar_unique(N, L):
    sol = haar_uniqueness_solver(N, L)
    assert sol["unique"] and sol["is_haar"]
    assert sol["homogeneous_dimension"] == 1


def test_kms_closed_form():
    assert kms_evaluate(3, s(3, 1) * s(3, 1).adjoint()) == Fraction(1, 3)
    assert kms_evaluate(2, Element.word(2, (1, 2), (1, 2))) == Fraction(1, 4)
    assert kms_evaluate(2, Element.word(2, (1,), (2,))) == 0
    assert kms_evaluate(2, Element.unit(2)) == 1
    with pytest.raises(ValueError):
        kms_evaluate(2, s(3, 1))


@pytest.mark.parametrize("n", [2, 3])
def test_kms_derivation(n):
    r = derive_kms_state(n, 3)
    assert r["unique"] and r["matches_closed_form"] and r["hermitian"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_kms_condition_on_words(n):
    assert check_kms_on_words(n, 2)


def test_kms_element_level_agrees():
    x, y = s(2, 1) + Element.word(2, (2,), (1,)), s(2, 1).adjoint() + 2 * Element.unit(2)
    assert check_kms(2, x, y)


def test_perturbed_state_fails():
    r = check_kms_on_words(2, 2, perturbed_kms_state(2))
    assert not r
    assert r.witness["lhs"] != r.witness["rhs"]


def test_kms_state_positive_on_words():
    words = list(reduced_words(2, 2))
    assert compression_is_positive(kms_state(2), words)


def test_mixture():
    b = {2: Fraction(1, 2), 3: Fraction(1, 2)}
    assert mixture_evaluate(b, Element.unit(2)) == Fraction(1, 2)
    assert mixture_evaluate(b, Element.one() + s(3, 1) * s(3, 1).adjoint()) == Fraction(7, 6)
    assert compression_is_positive(mixture_state(b), list(reduced_words(2, 1)))
    with pytest.raises(ValueError):
        validate_weights({2: Fraction(1, 2)})
    with pytest.raises(ValueError):
        validate_weights({2: Fraction(3, 2), 3: Fraction(-1, 2)})
