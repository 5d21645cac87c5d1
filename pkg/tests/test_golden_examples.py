"""Worked examples frozen as golden values."""

from fractions import Fraction

import pytest

from cuntzsum.algebra import Element, Tensor
from cuntzsum.bialgebra import (apply_W, cancellation_witness, check_pentagon, counit, delta,
                                delta_is_homomorphism)
from cuntzsum.randomgen import random_reduced_word, rng_for
from cuntzsum.representations import (act, act_tensor, orbit_analysis, product_system,
                                      square_window, standard_system)
from cuntzsum.states import (check_haar_property, check_kms, counit_functional,
                             haar_uniqueness_solver, kms_evaluate, mixture_evaluate)
from cuntzsum.bialgebra import phi
from cuntzsum.structure import rho, kappa_at_i
from cuntzsum.subalgebras import Submonoid, check_cantor_duality, interleave
from cuntzsum.words import Poly, normalize

s = Element.generator
I = Element.unit


def test_single_rewrite_step_n3():
    assert normalize(3, {((1, 3), (2, 3)): 1}) == {
        ((1,), (2,)): 1, ((1, 1), (2, 1)): -1, ((1, 2), (2, 2)): -1}


def test_delta_of_unit_four():
    assert str(delta(I(4))) == "I(1) ⊗ I(4) + I(2) ⊗ I(2) + I(4) ⊗ I(1)"


def test_counit_example():
    assert counit(Element.one(3) + 5 * I(1) + s(2, 1)) == 8


def test_W_on_units():
    assert apply_W(Tensor.pure(I(2), I(2))) == Tensor.pure(I(1), I(2))


@pytest.mark.parametrize("n", [6, 12])
def test_delta_multiplicative_on_random_three_term(n):
    rng = rng_for(n)
    x = Element.from_raw({random_reduced_word(rng, n, 2): k + 1 for k in range(3)})
    y = Element.from_raw({random_reduced_word(rng, n, 2): k - 1 for k in range(3)})
    assert delta_is_homomorphism(x, y)


def test_pentagon_example():
    assert check_pentagon(s(2, 1), s(3, 1), I(2))


def test_rho_example():
    assert rho(s(2, 1)) == (Element.word(2, (1, 1), (1,)) + Element.word(2, (2, 1), (2,)))


def test_kappa_at_i_scaling():
    assert kappa_at_i(Element.word(3, (1, 2), (3,))) == 3 * Element.word(3, (1, 2), (3,))


def test_counit_is_not_haar_on_I2():
    assert not check_haar_property(counit_functional(), I(2))


def test_haar_solver_units_only():
    sol = haar_uniqueness_solver(12, 0)
    assert sol["unique"] and sol["nonzero_values"] == {"one": "1"}


def test_haar_solver_words():
    sol = haar_uniqueness_solver(6, 1)
    assert sol["unique"] and sol["nonzero_values"] == {"one": "1"}


def test_kms_examples():
    assert kms_evaluate(2, s(2, 1) * s(2, 1).adjoint()) == Fraction(1, 2)
    assert check_kms(2, s(2, 1), s(2, 1).adjoint())


def test_mixture_examples():
    assert mixture_evaluate({2: 1}, s(2, 1) * s(2, 1).adjoint()) == Fraction(1, 2)
    assert mixture_evaluate({2: Fraction(1, 2), 3: Fraction(1, 2)}, I(2)) == Fraction(1, 2)


def test_monoid_four_divergence_at_16():
    H = Submonoid([4])
    assert H.pairs(16) == ((1, 16), (4, 4), (16, 1))


def test_interleave_example():
    assert interleave(3, (2, 1), (3, 1)) == (6, 1)


def test_cantor_all_36_words():
    r = check_cantor_duality(2, 3, 2)
    assert r and r.details["words_checked"] == 1 + 6 + 36


def test_window_validation():
    assert standard_system(3).validate_window(range(1, 101))
    assert product_system(standard_system(2), standard_system(3)).validate_window(square_window(20))


def test_range_projections_sum_to_identity():
    sys2 = standard_system(2)
    p = Poly.word(2, (1,), (1,)) + Poly.word(2, (2,), (2,))
    for k in range(1, 51):
        assert act(sys2, p, {k: 1}) == {k: 1}


def test_product_action_example():
    s2, s3 = standard_system(2), standard_system(3)
    prod = product_system(s2, s3)
    lhs = act(prod, s(6, 4), {(1, 1): 1})
    rhs = act_tensor(s2, s3, phi(2, 3, s(6, 4)), {(1, 1): 1})
    assert lhs == rhs == {(2, 1): 1}


def test_orbit_examples():
    r = orbit_analysis(standard_system(2), range(1, 11))
    assert r["cycles"] == [{"word": [1], "representative": 1, "members": 10}]
    r = orbit_analysis(product_system(standard_system(2), standard_system(2)), square_window(10))
    assert r["arity"] == 4
    assert r["cycles"] == [{"word": [1], "representative": [1, 1], "members": 100}]


@pytest.mark.parametrize("x", [s(2, 1), I(2)])
def test_cancellation_examples_with_adjoined_unit(x):
    # x (x) 1 is outside the truncated span; x (x) I_1 is inside
    assert cancellation_witness(x, 2, 6, partner="one")
    assert not cancellation_witness(x, 2, 6, partner="I1")
