from fractions import Fraction

import pytest
from hypothesis import given

from cuntzsum.algebra import Element, Tensor
from cuntzsum.bialgebra import delta
from cuntzsum.parser import (Add, Adjoint, Call, EvaluationError, Gen, Mul, Num, ParseError,
                             evaluate, format_value, parse)
from cuntzsum.scalars import I
from cuntzsum.words import ArityError

from conftest import elements

s = Element.generator


def test_adjoint_binds_tighter_than_product():
    assert parse("s(2,1)' s(2,1)") == Mul(Adjoint(Gen(2, 1)), Gen(2, 1))
    assert evaluate("s(2,1)' s(2,1)") == Element.unit(2)


def test_precedence():
    assert parse("s(2,1) + s(2,2) s(2,1)") == Add(Gen(2, 1), Mul(Gen(2, 2), Gen(2, 1)))
    assert parse("2 s(2,1)") == Mul(Num(Fraction(2)), Gen(2, 1))
    assert parse("delta(s(6,2))") == Call("delta", (Gen(6, 2),))


def test_delta_s62_print():
    assert str(evaluate("delta(s(6,2))")) == (
        "I(1) ⊗ s(6,2) + s(2,1) ⊗ s(3,2) + s(3,1) ⊗ s(2,2) + s(6,2) ⊗ I(1)")


def test_arity_error_at_elaboration():
    parse("s(2,3)")  # syntactically fine
    with pytest.raises(ArityError, match="index 3 exceeds arity 2"):
        evaluate("s(2,3)")


@pytest.mark.parametrize("text, line, column", [
    ("s(2,", 1, 5),
    ("s(2,1) +", 1, 9),
    ("s(2,1)\n  + #", 2, 5),
    ("(s(2,1)", 1, 8),
])
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert err.value.expected or "unexpected character" in str(err.value)


def test_scalars_and_functions():
    assert evaluate("(1/2+3/4i) s(2,1)") == (Fraction(1, 2) + Fraction(3, 4) * I) * s(2, 1)
    assert evaluate("eps(3 one + I(1) + s(2,1))") == 4
    assert evaluate("haar(2 one + I(2))") == 2
    assert evaluate("kms(2, s(2,1) s(2,1)')") == Fraction(1, 2)
    assert evaluate("phi(2,3,s(6,2))") == Tensor.pure(s(2, 1), s(3, 2))
    assert evaluate("rho(one)") == Element.one()
    assert evaluate("alpha(zeta, s(3,1))") == s(3, 3)
    assert evaluate("gauge(i, s(3,2))") == I * s(3, 2)
    assert evaluate("kappa(i, s(2,1))") == 2 * s(2, 1)
    assert evaluate("W(I(1) @ s(2,1))") == Tensor.zero(2)
    assert evaluate("flip(s(2,1) ⊗ one)") == Tensor.pure(Element.one(), s(2, 1))


def test_alpha_from_file(tmp_path):
    path = tmp_path / "fam.json"
    path.write_text('{"type": "permutation", "entries": {"2": [2, 1], "3": [3, 2, 1]}}')
    assert evaluate(f'alpha("{path}", s(6,1))') == s(6, 6)


def test_evaluation_errors():
    for text in ["nope(s(2,1))", "delta(s(2,1), s(2,2))", "W(s(2,1))",
                 "s(2,1) (s(2,1) ⊗ s(2,1))", "s(2,1) + s(2,1) ⊗ s(2,1)", "alpha(what, s(2,1))"]:
        with pytest.raises(EvaluationError):
            evaluate(text)


def test_float_backend():
    v = evaluate("1/2 s(2,1)", backend="float")
    assert isinstance(v.terms[(2, (1,), ())], complex)
    assert isinstance(evaluate("kappa(1, s(2,1))", backend="float").terms[(2, (1,), ())], complex)
    assert "2^(-i)" in format_value(evaluate("kappa(1, s(2,1))"))


@given(elements(max_n=8, max_len=3))
def test_print_parse_round_trip(x):
    assert evaluate(str(x)) == x


@given(elements(max_n=6, max_len=1, max_components=2), elements(max_n=6, max_len=1))
def test_tensor_round_trip(x, y):
    t = delta(x) + Tensor.pure(x, y)
    assert evaluate(str(t)) == t
