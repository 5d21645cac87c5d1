from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cuntzsum.scalars import GaussianRational, I, format_scalar, gauss, is_zero, parse_scalar, to_exact

rationals = st.fractions(max_denominator=50)
gaussians = st.builds(gauss, rationals, rationals)


def test_i_squared():
    assert I * I == -1
    assert isinstance(I * I, Fraction)


def test_gauss_collapses_to_fraction():
    assert gauss(Fraction(1, 2), 0) == Fraction(1, 2)
    assert type(gauss(3, 0)) is Fraction


def test_division():
    z = gauss(1, 1)
    assert z / z == 1
    assert 1 / z == gauss(Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(ZeroDivisionError):
        z / 0


@pytest.mark.parametrize("value, text", [
    (Fraction(1, 2), "1/2"),
    (Fraction(-3), "-3"),
    (gauss(0, 1), "i"),
    (gauss(0, -1), "-i"),
    (gauss(Fraction(1, 2), Fraction(3, 4)), "1/2+3/4i"),
    (gauss(-1, Fraction(-2, 3)), "-1-2/3i"),
])
def test_format(value, text):
    assert format_scalar(value) == text
    assert parse_scalar(text) == value


@given(gaussians)
def test_format_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


@given(gaussians, gaussians, gaussians)
def test_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b != 0:
        assert (a / b) * b == a


def test_float_mixing_and_tolerance():
    z = GaussianRational(1, 1)
    assert isinstance(z * 1.0, complex)
    assert is_zero(1e-13)
    assert not is_zero(Fraction(1, 10 ** 20))


def test_to_exact():
    assert to_exact("2/3") == Fraction(2, 3)
    assert to_exact(0.5) == Fraction(1, 2)
    with pytest.raises(TypeError):
        to_exact(True)
    with pytest.raises(ValueError):
        parse_scalar("1/2 + x")
