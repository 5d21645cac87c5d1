import pytest
from hypothesis import given
import hypothesis.strategies as st

from cuntzsum.algebra import Element
from cuntzsum.bialgebra import delta
from cuntzsum.subalgebras import (Submonoid, check_cantor_duality, check_delta_closure, family,
                                  interleave, membership, monoid_divergences, tensor_in_family)
from cuntzsum.randomgen import random_element, rng_for

s = Element.generator


@pytest.mark.parametrize("desc", ["uhf", "cantor", "matrix:1", "matrix:2", "diag:1",
                                  "diag:2", "units", "uhf:2,3", "monoid:2,3", "monoid:5"])
def test_families_closed(desc):
    assert check_delta_closure(desc, max_n=12)


def test_monoid_four_not_closed():
    r = check_delta_closure("monoid:4", max_n=16)
    assert not r
    assert r.details["divergences"]["16"] == [[2, 8], [8, 2]]
    assert not r.details["prime_generated"]


def test_monoid_membership_and_divergences():
    H = Submonoid([2, 3])
    assert H.elements(12) == [1, 2, 3, 4, 6, 8, 9, 12]
    assert H.prime_generated
    assert monoid_divergences(H, 72) == {}
    four = monoid_divergences(Submonoid([4]), 64)
    assert four[16] == [(2, 8), (8, 2)]
    assert 4 in four  # (2, 2) already missing at n = 4
    with pytest.raises(ValueError):
        Submonoid([1])


def test_membership():
    assert membership(s(3, 1) * s(3, 2).adjoint(), "uhf")
    assert not membership(s(3, 1), "uhf")
    assert membership(Element.word(2, (2,), (2,)), "cantor")  # rewrites to I - s1 s1*
    assert membership(Element.word(2, (1, 2), (1, 2)), "matrix:2")
    assert not membership(Element.word(2, (1, 2), (1, 2)), "matrix:1")
    assert membership(Element.one() + Element.unit(4), "units")
    with pytest.raises(ValueError):
        family("bogus")


@given(st.integers(0, 2 ** 32 - 1))
def test_uhf_closure_on_random_members(seed):
    rng = rng_for(seed)
    x = random_element(rng, max_n=8, max_len=2)
    # project onto gauge-invariant words
    x = Element({k: c for k, c in x.terms.items() if len(k[1]) == len(k[2])})
    assert tensor_in_family(delta(x), family("uhf"))


def test_cantor_duality():
    assert interleave(3, (1, 2), (3, 1)) == (3, 4)
    for a, b in [(2, 2), (2, 3), (3, 2)]:
        assert check_cantor_duality(a, b, 2)
    with pytest.raises(ValueError):
        interleave(2, (1,), ())
