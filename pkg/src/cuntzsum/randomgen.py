"""Seeded random words, raw term lists and elements for randomized suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import ONE, Element
from .scalars import gauss
from .words import Poly, is_reduced


def rng_for(seed) -> random.Random:
    return random.Random(seed)


def random_letters(rng: random.Random, n: int, max_len: int) -> tuple:
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len)))


def random_coeff(rng: random.Random, complex_rate: float = 0.2):
    re = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    if rng.random() < complex_rate:
        return gauss(re, Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
    return re


def random_raw(rng: random.Random, n: int, max_len: int, max_terms: int = 20) -> dict:
    """Unreduced ``{(J, K): c}`` in O_n."""
    raw: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (random_letters(rng, n, max_len), random_letters(rng, n, max_len))
        raw[key] = raw.get(key, 0) + random_coeff(rng)
    return {k: c for k, c in raw.items() if c != 0}


def random_reduced_word(rng: random.Random, n: int, max_len: int) -> tuple:
    while True:
        J, K = random_letters(rng, n, max_len), random_letters(rng, n, max_len)
        if is_reduced(n, J, K):
            return (n, J, K)


def random_poly(rng: random.Random, n: int, max_len: int, max_terms: int = 4) -> Poly:
    raw = {}
    for _ in range(rng.randint(1, max_terms)):
        _, J, K = random_reduced_word(rng, n, max_len)
        raw[(J, K)] = raw.get((J, K), 0) + random_coeff(rng)
    return Poly(n, raw)


def random_element(rng: random.Random, max_n: int = 12, max_len: int = 2, max_terms: int = 3,
                   max_components: int = 3, unit: bool = True) -> Element:
    """A few reduced words spread over at most ``max_components`` components,
    optionally plus a multiple of the adjoined unit."""
    comps = rng.sample(range(1, max_n + 1), rng.randint(1, min(max_components, max_n)))
    raw = {}
    for _ in range(rng.randint(1, max_terms)):
        n = rng.choice(comps)
        key = random_reduced_word(rng, n, max_len)
        raw[key] = raw.get(key, 0) + random_coeff(rng)
    if unit and rng.random() < 0.3:
        raw[ONE] = random_coeff(rng)
    return Element.from_raw(raw)


def random_nonzero_poly(rng: random.Random, n: int, max_len: int, max_terms: int = 4) -> Poly:
    while True:
        p = random_poly(rng, n, max_len, max_terms)
        if p:
            return p
