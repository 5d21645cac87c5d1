"""Reduced words and polynomial arithmetic inside one Cuntz algebra O_n.

A word ``(J, K)`` of arity ``n`` stands for ``s_J s_K^*``.  Products of two
words collapse through ``s_i^* s_j = delta_ij``; the only relation that needs
rewriting afterwards is ``sum_i s_i s_i^* = 1``, used in the direction

    s_{J n} s_{K n}^*  ->  s_J s_K^* - sum_{i<n} s_{J i} s_{K i}^*

A word is *reduced* when ``J`` and ``K`` do not both end in the letter ``n``.
Reduced words form a linear basis of the polynomial algebra, so two
polynomials are equal exactly when their reduced term maps coincide.

In O_1 every word equals the unit (``s_1 = I_1``), so the only reduced word
is the empty one.
"""

from __future__ import annotations

from functools import lru_cache

from .scalars import is_zero, to_exact

EMPTY = ()
UNIT_WORD = ((), ())


class ArityError(ValueError):
    """A letter, word or polynomial does not fit the requested arity."""


def check_letters(n: int, letters) -> tuple:
    letters = tuple(letters)
    for a in letters:
        if not isinstance(a, int) or not 1 <= a <= n:
            raise ArityError(f"index {a} exceeds arity {n}" if isinstance(a, int) and a > n
                             else f"invalid letter {a!r} for arity {n}")
    return letters


def is_reduced(n: int, J: tuple, K: tuple) -> bool:
    if n == 1:
        return not J and not K
    return not (J and K and J[-1] == n and K[-1] == n)


def _accumulate(out: dict, key, c) -> None:
    v = out.get(key)
    v = c if v is None else v + c
    if is_zero(v):
        out.pop(key, None)
    else:
        out[key] = v


def normalize(n: int, raw, rng=None) -> dict:
    """Rewrite ``{(J, K): c}`` (or an iterable of pairs) into the reduced basis.

    ``rng`` (a ``random.Random``) shuffles the order in which pending terms
    are rewritten; the result does not depend on it.
    """
    items = list(raw.items()) if isinstance(raw, dict) else list(raw)
    out: dict = {}
    if n == 1:
        for (J, K), c in items:
            _accumulate(out, UNIT_WORD, c)
        return out
    stack = [((tuple(J), tuple(K)), c) for (J, K), c in items]
    while stack:
        if rng is not None:
            k = rng.randrange(len(stack))
            stack[k], stack[-1] = stack[-1], stack[k]
        (J, K), c = stack.pop()
        if J and K and J[-1] == n and K[-1] == n:
            J0, K0 = J[:-1], K[:-1]
            stack.append(((J0, K0), c))
            for i in range(1, n):
                stack.append(((J0 + (i,), K0 + (i,)), -c))
        else:
            _accumulate(out, (J, K), c)
    return out


@lru_cache(maxsize=1 << 16)
def _word_product(n: int, J1: tuple, K1: tuple, J2: tuple, K2: tuple) -> tuple:
    if len(K1) <= len(J2):
        if J2[: len(K1)] != K1:
            return ()
        raw = (((J1 + J2[len(K1):], K2), 1),)
    else:
        if K1[: len(J2)] != J2:
            return ()
        raw = (((J1, K2 + K1[len(J2):]), 1),)
    return tuple(normalize(n, raw).items())


def multiply_words(w1: tuple, w2: tuple) -> "Poly":
    """Normal form of ``(s_J1 s_K1^*)(s_J2 s_K2^*)``; words are ``(n, J, K)``."""
    (n1, J1, K1), (n2, J2, K2) = w1, w2
    if n1 != n2:
        raise ArityError(f"arity mismatch: {n1} vs {n2}")
    return Poly(n1, dict(_word_product(n1, tuple(J1), tuple(K1), tuple(J2), tuple(K2))), reduced=True)


def word_adjoint(w: tuple) -> tuple:
    J, K = w
    return (K, J)


class Poly:
    """A polynomial in O_n kept in reduced normal form.

    >>> s1 = Poly.generator(2, 1)
    >>> (s1.adjoint() * s1) == Poly.unit(2)
    True
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms=None, *, reduced=False):
        if n < 1:
            raise ArityError(f"arity must be positive, got {n}")
        self.n = n
        terms = terms or {}
        if not reduced:
            checked = {}
            for (J, K), c in terms.items():
                checked_key = (check_letters(n, J), check_letters(n, K))
                _accumulate(checked, checked_key, c if isinstance(c, (float, complex)) else to_exact(c))
            terms = normalize(n, checked)
        self.terms = terms
        self._hash = None

    @classmethod
    def generator(cls, n: int, i: int) -> "Poly":
        check_letters(n, (i,))
        return cls(n, {((i,), ()): 1})

    @classmethod
    def unit(cls, n: int) -> "Poly":
        return cls(n, {UNIT_WORD: 1}, reduced=True)

    @classmethod
    def word(cls, n: int, J=(), K=(), coeff=1) -> "Poly":
        return cls(n, {(tuple(J), tuple(K)): coeff})

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n, {}, reduced=True)

    def _same_arity(self, other: "Poly") -> None:
        if self.n != other.n:
            raise ArityError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Poly") -> "Poly":
        self._same_arity(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return Poly(self.n, out, reduced=True)

    def __neg__(self) -> "Poly":
        return Poly(self.n, {k: -c for k, c in self.terms.items()}, reduced=True)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        if is_zero(c):
            return Poly.zero(self.n)
        return Poly(self.n, {k: c * v for k, v in self.terms.items()}, reduced=True)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._same_arity(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                for w, c in _word_product(self.n, *w1, *w2):
                    _accumulate(out, w, c1 * c2 * c)
        return Poly(self.n, out, reduced=True)

    def __rmul__(self, c):
        return self.scale(c)

    def adjoint(self) -> "Poly":
        raw = {}
        for (J, K), c in self.terms.items():
            _accumulate(raw, (K, J), c.conjugate())
        return Poly(self.n, normalize(self.n, raw), reduced=True)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"Poly({self.n}, {dict(self.sorted_terms())!r})"


def adjoint(p: Poly) -> Poly:
    return p.adjoint()


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def scalar_multiply(c, p: Poly) -> Poly:
    return p.scale(c)
