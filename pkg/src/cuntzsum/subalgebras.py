"""Subbialgebra families: membership predicates and closure under delta.

Predicates look at reduced normal forms.  Rewriting ``s_{Jn} s_{Kn}^*``
shortens both sides by one letter and adds terms of the original length,
so normal forms of gauge-invariant (``|J| = |K|``) or diagonal (``J = K``)
elements keep that shape, but lengths only stay *bounded* by ``l``, not
equal to it.  The matrix family ``M_{n^l}`` therefore tests
``|J| = |K| <= l``; every such word expands back to length ``l`` through
``sum_i s_i s_i^* = 1``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .algebra import ONE, Element, Tensor, as_element
from .bialgebra import CheckReport, delta, divisor_pairs, phi, split_letter


class Submonoid:
    """Multiplicative submonoid of the positive integers spanned by ``generators``."""

    def __init__(self, generators, bound: int = 10 ** 6):
        gens = sorted({int(g) for g in generators})
        if any(g < 2 for g in gens):
            raise ValueError("monoid generators must be >= 2")
        self.generators = tuple(gens)
        self.bound = bound

    @property
    def prime_generated(self) -> bool:
        return all(_is_prime(g) for g in self.generators)

    def __contains__(self, n: int) -> bool:
        if n > self.bound:
            raise ValueError(f"{n} exceeds the membership search bound {self.bound}")
        return _member(self.generators, n)

    def elements(self, max_n: int) -> list:
        return [n for n in range(1, max_n + 1) if n in self]

    def pairs(self, n: int) -> tuple:
        """``{(m, l) in H^2 : m*l = n}``."""
        return tuple((m, l) for m, l in divisor_pairs(n) if m in self and l in self)

    def __repr__(self):
        return f"Submonoid({list(self.generators)})"


@lru_cache(maxsize=None)
def _member(gens: tuple, n: int) -> bool:
    if n == 1:
        return True
    return any(n % g == 0 and _member(gens, n // g) for g in gens)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class Family:
    """A subalgebra family described by a predicate on basis keys."""

    def __init__(self, descriptor: str, predicate, monoid: Submonoid | None = None):
        self.descriptor = descriptor
        self._predicate = predicate
        self.monoid = monoid

    def contains_key(self, b: tuple) -> bool:
        if b[0] == 0:
            return True
        return self._predicate(b)

    def __contains__(self, x) -> bool:
        return membership(x, self)

    def samples(self, max_n: int) -> list:
        """Generator-level members for every allowed component ``<= max_n``."""
        kind, _, arg = self.descriptor.partition(":")
        comps = [n for n in range(1, max_n + 1) if self.monoid is None or n in self.monoid]
        out = []
        for n in comps:
            letters = range(1, n + 1)
            if kind == "units":
                out.append(Element.unit(n))
            elif kind == "cantor":
                out.extend(Element.word(n, (i,), (i,)) for i in letters)
            elif kind in ("matrix", "uhf"):
                out.extend(Element.word(n, (i,), (j,)) for i in letters for j in letters)
            elif kind == "diag":
                out.extend(Element.word(n, (i,), (i,)) for i in letters)
            elif kind == "monoid":
                out.append(Element.unit(n))
                out.extend(Element.generator(n, i) for i in letters)
        if kind in ("matrix", "diag") and int(arg) > 1:
            l = int(arg)
            for n in comps[:4]:
                words = list(itertools.product(range(1, n + 1), repeat=l))
                if kind == "matrix":
                    out.extend(Element.word(n, J, K) for J in words for K in words)
                else:
                    out.extend(Element.word(n, J, J) for J in words)
        return out

    def __repr__(self):
        return f"Family({self.descriptor!r})"


def family(descriptor: str) -> Family:
    """``uhf``, ``uhf:2,3``, ``cantor``, ``matrix:l``, ``diag:l``,
    ``monoid:2,3`` or ``units``."""
    kind, _, arg = descriptor.strip().partition(":")
    if kind == "uhf" and not arg:
        return Family("uhf", lambda b: len(b[1]) == len(b[2]))
    if kind == "uhf":
        H = Submonoid(int(a) for a in arg.split(","))
        return Family(descriptor, lambda b: b[0] in H and len(b[1]) == len(b[2]), H)
    if kind == "cantor" and not arg:
        return Family("cantor", lambda b: b[1] == b[2])
    if kind == "units" and not arg:
        return Family("units", lambda b: not b[1] and not b[2])
    if kind in ("matrix", "diag"):
        try:
            l = int(arg)
        except ValueError:
            raise ValueError(f"family {descriptor!r} needs an integer level") from None
        if l < 0:
            raise ValueError("level must be nonnegative")
        if kind == "matrix":
            return Family(descriptor, lambda b: len(b[1]) == len(b[2]) <= l)
        return Family(descriptor, lambda b: b[1] == b[2] and len(b[1]) <= l)
    if kind == "monoid" and arg:
        H = Submonoid(int(a) for a in arg.split(","))
        return Family(descriptor, lambda b: b[0] in H, H)
    raise ValueError(f"unknown family descriptor {descriptor!r}")


def membership(x, fam) -> bool:
    if isinstance(fam, str):
        fam = family(fam)
    x = as_element(x)
    return all(fam.contains_key(b) for b in x.terms)


def tensor_in_family(t: Tensor, fam: Family) -> bool:
    return all(fam.contains_key(b) for key in t.terms for b in key)


def monoid_divergences(H: Submonoid, max_n: int) -> dict:
    """``n -> missing pairs`` for ``n in H`` where ``N_n(H) != N_n``."""
    out = {}
    for n in H.elements(max_n):
        missing = [p for p in divisor_pairs(n) if p not in H.pairs(n)]
        if missing:
            out[n] = missing
    return out


def check_delta_closure(fam, samples=None, max_n: int = 12) -> CheckReport:
    """Every graded term of ``delta(x)`` must have both slots in the family."""
    if isinstance(fam, str):
        fam = family(fam)
    samples = fam.samples(max_n) if samples is None else [as_element(s) for s in samples]
    witness = None
    for x in samples:
        if not membership(x, fam):
            raise ValueError(f"sample {x} is not in {fam.descriptor}")
        d = delta(x)
        if not tensor_in_family(d, fam):
            bad = next(k for k in sorted(d.terms) if not all(fam.contains_key(b) for b in k))
            witness = {"x": str(x), "term": str(Tensor(2, {bad: d.terms[bad]}))}
            break
    closed = witness is None
    details = {"samples": len(samples)}
    if fam.monoid is not None:
        div = monoid_divergences(fam.monoid, max_n)
        details.update({
            "prime_generated": fam.monoid.prime_generated,
            "agrees_with_restricted_delta": not div,
            "divergences": {str(n): [list(p) for p in v] for n, v in div.items()},
        })
    return CheckReport("closure", closed, {"family": fam.descriptor, "max_n": max_n}, witness, details)


def interleave(b: int, J, K) -> tuple:
    """Letterwise ``b(j-1) + k``."""
    J, K = tuple(J), tuple(K)
    if len(J) != len(K):
        raise ValueError(f"cannot interleave words of lengths {len(J)} and {len(K)}")
    return tuple(b * (j - 1) + k for j, k in zip(J, K))


def check_cantor_duality(a: int, b: int, length_bound: int) -> CheckReport:
    """``phi(a,b)(s_R s_R^*) = s_S s_S^* (x) s_T s_T^*`` with ``R = S*T``,
    for every ``R`` over ``{1..ab}`` of length ``<= length_bound``."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    checked = 0
    for length in range(length_bound + 1):
        for R in itertools.product(range(1, a * b + 1), repeat=length):
            parts = [split_letter(b, r) for r in R]
            S = tuple(p[0] for p in parts)
            T = tuple(p[1] for p in parts)
            lhs = phi(a, b, Element.word(a * b, R, R))
            rhs = Tensor.pure(Element.word(a, S, S), Element.word(b, T, T))
            checked += 1
            if interleave(b, S, T) != R or lhs != rhs:
                return CheckReport("cantor", False, {"a": a, "b": b, "length_bound": length_bound},
                                   {"R": list(R), "lhs": str(lhs), "rhs": str(rhs)})
    return CheckReport("cantor", True, {"a": a, "b": b, "length_bound": length_bound},
                       details={"words_checked": checked})
