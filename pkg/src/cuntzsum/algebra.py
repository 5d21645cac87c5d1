"""The algebraic direct sum of the O_n, its unitization and tensor powers.

Basis elements are keyed by triples ``(n, J, K)`` meaning ``s_J s_K^*`` in
component ``n``.  The adjoined unit of the unitization is the key
:data:`ONE` ``= (0, (), ())``; component ``0`` is reserved for it, so it is
never confused with a component unit ``I_n = (n, (), ())``.

:class:`Element` is an element ``a*1 + x`` of the unitization and
:class:`Tensor` a finite sum of pure tensors of such elements.  Keeping the
adjoined unit as an ordinary basis key lets ``1 (x) 1``, ``x (x) 1`` and
``1 (x) x`` all live in the same container; the image of the
comultiplication only ever uses ``1 (x) 1`` plus terms with both slots in
genuine components.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache

from .scalars import format_scalar, is_zero, parse_scalar, to_exact
from .words import (
    ArityError,
    Poly,
    _accumulate,
    _word_product,
    check_letters,
    normalize,
)

ONE = (0, (), ())


def unit_key(n: int) -> tuple:
    return (n, (), ())


def generator_key(n: int, i: int) -> tuple:
    check_letters(n, (i,))
    return (n, (i,), ()) if n > 1 else (1, (), ())


@lru_cache(maxsize=1 << 17)
def basis_product(a: tuple, b: tuple) -> tuple:
    """Product of two basis keys as a tuple of ``(key, coeff)`` pairs."""
    if a[0] == 0:
        return ((b, 1),)
    if b[0] == 0:
        return ((a, 1),)
    n = a[0]
    if n != b[0]:
        return ()
    return tuple(((n, J, K), c) for (J, K), c in _word_product(n, a[1], a[2], b[1], b[2]))


def _coerce(c):
    if isinstance(c, (float, complex)):
        return c
    return to_exact(c)


class Element:
    """``a*1 + x`` with ``x`` a finitely supported sum over components."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_raw(cls, raw) -> "Element":
        """Build from ``{(n, J, K): c}`` with arbitrary (unreduced) words."""
        by_comp: dict = {}
        out: dict = {}
        for (n, J, K), c in raw.items():
            c = _coerce(c)
            if n == 0:
                if J or K:
                    raise ArityError("the adjoined unit carries no word")
                _accumulate(out, ONE, c)
                continue
            if n < 0:
                raise ArityError(f"invalid component {n}")
            J, K = check_letters(n, J), check_letters(n, K)
            _accumulate(by_comp.setdefault(n, {}), (J, K), c)
        for n, raw_n in by_comp.items():
            for (J, K), c in normalize(n, raw_n).items():
                _accumulate(out, (n, J, K), c)
        return cls(out)

    @classmethod
    def one(cls, c=1) -> "Element":
        return cls({ONE: _coerce(c)} if not is_zero(c) else {})

    @classmethod
    def zero(cls) -> "Element":
        return cls({})

    @classmethod
    def unit(cls, n: int) -> "Element":
        return cls({unit_key(n): 1})

    @classmethod
    def generator(cls, n: int, i: int) -> "Element":
        return cls({generator_key(n, i): 1})

    @classmethod
    def word(cls, n: int, J=(), K=(), coeff=1) -> "Element":
        return cls.from_raw({(n, tuple(J), tuple(K)): coeff})

    @classmethod
    def basis(cls, key) -> "Element":
        return cls({key: 1})

    # -- access -------------------------------------------------------------

    @property
    def unit_coeff(self):
        return self.terms.get(ONE, 0)

    @property
    def body(self) -> "Element":
        return Element({k: c for k, c in self.terms.items() if k[0] != 0})

    def support(self) -> list:
        return sorted({k[0] for k in self.terms if k[0] != 0})

    def component(self, n: int) -> Poly:
        return Poly(n, {(J, K): c for (m, J, K), c in self.terms.items() if m == n}, reduced=True)

    def components(self) -> dict:
        return {n: self.component(n) for n in self.support()}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = as_element(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return Element(out)

    __radd__ = __add__

    def __neg__(self):
        return Element({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-as_element(other))

    def __rsub__(self, other):
        return as_element(other) - self

    def scale(self, c) -> "Element":
        if is_zero(c):
            return Element()
        return Element({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Element):
            if isinstance(other, Tensor):
                return NotImplemented
            return self.scale(other)
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                for k, c in basis_product(a, b):
                    _accumulate(out, k, ca * cb * c)
        return Element(out)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int):
        result = Element.one()
        for _ in range(k):
            result = result * self
        return result

    def adjoint(self) -> "Element":
        raw = {}
        for (n, J, K), c in self.terms.items():
            raw[(n, K, J)] = c.conjugate()
        return Element.from_raw(raw)

    @property
    def star(self) -> "Element":
        return self.adjoint()

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if isinstance(other, Tensor):
            return NotImplemented
        try:
            return self.terms == as_element(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def as_tensor(self) -> "Tensor":
        return Tensor(1, {(k,): c for k, c in self.terms.items()})

    # -- printing / serialization -------------------------------------------

    def __str__(self):
        return format_terms(((k,), c) for k, c in self.sorted_terms())

    def __repr__(self):
        return f"Element({self})"

    def to_json(self) -> dict:
        return {
            "unit": format_scalar(self.unit_coeff),
            "terms": [
                {"component": n, "left": list(J), "right": list(K), "coeff": format_scalar(c)}
                for (n, J, K), c in self.sorted_terms()
                if n != 0
            ],
        }

    @classmethod
    def from_json(cls, data) -> "Element":
        if isinstance(data, str):
            data = json.loads(data)
        raw = {ONE: parse_scalar(data.get("unit", "0"))}
        for t in data.get("terms", []):
            key = (int(t["component"]), tuple(t["left"]), tuple(t["right"]))
            raw[key] = raw.get(key, 0) + parse_scalar(t["coeff"])
        return cls.from_raw(raw)


def as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    if isinstance(x, Poly):
        return embed_component(x.n, x)
    if isinstance(x, (Tensor, bool)) or x is None:
        raise TypeError(f"not an element: {x!r}")
    return Element.one(_coerce(x))


def embed_component(n: int, p: Poly) -> Element:
    """The image of ``p`` under the inclusion of O_n into the direct sum."""
    if p.n != n:
        raise ArityError(f"polynomial has arity {p.n}, not {n}")
    return Element({(n, J, K): c for (J, K), c in p.terms.items()})


class Tensor:
    """Finite sums of pure tensors ``b_1 (x) ... (x) b_k`` of basis keys.

    Multiplication is slotwise; rank 0 holds a bare scalar under the key ``()``.
    """

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        self.terms = terms if terms is not None else {}
        self._hash = None

    @classmethod
    def zero(cls, rank: int) -> "Tensor":
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int, c=1) -> "Tensor":
        return cls(rank, {(ONE,) * rank: c} if not is_zero(c) else {})

    @classmethod
    def pure(cls, *factors) -> "Tensor":
        """Tensor product of elements (or tensors), expanded bilinearly."""
        result = Tensor(0, {(): 1})
        for f in factors:
            result = result.otimes(f)
        return result

    @property
    def unit_coeff(self):
        return self.terms.get((ONE,) * self.rank, 0)

    @property
    def graded(self) -> "Tensor":
        """Terms with every slot in a genuine component."""
        return Tensor(self.rank, {k: c for k, c in self.terms.items() if all(b[0] for b in k)})

    def grades(self) -> list:
        return sorted({tuple(b[0] for b in k) for k in self.terms})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check_rank(self, other: "Tensor") -> None:
        if self.rank != other.rank:
            raise ValueError(f"tensor rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        other = as_tensor(other, self.rank)
        self._check_rank(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return Tensor(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return Tensor(self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-as_tensor(other, self.rank))

    def __rsub__(self, other):
        return as_tensor(other, self.rank) - self

    def scale(self, c) -> "Tensor":
        if is_zero(c):
            return Tensor(self.rank)
        return Tensor(self.rank, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            other = other.as_tensor()
        if not isinstance(other, Tensor):
            return self.scale(other)
        self._check_rank(other)
        out: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                for k, c in _key_product(ka, kb):
                    _accumulate(out, k, ca * cb * c)
        return Tensor(self.rank, out)

    def __rmul__(self, c):
        if isinstance(c, Element):
            return c.as_tensor() * self
        return self.scale(c)

    def adjoint(self) -> "Tensor":
        out: dict = {}
        for key, c in self.terms.items():
            factors = [basis_adjoint(b) for b in key]
            for combo in itertools.product(*factors):
                coeff = c.conjugate()
                for _, cb in combo:
                    coeff = coeff * cb
                _accumulate(out, tuple(b for b, _ in combo), coeff)
        return Tensor(self.rank, out)

    def otimes(self, other) -> "Tensor":
        if isinstance(other, Element):
            other = other.as_tensor()
        elif not isinstance(other, Tensor):
            return self.scale(other)
        out: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                _accumulate(out, ka + kb, ca * cb)
        return Tensor(self.rank + other.rank, out)

    def permute(self, order) -> "Tensor":
        """Slot ``j`` of the result is slot ``order[j]`` of ``self``."""
        order = tuple(order)
        return Tensor(self.rank, {tuple(k[i] for i in order): c for k, c in self.terms.items()})

    def flip(self) -> "Tensor":
        if self.rank != 2:
            raise ValueError("flip needs a rank-2 tensor")
        return self.permute((1, 0))

    def map_slot(self, i: int, f, out_rank: int) -> "Tensor":
        """Apply the linear map ``f`` (basis key -> Tensor of ``out_rank``)
        to slot ``i``; the result has rank ``rank - 1 + out_rank``."""
        cache: dict = {}
        out: dict = {}
        for key, c in self.terms.items():
            b = key[i]
            img = cache.get(b)
            if img is None:
                img = cache[b] = f(b)
            pre, post = key[:i], key[i + 1:]
            for k2, c2 in img.terms.items():
                _accumulate(out, pre + k2 + post, c * c2)
        return Tensor(self.rank - 1 + out_rank, out)

    def apply_functional(self, i: int, omega) -> "Tensor":
        """Evaluate a scalar functional (basis key -> scalar) in slot ``i``."""
        return self.map_slot(i, lambda b: Tensor(0, {(): omega(b)} if not is_zero(omega(b)) else {}), 0)

    def to_element(self) -> Element:
        if self.rank != 1:
            raise ValueError(f"rank {self.rank} tensor is not an element")
        return Element({k[0]: c for k, c in self.terms.items()})

    def to_scalar(self):
        if self.rank != 0:
            raise ValueError(f"rank {self.rank} tensor is not a scalar")
        return self.terms.get((), 0)

    def __eq__(self, other):
        if isinstance(other, Tensor):
            return self.rank == other.rank and self.terms == other.terms
        if isinstance(other, Element):
            return self.rank == 1 and self.to_element() == other
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return format_terms(self.sorted_terms())

    def __repr__(self):
        return f"Tensor[{self.rank}]({self})"

    def to_json(self) -> dict:
        def slot(b):
            if b[0] == 0:
                return None
            return {"component": b[0], "left": list(b[1]), "right": list(b[2])}

        return {
            "rank": self.rank,
            "unit": format_scalar(self.unit_coeff),
            "terms": [
                {"slots": [slot(b) for b in key], "coeff": format_scalar(c)}
                for key, c in self.sorted_terms()
                if any(b[0] for b in key)
            ],
        }

    @classmethod
    def from_json(cls, data) -> "Tensor":
        if isinstance(data, str):
            data = json.loads(data)
        rank = int(data["rank"])
        t = Tensor.one(rank, parse_scalar(data.get("unit", "0")))
        for term in data.get("terms", []):
            factors = []
            for s in term["slots"]:
                if s is None:
                    factors.append(Element.one())
                else:
                    factors.append(Element.word(int(s["component"]), s["left"], s["right"]))
            t = t + Tensor.pure(*factors).scale(parse_scalar(term["coeff"]))
        return t


def as_tensor(x, rank: int) -> Tensor:
    if isinstance(x, Tensor):
        return x
    if isinstance(x, Element):
        return x.as_tensor()
    return Tensor.one(rank, _coerce(x))


@lru_cache(maxsize=1 << 16)
def basis_adjoint(b: tuple) -> tuple:
    n, J, K = b
    if n == 0:
        return ((ONE, 1),)
    return tuple(((n, J2, K2), c) for (J2, K2), c in normalize(n, {(K, J): 1}).items())


def _key_product(ka: tuple, kb: tuple):
    parts = []
    for a, b in zip(ka, kb):
        p = basis_product(a, b)
        if not p:
            return ()
        parts.append(p)
    if all(len(p) == 1 for p in parts):
        coeff = 1
        for p in parts:
            coeff = coeff * p[0][1]
        return ((tuple(p[0][0] for p in parts), coeff),)
    out = []
    for combo in itertools.product(*parts):
        coeff = 1
        for _, c in combo:
            coeff = coeff * c
        out.append((tuple(k for k, _ in combo), coeff))
    return out


# -- canonical printing ------------------------------------------------------


def format_key(b: tuple) -> str:
    n, J, K = b
    if n == 0:
        return "one"
    if not J and not K:
        return f"I({n})"
    parts = [f"s({n},{j})" for j in J] + [f"s({n},{k})'" for k in reversed(K)]
    return " ".join(parts)


def format_terms(items) -> str:
    """Canonical text of ``[(key_tuple, coeff), ...]`` in the given order."""
    pieces = []
    for key, c in items:
        body = " ⊗ ".join(format_key(b) for b in key) if key else ""
        negative = False
        if not isinstance(c, complex) and c.imag == 0 and c.real < 0:
            negative, c = True, -c
        if not body:
            text = _coeff_text(c, standalone=True)
        elif c == 1:
            text = body
        else:
            text = f"{_coeff_text(c)} {body}"
        if not pieces:
            pieces.append(("-" if negative else "") + text)
        else:
            pieces.append((" - " if negative else " + ") + text)
    return "".join(pieces) if pieces else "0"


def _coeff_text(c, standalone=False) -> str:
    s = format_scalar(c)
    if not isinstance(c, complex) and c.imag == 0:
        return s
    return f"({s})"
