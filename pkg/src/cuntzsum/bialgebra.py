"""Comultiplication, counit and the derived bialgebra checks.

The comultiplication of a word in component ``n`` is the sum over all
factorizations ``n = m*l`` of the letter-splitting maps ``phi(m, l)``, which
send the letter ``r = l*(i-1) + j`` of O_{ml} to ``s_i (x) s_j``.  The
adjoined unit goes to ``1 (x) 1`` and the counit reads off the adjoined-unit
coefficient plus the coefficient of ``I_1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import ONE, Element, Tensor, as_element, basis_product, unit_key
from .linalg import Echelon
from .words import ArityError, Poly, _accumulate, normalize


@dataclass
class CheckReport:
    """Outcome of an executable identity check; truthy iff it passed."""

    check: str
    passed: bool
    input: dict = field(default_factory=dict)
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"check": self.check, "result": "pass" if self.passed else "fail", "input": self.input}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        return out


@lru_cache(maxsize=None)
def divisor_pairs(n: int) -> tuple:
    """All ``(m, l)`` with ``m*l == n``, ordered by ``m``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return tuple((m, n // m) for m in range(1, n + 1) if n % m == 0)


def split_letter(m: int, r: int) -> tuple:
    """``r = m*(i-1) + j`` with ``1 <= j <= m``; returns ``(i, j)``."""
    return (r - 1) // m + 1, (r - 1) % m + 1


@lru_cache(maxsize=1 << 16)
def _phi_word(n: int, m: int, J: tuple, K: tuple) -> tuple:
    JL, JR = zip(*(split_letter(m, r) for r in J)) if J else ((), ())
    KL, KR = zip(*(split_letter(m, r) for r in K)) if K else ((), ())
    left = normalize(n, {(tuple(JL), tuple(KL)): 1})
    right = normalize(m, {(tuple(JR), tuple(KR)): 1})
    out = {}
    for (a, b), ca in left.items():
        for (c, d), cb in right.items():
            _accumulate(out, ((n, a, b), (m, c, d)), ca * cb)
    return tuple(out.items())


def phi(n: int, m: int, x) -> Tensor:
    """The embedding O_{nm} -> O_n (x) O_m on a polynomial of arity ``n*m``."""
    if n < 1 or m < 1:
        raise ValueError("phi needs positive n and m")
    if isinstance(x, Element):
        if any(k[0] != n * m for k in x.terms):
            raise ArityError(f"phi({n},{m}) needs an element of O_{n * m}")
        x = x.component(n * m)
    if x.n != n * m:
        raise ArityError(f"phi({n},{m}) needs arity {n * m}, got {x.n}")
    out: dict = {}
    for (J, K), c in x.terms.items():
        for key, cw in _phi_word(n, m, J, K):
            _accumulate(out, key, c * cw)
    return Tensor(2, out)


@lru_cache(maxsize=1 << 16)
def _delta_key(b: tuple) -> tuple:
    n, J, K = b
    if n == 0:
        return (((ONE, ONE), 1),)
    out: dict = {}
    for m, l in divisor_pairs(n):
        for key, c in _phi_word(m, l, J, K):
            _accumulate(out, key, c)
    return tuple(out.items())


def delta_basis(b: tuple) -> Tensor:
    return Tensor(2, dict(_delta_key(b)))


def delta(x) -> Tensor:
    """Comultiplication of the unitization, extended linearly."""
    x = as_element(x)
    out: dict = {}
    for b, c in x.terms.items():
        for key, cw in _delta_key(b):
            _accumulate(out, key, c * cw)
    return Tensor(2, out)


def counit_basis(b: tuple):
    return 1 if b[0] == 0 or b == unit_key(1) else 0


def counit(x):
    """``a + (coefficient of I_1)`` for ``x = a*1 + body``."""
    x = as_element(x)
    return x.terms.get(ONE, 0) + x.terms.get(unit_key(1), 0)


def delta_on_tensor(t: Tensor, slot: int) -> Tensor:
    """Apply the comultiplication to one slot of a tensor."""
    return t.map_slot(slot, delta_basis, 2)


def counit_on_tensor(t: Tensor, slot: int) -> Tensor:
    return t.apply_functional(slot, counit_basis)


def collapse_o1_slot(t: Tensor, slot: int) -> Tensor:
    """The identification ``I_1 (x) x ~ x``: drop a slot that carries ``I_1``
    or the adjoined unit.  Any other content in that slot is an error."""
    out: dict = {}
    for key, c in t.terms.items():
        b = key[slot]
        if b != unit_key(1) and b != ONE:
            raise ValueError(f"slot {slot} holds {b}, not I_1")
        _accumulate(out, key[:slot] + key[slot + 1:], c)
    return Tensor(t.rank - 1, out)


# -- the map W ---------------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _w_key(a: tuple, b: tuple) -> tuple:
    out: dict = {}
    for (l, r), c in _delta_key(a):
        for k, cb in basis_product(r, b):
            _accumulate(out, (l, k), c * cb)
    return tuple(out.items())


def apply_W(u: Tensor) -> Tensor:
    """``a (x) b -> delta(a) (1 (x) b)``, extended linearly."""
    if isinstance(u, Element):
        raise TypeError("W acts on rank-2 tensors")
    if u.rank != 2:
        raise ValueError(f"W acts on rank-2 tensors, got rank {u.rank}")
    return apply_W_legs(u, 0, 1)


def apply_W_legs(t: Tensor, i: int, j: int) -> Tensor:
    """Leg-numbered ``W_ij`` on a tensor of any rank (``i`` takes ``a``,
    ``j`` takes ``b``)."""
    out: dict = {}
    for key, c in t.terms.items():
        for (l, r), cw in _w_key(key[i], key[j]):
            new = list(key)
            new[i], new[j] = l, r
            _accumulate(out, tuple(new), c * cw)
    return Tensor(t.rank, out)


# -- checks ------------------------------------------------------------------


def _diff_report(lhs, rhs) -> dict:
    diff = lhs - rhs
    return {"lhs": str(lhs), "rhs": str(rhs), "difference": str(diff)}


def check_coassociativity(x) -> CheckReport:
    x = as_element(x)
    d = delta(x)
    lhs = delta_on_tensor(d, 0)
    rhs = delta_on_tensor(d, 1)
    ok = lhs == rhs
    return CheckReport("coassoc", ok, {"x": str(x)}, None if ok else _diff_report(lhs, rhs))


def check_counit_law(x) -> CheckReport:
    """``(eps (x) id) delta(x) = x = (id (x) eps) delta(x)``."""
    x = as_element(x)
    d = delta(x)
    left = counit_on_tensor(d, 0).to_element()
    right = counit_on_tensor(d, 1).to_element()
    ok = left == x and right == x
    # the same law before identifying C with O_1: (eps_0 (x) id) delta_phi(x) = I_1 (x) x
    body = x.body
    d0 = delta(body)
    i1_form = Tensor(2, {(unit_key(1), k[1]): c for k, c in d0.terms.items() if k[0] == unit_key(1)})
    expected = Tensor.pure(Element.unit(1), body)
    ok = ok and i1_form == expected and collapse_o1_slot(i1_form, 0).to_element() == body
    witness = None
    if not ok:
        witness = {"left": str(left), "right": str(right), "x": str(x)}
    return CheckReport("counit", ok, {"x": str(x)}, witness)


def check_cocommutativity(x) -> CheckReport:
    x = as_element(x)
    d = delta(x)
    f = d.flip()
    ok = d == f
    witness = None
    if not ok:
        key = min(k for k, c in d.terms.items() if d.terms.get(k[::-1]) != c)
        witness = {"term": str(Tensor(2, {key: d.terms[key]})),
                   "flipped": str(Tensor(2, {key[::-1]: d.terms[key]})),
                   **_diff_report(d, f)}
    return CheckReport("cocomm", ok, {"x": str(x)}, witness)


def pentagon_sides(t: Tensor) -> tuple:
    """``(W12 W13 W23 (t), W23 W12 (t))`` for a rank-3 tensor."""
    lhs = apply_W_legs(apply_W_legs(apply_W_legs(t, 1, 2), 0, 2), 0, 1)
    rhs = apply_W_legs(apply_W_legs(t, 0, 1), 1, 2)
    return lhs, rhs


def check_pentagon(a, b, c) -> CheckReport:
    t = Tensor.pure(as_element(a), as_element(b), as_element(c))
    lhs, rhs = pentagon_sides(t)
    ok = lhs == rhs
    return CheckReport("pentagon", ok, {"a": str(a), "b": str(b), "c": str(c)},
                       None if ok else _diff_report(lhs, rhs))


def check_antipode_witness(x, form: str = "x-I1") -> CheckReport:
    """Evaluate W on ``x (x) I_1`` (``form="x-I1"``) or ``I_1 (x) x``
    (``form="I1-x"``); passes iff the result is zero, i.e. a nonzero
    kernel vector of W."""
    x = as_element(x)
    if form == "x-I1":
        t = Tensor.pure(x, Element.unit(1))
    elif form == "I1-x":
        t = Tensor.pure(Element.unit(1), x)
    else:
        raise ValueError(f"unknown form {form!r}")
    w = apply_W(t)
    ok = bool(t) and not w
    return CheckReport("antipode-witness", ok, {"x": str(x), "form": form},
                       {"argument": str(t), "W": str(w)})


def delta_is_homomorphism(x, y) -> bool:
    x, y = as_element(x), as_element(y)
    return delta(x * y) == delta(x) * delta(y) and delta(x.adjoint()) == delta(x).adjoint()


# -- cancellation ------------------------------------------------------------


def truncated_basis(component_bound: int, word_length_bound: int, include_one=True) -> list:
    """Adjoined unit plus reduced words ``(n, J, K)`` with ``n <= component_bound``
    and ``|J| + |K| <= word_length_bound``."""
    keys = [ONE] if include_one else []
    for n in range(1, component_bound + 1):
        keys.extend(reduced_words(n, word_length_bound))
    return keys


@lru_cache(maxsize=None)
def reduced_words(n: int, length_bound: int) -> tuple:
    """Reduced basis keys of O_n with ``|J| + |K| <= length_bound``."""
    if n == 1:
        return ((1, (), ()),)
    out = []
    for total in range(length_bound + 1):
        for lj in range(total + 1):
            lk = total - lj
            for J in itertools.product(range(1, n + 1), repeat=lj):
                for K in itertools.product(range(1, n + 1), repeat=lk):
                    if J and K and J[-1] == n and K[-1] == n:
                        continue
                    out.append((n, J, K))
    return tuple(out)


def cancellation_witness(x, word_length_bound: int, component_bound: int,
                         partner: str = "I1") -> CheckReport:
    """Is ``x (x) I_1`` (``partner="I1"``) or ``x (x) 1`` (``partner="one"``)
    outside the span of ``delta(a)(1 (x) b)`` for truncated basis ``a, b``?

    Passes (True) iff the target is NOT in the span.
    """
    x = as_element(x)
    if x.is_zero():
        raise ValueError("cancellation witness needs a nonzero x")
    if x.unit_coeff != 0 or len(x.support()) != 1 or x.support()[0] < 2:
        raise ValueError("x must be supported in a single component n >= 2")
    n = x.support()[0]
    longest = max(len(k[1]) + len(k[2]) for k in x.terms)
    if n > component_bound or longest > word_length_bound:
        raise ValueError("bounds too small to contain x")
    if partner == "I1":
        target = Tensor.pure(x, Element.unit(1))
    elif partner == "one":
        target = Tensor.pure(x, Element.one())
    else:
        raise ValueError(f"unknown partner {partner!r}")
    basis = truncated_basis(component_bound, word_length_bound)
    vectors = [v for v in (_w_key(a, b) for a in basis for b in basis) if v]
    # the span splits along connected blocks of slot-grades; only the blocks
    # touching the target matter
    parent: dict = {}

    def find(g):
        while parent.setdefault(g, g) != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    def grade(key):
        return tuple(b[0] for b in key)

    for v in vectors:
        gs = [grade(k) for k, _ in v]
        for g in gs[1:]:
            parent[find(g)] = find(gs[0])
    blocks = {find(grade(k)) for k in target.terms}
    ech = Echelon()
    used = 0
    for v in vectors:
        if find(grade(v[0][0])) in blocks:
            used += 1
            ech.add(dict(v))
    in_span = ech.contains(dict(target.terms))
    return CheckReport(
        "cancellation",
        not in_span,
        {"x": str(x), "partner": partner, "word_length_bound": word_length_bound,
         "component_bound": component_bound},
        {"target": str(target), "in_span": in_span},
        {"basis_size": len(basis), "generators": len(vectors), "generators_in_target_blocks": used,
         "block_rank": ech.rank},
    )
