"""Permutative representations through branching function systems.

A branching system of arity ``n`` is a family of injective maps
``f_1..f_n`` on an index set whose ranges partition it.  Setting
``s_i e_k = e_{f_i(k)}`` gives a representation of the Cuntz relations on
finitely supported vectors; ``s_i^* e_k = e_{k'}`` when ``k = f_i(k')`` and
zero otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Element, Tensor, as_element
from .scalars import is_zero
from .words import Poly, _accumulate


class BranchingSystem:
    """Branch maps plus the inverse coding ``k -> (i, k')``."""

    def __init__(self, n: int, branch, inverse, name: str = ""):
        if n < 1:
            raise ValueError("arity must be positive")
        self.n = n
        self._branch = branch
        self._inverse = inverse
        self.name = name or f"system({n})"

    def branch(self, i: int, k):
        if not 1 <= i <= self.n:
            raise ValueError(f"branch index {i} outside 1..{self.n}")
        return self._branch(i, k)

    def inverse(self, k) -> tuple:
        return self._inverse(k)

    def validate_window(self, window) -> bool:
        """Every ``k`` in the window has exactly one preimage pair, and the
        inverse oracle agrees with the branch maps."""
        window = list(window)
        for k in window:
            i, k0 = self.inverse(k)
            if self.branch(i, k0) != k:
                return False
        # injectivity / disjointness: no two (i, k') in the window hit one point
        seen = {}
        members = set(window)
        for k0 in window:
            for i in range(1, self.n + 1):
                img = self.branch(i, k0)
                if img in members:
                    if img in seen and seen[img] != (i, k0):
                        return False
                    seen[img] = (i, k0)
                    if self.inverse(img) != (i, k0):
                        return False
        return True

    def __repr__(self):
        return f"BranchingSystem({self.name})"


def standard_system(n: int) -> BranchingSystem:
    """Base-``n`` digits on the positive integers: ``f_i(k) = n(k-1) + i``."""
    if n < 2:
        raise ValueError("the standard system needs n >= 2")
    return BranchingSystem(
        n,
        lambda i, k: n * (k - 1) + i,
        lambda k: ((k - 1) % n + 1, (k - 1) // n + 1),
        f"standard({n})",
    )


def product_system(sys1: BranchingSystem, sys2: BranchingSystem) -> BranchingSystem:
    """Arity ``nm`` system on pairs: ``h_{m(i-1)+j}(x, y) = (f_i(x), g_j(y))``."""
    n, m = sys1.n, sys2.n

    def branch(r, xy):
        i, j = (r - 1) // m + 1, (r - 1) % m + 1
        return (sys1.branch(i, xy[0]), sys2.branch(j, xy[1]))

    def inverse(xy):
        i, x0 = sys1.inverse(xy[0])
        j, y0 = sys2.inverse(xy[1])
        return (m * (i - 1) + j, (x0, y0))

    return BranchingSystem(n * m, branch, inverse, f"{sys1.name}*{sys2.name}")


def _act_word(sys: BranchingSystem, J, K, k):
    """Image index of ``s_J s_K^* e_k``, or None when it vanishes."""
    for letter in K:
        i, k0 = sys.inverse(k)
        if i != letter:
            return None
        k = k0
    for letter in reversed(J):
        k = sys.branch(letter, k)
    return k


def act_raw(sys: BranchingSystem, terms, v: dict) -> dict:
    """Apply ``sum c s_J s_K^*`` given as ``{(J, K): c}`` (reduced or not)."""
    items = terms.items() if isinstance(terms, dict) else terms
    out: dict = {}
    for (J, K), c in items:
        for k, a in v.items():
            img = _act_word(sys, J, K, k)
            if img is not None:
                _accumulate(out, img, c * a)
    return out


def act(sys: BranchingSystem, x, v: dict) -> dict:
    """``pi(x) v`` for a polynomial (or single-component element) ``x``."""
    if isinstance(x, Element):
        supp = x.support()
        if x.unit_coeff != 0 or any(n != sys.n for n in supp):
            raise ValueError(f"element is not in component {sys.n}")
        x = x.component(sys.n)
    if x.n != sys.n:
        raise ValueError(f"polynomial arity {x.n} does not match system arity {sys.n}")
    return act_raw(sys, x.terms, v)


def basis_vector(k) -> dict:
    return {k: 1}


def act_tensor(sys1: BranchingSystem, sys2: BranchingSystem, t: Tensor, v: dict) -> dict:
    """``(pi_1 (x) pi_2)(t) v`` for ``t`` supported in components ``(n, m)``
    and ``v`` indexed by pairs."""
    out: dict = {}
    for ((n1, J1, K1), (n2, J2, K2)), c in t.terms.items():
        if n1 != sys1.n or n2 != sys2.n:
            continue  # other components act as zero
        for (x, y), a in v.items():
            x2 = _act_word(sys1, J1, K1, x)
            if x2 is None:
                continue
            y2 = _act_word(sys2, J2, K2, y)
            if y2 is None:
                continue
            _accumulate(out, (x2, y2), c * a)
    return out


@dataclass
class Cycle:
    word: tuple
    representative: object
    length: int


def orbit_analysis(sys: BranchingSystem, window, max_steps: int = 10_000) -> dict:
    """Follow the inverse coding ``k -> k'`` from every point of the window.

    Returns the cycles (with their coding words, rotated to start at the
    smallest point), each point's class (the cycle it falls into, or
    ``None`` when the orbit leaves the window), and the class sizes.
    """
    window = list(window)
    members = set(window)
    cycle_of: dict = {}
    cycles: list = []
    for start in window:
        path = []
        seen = {}
        k = start
        cls = None
        for _ in range(max_steps):
            if k in cycle_of:
                cls = cycle_of[k]
                break
            if k not in members:
                break
            if k in seen:
                loop = path[seen[k]:]
                points = [p for p, _ in loop]
                rot = points.index(min(points))
                loop = loop[rot:] + loop[:rot]
                cls = len(cycles)
                cycles.append(Cycle(tuple(i for _, i in loop), loop[0][0], len(loop)))
                for p, _ in loop:
                    cycle_of[p] = cls
                break
            i, k0 = sys.inverse(k)
            seen[k] = len(path)
            path.append((k, i))
            k = k0
        for p, _ in path:
            cycle_of.setdefault(p, cls)
    classes: dict = {}
    for k in window:
        classes.setdefault(cycle_of.get(k), []).append(k)
    return {
        "arity": sys.n,
        "window": [window[0], window[-1]] if window else [],
        "size": len(window),
        "cycles": [{"word": list(c.word), "representative": _jsonable(c.representative),
                    "members": len(classes.get(i, []))} for i, c in enumerate(cycles)],
        "classes": {("escaping" if key is None else str(key)): len(v) for key, v in classes.items()},
        "partition_ok": sum(len(v) for v in classes.values()) == len(window),
    }


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def square_window(size: int):
    return [(x, y) for x in range(1, size + 1) for y in range(1, size + 1)]


def check_product_system(n: int, m: int, vectors: int = 50):
    """Compare the product system with ``(pi_1 (x) pi_2) o phi(n, m)`` on every
    generator and its adjoint, over ``vectors`` basis vectors."""
    from .bialgebra import CheckReport, phi

    s1, s2 = standard_system(n), standard_system(m)
    prod = product_system(s1, s2)
    side = 1
    while side * side < vectors:
        side += 1
    points = square_window(side)[:vectors]
    checked = 0
    for r in range(1, n * m + 1):
        for x in (Element.generator(n * m, r), Element.generator(n * m, r).adjoint()):
            t = phi(n, m, x)
            for p in points:
                lhs = act(prod, x, {p: 1})
                rhs = act_tensor(s1, s2, t, {p: 1})
                checked += 1
                if lhs != rhs:
                    return CheckReport("rep-vi", False, {"n": n, "m": m},
                                       {"x": str(x), "vector": list(p), "product": str(lhs),
                                        "tensor": str(rhs)})
    return CheckReport("rep-vi", True, {"n": n, "m": m, "vectors": len(points)},
                       details={"comparisons": checked})
