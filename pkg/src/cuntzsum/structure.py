"""Bialgebra endomorphisms and automorphisms of the unitized direct sum.

A family ``g = {g^(n)}`` of unitary matrices acts on each component by
``s_i -> sum_j g_ji s_j``.  It commutes with the comultiplication exactly
when ``g^(nm)`` is the Kronecker product ``g^(n) (x) g^(m)`` in the letter
order ``r = m(a-1) + b`` for every factorization; permutation families are
the special case of permutation matrices.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

from .algebra import ONE, Element, Tensor, as_element, unit_key
from .bialgebra import CheckReport, counit, delta, divisor_pairs, phi
from .scalars import GaussianRational, gauss, is_exact, is_zero, to_exact, TOLERANCE
from .words import ArityError, Poly, _accumulate, normalize


class FamilyError(ValueError):
    """A family is missing a component or violates its constraints."""


def _product_index(m: int, a: int, b: int) -> int:
    return m * (a - 1) + b


class UnitaryFamily:
    """Unitary matrices ``g^(n)`` on a finite set of components.

    Missing products are derived through the Kronecker rule when every
    factorization of the component agrees.  ``matrices`` maps ``n`` to an
    ``n x n`` nested list (row-major, entry ``[j-1][i-1] = g_ji``).
    """

    kind = "unitary"

    def __init__(self, matrices: dict, validate=True, name="g"):
        self.name = name
        self._stored = {int(n): [[_scalar(c) for c in row] for row in mat]
                        for n, mat in matrices.items()}
        self._stored.setdefault(1, [[Fraction(1)]])
        self._derived: dict = {}
        if validate:
            self.validate()

    @property
    def components(self) -> list:
        return sorted(self._stored)

    def has(self, n: int) -> bool:
        try:
            self.matrix(n)
        except FamilyError:
            return False
        return True

    def matrix(self, n: int):
        if n in self._stored:
            return self._stored[n]
        if n in self._derived:
            return self._derived[n]
        candidates = []
        for m, l in divisor_pairs(n):
            if m in (1, n):
                continue
            try:
                candidates.append(kron(self.matrix(m), self.matrix(l), l))
            except FamilyError:
                continue
        if not candidates:
            raise FamilyError(f"family {self.name} has no component {n}")
        first = candidates[0]
        if any(not _matrices_equal(first, c) for c in candidates[1:]):
            raise FamilyError(f"family {self.name}: factorizations of {n} disagree")
        self._derived[n] = first
        return first

    def validate(self) -> None:
        for n, mat in self._stored.items():
            if len(mat) != n or any(len(row) != n for row in mat):
                raise FamilyError(f"g^({n}) is not {n}x{n}")
            if not is_unitary(mat):
                raise FamilyError(f"g^({n}) is not unitary")
        if not _matrices_equal(self._stored[1], [[1]]):
            raise FamilyError("g^(1) must be 1")
        violation = self.compatibility_violation()
        if violation is not None:
            raise FamilyError(f"compatibility fails at (n, m) = {violation}")

    def compatibility_violation(self):
        """First stored ``(n, m)`` with ``n*m`` stored where the Kronecker rule fails."""
        stored = self._stored
        for nm in sorted(stored):
            for n, m in divisor_pairs(nm):
                if n in stored and m in stored:
                    if not _matrices_equal(stored[nm], kron(stored[n], stored[m], m)):
                        return (n, m)
        return None

    def generator_image(self, n: int, i: int) -> Poly:
        mat = self.matrix(n)
        return Poly(n, {((j,), ()): mat[j - 1][i - 1] for j in range(1, n + 1)
                        if not is_zero(mat[j - 1][i - 1])})

    def to_json(self) -> dict:
        from .scalars import format_scalar
        return {"type": "unitary", "entries": {
            str(n): [[format_scalar(c) for c in row] for row in mat]
            for n, mat in sorted(self._stored.items())}}


class PermutationFamily:
    """Permutations ``sigma^(n)`` of ``{1..n}``, either stored on finitely
    many components or given by a rule ``n -> tuple``.

    ``perm(n)[i-1] == sigma^(n)(i)``.
    """

    kind = "permutation"

    def __init__(self, perms=None, rule=None, name="sigma", validate=True, default_identity=False):
        self.name = name
        self._stored = {int(n): tuple(p) for n, p in (perms or {}).items()}
        self._rule = rule
        self._default_identity = default_identity
        if validate:
            self.validate()

    def perm(self, n: int) -> tuple:
        if n in self._stored:
            return self._stored[n]
        if self._rule is not None:
            return self._rule(n)
        if n == 1 or self._default_identity:
            return tuple(range(1, n + 1))
        # derive from factorizations
        candidates = []
        for m, l in divisor_pairs(n):
            if m in (1, n):
                continue
            try:
                p, q = self.perm(m), self.perm(l)
            except FamilyError:
                continue
            candidates.append(tuple(_product_index(l, p[a - 1], q[b - 1])
                                    for a in range(1, m + 1) for b in range(1, l + 1)))
        if not candidates:
            raise FamilyError(f"family {self.name} has no component {n}")
        if len(set(candidates)) > 1:
            raise FamilyError(f"family {self.name}: factorizations of {n} disagree")
        return candidates[0]

    def has(self, n: int) -> bool:
        try:
            self.perm(n)
        except FamilyError:
            return False
        return True

    def matrix(self, n: int):
        p = self.perm(n)
        return [[Fraction(1) if p[i] == j + 1 else Fraction(0) for i in range(n)] for j in range(n)]

    def validate(self) -> None:
        for n, p in self._stored.items():
            if sorted(p) != list(range(1, n + 1)):
                raise FamilyError(f"sigma^({n}) is not a permutation of 1..{n}")

    def compatibility_violation(self, max_product: int):
        """First ``(n, m)`` with ``n*m <= max_product`` where
        ``sigma^(nm)(m(i-1)+j) != m(sigma^(n)(i)-1) + sigma^(m)(j)``."""
        for nm in range(1, max_product + 1):
            for n, m in divisor_pairs(nm):
                try:
                    big, p, q = self.perm(nm), self.perm(n), self.perm(m)
                except FamilyError:
                    continue
                for i in range(1, n + 1):
                    for j in range(1, m + 1):
                        if big[_product_index(m, i, j) - 1] != _product_index(m, p[i - 1], q[j - 1]):
                            return (n, m)
        return None

    def generator_image(self, n: int, i: int) -> Poly:
        return Poly(n, {((self.perm(n)[i - 1],), ()): 1}, reduced=n > 1)

    def to_json(self) -> dict:
        return {"type": "permutation", "entries": {str(n): list(p) for n, p in sorted(self._stored.items())}}


def zeta_family() -> PermutationFamily:
    """The flip ``s_i^(n) -> s_{n-i+1}^(n)`` on every component."""
    return PermutationFamily(rule=lambda n: tuple(range(n, 0, -1)), name="zeta")


def identity_family() -> PermutationFamily:
    return PermutationFamily(rule=lambda n: tuple(range(1, n + 1)), name="id")


def broken_swap_family() -> PermutationFamily:
    """Swaps ``1 <-> 2`` in O_2 only; identity elsewhere.  Not compatible."""
    return PermutationFamily({2: (2, 1)}, name="swap2", default_identity=True)


def load_family(data):
    """Parse ``{"type": "permutation"|"unitary", "entries": {n: perm|matrix}}``."""
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("type")
    entries = {int(n): v for n, v in data.get("entries", {}).items()}
    if kind == "permutation":
        return PermutationFamily(entries, name=data.get("name", "sigma"))
    if kind == "unitary":
        return UnitaryFamily(entries, name=data.get("name", "g"))
    raise FamilyError(f"unknown family type {kind!r}")


def _scalar(c):
    if isinstance(c, (float, complex)):
        return c
    return to_exact(c)


def kron(a, b, m: int):
    """Matrix with entry ``[m(x-1)+y][m(i-1)+j] = a[x][i] * b[y][j]``."""
    n = len(a)
    size = n * m
    out = [[0] * size for _ in range(size)]
    for x in range(n):
        for i in range(n):
            axi = a[x][i]
            if is_zero(axi):
                continue
            for y in range(m):
                for j in range(m):
                    out[m * x + y][m * i + j] = axi * b[y][j]
    return out


def _matrices_equal(a, b) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            d = x - y
            if not is_zero(d):
                return False
    return True


def is_unitary(mat) -> bool:
    n = len(mat)
    for i in range(n):
        for j in range(n):
            s = sum((mat[k][i].conjugate() * mat[k][j] for k in range(n)), 0)
            target = 1 if i == j else 0
            d = s - target
            if isinstance(d, (float, complex)):
                if abs(d) > 1e-12:
                    return False
            elif d != 0:
                return False
    return True


# -- actions -----------------------------------------------------------------


def _homomorphic_image(n: int, J: tuple, K: tuple, image) -> Poly:
    """Image of ``s_J s_K^*`` under the *-homomorphism with ``s_i -> image(i)``."""
    result = Poly.unit(n)
    for j in J:
        result = result * image(j)
    for k in reversed(K):
        result = result * image(k).adjoint()
    return result


def alpha(g, x) -> Element:
    """Extend ``s_i^(n) -> sum_j g_ji s_j^(n)`` to a unital *-homomorphism."""
    x = as_element(x)
    out: dict = {}
    for (n, J, K), c in x.terms.items():
        if n == 0:
            _accumulate(out, ONE, c)
            continue
        if not g.has(n):
            raise FamilyError(f"family {g.name} does not cover component {n}")
        if isinstance(g, PermutationFamily):
            p = g.perm(n)
            raw = {(tuple(p[j - 1] for j in J), tuple(p[k - 1] for k in K)): 1}
            img = normalize(n, raw)
        else:
            img = _homomorphic_image(n, J, K, lambda i: g.generator_image(n, i)).terms
        for (J2, K2), c2 in img.items():
            _accumulate(out, (n, J2, K2), c * c2)
    return Element(out)


def rho(x) -> Element:
    """Canonical endomorphism ``x -> sum_i s_i x s_i^*`` on each component."""
    x = as_element(x)
    out: dict = {}
    for (n, J, K), c in x.terms.items():
        if n <= 1:
            _accumulate(out, (n, J, K), c)
            continue
        raw = {((i,) + J, (i,) + K): 1 for i in range(1, n + 1)}
        for (J2, K2), c2 in normalize(n, raw).items():
            _accumulate(out, (n, J2, K2), c * c2)
    return Element(out)


def is_unimodular(z) -> bool:
    z = z if isinstance(z, (float, complex)) else to_exact(z)
    m = z * z.conjugate() - 1
    return is_zero(m)


def gauge(z, x) -> Element:
    """``s_J s_K^* -> z^(|J|-|K|) s_J s_K^*`` for unimodular ``z``."""
    if not is_unimodular(z):
        raise ValueError(f"gauge parameter {z} is not unimodular")
    z = z if isinstance(z, (float, complex)) else to_exact(z)
    x = as_element(x)
    out: dict = {}
    for (n, J, K), c in x.terms.items():
        d = len(J) - len(K)
        factor = 1 if n <= 1 else z ** d
        _accumulate(out, (n, J, K), c * factor)
    return Element(out)


class FormalElement:
    """``sum c * n^(E) s_J s_K^*`` where ``n^E`` is kept symbolically.

    ``E`` is a Gaussian-rational exponent attached to a term of component
    ``n``; whenever ``E`` is a real integer the power is folded into the
    coefficient, so exact values stay exact.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms or {}  # key -> (coeff, exponent)

    @classmethod
    def from_element(cls, x: Element) -> "FormalElement":
        return cls({k: (c, Fraction(0)) for k, c in x.terms.items()})

    def materialize(self):
        """Exact Element if every exponent folded away, else complex values."""
        if all(e == 0 for _, e in self.terms.values()):
            return Element({k: c for k, (c, _) in self.terms.items()})
        import cmath
        out = {}
        for (n, J, K), (c, e) in self.terms.items():
            v = complex(c) * cmath.exp(complex(e) * cmath.log(n)) if n > 1 else complex(c)
            if abs(v) >= TOLERANCE:
                out[(n, J, K)] = v
        return Element(out)

    def is_exact(self) -> bool:
        return all(e == 0 for _, e in self.terms.values())

    def __eq__(self, other):
        if isinstance(other, Element):
            other = FormalElement.from_element(other)
        if not isinstance(other, FormalElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"FormalElement({self.terms!r})"


def _fold(n: int, c, e):
    if n > 1 and e != 0 and getattr(e, "imag", 0) == 0 and Fraction(e.real).denominator == 1:
        p = int(e.real)
        c = c * (Fraction(n) ** p)
        e = Fraction(0)
    elif n <= 1:
        e = Fraction(0)
    return c, gauss(e.real, e.imag) if not isinstance(e, Fraction) else e


def kappa(t, x) -> FormalElement:
    """One-parameter group ``s_i^(n) -> n^(-i t) s_i^(n)`` on each component.

    ``t`` is an exact (possibly complex) scalar; ``t = i`` gives the
    analytic continuation ``s_J s_K^* -> n^(|J|-|K|) s_J s_K^*``.
    """
    t = to_exact(t)
    if isinstance(x, FormalElement):
        items = x.terms.items()
    else:
        items = ((k, (c, Fraction(0))) for k, c in as_element(x).terms.items())
    out = {}
    minus_i = GaussianRational(0, -1)
    for (n, J, K), (c, e) in items:
        d = len(J) - len(K)
        c2, e2 = _fold(n, c, e + minus_i * t * d)
        if not is_zero(c2):
            out[(n, J, K)] = (c2, e2)
    return FormalElement(out)


def kappa_at_i(x) -> Element:
    """Exact ``kappa_t`` at ``t = i``: scale by ``n^(|J|-|K|)``."""
    result = kappa(GaussianRational(0, 1), x)
    return result.materialize()


# -- morphism check ----------------------------------------------------------


def as_map(f):
    """Turn a family or callable into an Element -> Element map."""
    if hasattr(f, "perm") or hasattr(f, "generator_image"):
        return lambda x: alpha(f, x)
    return f


def _apply_on_tensor(fmap, t: Tensor) -> Tensor:
    out = t
    for slot in range(t.rank):
        out = out.map_slot(slot, lambda b: fmap(Element.basis(b)).as_tensor(), 1)
    return out


def check_bialgebra_morphism(f, max_product: int = 24, samples=()) -> CheckReport:
    """Check ``phi(n,m) o f_nm = (f_n (x) f_m) o phi(n,m)`` on every generator
    with ``n*m <= max_product``, then ``delta o f = (f (x) f) o delta`` and
    ``eps o f = eps`` on the generators and on ``samples``."""
    fmap = as_map(f)
    name = getattr(f, "name", getattr(f, "__name__", "f"))
    checked = 0
    for nm in range(1, max_product + 1):
        for n, m in divisor_pairs(nm):
            for r in range(1, nm + 1):
                s = Element.generator(nm, r)
                try:
                    img = fmap(s)
                except FamilyError as exc:
                    return CheckReport("morphism", False, {"f": name},
                                       {"pair": [n, m], "error": str(exc)})
                lhs = phi(n, m, img.component(nm)) if img.support() == [nm] else None
                rhs = _apply_on_tensor(fmap, phi(n, m, s.component(nm)))
                checked += 1
                if lhs is None or lhs != rhs:
                    return CheckReport(
                        "morphism", False, {"f": name, "max_product": max_product},
                        {"pair": [n, m], "generator": str(s),
                         "phi_of_f": str(lhs), "f_tensor_f_of_phi": str(rhs)})
    gens = [Element.generator(n, i) for n in range(1, max_product + 1) for i in range(1, n + 1)]
    for x in list(gens) + [as_element(y) for y in samples] + [Element.one()]:
        fx = fmap(x)
        if delta(fx) != _apply_on_tensor(fmap, delta(x)):
            return CheckReport("morphism", False, {"f": name}, {"x": str(x), "law": "delta"})
        if counit(fx) != counit(x):
            return CheckReport("morphism", False, {"f": name}, {"x": str(x), "law": "counit"})
    return CheckReport("morphism", True, {"f": name, "max_product": max_product},
                       details={"phi_checks": checked, "delta_checks": len(gens) + len(samples) + 1})
