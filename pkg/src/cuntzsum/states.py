"""Haar state, KMS states of the one-parameter group kappa, and their checks."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import ONE, Element, Tensor, as_element, basis_product, unit_key
from .bialgebra import CheckReport, counit_basis, delta, delta_basis, reduced_words
from .linalg import RHS, is_positive_semidefinite, solve
from .scalars import format_scalar, is_zero, to_exact
from .scalars import GaussianRational
from .structure import kappa
from .words import _accumulate


class StateFunctional:
    """A linear functional given by its values on basis keys."""

    def __init__(self, kind: str, on_basis, description: str = ""):
        self.kind = kind
        self.on_basis = on_basis
        self.description = description or kind

    def __call__(self, x):
        x = as_element(x)
        total = 0
        for b, c in x.terms.items():
            v = self.on_basis(b)
            if not is_zero(v):
                total = total + c * v
        return total

    def __repr__(self):
        return f"StateFunctional({self.description})"


def haar_state() -> StateFunctional:
    return StateFunctional("haar", lambda b: 1 if b[0] == 0 else 0, "haar")


def counit_functional() -> StateFunctional:
    return StateFunctional("counit", counit_basis, "counit")


def haar_evaluate(x):
    """The adjoined-unit coefficient of ``x``."""
    return as_element(x).unit_coeff


def kms_value(n: int, b: tuple):
    """``delta_{J,K} n^{-|J|}`` on a reduced word of component ``n``."""
    m, J, K = b
    if m != n:
        return 0
    if J != K:
        return 0
    return Fraction(1, n ** len(J))


def kms_state(n: int) -> StateFunctional:
    return StateFunctional(f"kms({n})", lambda b: kms_value(n, b), f"kms({n})")


def _require_component(n: int, x: Element) -> None:
    if any(b[0] != n for b in x.terms):
        raise ValueError(f"support of {x} is outside component {n}")


def kms_evaluate(n: int, x):
    x = as_element(x)
    _require_component(n, x)
    return kms_state(n)(x)


def check_kms(n: int, x, y, state=None) -> CheckReport:
    """``omega(x kappa_{-i}(y)) == omega(y x)``, where ``kappa_{-i}`` scales
    ``s_J s_K^*`` by ``n^(|K|-|J|)``."""
    x, y = as_element(x), as_element(y)
    _require_component(n, x)
    _require_component(n, y)
    omega = state or kms_state(n)
    lhs = omega(x * kappa_minus_i(y))
    rhs = omega(y * x)
    ok = lhs == rhs
    return CheckReport("kms", ok, {"n": n, "x": str(x), "y": str(y), "state": repr(omega)},
                       None if ok else {"lhs": format_scalar(lhs), "rhs": format_scalar(rhs)})


def check_kms_on_words(n: int, length_bound: int, state=None) -> CheckReport:
    """``check_kms`` on every pair of reduced words of O_n with
    ``|J| + |K| <= length_bound``, working directly on basis keys."""
    omega = state or kms_state(n)
    value = omega.on_basis
    words = reduced_words(n, length_bound)
    checked = 0
    for x in words:
        for y in words:
            w = Fraction(n) ** (len(y[2]) - len(y[1]))
            lhs = sum((c * value(k) for k, c in basis_product(x, y)), 0) * w
            rhs = sum((c * value(k) for k, c in basis_product(y, x)), 0)
            checked += 1
            if lhs != rhs:
                return CheckReport("kms", False,
                                   {"n": n, "length_bound": length_bound, "state": repr(omega)},
                                   {"x": str(Element.basis(x)), "y": str(Element.basis(y)),
                                    "lhs": format_scalar(lhs), "rhs": format_scalar(rhs)})
    return CheckReport("kms", True, {"n": n, "length_bound": length_bound, "state": repr(omega)},
                       details={"words": len(words), "pairs": checked})


def kappa_minus_i(y) -> Element:
    return kappa(GaussianRational(0, -1), y).materialize()


def perturbed_kms_state(n: int) -> StateFunctional:
    """Negative control: ``omega(I_n) = 1`` and ``omega(s_J s_J^*) = n^{-|J|-1}``
    for ``|J| >= 1``; unital but not KMS."""
    def value(b):
        m, J, K = b
        if m != n or J != K:
            return 0
        if not J:
            return 1
        return Fraction(1, n ** (len(J) + 1))

    return StateFunctional(f"perturbed-kms({n})", value)


def validate_weights(b: dict) -> dict:
    weights = {int(n): to_exact(w) for n, w in b.items()}
    if any(n < 1 for n in weights):
        raise ValueError("weights are indexed by components n >= 1")
    for w in weights.values():
        if w.imag != 0 or w.real < 0:
            raise ValueError(f"weight {w} is not a nonnegative rational")
    if sum(weights.values(), Fraction(0)) != 1:
        raise ValueError("weights must sum to 1")
    return weights


def mixture_state(b: dict) -> StateFunctional:
    weights = validate_weights(b)

    def value(key):
        if key[0] == 0:
            return 1
        w = weights.get(key[0])
        if w is None:
            return 0
        return w * kms_value(key[0], key)

    desc = "mixture(" + ", ".join(f"{n}: {format_scalar(w)}" for n, w in sorted(weights.items())) + ")"
    return StateFunctional("mixture", value, desc)


def mixture_evaluate(b: dict, x):
    """``a + sum_n b_n omega^(n)(x_n)`` for ``x = a*1 + sum_n x_n``."""
    return mixture_state(b)(x)


# -- Haar property -----------------------------------------------------------


def check_haar_property(omega, x) -> CheckReport:
    """``(omega (x) id) delta(x) == omega(x) 1 == (id (x) omega) delta(x)``."""
    x = as_element(x)
    d = delta(x)
    target = Element.one(omega(x))
    left = d.apply_functional(0, omega.on_basis).to_element()
    right = d.apply_functional(1, omega.on_basis).to_element()
    ok = left == target and right == target
    witness = None if ok else {"omega_x": format_scalar(omega(x)),
                               "omega_tensor_id": str(left), "id_tensor_omega": str(right)}
    return CheckReport("haar", ok, {"x": str(x), "state": repr(omega)}, witness)


def haar_uniqueness_solver(component_bound: int, word_length_bound: int) -> dict:
    """Solve the Haar identities for unknown values on truncated basis words.

    Unknowns: ``omega(1)`` and ``omega(w)`` for reduced words of components
    ``<= component_bound`` with ``|J| + |K| <= word_length_bound``.  Each
    basis element ``x`` contributes the coefficient equations of
    ``(omega (x) id) delta(x) - omega(x) 1 = 0`` and the mirrored one;
    ``omega(1) = 1`` makes it a state.
    """
    words = [ONE]
    for n in range(1, component_bound + 1):
        words.extend(reduced_words(n, word_length_bound))
    index = set(words)
    equations = []
    for x in words:
        d = delta_basis(x)
        for slot in (0, 1):
            other = 1 - slot
            rows: dict = {}
            for key, c in d.terms.items():
                var, out = key[slot], key[other]
                if var not in index:
                    raise AssertionError(f"delta leaves the truncation: {var}")
                row = rows.setdefault(out, {})
                _accumulate(row, var, c)
            row = rows.setdefault(ONE, {})
            _accumulate(row, x, -1)
            equations.extend(r for r in rows.values() if r)
    homogeneous = solve(equations, words)
    equations.append({ONE: 1, RHS: 1})
    sol = solve(equations, words)
    report = {
        "component_bound": component_bound,
        "word_length_bound": word_length_bound,
        "unknowns": len(words),
        "equations": len(equations),
        "consistent": sol.consistent,
        "unique": sol.unique,
        "solution_dimension": sol.dimension,
        "homogeneous_dimension": homogeneous.dimension,
    }
    if sol.consistent:
        nonzero = {str(Element.basis(k)): format_scalar(v) for k, v in sol.particular.items() if v != 0}
        report["nonzero_values"] = nonzero
        report["is_haar"] = sol.unique and nonzero == {"one": "1"}
    return report


# -- KMS derivation ----------------------------------------------------------


def _words_max_length(n: int, length: int) -> list:
    out = []
    for lj in range(length + 1):
        for lk in range(length + 1):
            for J in itertools.product(range(1, n + 1), repeat=lj):
                for K in itertools.product(range(1, n + 1), repeat=lk):
                    if J and K and J[-1] == n and K[-1] == n:
                        continue
                    out.append((n, J, K))
    return out


def derive_kms_state(n: int, length: int = 3) -> dict:
    """Solve the KMS constraints on reduced words with ``|J|, |K| <= length``.

    Unknowns are ``omega(w)``; constraints are ``omega(I_n) = 1`` and
    ``omega(x kappa_{-i}(y)) = omega(y x)`` for basis words ``x, y`` whose
    products stay inside the truncation.  Returns the solution report and
    the solved values.
    """
    words = _words_max_length(n, length)
    index = set(words)
    weights = {w: Fraction(n) ** (len(w[2]) - len(w[1])) for w in words}
    equations = [{unit_key(n): 1, RHS: 1}]
    # pure isometries, pure co-isometries and the unit already pin every value
    pure = [w for w in words if not w[1] or not w[2]]
    pairs = itertools.chain(
        itertools.product(pure, pure),
        ((unit_key(n), w) for w in words),
        ((w, unit_key(n)) for w in words),
    )
    for x, y in pairs:
        lhs = basis_product(x, y)
        rhs = basis_product(y, x)
        if not all(k in index for k, _ in lhs) or not all(k in index for k, _ in rhs):
            continue
        row: dict = {}
        for k, c in lhs:
            _accumulate(row, k, c * weights[y])
        for k, c in rhs:
            _accumulate(row, k, -c)
        if row:
            equations.append(row)
    sol = solve(equations, words)
    values = sol.particular or {}
    closed_form = all(values.get(w, 0) == kms_value(n, w) for w in words) if sol.consistent else False
    hermitian = sol.consistent and all(
        values[(n, K, J)] == values[(n, J, K)].conjugate() if (n, K, J) in values else True
        for (_, J, K) in words)
    return {
        "n": n,
        "length": length,
        "unknowns": len(words),
        "equations": len(equations),
        "consistent": sol.consistent,
        "unique": sol.unique,
        "matches_closed_form": closed_form,
        "hermitian": hermitian,
        "values": values,
    }


def gram_matrix(omega, words) -> list:
    elems = [Element.basis(w) for w in words]
    return [[omega(a.adjoint() * b) for b in elems] for a in elems]


def compression_is_positive(omega, words) -> bool:
    return is_positive_semidefinite(gram_matrix(omega, words))
