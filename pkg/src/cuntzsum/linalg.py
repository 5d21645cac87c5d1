"""Exact sparse linear algebra over Gaussian rationals.

Vectors and matrix rows are dicts ``column -> scalar`` with no zero entries.
Columns may be any sortable hashable keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import is_zero, to_exact


def _axpy(target: dict, c, source: dict) -> None:
    """``target += c * source`` in place, purging zeros."""
    for k, v in source.items():
        w = target.get(k, 0) + c * v
        if is_zero(w):
            target.pop(k, None)
        else:
            target[k] = w


class Echelon:
    """Incrementally maintained reduced row basis of a vector span."""

    def __init__(self):
        self.pivots: dict = {}  # column -> row with 1 at that column

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Residual of ``vec`` modulo the span."""
        r = dict(vec)
        # pivots are fully reduced against each other, one pass suffices
        for col in [c for c in r if c in self.pivots]:
            c = r.get(col)
            if c is not None:
                _axpy(r, -c, self.pivots[col])
        return r

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; returns True if it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        col = min(r)
        pivot = r[col]
        inv = 1 / pivot if isinstance(pivot, (float, complex)) else Fraction(1) / pivot
        row = {k: v * inv for k, v in r.items()}
        for other in self.pivots.values():
            c = other.get(col)
            if c is not None:
                _axpy(other, -c, row)
        self.pivots[col] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


@dataclass
class Solution:
    """Affine solution set ``particular + span(nullspace)``."""

    variables: list
    particular: dict | None
    nullspace: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.nullspace

    @property
    def dimension(self) -> int:
        return len(self.nullspace) if self.consistent else -1


RHS = ("__rhs__",)


def solve(equations, variables) -> Solution:
    """Solve ``sum_v row[v] x_v = row.get(RHS, 0)`` for each row.

    ``variables`` fixes the unknowns (and their elimination order).
    """
    variables = list(variables)
    order = {v: i for i, v in enumerate(variables)}
    ech = Echelon()
    for row in equations:
        vec = {}
        for v, c in row.items():
            if v == RHS:
                continue
            if v not in order:
                raise KeyError(f"unknown variable {v!r}")
            if not is_zero(c):
                vec[order[v]] = c
        rhs = row.get(RHS, 0)
        if not is_zero(rhs):
            vec[len(variables)] = -rhs  # move constant to the left: A x - b = 0
        if vec:
            ech.add(vec)
    const = len(variables)
    if const in ech.pivots:
        return Solution(variables, None)
    particular = {v: 0 for v in variables}
    for col, row in ech.pivots.items():
        particular[variables[col]] = -row.get(const, 0)
    free = [i for i in range(len(variables)) if i not in ech.pivots]
    nullspace = []
    for f in free:
        vec = {variables[f]: 1}
        for col, row in ech.pivots.items():
            c = row.get(f)
            if c is not None:
                vec[variables[col]] = -c
        nullspace.append(vec)
    return Solution(variables, particular, nullspace)


def is_positive_semidefinite(matrix) -> bool:
    """Exact PSD test of a Hermitian matrix by symmetric (LDL^*) elimination."""
    a = [[c if isinstance(c, (float, complex)) else to_exact(c) for c in row] for row in matrix]
    size = len(a)
    for i in range(size):
        for j in range(size):
            if a[i][j] != a[j][i].conjugate():
                raise ValueError("matrix is not Hermitian")
    active = list(range(size))
    while active:
        p = active.pop(0)
        d = a[p][p]
        if d.imag != 0 or d.real < 0:
            return False
        if d == 0:
            # a zero diagonal entry of a PSD matrix forces a zero row
            if any(not is_zero(a[p][j]) for j in active):
                return False
            continue
        for i in active:
            f = a[i][p] / d
            if is_zero(f):
                continue
            for j in active:
                a[i][j] = a[i][j] - f * a[p][j]
    return True
