"""Exact symbolic computation in the unitized direct sum of Cuntz algebras:
normal forms, comultiplication, counit, states, structure maps, subbialgebras
and permutative representations."""

from .algebra import ONE, Element, Tensor
from .bialgebra import CheckReport, counit, delta, phi
from .parser import evaluate, parse
from .scalars import GaussianRational, I
from .words import ArityError, Poly, normalize

__all__ = [
    "ONE", "Element", "Tensor", "CheckReport", "counit", "delta", "phi",
    "evaluate", "parse", "GaussianRational", "I", "ArityError", "Poly", "normalize",
]
__version__ = "0.1.0"
