"""Expression language for the CLI.

Grammar (lowest precedence first)::

    expr    := ['+'|'-'] tensor (('+'|'-') tensor)*
    tensor  := term (('⊗'|'@') term)*
    term    := factor (['*'] factor)*          juxtaposition multiplies
    factor  := atom "'"*                        postfix adjoint
    atom    := NUMBER ['/' NUMBER] ['i'] | 'i' | 'one'
             | 's' '(' INT ',' INT ')' | 'I' '(' INT ')'
             | NAME '(' args ')' | '(' expr ')'

Functions: ``delta(e)``, ``eps(e)``, ``phi(n, m, e)``, ``rho(e)``,
``alpha(family, e)``, ``gauge(z, e)``, ``kappa(t, e)``, ``W(t)``,
``flip(t)``, ``haar(e)``, ``kms(n, e)``.  ``family`` is ``zeta``, ``id``,
``swap2`` or a quoted path to a JSON family file.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, Tensor
from .scalars import GaussianRational, gauss
from .words import ArityError


class ParseError(ValueError):
    def __init__(self, message, line, column, expected=()):
        self.line, self.column, self.expected = line, column, tuple(expected)
        detail = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{line}:{column}: {message}{detail}")


class EvaluationError(ValueError):
    pass


# -- syntax tree --------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: object


@dataclass(frozen=True)
class Gen:
    n: int
    i: int


@dataclass(frozen=True)
class Unit:
    n: int


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Str:
    value: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Otimes:
    left: object
    right: object


@dataclass(frozen=True)
class Adjoint:
    arg: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


# -- tokenizer ----------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?i?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<str>"[^"]*")
  | (?P<op>⊗|[-+*@'(),])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list:
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(Token(kind, chunk, line, col))
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


_ATOM_START = {"num", "name", "str"}


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, message, expected=()):
        t = self.tok
        raise ParseError(message, t.line, t.column, expected)

    def expect(self, text):
        if self.tok.text != text:
            self.error(f"unexpected {self.tok.text or 'end of input'!r}", (repr(text),))
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}", ("operator", "end of input"))
        return node

    def expr(self):
        sign = None
        if self.tok.text in ("+", "-"):
            sign = self.advance().text
        node = self.tensor()
        if sign == "-":
            node = Neg(node)
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            rhs = self.tensor()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def tensor(self):
        node = self.term()
        while self.tok.text in ("⊗", "@"):
            self.advance()
            node = Otimes(node, self.term())
        return node

    def _starts_atom(self):
        t = self.tok
        return t.kind in _ATOM_START or t.text == "("

    def term(self):
        node = self.factor()
        while True:
            if self.tok.text == "*":
                self.advance()
                node = Mul(node, self.factor())
            elif self._starts_atom():
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self):
        node = self.atom()
        while self.tok.text == "'":
            self.advance()
            node = Adjoint(node)
        return node

    def _int(self):
        t = self.tok
        if t.kind != "num" or not t.text.isdigit():
            self.error(f"unexpected {t.text or 'end of input'!r}", ("integer",))
        self.advance()
        return int(t.text)

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(_number(t.text))
        if t.kind == "str":
            self.advance()
            return Str(t.text[1:-1])
        if t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "name":
            self.advance()
            if t.text == "one":
                return One()
            if t.text == "i" and self.tok.text != "(":
                return Num(GaussianRational(0, 1))
            if self.tok.text != "(":
                return Name(t.text)
            self.advance()
            if t.text == "s":
                n = self._int()
                self.expect(",")
                i = self._int()
                self.expect(")")
                return Gen(n, i)
            if t.text == "I":
                n = self._int()
                self.expect(")")
                return Unit(n)
            args = []
            if self.tok.text != ")":
                args.append(self.expr())
                while self.tok.text == ",":
                    self.advance()
                    args.append(self.expr())
            self.expect(")")
            return Call(t.text, tuple(args))
        self.error(f"unexpected {t.text or 'end of input'!r}",
                   ("number", "s(n,i)", "I(n)", "one", "function call", "'('"))


def _number(text: str):
    if text.endswith("i"):
        return gauss(0, Fraction(text[:-1]))
    return Fraction(text)


def parse(text: str):
    return Parser(text).parse()


# -- evaluation ---------------------------------------------------------------


def _is_scalar(v):
    return not isinstance(v, (Element, Tensor)) and not hasattr(v, "materialize")


def _family(node):
    from .structure import broken_swap_family, identity_family, load_family, zeta_family
    if isinstance(node, Name):
        table = {"zeta": zeta_family, "id": identity_family, "swap2": broken_swap_family}
        if node.name not in table:
            raise EvaluationError(f"unknown family {node.name!r}")
        return table[node.name]()
    if isinstance(node, Str):
        with open(node.value) as fh:
            return load_family(json.load(fh))
    raise EvaluationError("family must be a name or a quoted JSON path")


def _int_arg(node) -> int:
    if isinstance(node, Num) and isinstance(node.value, Fraction) and node.value.denominator == 1:
        return int(node.value)
    raise EvaluationError("expected an integer argument")


class Evaluator:
    def __init__(self, backend: str = "exact"):
        if backend not in ("exact", "float"):
            raise ValueError(f"unknown backend {backend!r}")
        self.backend = backend

    def scalar(self, v):
        return complex(v) if self.backend == "float" else v

    def __call__(self, node):
        return self.eval(node)

    def eval(self, node):
        from . import bialgebra, states, structure

        if isinstance(node, Num):
            return self.scalar(node.value)
        if isinstance(node, Gen):
            return Element.generator(node.n, node.i)
        if isinstance(node, Unit):
            if node.n < 1:
                raise ArityError("component must be positive")
            return Element.unit(node.n)
        if isinstance(node, One):
            return Element.one()
        if isinstance(node, Neg):
            return -self.eval(node.arg)
        if isinstance(node, Add):
            return _combine(self.eval(node.left), self.eval(node.right), 1)
        if isinstance(node, Sub):
            return _combine(self.eval(node.left), self.eval(node.right), -1)
        if isinstance(node, Mul):
            a, b = self.eval(node.left), self.eval(node.right)
            if isinstance(a, Tensor) != isinstance(b, Tensor) and not (_is_scalar(a) or _is_scalar(b)):
                raise EvaluationError("cannot multiply an element by a tensor")
            return a * b
        if isinstance(node, Otimes):
            a, b = self.eval(node.left), self.eval(node.right)
            if _is_scalar(a) or _is_scalar(b):
                return a * b
            return Tensor.pure(a, b)
        if isinstance(node, Adjoint):
            v = self.eval(node.arg)
            return v.conjugate() if _is_scalar(v) else v.adjoint()
        if isinstance(node, (Name, Str)):
            raise EvaluationError(f"unexpected name {getattr(node, 'name', getattr(node, 'value', ''))!r}")
        if isinstance(node, Call):
            name, args = node.name, node.args

            def arity(k):
                if len(args) != k:
                    raise EvaluationError(f"{name} takes {k} argument(s), got {len(args)}")

            if name == "delta":
                arity(1)
                return bialgebra.delta(self._element(args[0]))
            if name == "eps":
                arity(1)
                return bialgebra.counit(self._element(args[0]))
            if name == "haar":
                arity(1)
                return states.haar_evaluate(self._element(args[0]))
            if name == "kms":
                arity(2)
                return states.kms_evaluate(_int_arg(args[0]), self._element(args[1]))
            if name == "phi":
                arity(3)
                return bialgebra.phi(_int_arg(args[0]), _int_arg(args[1]), self._element(args[2]))
            if name == "rho":
                arity(1)
                return structure.rho(self._element(args[0]))
            if name == "alpha":
                arity(2)
                return structure.alpha(_family(args[0]), self._element(args[1]))
            if name == "gauge":
                arity(2)
                return structure.gauge(self.eval(args[0]), self._element(args[1]))
            if name == "kappa":
                arity(2)
                # the group parameter stays exact; only coefficients follow the backend
                result = structure.kappa(Evaluator("exact").eval(args[0]), self._element(args[1]))
                return result.materialize() if result.is_exact() or self.backend == "float" else result
            if name == "W":
                arity(1)
                t = self.eval(args[0])
                if not isinstance(t, Tensor):
                    raise EvaluationError("W needs a tensor argument")
                return bialgebra.apply_W(t)
            if name == "flip":
                arity(1)
                t = self.eval(args[0])
                if not isinstance(t, Tensor):
                    raise EvaluationError("flip needs a tensor argument")
                return t.flip()
            raise EvaluationError(f"unknown function {name!r}")
        raise EvaluationError(f"cannot evaluate {node!r}")

    def _element(self, node) -> Element:
        v = self.eval(node)
        if isinstance(v, Tensor):
            raise EvaluationError("expected an element, got a tensor")
        if _is_scalar(v):
            return Element.one(v)
        return v


def _combine(a, b, sign):
    if _is_scalar(a) and _is_scalar(b):
        return a + sign * b
    if isinstance(a, Tensor) or isinstance(b, Tensor):
        if not (isinstance(a, Tensor) and isinstance(b, Tensor)):
            raise EvaluationError("cannot add a tensor and an element")
    return a + b if sign == 1 else a - b


def evaluate(text: str, backend: str = "exact"):
    return Evaluator(backend)(parse(text))


def format_value(v) -> str:
    from .scalars import format_scalar
    if isinstance(v, (Element, Tensor)):
        return str(v)
    if hasattr(v, "materialize"):
        parts = []
        for (n, J, K), (c, e) in sorted(v.terms.items()):
            parts.append(f"{format_scalar(c)}*{n}^({format_scalar(e)}) {Element.basis((n, J, K))}")
        return " + ".join(parts) if parts else "0"
    return format_scalar(v)
