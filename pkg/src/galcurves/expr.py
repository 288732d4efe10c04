"""Parser and evaluator for scalar expressions in the arc-length variable ``s``.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' factor)?
    atom   := number | 's' | func '(' expr ')' | '(' expr ')'
    func   := sin | cos | tan | exp | ln | sqrt | abs

``^`` is right-associative and binds tighter than unary minus, so ``-2^2``
is ``-(2^2) = -4`` while ``2^-1`` is ``0.5``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Union

FUNCTIONS: dict[str, Callable[[float], float]] = {
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "exp": math.exp,
    "ln": math.log,
    "sqrt": math.sqrt,
    "abs": abs,
}

VARIABLE = "s"


class ExprError(ValueError):
    """Base class for parse and evaluation failures."""


class ExprSyntaxError(ExprError):
    def __init__(self, offset: int, expected: frozenset[str], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        want = ", ".join(sorted(expected))
        super().__init__(f"syntax error at offset {offset}: expected {want}, found {found}")


class UnknownIdentifier(ExprError):
    def __init__(self, offset: int, name: str):
        self.offset = offset
        self.name = name
        super().__init__(f"unknown identifier {name!r} at offset {offset}")


class DomainFault(ExprError):
    def __init__(self, offset: int, kind: str, s: float):
        self.offset = offset
        self.kind = kind
        self.s = s
        super().__init__(f"{kind} at offset {offset} (s={s!r})")


class NonFiniteResult(ExprError):
    def __init__(self, offset: int, s: float):
        self.offset = offset
        self.s = s
        super().__init__(f"non-finite result at offset {offset} (s={s!r})")


# AST nodes.  ``offset`` is diagnostic only and excluded from equality so a
# reparsed tree compares equal to the original.


@dataclass(frozen=True)
class Num:
    value: float
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expression"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expression"
    offset: int = field(default=0, compare=False)


Expression = Union[Num, Var, Neg, BinOp, Call]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


@dataclass
class _Token:
    kind: str  # "num", "name", "op" or "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                tokens.append(_Token("end", "", len(text)))
                return tokens
            bad = pos + len(rest) - len(stripped)
            raise ExprSyntaxError(bad, frozenset({"expression"}), repr(stripped[0]))
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: set[str]):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExprSyntaxError(tok.offset, frozenset(expected), found)

    def expect(self, text: str) -> _Token:
        if self.tok.kind == "op" and self.tok.text == text:
            return self.advance()
        self.fail({repr(text)})

    def parse(self) -> Expression:
        node = self.expr()
        if self.tok.kind != "end":
            self.fail({"operator", "end of input"})
        return node

    def expr(self) -> Expression:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            node = BinOp(op.text, node, self.term(), op.offset)
        return node

    def term(self) -> Expression:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance()
            node = BinOp(op.text, node, self.factor(), op.offset)
        return node

    def factor(self) -> Expression:
        if self.tok.kind == "op" and self.tok.text == "-":
            op = self.advance()
            return Neg(self.factor(), op.offset)
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            op = self.advance()
            return BinOp("^", base, self.factor(), op.offset)
        return base

    def atom(self) -> Expression:
        tok = self.tok
        if tok.kind == "num":
            value = float(tok.text)
            if not math.isfinite(value):
                self.fail({"finite number"})
            self.advance()
            return Num(value, tok.offset)
        if tok.kind == "name":
            self.advance()
            if tok.text == VARIABLE:
                return Var(tok.offset)
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(tok.text, arg, tok.offset)
            raise UnknownIdentifier(tok.offset, tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        self.fail({"expression"})


def parse(text: str) -> Expression:
    """Parse ``text`` into an expression tree.

    Raises:
        ExprSyntaxError: with the byte offset of the offending token and the
            set of tokens that would have been accepted there.
        UnknownIdentifier: for names other than ``s`` and the builtin functions.
    """
    return _Parser(text).parse()


def _check(value: float, node: Expression, s: float) -> float:
    if not math.isfinite(value):
        raise NonFiniteResult(node.offset, s)
    return value


def _eval(node: Expression, s: float) -> float:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return s
    if isinstance(node, Neg):
        return -_eval(node.operand, s)
    if isinstance(node, BinOp):
        a = _eval(node.left, s)
        b = _eval(node.right, s)
        if node.op == "+":
            return _check(a + b, node, s)
        if node.op == "-":
            return _check(a - b, node, s)
        if node.op == "*":
            return _check(a * b, node, s)
        if node.op == "/":
            if b == 0.0:
                raise DomainFault(node.offset, "division by zero", s)
            return _check(a / b, node, s)
        try:
            value = a**b
        except ZeroDivisionError:
            raise DomainFault(node.offset, "zero to a negative power", s) from None
        except OverflowError:
            raise NonFiniteResult(node.offset, s) from None
        if isinstance(value, complex):
            raise DomainFault(node.offset, "negative base with fractional exponent", s)
        return _check(value, node, s)
    if isinstance(node, Call):
        x = _eval(node.arg, s)
        if node.func == "ln" and x <= 0.0:
            raise DomainFault(node.offset, "logarithm of non-positive value", s)
        if node.func == "sqrt" and x < 0.0:
            raise DomainFault(node.offset, "square root of negative value", s)
        try:
            value = FUNCTIONS[node.func](x)
        except OverflowError:
            raise NonFiniteResult(node.offset, s) from None
        return _check(value, node, s)
    raise TypeError(f"not an expression node: {node!r}")


def eval_expr(e: Expression, s: float) -> float:
    """Evaluate ``e`` at ``s`` in double precision.

    Domain faults (division by zero, ``ln`` of a non-positive value, ...)
    raise :class:`DomainFault`; overflow raises :class:`NonFiniteResult`.
    """
    return _eval(e, float(s))


# Binding strength used by the printer: higher binds tighter.
_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_NEG, _POW, _ATOM = 3, 4, 5


def _prec(node: Expression) -> int:
    if isinstance(node, BinOp):
        return _POW if node.op == "^" else _PREC[node.op]
    if isinstance(node, Neg):
        return _NEG
    return _ATOM


def _wrap(node: Expression, needs_parens: bool) -> str:
    text = to_text(node)
    return f"({text})" if needs_parens else text


def to_text(node: Expression) -> str:
    """Print ``node`` with the minimum parentheses needed to reparse it identically."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return VARIABLE
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    if isinstance(node, Neg):
        # the operand of unary minus is a factor: another negation or a power
        return "-" + _wrap(node.operand, _prec(node.operand) < _NEG)
    if node.op == "^":
        left = _wrap(node.left, _prec(node.left) <= _POW)
        right = _wrap(node.right, _prec(node.right) < _NEG)
        return f"{left}^{right}"
    p = _PREC[node.op]
    left = _wrap(node.left, _prec(node.left) < p)
    right = _wrap(node.right, _prec(node.right) <= p)
    return f"{left} {node.op} {right}"


def compile_expr(source: Union[str, Expression]) -> Callable[[float], float]:
    """Return ``s -> value`` for an expression given as text or tree."""
    tree = parse(source) if isinstance(source, str) else source

    def fn(s: float) -> float:
        return eval_expr(tree, s)

    fn.expression = tree
    fn.source = source if isinstance(source, str) else to_text(tree)
    return fn


def scalar_function(spec: Union[str, float, int, Expression, Callable[[float], float]]):
    """Coerce ``spec`` (expression text, tree, number or callable) to ``s -> float``.

    Constant functions carry a ``constant`` attribute so callers can skip
    differentiating them numerically.
    """
    if isinstance(spec, (int, float)) and not isinstance(spec, bool):
        value = float(spec)
        if not math.isfinite(value):
            raise ValueError(f"constant must be finite, got {value!r}")

        def const(s: float) -> float:
            return value

        const.constant = value
        const.source = repr(value)
        return const
    if isinstance(spec, (str, Num, Var, Neg, BinOp, Call)):
        fn = compile_expr(spec)
        if isinstance(fn.expression, Num):
            fn.constant = fn.expression.value
        return fn
    if callable(spec):
        return spec
    raise TypeError(f"cannot interpret {spec!r} as a scalar function")


def describe(fn: Callable[[float], float]) -> str:
    return getattr(fn, "source", None) or getattr(fn, "__name__", repr(fn))
