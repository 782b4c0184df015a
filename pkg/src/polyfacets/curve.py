"""Plot-function expressions: parse, evaluate, and check against envelopes.

Grammar (x is the x-axis value, n the corpus order):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?          (right-associative)
    atom   := number | 'x' | 'n' | '(' expr ')' | func '(' expr ')'
    func   := sqrt | floor | ceil | abs

Unary minus binds tighter than '*' but looser than '^', so -2^2 is -4.
Evaluation is floating point; the envelope tolerance is 1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ALIGN_TOLERANCE = 1e-9

_FUNCTIONS = ("sqrt", "floor", "ceil", "abs")

SIDE_UPPER = "upper"
SIDE_LOWER = "lower"


class CurveParseError(ValueError):
    """Syntax error with the character position where it was detected."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (column {position})")


class CurveEvalError(ValueError):
    """Domain error during evaluation (division by zero, sqrt of a negative, overflow)."""


# AST nodes are plain tuples:
#   ("num", float) ("var", "x"|"n") ("neg", node)
#   ("bin", op, left, right) ("call", name, node)


@dataclass(frozen=True)
class _Token:
    kind: str  # num | name | op | end
    text: str
    pos: int
    value: float = 0.0


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < len(text) and text[i + 1].isdigit()):
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            if i < len(text) and text[i] == ".":
                i += 1
                while i < len(text) and text[i].isdigit():
                    i += 1
            raw = text[start:i]
            if raw == ".":
                raise CurveParseError("malformed number", start)
            tokens.append(_Token("num", raw, start, float(raw)))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("name", text[start:i], start))
            continue
        if ch in "+-*/^()":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        raise CurveParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self) -> _Token:
        return self.tokens[self.idx]

    def take(self) -> _Token:
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok.kind != "op" or tok.text != op:
            raise CurveParseError(f"expected {op!r}", tok.pos)

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise CurveParseError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            node = ("bin", op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.take().text
            node = ("bin", op, node, self.unary())
        return node

    def unary(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            return ("neg", self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            node = ("bin", "^", node, self.unary())  # right-associative, accepts 2^-3
        return node

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return ("num", tok.value)
        if tok.kind == "name":
            if tok.text in ("x", "n"):
                return ("var", tok.text)
            if tok.text in _FUNCTIONS:
                self.expect_op("(")
                inner = self.expr()
                self.expect_op(")")
                return ("call", tok.text, inner)
            raise CurveParseError(f"unknown identifier {tok.text!r}", tok.pos)
        if tok.kind == "op" and tok.text == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise CurveParseError(
            "unexpected end of input" if tok.kind == "end" else f"unexpected {tok.text!r}",
            tok.pos,
        )


def parse_expression(text: str):
    """Parse to an AST; raises CurveParseError with a character position."""
    return _Parser(text).parse()


def format_expression(node) -> str:
    """Deterministic rendering; reparsing yields an equal AST."""
    kind = node[0]
    if kind == "num":
        v = node[1]
        return repr(int(v)) if float(v).is_integer() and abs(v) < 1e15 else repr(v)
    if kind == "var":
        return node[1]
    if kind == "neg":
        # Outer parens keep the sign attached when this lands left of '^'.
        return f"(-{format_expression(node[1])})"
    if kind == "call":
        return f"{node[1]}({format_expression(node[2])})"
    _, op, left, right = node
    return f"({format_expression(left)} {op} {format_expression(right)})"


def eval_expression(node, x: float, n: int | float) -> float:
    """Evaluate at (x, n); raises CurveEvalError on domain errors or non-finite results."""
    result = _eval(node, float(x), float(n))
    if math.isnan(result) or math.isinf(result):
        raise CurveEvalError("expression evaluated to a non-finite value")
    return result


def _eval(node, x: float, n: float) -> float:
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "var":
        return x if node[1] == "x" else n
    if kind == "neg":
        return -_eval(node[1], x, n)
    if kind == "call":
        arg = _eval(node[2], x, n)
        name = node[1]
        if name == "sqrt":
            if arg < 0:
                raise CurveEvalError("sqrt of a negative value")
            return math.sqrt(arg)
        if name == "floor":
            return float(math.floor(arg))
        if name == "ceil":
            return float(math.ceil(arg))
        return abs(arg)
    _, op, lhs_node, rhs_node = node
    lhs = _eval(lhs_node, x, n)
    rhs = _eval(rhs_node, x, n)
    if op == "+":
        return lhs + rhs
    if op == "-":
        return lhs - rhs
    if op == "*":
        return lhs * rhs
    if op == "/":
        if rhs == 0.0:
            raise CurveEvalError("division by zero")
        return lhs / rhs
    try:
        result = math.pow(lhs, rhs)
    except (ValueError, OverflowError) as exc:
        raise CurveEvalError(f"invalid power: {exc}") from None
    return result


@dataclass(frozen=True)
class EnvelopeEntry:
    x: Fraction
    y: Fraction  # envelope value at x (max for upper, min for lower)
    value: float | None  # f(x, n), None when evaluation failed
    residual: float | None  # float(y) - value
    aligned: bool
    error: str | None = None


@dataclass(frozen=True)
class EnvelopeReport:
    side: str
    entries: tuple[EnvelopeEntry, ...]

    @property
    def all_aligned(self) -> bool:
        return all(e.aligned for e in self.entries)


def check_envelope(
    points: Sequence[tuple[Fraction, Fraction]],
    node,
    n: int,
    side: str,
) -> EnvelopeReport:
    """Compare f against the per-x extreme of the point cloud.

    For every distinct x the envelope value is the max (upper) or min (lower)
    of the y values there, over all points, hull vertex or not.  A point is
    aligned when |float(y) - f(float(x), n)| <= 1e-9.  Evaluation errors are
    reported per entry rather than aborting the sweep.
    """
    if side not in (SIDE_UPPER, SIDE_LOWER):
        raise ValueError(f"side must be 'upper' or 'lower', got {side!r}")
    extreme: dict[Fraction, Fraction] = {}
    for x, y in points:
        cur = extreme.get(x)
        if cur is None or (y > cur if side == SIDE_UPPER else y < cur):
            extreme[x] = y
    entries = []
    for x in sorted(extreme):
        y = extreme[x]
        try:
            value = eval_expression(node, float(x), n)
        except CurveEvalError as exc:
            entries.append(EnvelopeEntry(x, y, None, None, False, str(exc)))
            continue
        residual = float(y) - value
        entries.append(EnvelopeEntry(x, y, value, residual, abs(residual) <= ALIGN_TOLERANCE))
    return EnvelopeReport(side, tuple(entries))
