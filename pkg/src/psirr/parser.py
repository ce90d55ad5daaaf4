"""Expression parser for polynomial input.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary | <"(" follows: implicit *> unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | IDENT | "(" expr ")"

Division is only by nonzero constants, which is how ``p/q`` coefficients
are written. ``Z`` is the reserved polynomial variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NotMonicInZ, ParseError, TruncationTooSmall, UnknownVariable
from .fields import QQ, FieldCtx
from .zpoly import ZPoly

Z_NAME = "Z"
DEFAULT_ORDER = 16

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "id", "op", "end"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(i):
        line = max(k for k, s in enumerate(line_starts) if s <= i)
        return line + 1, i - line_starts[line] + 1

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        line, col = where(start)
        if m.group(1):
            tokens.append(Token("num", m.group(1), line, col))
        elif m.group(2):
            tokens.append(Token("id", m.group(2), line, col))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            tokens.append(Token("op", ch, line, col))
        pos = m.end()
    line, col = where(len(text))
    tokens.append(Token("end", "", line, col))
    return tokens


def infer_variables(text: str) -> list[str]:
    names = {t.text for t in tokenize(text) if t.kind == "id" and t.text != Z_NAME}
    return sorted(names) or ["x"]


class _Parser:
    """Recursive descent; polynomials are dicts ``{exps: coeff}`` over n+1 variables."""

    def __init__(self, text: str, ctx: FieldCtx, names: list[str]):
        self.tokens = tokenize(text)
        self.i = 0
        self.ctx = ctx
        self.names = names
        self.index = {name: k for k, name in enumerate(names)}
        self.index[Z_NAME] = len(names)
        self.nv = len(names) + 1

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def const(self, c):
        return {(0,) * self.nv: self.ctx(c)} if c else {}

    def parse(self):
        if self.peek().kind == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek().kind != "end":
            self.fail(f"unexpected token {self.peek().text!r}")
        return value

    def expr(self):
        acc = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            acc = _add(acc, rhs if op == "+" else _neg(rhs))
        return acc

    def term(self):
        acc = self.unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == "*":
                self.take()
                acc = _mul(acc, self.unary())
            elif t.kind == "op" and t.text == "/":
                self.take()
                rhs = self.unary()
                c = _as_constant(rhs, self.nv)
                if c is None:
                    self.fail("division is only allowed by a constant", t)
                if not c:
                    self.fail("division by zero", t)
                acc = {e: v / c for e, v in acc.items()}
            elif t.kind == "op" and t.text == "(":
                acc = _mul(acc, self.unary())
            else:
                return acc

    def unary(self):
        t = self.peek()
        if t.kind == "op" and t.text in "+-":
            self.take()
            v = self.unary()
            return v if t.text == "+" else _neg(v)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            t = self.take()
            if t.kind != "num":
                self.fail("exponent must be a nonnegative integer literal", t)
            out = self.const(1)
            for _ in range(int(t.text)):
                out = _mul(out, base)
            return out
        return base

    def atom(self):
        t = self.take()
        if t.kind == "num":
            return self.const(int(t.text))
        if t.kind == "id":
            if t.text not in self.index:
                raise UnknownVariable(
                    f"unknown variable {t.text!r} (line {t.line}, column {t.col})"
                )
            e = [0] * self.nv
            e[self.index[t.text]] = 1
            return {tuple(e): self.ctx.one}
        if t.kind == "op" and t.text == "(":
            v = self.expr()
            close = self.take()
            if close.kind != "op" or close.text != ")":
                self.fail("expected ')'", close)
            return v
        if t.kind == "end":
            self.fail("unexpected end of input", t)
        self.fail(f"unexpected token {t.text!r}", t)


def _add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        s = c if s is None else s + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _neg(a):
    return {e: -c for e, c in a.items()}


def _mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e)
            out[e] = c1 * c2 if s is None else s + c1 * c2
    return {e: c for e, c in out.items() if c}


def _as_constant(a, nv):
    if not a:
        return 0
    if set(a) == {(0,) * nv}:
        return a[(0,) * nv]
    return None


def parse_expression(text: str, ctx: FieldCtx = QQ, names=None) -> tuple[dict, list[str]]:
    """Expand ``text`` into ``{exps: coeff}`` over ``names + ["Z"]``."""
    names = list(names) if names else infer_variables(text)
    if Z_NAME in names:
        raise ParseError("Z is reserved for the polynomial variable")
    return _Parser(text, ctx, names).parse(), names


def to_zpoly(terms: dict, ctx: FieldCtx, names: list[str], trunc=None) -> ZPoly:
    n = len(names)
    d = max((e[n] for e in terms), default=0)
    if d < 1:
        raise NotMonicInZ("polynomial does not involve Z")
    lead = {e[:n]: c for e, c in terms.items() if e[n] == d}
    if set(lead) != {(0,) * n} or lead[(0,) * n] != 1:
        raise NotMonicInZ(f"coefficient of Z^{d} is not 1")
    body = {(e[:n], e[n]): c for e, c in terms.items() if e[n] < d}
    return ZPoly.from_terms(ctx, n, d, body, trunc, names)


def parse_zpoly(text: str, ctx: FieldCtx = QQ, names=None, trunc=None) -> ZPoly:
    terms, names = parse_expression(text, ctx, names)
    return to_zpoly(terms, ctx, names, trunc)


@dataclass(frozen=True)
class ParsedInput:
    ctx: FieldCtx
    names: tuple[str, ...]
    text: str
    poly: ZPoly
    order: int = DEFAULT_ORDER


def parse_poly(text: str, field: FieldCtx = QQ, names=None, order: int | None = None) -> ParsedInput:
    """Parse a monic-in-Z polynomial; ``order`` is the working truncation order."""
    poly = parse_zpoly(text, field, names)
    if order is None:
        order = max(DEFAULT_ORDER, poly.d + 1)
    elif order < poly.d + 1:
        raise TruncationTooSmall(f"order {order} is below d + 1 = {poly.d + 1}")
    return ParsedInput(field, poly.names, text, poly, order)
