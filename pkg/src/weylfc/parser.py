"""Recursive-descent parser for operator expressions.

Grammar (juxtaposition is not multiplication)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | NAME | "(" expr ")"
    NAME   := x<i> | y<i> | d<i> | h | a | b | c<i>

Products are taken left to right in the Weyl algebra, so ``d1*x1`` parses
to ``x1*d1 + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import OperatorSyntaxError, UnknownSymbol
from .scalars import ParamScalar
from .weyl import WeylContext, WeylElement

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_NAME = re.compile(r"^(?:([xyd])([1-9][0-9]*)|(h)|(a)|(b)|c([1-9][0-9]*))$")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt.end() == pos:
            break
        start = mt.start(mt.lastindex) if mt.lastindex else mt.end()
        if mt.group(1):
            out.append(Token("int", mt.group(1), start))
        elif mt.group(2):
            out.append(Token("name", mt.group(2), start))
        elif mt.group(3):
            ch = mt.group(3)
            if ch not in "+-*^/()":
                raise OperatorSyntaxError(f"unexpected character {ch!r}", start)
            out.append(Token("op", ch, start))
        pos = mt.end()
    out.append(Token("end", "", len(text)))
    return out


def _classify(tok: Token) -> tuple[str, int]:
    mt = _NAME.match(tok.text)
    if not mt:
        raise UnknownSymbol(f"unknown symbol {tok.text!r}", tok.pos)
    if mt.group(1):
        return mt.group(1), int(mt.group(2))
    if mt.group(3):
        return "h", 0
    if mt.group(4) or mt.group(5):
        return tok.text, 0
    return "c", int(mt.group(6))


def infer_context(tokens: list[Token], n: int | None = None, homogenized: bool | None = None) -> WeylContext:
    """Smallest context holding every symbol (``n``/``homogenized`` override)."""
    letters = set()
    top = 1
    saw_h = False
    for tok in tokens:
        if tok.kind != "name":
            continue
        kind, idx = _classify(tok)
        if kind in ("x", "y"):
            letters.add((kind, tok.pos))
        if kind == "h":
            saw_h = True
        top = max(top, idx)
    kinds = {k for k, _ in letters}
    if len(kinds) > 1:
        pos = max(p for _, p in letters)
        raise OperatorSyntaxError("cannot mix x and y coordinates", pos)
    letter = kinds.pop() if kinds else "x"
    if n is not None:
        if n < top:
            bad = next(t for t in tokens if t.kind == "name" and _classify(t)[1] > n)
            raise UnknownSymbol(f"index in {bad.text!r} exceeds n={n}", bad.pos)
        top = n
    homog = saw_h if homogenized is None else homogenized
    if saw_h and not homog:
        pos = next(t.pos for t in tokens if t.text == "h")
        raise UnknownSymbol("h needs the homogenized algebra", pos)
    return WeylContext(top, homog, letter)


class _Parser:
    def __init__(self, tokens: list[Token], ctx: WeylContext):
        self.toks = tokens
        self.i = 0
        self.ctx = ctx

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind != "op":
            raise OperatorSyntaxError(f"expected {text!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> WeylElement:
        out = self.expr()
        if self.tok.kind != "end":
            raise OperatorSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return out

    def expr(self) -> WeylElement:
        out = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> WeylElement:
        out = self.unary()
        while self.tok.kind == "op" and self.tok.text == "*":
            self.advance()
            out = out * self.unary()
        return out

    def unary(self) -> WeylElement:
        if self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            inner = self.unary()
            return -inner if op == "-" else inner
        return self.power()

    def power(self) -> WeylElement:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            if self.tok.kind != "int":
                raise OperatorSyntaxError("expected a non-negative integer exponent", self.tok.pos)
            base = base ** int(self.advance().text)
        return base

    def atom(self) -> WeylElement:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            q = Fraction(int(tok.text))
            if self.tok.kind == "op" and self.tok.text == "/":
                self.advance()
                if self.tok.kind != "int":
                    raise OperatorSyntaxError("expected a denominator", self.tok.pos)
                den = int(self.advance().text)
                if den == 0:
                    raise OperatorSyntaxError("zero denominator", self.toks[self.i - 1].pos)
                q /= den
            return WeylElement.const(self.ctx, q)
        if tok.kind == "name":
            self.advance()
            kind, idx = _classify(tok)
            if kind in ("x", "y"):
                return WeylElement.x(self.ctx, idx)
            if kind == "d":
                return WeylElement.d(self.ctx, idx)
            if kind == "h":
                return WeylElement.h(self.ctx)
            name = tok.text
            return WeylElement.const(self.ctx, ParamScalar.symbol(name))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise OperatorSyntaxError(f"unexpected {what}", tok.pos)


def parse_operator(
    text: str,
    n: int | None = None,
    homogenized: bool | None = None,
    ctx: WeylContext | None = None,
) -> WeylElement:
    """Parse text into a normally ordered WeylElement."""
    tokens = tokenize(text)
    if ctx is None:
        ctx = infer_context(tokens, n, homogenized)
    else:
        seen = infer_context(tokens, ctx.n, ctx.homogenized)
        coords = [t for t in tokens if t.kind == "name" and t.text[0] in "xy" and len(t.text) > 1]
        if coords and seen.letter != ctx.letter:
            raise UnknownSymbol(f"expected {ctx.letter}-coordinates", coords[0].pos)
    return _Parser(tokens, ctx).parse()


def format_operator(p: WeylElement) -> str:
    return str(p)
