"""Parser and printer for the space-description language.

Grammar, tightest binding first: function application, ``x`` (product),
``#`` (connected sum), ``v`` (wedge).  All infix operators associate to the
left::

    expr := csum ( "v" csum )*
    csum := prod ( "#" prod )*
    prod := atom ( "x" atom )*
    atom := "S^" INT | "pt" | "susp(" expr ")" | "smash(" expr "," expr ")"
          | "hsmash(" expr "," expr ")" | "attach(" expr "," INT ")"
          | "skel(" expr ")" | "(" expr ")"

``skel(...)`` is rewritten to the skeleton expression while parsing.

>>> print(parse("(S^3 x S^3) # (S^2 x S^4)"))
S^3 x S^3 # S^2 x S^4
>>> parse("hsmash(S^1, S^3 v S^3)")
HalfSmash(left=Sphere(1), right=Wedge(left=Sphere(3), right=Sphere(3)))
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .expr import (
    Attach,
    ConnectedSum,
    HalfSmash,
    Point,
    Product,
    Smash,
    SpaceExpr,
    Sphere,
    Suspension,
    Wedge,
)


class InputError(ValueError):
    """Malformed user input: a bad expression, scenario file or argument."""


class ParseError(InputError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")

    def pointer(self) -> str:
        """The offending text with a caret under the error position."""
        return f"{self.text}\n{' ' * self.pos}^"


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<word>hsmash|smash|susp|attach|skel|pt|S|x|v)|(?P<sym>[\^#(),]))"
)


@dataclass(frozen=True)
class _Token:
    kind: str  # 'int', 'word', 'sym' or 'end'
    value: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: _Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def accept(self, value: str) -> bool:
        if self.tok.kind in ("word", "sym") and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            found = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")

    def integer(self) -> tuple[int, _Token]:
        tok = self.tok
        if tok.kind != "int":
            raise self.error(f"expected an integer, found {tok.value or 'end of input'!r}")
        self.i += 1
        return int(tok.value), tok

    def parse(self) -> SpaceExpr:
        e = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")
        return e

    def expr(self) -> SpaceExpr:
        e = self.csum()
        while self.accept("v"):
            e = Wedge(e, self.csum())
        return e

    def csum(self) -> SpaceExpr:
        e = self.prod()
        while self.accept("#"):
            e = ConnectedSum(e, self.prod())
        return e

    def prod(self) -> SpaceExpr:
        e = self.atom()
        while self.accept("x"):
            e = Product(e, self.atom())
        return e

    def atom(self) -> SpaceExpr:
        tok = self.tok
        if self.accept("S"):
            self.expect("^")
            n, ntok = self.integer()
            if n < 1:
                raise self.error(f"sphere index must be >= 1, got {n}", ntok)
            return Sphere(n)
        if self.accept("pt"):
            return Point()
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        if self.accept("susp"):
            self.expect("(")
            e = self.expr()
            self.expect(")")
            return Suspension(e)
        if tok.value in ("smash", "hsmash") and self.accept(tok.value):
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return Smash(a, b) if tok.value == "smash" else HalfSmash(a, b)
        if self.accept("attach"):
            self.expect("(")
            e = self.expr()
            self.expect(",")
            m, mtok = self.integer()
            if m < 2:
                raise self.error(f"attached cell dimension must be >= 2, got {m}", mtok)
            self.expect(")")
            return Attach(e, m)
        if self.accept("skel"):
            from .semantics import SemanticError, skeleton

            self.expect("(")
            e = self.expr()
            self.expect(")")
            try:
                return skeleton(e)
            except SemanticError as exc:
                raise self.error(f"skel: {exc}", tok) from exc
        raise self.error(f"unexpected {tok.value or 'end of input'!r}")


def parse(text: str) -> SpaceExpr:
    """Parse a space expression, raising :class:`ParseError` with a position on failure."""
    return _Parser(text).parse()


# precedence levels for printing; atoms bind tightest
_LEVEL = {Wedge: 1, ConnectedSum: 2, Product: 3}
_INFIX = {Wedge: "v", ConnectedSum: "#", Product: "x"}


def _level(e: SpaceExpr) -> int:
    return _LEVEL.get(type(e), 4)


def to_text(e: SpaceExpr) -> str:
    """Canonical text with the fewest parentheses that still parse back to ``e``."""
    if isinstance(e, Sphere):
        return f"S^{e.n}"
    if isinstance(e, Point):
        return "pt"
    if isinstance(e, Suspension):
        return f"susp({to_text(e.inner)})"
    if isinstance(e, Smash):
        return f"smash({to_text(e.left)}, {to_text(e.right)})"
    if isinstance(e, HalfSmash):
        return f"hsmash({to_text(e.left)}, {to_text(e.right)})"
    if isinstance(e, Attach):
        return f"attach({to_text(e.inner)}, {e.m})"
    if type(e) in _INFIX:
        p = _level(e)
        left = to_text(e.left)
        right = to_text(e.right)
        if _level(e.left) < p:
            left = f"({left})"
        if _level(e.right) <= p:
            right = f"({right})"
        return f"{left} {_INFIX[type(e)]} {right}"
    raise TypeError(f"not a space expression: {e!r}")


print_expr = to_text
