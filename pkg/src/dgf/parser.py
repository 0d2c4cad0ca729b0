"""Expression language for composing multiplicative functions.

Grammar (highest precedence last):

    expr   := term (('<*>' | '<+>') term)*      convolutions
    term   := factor ('*' factor)*              pointwise product
    factor := atom ('^' INT)?                   pointwise power
    atom   := NAME ['(' INT (',' INT)* ')']
            | 'inv' '(' expr ')'
            | 'shift' '(' expr ',' INT ')'
            | '(' expr ')'
"""
from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .bell import (MultiplicativeFunction, dirichlet_convolve,
                   dirichlet_inverse, pointwise_power, pointwise_product,
                   shift_by_power, unitary_convolve)
from .errors import ParseError


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int  # 1-based column


_FIXED = [("<*>", "CONV"), ("<+>", "UCONV"), ("*", "STAR"), ("^", "CARET"),
          ("(", "LPAREN"), (")", "RPAREN"), (",", "COMMA")]


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        for lit, kind in _FIXED:
            if text.startswith(lit, i):
                out.append(Token(kind, lit, pos))
                i += len(lit)
                break
        else:
            if ch.isdigit() or (ch == "-" and i + 1 < n
                                and text[i + 1].isdigit()):
                j = i + 1
                while j < n and text[j].isdigit():
                    j += 1
                out.append(Token("INT", text[i:j], pos))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i + 1
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                out.append(Token("NAME", text[i:j], pos))
                i = j
            else:
                raise ParseError("unexpected character %r" % ch, pos)
    out.append(Token("EOF", "", n + 1))
    return out


# -- syntax tree --------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple[int, ...] = ()


@dataclass(frozen=True)
class Conv:
    left: object
    right: object


@dataclass(frozen=True)
class UConv:
    left: object
    right: object


@dataclass(frozen=True)
class PMul:
    left: object
    right: object


@dataclass(frozen=True)
class PPow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Inv:
    inner: object


@dataclass(frozen=True)
class Shift:
    inner: object
    k: int


def to_text(node) -> str:
    if isinstance(node, Atom):
        if not node.args:
            return node.name
        return "%s(%s)" % (node.name, ",".join(str(a) for a in node.args))
    if isinstance(node, Conv):
        return "(%s <*> %s)" % (to_text(node.left), to_text(node.right))
    if isinstance(node, UConv):
        return "(%s <+> %s)" % (to_text(node.left), to_text(node.right))
    if isinstance(node, PMul):
        return "(%s * %s)" % (to_text(node.left), to_text(node.right))
    if isinstance(node, PPow):
        # composite nodes carry their own parentheses; a power base must
        # gain a pair, since the grammar does not chain '^'
        base = to_text(node.base)
        if isinstance(node.base, PPow):
            base = "(%s)" % base
        return "%s^%d" % (base, node.exponent)
    if isinstance(node, Inv):
        return "inv(%s)" % to_text(node.inner)
    if isinstance(node, Shift):
        return "shift(%s, %d)" % (to_text(node.inner), node.k)
    raise TypeError("not a syntax node: %r" % (node,))


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError("expected %s" % what, tok.pos)
        return self.take()

    def parse_expr(self):
        node = self.parse_term()
        while self.peek().kind in ("CONV", "UCONV"):
            op = self.take()
            rhs = self.parse_term()
            node = Conv(node, rhs) if op.kind == "CONV" else UConv(node, rhs)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek().kind == "STAR":
            self.take()
            node = PMul(node, self.parse_factor())
        return node

    def parse_factor(self):
        node = self.parse_atom()
        if self.peek().kind == "CARET":
            self.take()
            tok = self.expect("INT", "an exponent")
            j = int(tok.text)
            if j < 1:
                raise ParseError("exponent must be a positive integer",
                                 tok.pos)
            node = PPow(node, j)
        return node

    def parse_int(self) -> int:
        return int(self.expect("INT", "an integer").text)

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "LPAREN":
            self.take()
            node = self.parse_expr()
            self.expect("RPAREN", "')'")
            return node
        if tok.kind != "NAME":
            raise ParseError("expected a function name or '('", tok.pos)
        self.take()
        if tok.text == "inv":
            self.expect("LPAREN", "'(' after inv")
            node = self.parse_expr()
            self.expect("RPAREN", "')'")
            return Inv(node)
        if tok.text == "shift":
            self.expect("LPAREN", "'(' after shift")
            node = self.parse_expr()
            self.expect("COMMA", "',' and a shift amount")
            k = self.parse_int()
            self.expect("RPAREN", "')'")
            return Shift(node, k)
        args: tuple[int, ...] = ()
        if self.peek().kind == "LPAREN":
            self.take()
            vals = [self.parse_int()]
            while self.peek().kind == "COMMA":
                self.take()
                vals.append(self.parse_int())
            self.expect("RPAREN", "')'")
            args = tuple(vals)
        return Atom(tok.text, args)


def parse(text: str):
    """Parse an expression into a syntax tree."""
    p = _Parser(tokenize(text))
    node = p.parse_expr()
    tok = p.peek()
    if tok.kind != "EOF":
        raise ParseError("unexpected trailing input", tok.pos)
    return node


def build(node) -> MultiplicativeFunction:
    """Construct the multiplicative function an expression denotes."""
    if isinstance(node, Atom):
        return catalog.make(node.name, *node.args)
    if isinstance(node, Conv):
        return dirichlet_convolve(build(node.left), build(node.right))
    if isinstance(node, UConv):
        return unitary_convolve(build(node.left), build(node.right))
    if isinstance(node, PMul):
        return pointwise_product(build(node.left), build(node.right))
    if isinstance(node, PPow):
        return pointwise_power(build(node.base), node.exponent)
    if isinstance(node, Inv):
        return dirichlet_inverse(build(node.inner))
    if isinstance(node, Shift):
        return shift_by_power(build(node.inner), node.k)
    raise TypeError("not a syntax node: %r" % (node,))


def parse_function(text: str) -> MultiplicativeFunction:
    """One-step parse and build."""
    return build(parse(text))
