"""
A small expression language over Hodge classes.

Grammar (whitespace-insensitive, ``*`` binds tighter than ``+``/``-``, all
binary operators left associative)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom | call | '(' expr ')'
    call   := ident '(' args ')'

``*`` is the tensor product.  Integer literals may only appear as the first
argument of ``ab, curve, P, sym, wedge, shift, tate, angle, scale``, so that
``*`` never means scaling; use ``scale(k, X)`` for ``k`` copies of ``X``.

    >>> from hodgeledger.hodge_core import numerics
    >>> numerics(evaluate(parse("sym(3, U)"))).euler
    120
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from . import hodge_core as hc
from . import spaces
from .errors import ArityError, ParseError, UnknownIdentifier

ATOMS = ("point", "L", "U", "W", "J", "A", "Sigma", "Z", "kummerK3")

# name -> (takes a leading integer, number of class arguments)
FUNCTIONS = {
    "ab": (True, 0),
    "curve": (True, 0),
    "P": (True, 0),
    "sym": (True, 1),
    "wedge": (True, 1),
    "shift": (True, 1),
    "tate": (True, 1),
    "angle": (True, 1),
    "scale": (True, 1),
    "dual": (False, 1),
    "even": (False, 1),
    "odd": (False, 1),
}


@dataclass(frozen=True)
class Atom:
    name: str
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class IntLit:
    value: int
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    lhs: "Node"
    rhs: "Node"
    offset: int = field(default=0, compare=False)


Node = Union[Atom, IntLit, Call, BinOp]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[-+*(),]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'int', 'ident', 'punct', 'eof'
    text: str
    offset: int  # 1-based byte offset


def _tokenize(text: str) -> list[_Tok]:
    raw = text.encode("utf-8")
    # byte offsets of each character index
    char_to_byte = []
    b = 0
    for ch in text:
        char_to_byte.append(b)
        b += len(ch.encode("utf-8"))
    char_to_byte.append(b)

    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", char_to_byte[pos] + 1)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), char_to_byte[start] + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", len(raw) + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind == "punct" and self.tok.text == text

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            raise self.error([f"'{text}'"])
        return self.advance()

    def error(self, expected) -> ParseError:
        tok = self.tok
        what = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"unexpected {what}", tok.offset, expected)

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "eof":
            raise self.error(["'+'", "'-'", "'*'", "end of input"])
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()
            node = BinOp(op.text, node, self.term(), op.offset)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.at("*"):
            op = self.advance()
            node = BinOp("*", node, self.factor(), op.offset)
        return node

    def factor(self) -> Node:
        tok = self.tok
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            self.advance()
            if self.at("("):
                return self.call(tok)
            if tok.text in FUNCTIONS:
                raise ParseError(f"function {tok.text!r} needs arguments", tok.offset, ["'('"])
            if tok.text not in ATOMS:
                raise UnknownIdentifier(f"unknown identifier {tok.text!r}", tok.offset)
            return Atom(tok.text, tok.offset)
        if tok.kind == "int":
            raise ParseError(
                "integer literal only allowed as a leading function argument",
                tok.offset,
                ["identifier", "'('"],
            )
        raise self.error(["identifier", "'('"])

    def integer(self) -> IntLit:
        start = self.tok
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "int":
            raise self.error(["integer"])
        return IntLit(sign * int(self.advance().text), start.offset)

    def call(self, name: _Tok) -> Call:
        if name.text not in FUNCTIONS:
            raise UnknownIdentifier(f"unknown function {name.text!r}", name.offset)
        wants_int, n_class = FUNCTIONS[name.text]
        arity = int(wants_int) + n_class
        self.expect("(")
        args: list[Node] = []
        if not self.at(")"):
            while True:
                slot = len(args)
                if slot == 0 and wants_int and self._int_ahead():
                    args.append(self.integer())
                else:
                    args.append(self.expr())
                if not self.at(","):
                    break
                self.advance()
        self.expect(")")
        if len(args) != arity:
            raise ArityError(
                f"{name.text} takes {arity} argument{'s' if arity != 1 else ''}, got {len(args)}",
                name.offset,
            )
        for pos, arg in enumerate(args):
            if (pos == 0 and wants_int) != isinstance(arg, IntLit):
                kind = "an integer" if pos == 0 and wants_int else "a class expression"
                raise ParseError(
                    f"argument {pos + 1} of {name.text} must be {kind}",
                    getattr(arg, "offset", name.offset),
                    ["integer"] if kind == "an integer" else ["identifier", "'('"],
                )
        return Call(name.text, tuple(args), name.offset)

    def _int_ahead(self) -> bool:
        if self.tok.kind == "int":
            return True
        nxt = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
        return self.at("-") and nxt is not None and nxt.kind == "int"


def parse(text: str) -> Node:
    """Parse ``text`` into an AST.

    Raises :class:`ParseError`, :class:`ArityError` or
    :class:`UnknownIdentifier`, each carrying a 1-based byte offset.
    """
    return _Parser(text).parse()


def _atom_value(name: str) -> hc.HodgeClass:
    if name == "point":
        return hc.POINT
    if name == "L":
        return spaces.L
    return spaces.fixture(name)


def evaluate(node: Node) -> hc.HodgeClass:
    if isinstance(node, Atom):
        return _atom_value(node.name)
    if isinstance(node, BinOp):
        a, b = evaluate(node.lhs), evaluate(node.rhs)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return hc.tensor(a, b)
    if isinstance(node, Call):
        fn, args = node.fn, node.args
        if fn == "ab":
            return spaces.abelian(args[0].value)
        if fn == "curve":
            return spaces.curve(args[0].value)
        if fn == "P":
            return spaces.projective(args[0].value)
        if fn in ("dual", "even", "odd"):
            x = evaluate(args[0])
            return hc.dual(x) if fn == "dual" else spaces.parity_part(x, fn)
        k, x = args[0].value, evaluate(args[1])
        op = {
            "sym": hc.super_sym,
            "wedge": hc.super_wedge,
            "shift": hc.shift_up,
            "tate": hc.tate,
            "angle": hc.angle,
        }.get(fn)
        if op is not None:
            return op(k, x)
        return hc.linear_combine([(k, x)])  # scale
    raise TypeError(f"cannot evaluate {node!r}")


def evaluate_text(text: str) -> hc.HodgeClass:
    return evaluate(parse(text))
