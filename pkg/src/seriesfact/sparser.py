"""Parser for the closed-form series expression language.

Grammar (whitespace is insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | factor
    factor := atom ('^' NAT)?
    atom   := '(' expr ')' | 'inv' '(' expr ')' | CONST | 'z'

``CONST`` depends on the ring: integers; Gaussian literals such as
``4+3i``, ``-2i`` or ``i``; bracketed polynomials in ``y`` with rational
coefficients such as ``[1+y]`` or ``[y^2/3 - 1]``.

A Gaussian literal ``a+bi`` is lexed as a single constant whenever that
does not change the value of the expression under the usual precedence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError
from .rings import GAUSSIAN, POLYQ, GaussInt, QPoly, Ring, get_ring
from .series import Series, invert

# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Const:
    value: object


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Inv:
    arg: "Expr"


Expr = Union[Const, Var, Add, Sub, Mul, Pow, Neg, Inv]


# --------------------------------------------------------------------------
# Lexer


@dataclass(frozen=True)
class Token:
    kind: str  # NUM IMAG CONST OP LP RP Z INV END
    text: str
    pos: int
    value: object = None


def _tokenize(text: str, ring: Ring, var: str = "z") -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        ch = text[pos]
        if ch == "[":
            end = text.find("]", pos)
            if end < 0:
                raise ParseError("unterminated '['", pos)
            if ring is not POLYQ:
                raise ParseError(f"polynomial literal not valid in ring {ring.tag}", pos)
            inner = text[pos + 1 : end]
            try:
                value = parse_ypoly(inner)
            except ParseError as exc:
                raise ParseError(exc.reason, pos + 1 + exc.pos) from None
            tokens.append(Token("CONST", text[pos : end + 1], pos, value))
            pos = end + 1
            continue
        if ch.isdigit():
            m = re.match(r"\d+", text[pos:])
            digits = m.group(0)
            after = pos + len(digits)
            if after < n and text[after] == "i" and (after + 1 >= n or not text[after + 1].isalnum()):
                _require_gauss(ring, pos)
                tokens.append(Token("IMAG", digits + "i", pos, GaussInt(0, int(digits))))
                pos = after + 1
                continue
            if after < n and (text[after].isalpha() or text[after] == "_"):
                raise ParseError(f"unexpected character {text[after]!r}", after)
            tokens.append(Token("NUM", digits, pos, int(digits)))
            pos = after
            continue
        if ch.isalpha() or ch == "_":
            m = re.match(r"[A-Za-z_]\w*", text[pos:])
            word = m.group(0)
            if word == var:
                tokens.append(Token("Z", word, pos))
            elif word == "inv" and var == "z":
                tokens.append(Token("INV", word, pos))
            elif word == "i" and var == "z":
                _require_gauss(ring, pos)
                tokens.append(Token("IMAG", "i", pos, GaussInt(0, 1)))
            else:
                raise ParseError(f"unknown identifier {word!r}", pos)
            pos += len(word)
            continue
        if ch in "+-*^":
            tokens.append(Token("OP", ch, pos))
        elif ch == "/" and var != "z":
            tokens.append(Token("OP", ch, pos))
        elif ch == "(":
            tokens.append(Token("LP", ch, pos))
        elif ch == ")":
            tokens.append(Token("RP", ch, pos))
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
        pos += 1
    tokens.append(Token("END", "", n))
    return _merge_gaussian(tokens) if ring is GAUSSIAN else tokens


def _require_gauss(ring, pos):
    if ring is not GAUSSIAN:
        raise ParseError(f"Gaussian literal not valid in ring {ring.tag}", pos)


def _merge_gaussian(tokens: list[Token]) -> list[Token]:
    """Fuse ``NUM (+|-) IMAG`` into one constant when precedence allows."""
    out: list[Token] = []
    i = 0
    while i < len(tokens):
        t = tokens[i]
        if (
            t.kind == "NUM"
            and i + 2 < len(tokens)
            and tokens[i + 1].kind == "OP"
            and tokens[i + 1].text in "+-"
            and tokens[i + 2].kind == "IMAG"
            and (not out or out[-1].kind == "LP" or (out[-1].kind == "OP" and out[-1].text == "+"))
            and not (tokens[i + 3].kind == "OP" and tokens[i + 3].text in "*^")
        ):
            im = tokens[i + 2].value.im
            if tokens[i + 1].text == "-":
                im = -im
            value = GaussInt(t.value, im)
            out.append(Token("CONST", f"{t.text}{tokens[i + 1].text}{tokens[i + 2].text}", t.pos, value))
            i += 3
            continue
        out.append(t)
        i += 1
    return out


# --------------------------------------------------------------------------
# Recursive descent


class _Parser:
    def __init__(self, tokens: list[Token], ring: Ring):
        self.tokens = tokens
        self.i = 0
        self.ring = ring

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def accept_op(self, ops: str):
        t = self.cur
        if t.kind == "OP" and t.text in ops:
            self.i += 1
            return t
        return None

    def expect(self, kind: str, what: str) -> Token:
        t = self.cur
        if t.kind != kind:
            found = "end of input" if t.kind == "END" else repr(t.text)
            raise ParseError(f"expected {what}, found {found}", t.pos)
        self.i += 1
        return t

    def parse(self) -> Expr:
        node = self.expr()
        if self.cur.kind != "END":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while True:
            op = self.accept_op("+-")
            if op is None:
                return node
            rhs = self.term()
            node = Add(node, rhs) if op.text == "+" else Sub(node, rhs)

    def term(self) -> Expr:
        node = self.unary()
        while True:
            op = self.accept_op("*/")
            if op is None:
                return node
            if op.text == "/":
                t = self.expect("NUM", "integer divisor")
                if t.value == 0:
                    raise ParseError("division by zero", t.pos)
                node = Mul(node, Const(Fraction(1, t.value)))
            else:
                node = Mul(node, self.unary())

    def unary(self) -> Expr:
        if self.accept_op("-"):
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> Expr:
        base = self.atom()
        if self.accept_op("^"):
            t = self.cur
            if t.kind == "OP" and t.text == "-":
                raise ParseError("exponent must be a nonnegative integer", t.pos)
            if t.kind != "NUM":
                raise ParseError("exponent must be a nonnegative integer", t.pos)
            self.advance()
            return Pow(base, t.value)
        return base

    def atom(self) -> Expr:
        t = self.cur
        if t.kind == "LP":
            self.advance()
            node = self.expr()
            self.expect("RP", "')'")
            return node
        if t.kind == "INV":
            self.advance()
            self.expect("LP", "'(' after inv")
            node = self.expr()
            self.expect("RP", "')'")
            return Inv(node)
        if t.kind in ("NUM", "IMAG", "CONST"):
            self.advance()
            return Const(self.ring.coerce(t.value))
        if t.kind == "Z":
            self.advance()
            return Var()
        found = "end of input" if t.kind == "END" else repr(t.text)
        raise ParseError(f"expected a constant, 'z', 'inv' or '(', found {found}", t.pos)


def parse(text: str, ring="int") -> Expr:
    """Parse ``text`` into an expression tree for the given ring."""
    ring = get_ring(ring)
    return _Parser(_tokenize(text, ring), ring).parse()


def parse_ypoly(text: str) -> QPoly:
    """Parse the inside of a ``[...]`` literal into a :class:`QPoly`."""
    tokens = _tokenize(text, POLYQ, var="y")
    node = _Parser(tokens, _YRING).parse()
    return _eval_ypoly(node)


class _YCoeffs(Ring):
    tag = "qcoeff"

    def coerce(self, x):
        return QPoly.coerce(x)


_YRING = _YCoeffs()


def _eval_ypoly(node: Expr) -> QPoly:
    if isinstance(node, Const):
        return QPoly.coerce(node.value)
    if isinstance(node, Var):
        return QPoly.y()
    if isinstance(node, Add):
        return _eval_ypoly(node.left) + _eval_ypoly(node.right)
    if isinstance(node, Sub):
        return _eval_ypoly(node.left) - _eval_ypoly(node.right)
    if isinstance(node, Mul):
        return _eval_ypoly(node.left) * _eval_ypoly(node.right)
    if isinstance(node, Neg):
        return -_eval_ypoly(node.arg)
    if isinstance(node, Pow):
        return _eval_ypoly(node.base) ** node.exp
    raise ParseError("inv is not allowed inside a polynomial literal", 0)


# --------------------------------------------------------------------------
# Evaluation and printing


def evaluate(node: Expr, ring="int") -> Series:
    """Build the series denoted by ``node``."""
    ring = get_ring(ring)
    if isinstance(node, Const):
        return Series.constant(ring.coerce(node.value), ring)
    if isinstance(node, Var):
        return Series.z(ring)
    if isinstance(node, Add):
        return evaluate(node.left, ring) + evaluate(node.right, ring)
    if isinstance(node, Sub):
        return evaluate(node.left, ring) - evaluate(node.right, ring)
    if isinstance(node, Mul):
        if isinstance(node.right, Const):
            return evaluate(node.left, ring) * ring.coerce(node.right.value)
        if isinstance(node.left, Const):
            return ring.coerce(node.left.value) * evaluate(node.right, ring)
        return evaluate(node.left, ring) * evaluate(node.right, ring)
    if isinstance(node, Neg):
        return -evaluate(node.arg, ring)
    if isinstance(node, Pow):
        return evaluate(node.base, ring) ** node.exp
    if isinstance(node, Inv):
        return invert(evaluate(node.arg, ring))
    raise TypeError(f"not an expression node: {node!r}")


# ``eval`` would shadow the builtin
eval_ast = evaluate


def parse_series(text: str, ring="int") -> Series:
    ring = get_ring(ring)
    return evaluate(parse(text, ring), ring)


_PREC = {Add: 1, Sub: 1, Mul: 2, Neg: 3, Pow: 4}


def _const_str(value) -> str:
    if isinstance(value, QPoly):
        return f"[{value}]"
    if isinstance(value, GaussInt):
        if value.im == 0:
            return str(value.re) if value.re >= 0 else f"({value.re})"
        if value.re == 0 and value.im < 0:
            return f"(0{value})"  # "-i" alone would reparse as a negation
        return f"({value})"
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"[{value}]"
    return str(value) if value >= 0 else f"({value})"


def pretty(node: Expr) -> str:
    """Render ``node`` so that parsing the result gives back the same tree."""
    if isinstance(node, Const):
        return _const_str(node.value)
    if isinstance(node, Var):
        return "z"
    if isinstance(node, Inv):
        return f"inv({pretty(node.arg)})"
    prec = _PREC[type(node)]

    def wrap(child, min_prec):
        s = pretty(child)
        return f"({s})" if _PREC.get(type(child), 9) < min_prec else s

    if isinstance(node, Add):
        return f"{wrap(node.left, 1)} + {wrap(node.right, 2)}"
    if isinstance(node, Sub):
        return f"{wrap(node.left, 1)} - {wrap(node.right, 2)}"
    if isinstance(node, Mul):
        return f"{wrap(node.left, 2)}*{wrap(node.right, 3)}"
    if isinstance(node, Neg):
        return f"-{wrap(node.arg, 3)}"
    if isinstance(node, Pow):
        return f"{wrap(node.base, 5)}^{node.exp}"
    raise TypeError(f"not an expression node: {node!r}")
