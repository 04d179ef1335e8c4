"""Parser for the polynomial string syntax (``x^3 + 2*x - 1/2``, ``(t+1)*x + 2``)
and for cycle types (``15,1^4``)."""
from __future__ import annotations

import re
from fractions import Fraction

from .fields import QQ, Field, FieldMismatchError, FiniteField
from .poly import Poly


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", column: int = 0, line: int = 1):
        self.message = message
        self.text = text
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}" + (f" in {text!r}" if text else ""))


class GeneratorMismatchError(ParseError, FieldMismatchError):
    """An extension-field generator used over a field that has none."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\^|\*|/|\+|-|\(|\)))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos + 1)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, field: Field, var: str, gen: str | None):
        self.text = text
        self.field = field
        self.var = var
        self.gen = gen
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def is_op(self, *ops: str) -> bool:
        tok = self.tokens[self.i]
        return tok[0] == "op" and tok[1] in ops

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2] + 1)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self) -> Poly:
        sign = None
        if self.is_op("+", "-"):
            sign = self.take()[1]
        value = self.term()
        if sign == "-":
            value = -value
        while self.is_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.power()
        while self.is_op("*", "/"):
            op_tok = self.take()
            rhs = self.power()
            if op_tok[1] == "*":
                value = value * rhs
            else:
                if rhs.degree > 0:
                    self.error("division by a non-constant", op_tok)
                if rhs.is_zero():
                    self.error("division by zero", op_tok)
                value = value.scale(self.field.inv(rhs.coeffs[0]))
        return value

    def power(self) -> Poly:
        base = self.atom()
        if self.is_op("^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal", tok)
            base = base ** int(tok[1])
        return base

    def atom(self) -> Poly:
        tok = self.take()
        K = self.field
        if tok[0] == "int":
            return Poly(K, [K.from_int(int(tok[1]))])
        if tok[0] == "name":
            if tok[1] == self.var:
                return Poly.x(K)
            if self.gen is not None and tok[1] == self.gen:
                if not isinstance(K, FiniteField) or K.k == 1:
                    raise GeneratorMismatchError(
                        f"generator {self.gen!r} only exists in extension fields, not {K}", self.text, tok[2] + 1)
                return Poly(K, [K.generator])
            self.error(f"unknown symbol {tok[1]!r}", tok)
        if tok[0] == "op" and tok[1] == "(":
            value = self.expr()
            if self.take()[1] != ")":
                self.error("expected ')'", self.tokens[self.i - 1])
            return value
        self.error(f"unexpected {tok[1] or 'end of input'!r}", tok)
        raise AssertionError  # pragma: no cover


def parse_poly(text: str, field: Field, var: str = "x") -> Poly:
    """Parse a polynomial in ``var`` over ``field``; ``t`` denotes the generator
    of an extension field."""
    return _Parser(text, field, var, "t").parse()


def parse_element(text: str, field: Field):
    """Parse a field element (a constant expression, e.g. ``-1/2`` or ``t+1``)."""
    f = _Parser(text, field, "\0", "t").parse()
    return f.coeffs[0] if f.coeffs else field.zero


def parse_int_poly(text: str, var: str) -> list[int]:
    """Integer coefficient list (constant first) of a polynomial in ``var``."""
    f = _Parser(text, QQ, var, None).parse()
    out = []
    for c in f.coeffs:
        if c.denominator != 1:
            raise ParseError("expected integer coefficients", text, 1)
        out.append(int(c))
    return out


def parse_divisor(text: str, field: Field) -> tuple[Poly, int]:
    """Split a rendered prime power ``(x - 1)^3`` / ``x^3`` / ``x^2 + 1`` into
    (base, exponent)."""
    text = text.strip()
    m = re.fullmatch(r"\((.+)\)\^(\d+)", text)
    if m:
        return parse_poly(m.group(1), field), int(m.group(2))
    m = re.fullmatch(r"x\^(\d+)", text)
    if m:
        return Poly.x(field), int(m.group(1))
    return parse_poly(text, field), 1


def parse_cycle_type(text: str) -> list[int]:
    """``15,1^4`` -> [15, 1, 1, 1, 1]."""
    parts: list[int] = []
    if not text.strip():
        raise ParseError("empty cycle type", text, 1)
    col = 1
    for chunk in text.split(","):
        item = chunk.strip()
        m = re.fullmatch(r"(\d+)(?:\s*\^\s*(\d+))?", item)
        if not m:
            raise ParseError(f"bad cycle-type entry {item!r}", text, col)
        size = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) else 1
        if size < 1:
            raise ParseError("cycle lengths must be positive", text, col)
        parts.extend([size] * reps)
        col += len(chunk) + 1
    if not parts:
        raise ParseError("empty cycle type", text, 1)
    return parts


def parse_rational(text: str) -> Fraction:
    return parse_element(text, QQ)
