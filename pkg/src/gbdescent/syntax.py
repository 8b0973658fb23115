"""Text syntax for fields and polynomials.

Field specs::

    Q    Q(i)    Q(sqrt -5)    GF(7)    GF(3^2; t^2 + 1)

Polynomials are ordinary infix expressions over the ring variables and the
field generator, e.g. ``x^2*y - (1/2)*i*y^3``.  Products may be written by
juxtaposition (``2x y``); division is allowed by nonzero constants only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .arith import FieldDescriptor, FieldElement, FieldError, finite_field, quadratic_field, rationals
from .poly import PolyRing, Polynomial

__all__ = ["ParseError", "parse_field", "parse_polynomial", "parse_element"]


class ParseError(ValueError):
    """A syntax error, with 1-based column (and line when known)."""

    def __init__(self, message: str, column: int | None = None, line: int | None = None):
        self.message = message
        self.column = column
        self.line = line
        super().__init__(self._render())

    def _render(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        return f"{', '.join(where)}: {self.message}" if where else self.message


@dataclass
class _Token:
    kind: str  # NUM, ID, OP, END
    text: str
    col: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list[_Token]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            toks.append(_Token("NUM", m.group(1), m.start(1) + 1))
        elif m.group(2) is not None:
            toks.append(_Token("ID", m.group(2), m.start(2) + 1))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3) + 1)
            toks.append(_Token("OP", ch, m.start(3) + 1))
        pos = m.end()
    toks.append(_Token("END", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.ring = ring
        self.toks = _tokenize(text)
        self.pos = 0
        self.var_index = {v: k for k, v in enumerate(ring.variables)}

    @property
    def cur(self) -> _Token:
        return self.toks[self.pos]

    def advance(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str):
        tok = self.cur
        if tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok.col)
        self.advance()

    def parse(self) -> Polynomial:
        if self.cur.kind == "END":
            raise ParseError("empty expression", self.cur.col)
        p = self.expr()
        if self.cur.kind != "END":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.col)
        return p

    def expr(self) -> Polynomial:
        result = self.term()
        while self.cur.kind == "OP" and self.cur.text in "+-":
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _starts_factor(self) -> bool:
        tok = self.cur
        return tok.kind in ("NUM", "ID") or (tok.kind == "OP" and tok.text == "(")

    def term(self) -> Polynomial:
        result = self.unary()
        while True:
            tok = self.cur
            if tok.kind == "OP" and tok.text == "*":
                self.advance()
                result = result * self.unary()
            elif tok.kind == "OP" and tok.text == "/":
                self.advance()
                col = self.cur.col
                den = self.unary()
                if not den.is_constant() or den.is_zero():
                    raise ParseError("division only by nonzero constants", col)
                c = den.coeffs[(0,) * self.ring.nvars]
                result = result * c.inverse()
            elif self._starts_factor():
                result = result * self.power()
            else:
                return result

    def unary(self) -> Polynomial:
        tok = self.cur
        if tok.kind == "OP" and tok.text in "+-":
            self.advance()
            inner = self.unary()
            return -inner if tok.text == "-" else inner
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.cur.kind == "OP" and self.cur.text == "^":
            self.advance()
            tok = self.cur
            if tok.kind != "NUM":
                raise ParseError("exponent must be a nonnegative integer", tok.col)
            self.advance()
            return base ** int(tok.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.cur
        ring = self.ring
        if tok.kind == "NUM":
            self.advance()
            try:
                return ring.constant(int(tok.text))
            except FieldError as exc:
                raise ParseError(str(exc), tok.col) from None
        if tok.kind == "ID":
            self.advance()
            if tok.text in self.var_index:
                return ring.gens()[self.var_index[tok.text]]
            if ring.field.symbol is not None and tok.text == ring.field.symbol and ring.field.has_generator:
                return ring.constant(ring.field.gen())
            raise ParseError(f"unknown variable {tok.text!r}", tok.col)
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.col)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    try:
        return _Parser(text, ring).parse()
    except ZeroDivisionError:
        raise ParseError("division by zero") from None


def parse_element(text: str, field: FieldDescriptor) -> FieldElement:
    """Parse a constant expression in the field generator."""
    p = parse_polynomial(text, PolyRing(field, ()))
    return p.coeffs.get((), field.zero())


_FIELD_RE = {
    "Q": re.compile(r"^Q$"),
    "Qi": re.compile(r"^Q\(\s*i\s*\)$"),
    "Qsqrt": re.compile(r"^Q\(\s*sqrt\s*\(?\s*([+-]?\d+)\s*\)?\s*\)$"),
    "GFp": re.compile(r"^GF\(\s*(\d+)\s*\)$"),
    "GFq": re.compile(r"^GF\(\s*(\d+)\s*\^\s*(\d+)\s*;\s*(.+?)\s*\)$"),
}


def parse_field(text: str) -> FieldDescriptor:
    """Parse a field spec such as ``Q(sqrt 2)`` or ``GF(3^2; t^2 + 1)``."""
    s = text.strip()
    try:
        if _FIELD_RE["Q"].match(s):
            return rationals()
        if _FIELD_RE["Qi"].match(s):
            return quadratic_field(-1, "i")
        m = _FIELD_RE["Qsqrt"].match(s)
        if m:
            return quadratic_field(int(m.group(1)))
        m = _FIELD_RE["GFp"].match(s)
        if m:
            return finite_field(int(m.group(1)))
        m = _FIELD_RE["GFq"].match(s)
        if m:
            p, k = int(m.group(1)), int(m.group(2))
            prime = finite_field(p)
            mod = parse_polynomial(m.group(3), PolyRing(prime, ("t",)))
            coeffs = [0] * (mod.total_degree() + 1)
            for mono, c in mod.coeffs.items():
                coeffs[mono[0]] = c.value[0]
            return finite_field(p, coeffs, symbol="t", degree=k)
    except FieldError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unrecognized field spec {text.strip()!r}")
