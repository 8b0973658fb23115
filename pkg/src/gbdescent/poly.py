"""Monomials, term orders and sparse multivariate polynomials.

A monomial is a plain tuple of nonnegative exponents, one per ring variable.
A :class:`Polynomial` maps monomials to nonzero field elements; it has no
built-in order, and every order-dependent operation takes a
:class:`TermOrder`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
import numbers
from functools import cached_property
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .arith import FieldDescriptor, FieldElement, FieldKind

Monomial = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**32


class RingMismatchError(ValueError):
    pass


class ExponentOverflow(OverflowError):
    pass


class ZeroPolynomialError(ValueError):
    pass


# --------------------------------------------------------------------------
# monomials
# --------------------------------------------------------------------------


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise ValueError("monomials of different lengths")
    m = tuple(x + y for x, y in zip(a, b))
    if any(e >= MAX_EXPONENT for e in m):
        raise ExponentOverflow(f"exponent overflow in {a} * {b}")
    return m


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(m: Monomial) -> int:
    return sum(m)


# --------------------------------------------------------------------------
# term orders
# --------------------------------------------------------------------------


class OrderKind(enum.Enum):
    LEX = "lex"
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"


@dataclass(frozen=True)
class TermOrder:
    """A monomial order.

    ``precedence`` lists variable indices from most to least significant.
    ``None`` means declaration order: the first declared variable is the most
    significant, so with variables ``x, y`` lex has ``x > y``.

    ``key(m)`` returns a sort key that increases with the order.
    """

    kind: OrderKind = OrderKind.LEX
    precedence: tuple[int, ...] | None = None

    @classmethod
    def from_name(cls, name: str, precedence: Sequence[int] | None = None) -> TermOrder:
        try:
            kind = OrderKind(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown term order {name!r} (expected lex, deglex or degrevlex)") from None
        return cls(kind, None if precedence is None else tuple(precedence))

    @property
    def name(self) -> str:
        return self.kind.value

    @cached_property
    def key(self) -> Callable[[Monomial], tuple]:
        prec = self.precedence
        kind = self.kind
        if prec is None:
            if kind is OrderKind.LEX:
                return lambda m: m
            if kind is OrderKind.DEGLEX:
                return lambda m: (sum(m), m)
            return lambda m: (sum(m), tuple(-e for e in reversed(m)))
        rev = tuple(reversed(prec))
        if kind is OrderKind.LEX:
            return lambda m: tuple(m[i] for i in prec)
        if kind is OrderKind.DEGLEX:
            return lambda m: (sum(m), tuple(m[i] for i in prec))
        return lambda m: (sum(m), tuple(-m[i] for i in rev))

    def __str__(self):
        return self.name


LEX = TermOrder(OrderKind.LEX)
DEGLEX = TermOrder(OrderKind.DEGLEX)
DEGREVLEX = TermOrder(OrderKind.DEGREVLEX)


def compare_monomials(order: TermOrder, m1: Monomial, m2: Monomial) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    if len(m1) != len(m2):
        raise ValueError(f"monomial lengths differ: {len(m1)} vs {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


# --------------------------------------------------------------------------
# rings and polynomials
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class PolyRing:
    field: FieldDescriptor
    variables: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if self.field.has_generator and self.field.symbol in self.variables:
            raise ValueError(f"variable name {self.field.symbol!r} clashes with the field generator")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(self.field.one())

    def constant(self, c) -> Polynomial:
        c = self.field(c)
        if c.is_zero():
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, m: Monomial, c=1) -> Polynomial:
        if len(m) != self.nvars:
            raise ValueError(f"monomial {m} has wrong length for {self.nvars} variables")
        if any(e < 0 for e in m):
            raise ValueError("negative exponent")
        c = self.field(c)
        return Polynomial(self, {} if c.is_zero() else {tuple(m): c})

    def gens(self) -> tuple[Polynomial, ...]:
        n = self.nvars
        return tuple(self.monomial(tuple(int(i == j) for j in range(n))) for i in range(n))

    def from_dict(self, terms: Mapping[Monomial, object]) -> Polynomial:
        out = {}
        for m, c in terms.items():
            c = self.field(c)
            if not c.is_zero():
                m = tuple(m)
                if len(m) != self.nvars:
                    raise ValueError(f"monomial {m} has wrong length")
                out[m] = out[m] + c if m in out else c
        return Polynomial(self, {m: c for m, c in out.items() if not c.is_zero()})

    def __str__(self):
        return f"{self.field}[{', '.join(self.variables)}]"


class Term(NamedTuple):
    coefficient: FieldElement
    monomial: Monomial


class Polynomial:
    """Sparse polynomial: ``coeffs`` maps exponent tuples to nonzero coefficients.

    Treat instances as immutable; ``coeffs`` must not be mutated.
    """

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, ring: PolyRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs
        self._hash = None

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def monomials(self) -> list[Monomial]:
        return list(self.coeffs)

    def terms(self, order: TermOrder) -> list[Term]:
        """Terms sorted strictly decreasing under ``order``."""
        key = order.key
        return [Term(self.coeffs[m], m) for m in sorted(self.coeffs, key=key, reverse=True)]

    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(sum(m) for m in self.coeffs)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.coeffs)

    def coefficients(self) -> list[FieldElement]:
        return list(self.coeffs.values())

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: Polynomial):
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (FieldElement, numbers.Rational)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            if m in out:
                s = out[m] + c
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (FieldElement, numbers.Rational)):
            return scale(self.ring.field(other), self)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                if m in out:
                    out[m] = out[m] + c
                else:
                    out[m] = c
        for m in out:
            if any(e >= MAX_EXPONENT for e in m):
                raise ExponentOverflow(f"exponent overflow in product ({m})")
        return Polynomial(self.ring, {m: c for m, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_term(self, c: FieldElement, m: Monomial) -> Polynomial:
        """Multiply by the single term ``c * x^m``."""
        if c.is_zero():
            return self.ring.zero()
        out = {}
        for m1, c1 in self.coeffs.items():
            out[tuple(a + b for a, b in zip(m1, m))] = c1 * c
        return Polynomial(self.ring, out)

    def map_coefficients(self, fn: Callable[[FieldElement], FieldElement]) -> Polynomial:
        out = {}
        for m, c in self.coeffs.items():
            c2 = fn(c)
            if not c2.is_zero():
                out[m] = c2
        return Polynomial(self.ring, out)

    def homogeneous_components(self) -> dict[int, Polynomial]:
        out: dict[int, dict] = {}
        for m, c in self.coeffs.items():
            out.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(out.items())}

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.coeffs.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.format()})"

    def __str__(self):
        return self.format()

    def format(self, order: TermOrder | None = None) -> str:
        return format_polynomial(self, order or LEX)


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------


def leading_monomial(order: TermOrder, f: Polynomial) -> Monomial:
    if not f.coeffs:
        raise ZeroPolynomialError("zero polynomial has no leading term")
    return max(f.coeffs, key=order.key)


def leading_coefficient(order: TermOrder, f: Polynomial) -> FieldElement:
    return f.coeffs[leading_monomial(order, f)]


def leading_term(order: TermOrder, f: Polynomial) -> Term:
    """The initial term of ``f``: its largest monomial with its coefficient."""
    m = leading_monomial(order, f)
    return Term(f.coeffs[m], m)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def scale(c: FieldElement, f: Polynomial) -> Polynomial:
    c = f.ring.field(c)
    if c.is_zero():
        return f.ring.zero()
    if c.is_one():
        return f
    return Polynomial(f.ring, {m: a * c for m, a in f.coeffs.items()})


def is_homogeneous(f: Polynomial) -> bool:
    return len({sum(m) for m in f.coeffs}) <= 1


def make_monic(order: TermOrder, f: Polynomial) -> Polynomial:
    lc = leading_coefficient(order, f)
    return scale(lc.inverse(), f)


# --------------------------------------------------------------------------
# printing
# --------------------------------------------------------------------------


def format_monomial(m: Monomial, variables: Sequence[str]) -> str:
    parts = []
    for v, e in zip(variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _coefficient_sign_and_text(c: FieldElement) -> tuple[int, str, bool]:
    """Split a coefficient into (sign, magnitude text, needs parentheses)."""
    desc = c.field
    if desc.kind is FieldKind.FINITE:
        text = str(c)
        return 1, text, not c.is_monomial_like()
    if c.is_monomial_like():
        if desc.kind is FieldKind.RATIONALS:
            v = c.value
        else:
            v = c.value[0] if c.value[0] else c.value[1]
        if v < 0:
            return -1, str(-c), False
        return 1, str(c), False
    return 1, str(c), True


def format_term(c: FieldElement, m: Monomial, variables: Sequence[str]) -> tuple[int, str]:
    sign, text, paren = _coefficient_sign_and_text(c)
    if paren:
        text = f"({text})"
    mono = format_monomial(m, variables)
    if not mono:
        return sign, text
    if text == "1":
        return sign, mono
    return sign, f"{text}*{mono}"


def format_polynomial(f: Polynomial, order: TermOrder = LEX) -> str:
    """Canonical text, terms in decreasing order, e.g. ``y^2 - 1/2*x``."""
    if not f.coeffs:
        return "0"
    out = []
    for i, (c, m) in enumerate(f.terms(order)):
        sign, text = format_term(c, m, f.ring.variables)
        if i == 0:
            out.append(("-" if sign < 0 else "") + text)
        else:
            out.append((" - " if sign < 0 else " + ") + text)
    return "".join(out)

