"""Exact coefficient fields and their automorphisms.

Three kinds of field are supported:

* the rationals ``Q``,
* quadratic extensions ``Q(sqrt d)`` (``Q(i)`` for ``d = -1``),
* finite fields ``GF(p^k) = GF(p)[t] / (m(t))`` for a monic irreducible ``m``.

Elements are kept in a canonical form so that equality is structural.
"""

from __future__ import annotations

import enum
import numbers
from collections import deque
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover
    _rational = Fraction

__all__ = [
    "FieldKind",
    "FieldDescriptor",
    "FieldElement",
    "Automorphism",
    "AutomorphismGroup",
    "FieldError",
    "FieldMismatchError",
    "NotAnAutomorphism",
    "GroupTooLarge",
    "rationals",
    "quadratic_field",
    "finite_field",
    "add",
    "mul",
    "inv",
    "apply_automorphism",
    "is_fixed",
    "validate_automorphism",
    "frobenius",
    "conjugation",
    "MAX_GROUP_ORDER",
    "MAX_RADICAND",
]

MAX_GROUP_ORDER = 64
MAX_RADICAND = 10**6


class FieldError(ValueError):
    """Invalid field construction or element operation."""


class FieldMismatchError(FieldError):
    """Operands live in different fields."""


class NotAnAutomorphism(FieldError):
    """Proposed generator image is not a root of the minimal polynomial."""


class GroupTooLarge(FieldError):
    pass


class FieldKind(enum.Enum):
    RATIONALS = "Q"
    QUADRATIC = "QuadraticExt"
    FINITE = "FiniteField"


# --------------------------------------------------------------------------
# small integer / GF(p)[t] helpers
# --------------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        if n % f == 0:
            n //= f
        f += 1
    return True


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo ``m`` in GF(p)[t]; coefficient lists low to high."""
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _pmod(prod, m, p)


def _ppowmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    Degree <= 2 uses exhaustive root search; higher degrees use Rabin's test.
    """
    k = len(modulus) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    if k == 2:
        for r in range(p):
            if sum(c * pow(r, i, p) for i, c in enumerate(modulus)) % p == 0:
                return False
        return True
    x = [0, 1]
    # x^(p^k) == x mod m
    xp = x
    for _ in range(k):
        xp = _ppowmod(xp, p, modulus, p)
    if _trim(list(xp)) != x:
        return False
    for q in _prime_factors(k):
        xp = x
        for _ in range(k // q):
            xp = _ppowmod(xp, p, modulus, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(modulus, diff, p)) != 1:
            return False
    return True


def _pinv(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Inverse of ``a`` modulo ``m`` via the extended Euclidean algorithm."""
    r0, r1 = list(m), _trim([c % p for c in a])
    s0, s1 = [], [1]
    while r1:
        # polynomial long division r0 = q*r1 + r
        q = [0] * max(0, len(r0) - len(r1) + 1)
        r = list(r0)
        lead_inv = pow(r1[-1], -1, p)
        while len(r) >= len(r1) and r:
            c = r[-1] * lead_inv % p
            shift = len(r) - len(r1)
            q[shift] = c
            for i, rc in enumerate(r1):
                r[shift + i] = (r[shift + i] - c * rc) % p
            _trim(r)
        qs = [0] * (len(q) + len(s1))
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                qs[i + j] += x * y
        s_new = [0] * max(len(s0), len(qs))
        for i, x in enumerate(s0):
            s_new[i] += x
        for i, x in enumerate(qs):
            s_new[i] -= x
        r0, r1 = r1, r
        s0, s1 = s1, _trim([c % p for c in s_new])
    # r0 is a nonzero constant when gcd is 1
    if len(r0) != 1:
        raise FieldError("element is not invertible modulo the field modulus")
    c = pow(r0[0], -1, p)
    return [x * c % p for x in s0]


# --------------------------------------------------------------------------
# field descriptor
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldDescriptor:
    """A computable coefficient field.

    Use the constructors :func:`rationals`, :func:`quadratic_field` and
    :func:`finite_field` rather than instantiating this directly; they run the
    validity checks (squarefree radicand, prime characteristic, irreducible
    modulus).
    """

    kind: FieldKind
    radicand: int | None = None
    p: int | None = None
    modulus: tuple[int, ...] | None = None
    symbol: str | None = None

    @property
    def degree(self) -> int:
        """Degree over the prime field."""
        if self.kind is FieldKind.QUADRATIC:
            return 2
        if self.kind is FieldKind.FINITE:
            return len(self.modulus) - 1
        return 1

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is FieldKind.FINITE else 0

    @property
    def has_generator(self) -> bool:
        return self.degree > 1

    def __str__(self) -> str:
        if self.kind is FieldKind.RATIONALS:
            return "Q"
        if self.kind is FieldKind.QUADRATIC:
            if self.radicand == -1 and self.symbol == "i":
                return "Q(i)"
            return f"Q(sqrt {self.radicand})"
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree}; {_format_modulus(self.modulus, self.symbol)})"

    # -- element constructors -------------------------------------------

    def zero(self) -> FieldElement:
        return self.from_int(0)

    def one(self) -> FieldElement:
        return self.from_int(1)

    def gen(self) -> FieldElement:
        """The extension generator (``sqrt d`` or ``t``)."""
        if self.kind is FieldKind.QUADRATIC:
            return FieldElement(self, (_rational(0), _rational(1)))
        if self.kind is FieldKind.FINITE and self.degree > 1:
            v = [0] * self.degree
            v[1] = 1
            return FieldElement(self, tuple(v))
        raise FieldError(f"{self} has no extension generator")

    def from_int(self, n: int) -> FieldElement:
        return self.from_rational(n)

    def from_rational(self, q: numbers.Rational) -> FieldElement:
        q = _rational(q)
        if self.kind is FieldKind.RATIONALS:
            return FieldElement(self, q)
        if self.kind is FieldKind.QUADRATIC:
            return FieldElement(self, (q, _rational(0)))
        if q.denominator % self.p == 0:
            raise FieldError(f"{q} has no image in characteristic {self.p}")
        c = int(q.numerator) * pow(int(q.denominator), -1, self.p) % self.p
        return FieldElement(self, (c,) + (0,) * (self.degree - 1))

    def from_coeffs(self, coeffs: Sequence) -> FieldElement:
        """Build an element from its coordinates over the prime field.

        ``Q(sqrt d)``: ``(a, b)`` means ``a + b*sqrt d``.  ``GF(p^k)``:
        ``(c0, ..., c_{k-1})`` means ``c0 + c1*t + ...``; longer inputs are
        reduced modulo the field modulus.
        """
        if self.kind is FieldKind.RATIONALS:
            (a,) = coeffs
            return FieldElement(self, _rational(a))
        if self.kind is FieldKind.QUADRATIC:
            a, b = coeffs
            return FieldElement(self, (_rational(a), _rational(b)))
        red = _pmod([int(c) for c in coeffs], self.modulus, self.p)
        return FieldElement(self, tuple(red) + (0,) * (self.degree - len(red)))

    def __call__(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"{x!r} is not in {self}")
            return x
        return self.from_rational(x)

    def coordinates(self, a: FieldElement) -> tuple:
        """Coordinates of ``a`` over the prime field (inverse of from_coeffs)."""
        if self.kind is FieldKind.RATIONALS:
            return (a.value,)
        return a.value

    def elements(self) -> Iterator[FieldElement]:
        """Enumerate a finite field."""
        if self.kind is not FieldKind.FINITE:
            raise FieldError("only finite fields can be enumerated")
        from itertools import product

        for v in product(range(self.p), repeat=self.degree):
            yield FieldElement(self, tuple(v))

    # -- raw arithmetic on canonical values ---------------------------------

    def _add(self, a, b):
        kind = self.kind
        if kind is FieldKind.RATIONALS:
            return a + b
        if kind is FieldKind.QUADRATIC:
            return (a[0] + b[0], a[1] + b[1])
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _neg(self, a):
        kind = self.kind
        if kind is FieldKind.RATIONALS:
            return -a
        if kind is FieldKind.QUADRATIC:
            return (-a[0], -a[1])
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        kind = self.kind
        if kind is FieldKind.RATIONALS:
            return a * b
        if kind is FieldKind.QUADRATIC:
            a0, a1 = a
            b0, b1 = b
            return (a0 * b0 + self.radicand * a1 * b1, a0 * b1 + a1 * b0)
        k = len(a)
        p = self.p
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = _pmulmod(_trim(list(a)), _trim(list(b)), self.modulus, p)
        return tuple(prod) + (0,) * (k - len(prod))

    def _inv(self, a):
        kind = self.kind
        if kind is FieldKind.RATIONALS:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        if kind is FieldKind.QUADRATIC:
            a0, a1 = a
            norm = a0 * a0 - self.radicand * a1 * a1
            if norm == 0:
                raise ZeroDivisionError("inverse of zero")
            return (a0 / norm, -a1 / norm)
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        if len(a) == 1:
            return (pow(a[0], -1, self.p),)
        r = _pinv(list(a), self.modulus, self.p)
        return tuple(r) + (0,) * (len(a) - len(r))

    def _is_zero(self, a) -> bool:
        if self.kind is FieldKind.RATIONALS:
            return a == 0
        if self.kind is FieldKind.QUADRATIC:
            return a[0] == 0 and a[1] == 0
        return not any(a)


def _format_modulus(modulus: Sequence[int], symbol: str) -> str:
    parts = []
    for i in range(len(modulus) - 1, -1, -1):
        c = modulus[i]
        if c == 0:
            continue
        if i == 0:
            mono = str(c)
        else:
            base = symbol if i == 1 else f"{symbol}^{i}"
            mono = base if c == 1 else f"{c}*{base}"
        parts.append(mono)
    return " + ".join(parts)


def rationals() -> FieldDescriptor:
    return FieldDescriptor(FieldKind.RATIONALS)


def quadratic_field(d: int, symbol: str | None = None) -> FieldDescriptor:
    """``Q(sqrt d)`` for a squarefree integer ``d`` not in {0, 1}.

    The generator symbol defaults to ``i`` for ``d = -1`` and ``s`` otherwise.
    """
    d = int(d)
    if d in (0, 1):
        raise FieldError(f"radicand must not be 0 or 1 (got {d})")
    if abs(d) > MAX_RADICAND:
        raise FieldError(f"radicand {d} exceeds the validation bound {MAX_RADICAND}")
    if not _is_squarefree(d):
        raise FieldError(f"radicand {d} is not squarefree")
    if symbol is None:
        symbol = "i" if d == -1 else "s"
    return FieldDescriptor(FieldKind.QUADRATIC, radicand=d, symbol=symbol)


def finite_field(
    p: int, modulus: Sequence[int] | None = None, symbol: str = "t", degree: int | None = None
) -> FieldDescriptor:
    """``GF(p^k)`` presented as ``GF(p)[t]/(modulus)``.

    ``modulus`` lists coefficients from the constant term upward and must be
    monic and irreducible.  Without a modulus, ``degree`` selects the
    lexicographically first monic irreducible of that degree.
    """
    p = int(p)
    if not _is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if modulus is None:
        k = 1 if degree is None else int(degree)
        if k < 1:
            raise FieldError("extension degree must be >= 1")
        modulus = _first_irreducible(p, k)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) < 2 or modulus[-1] != 1:
        raise FieldError("modulus must be monic of degree >= 1")
    if degree is not None and len(modulus) - 1 != degree:
        raise FieldError(f"modulus has degree {len(modulus) - 1}, expected {degree}")
    if not _is_irreducible(modulus, p):
        raise FieldError(f"modulus {_format_modulus(modulus, symbol)} is reducible over GF({p})")
    return FieldDescriptor(FieldKind.FINITE, p=p, modulus=modulus, symbol=symbol)


def _first_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    from itertools import product

    for low in product(range(p), repeat=k):
        cand = tuple(reversed(low)) + (1,)
        if cand[0] and _is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


# --------------------------------------------------------------------------
# elements
# --------------------------------------------------------------------------


class FieldElement:
    """An element of a :class:`FieldDescriptor`, in canonical form.

    Supports ``+ - * /``, unary minus, ``**`` with integer exponents and
    mixing with Python ints and rationals.
    """

    __slots__ = ("field", "value", "_hash")

    def __init__(self, field: FieldDescriptor, value):
        self.field = field
        self.value = value
        self._hash = None

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, numbers.Rational):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field._add(self.value, self.field._neg(other.value)))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return self == self.field.one()

    def is_rational(self) -> bool:
        """True when the element lies in the prime field."""
        if self.field.kind is FieldKind.RATIONALS:
            return True
        return not any(self.value[1:])

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, numbers.Rational):
            try:
                return self == self.field.from_rational(other)
            except FieldError:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.value))
        return self._hash

    def __repr__(self):
        return f"FieldElement({self.field}, {self})"

    def __str__(self):
        return format_element(self)

    # helpers for polynomial printing
    def is_monomial_like(self) -> bool:
        """At most one nonzero coordinate, so a sign can be factored out."""
        if self.field.kind is FieldKind.RATIONALS:
            return True
        return sum(1 for c in self.value if c) <= 1


def format_element(a: FieldElement) -> str:
    """Canonical text: ``a/b`` for rationals, ``a + b*g`` for extensions."""
    f = a.field
    if f.kind is FieldKind.RATIONALS:
        return str(a.value)
    parts: list[tuple[int, str]] = []
    for i, c in enumerate(a.value):
        if c == 0:
            continue
        if i == 0:
            parts.append((1 if c > 0 else -1, str(abs(c))))
            continue
        base = f.symbol if i == 1 else f"{f.symbol}^{i}"
        mag = abs(c)
        parts.append((1 if c > 0 else -1, base if mag == 1 else f"{mag}*{base}"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for sign, text in parts[1:]:
        out += (" - " if sign < 0 else " + ") + text
    return out


# --------------------------------------------------------------------------
# automorphisms
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Automorphism:
    """A field automorphism fixing the prime field.

    It is determined by the image of the extension generator.  For fields
    without a generator (``Q``, ``GF(p)``) only the identity exists and
    ``image`` is ``None``.
    """

    field: FieldDescriptor
    image: FieldElement | None
    name: str = "sigma"
    _basis_images: tuple = dataclass_field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.image is None:
            return
        if self.field.kind is FieldKind.FINITE:
            # images of 1, t, t^2, ... ; the map is GF(p)-linear
            imgs = []
            cur = self.field.one()
            for _ in range(self.field.degree):
                imgs.append(cur.value)
                cur = cur * self.image
            object.__setattr__(self, "_basis_images", tuple(imgs))

    @classmethod
    def identity(cls, desc: FieldDescriptor, name: str = "id") -> Automorphism:
        return cls(desc, desc.gen() if desc.has_generator else None, name)

    def __call__(self, a: FieldElement) -> FieldElement:
        return apply_automorphism(self, a)

    def is_identity(self) -> bool:
        return self.image is None or self.image == self.field.gen()

    def compose(self, other: Automorphism, name: str | None = None) -> Automorphism:
        """``self ∘ other``: apply ``other`` first."""
        if other.field != self.field:
            raise FieldMismatchError("automorphisms of different fields")
        if self.image is None:
            return other
        img = self(other.image)
        return Automorphism(self.field, img, name or f"{self.name}*{other.name}")

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.field == other.field and self.image == other.image

    def __hash__(self):
        return hash((self.field, self.image))

    def __repr__(self):
        img = "" if self.image is None else f", {self.field.symbol} -> {self.image}"
        return f"Automorphism({self.name}{img})"


def _minpoly_value(desc: FieldDescriptor, x: FieldElement) -> FieldElement:
    """Evaluate the generator's minimal polynomial at ``x``."""
    if desc.kind is FieldKind.QUADRATIC:
        return x * x - desc.radicand
    acc = desc.zero()
    for c in reversed(desc.modulus):
        acc = acc * x + c
    return acc


def validate_automorphism(desc: FieldDescriptor, image: FieldElement | None, name: str = "sigma") -> Automorphism:
    """Build the automorphism sending the generator to ``image``.

    Raises :class:`NotAnAutomorphism` unless ``image`` is a root of the
    generator's minimal polynomial.
    """
    if not desc.has_generator:
        if image is not None:
            raise NotAnAutomorphism(f"{desc} has no generator; only the identity exists")
        return Automorphism(desc, None, name)
    if image is None:
        raise NotAnAutomorphism("an image for the generator is required")
    image = desc(image)
    if not _minpoly_value(desc, image).is_zero():
        raise NotAnAutomorphism(
            f"{image} is not a root of the minimal polynomial of {desc.symbol} over the prime field"
        )
    return Automorphism(desc, image, name)


def frobenius(desc: FieldDescriptor, power: int = 1, name: str | None = None) -> Automorphism:
    """The map ``x -> x^(p^power)`` on a finite field."""
    if desc.kind is not FieldKind.FINITE:
        raise FieldError("Frobenius is defined on finite fields only")
    if not desc.has_generator:
        return Automorphism(desc, None, name or "frob")
    return validate_automorphism(desc, desc.gen() ** (desc.p**power), name or "frob")


def conjugation(desc: FieldDescriptor, name: str = "conj") -> Automorphism:
    """``sqrt d -> -sqrt d`` on a quadratic field."""
    if desc.kind is not FieldKind.QUADRATIC:
        raise FieldError("conjugation is defined on quadratic fields only")
    return validate_automorphism(desc, -desc.gen(), name)


def apply_automorphism(sigma: Automorphism, a: FieldElement) -> FieldElement:
    desc = sigma.field
    if a.field != desc:
        raise FieldMismatchError(f"automorphism of {desc} applied to element of {a.field}")
    if sigma.image is None:
        return a
    if desc.kind is FieldKind.QUADRATIC:
        a0, a1 = a.value
        b0, b1 = sigma.image.value
        # a0 + a1*g  ->  a0 + a1*(b0 + b1*g)
        return FieldElement(desc, (a0 + a1 * b0, a1 * b1))
    p = desc.p
    out = [0] * desc.degree
    for c, img in zip(a.value, sigma._basis_images):
        if c:
            for j, v in enumerate(img):
                out[j] += c * v
    return FieldElement(desc, tuple(x % p for x in out))


@dataclass(frozen=True)
class AutomorphismGroup:
    """A finite group of automorphisms given by generators.

    ``elements`` is the full closure under composition, identity first,
    computed eagerly by breadth-first search.
    """

    generators: tuple[Automorphism, ...]
    elements: tuple[Automorphism, ...]
    field: FieldDescriptor

    @classmethod
    def generate(cls, desc: FieldDescriptor, generators: Iterable[Automorphism] = ()) -> AutomorphismGroup:
        gens = tuple(generators)
        for g in gens:
            if g.field != desc:
                raise FieldMismatchError(f"generator {g.name} is not an automorphism of {desc}")
        ident = Automorphism.identity(desc)
        seen = {ident: ident}
        queue = deque([ident])
        while queue:
            cur = queue.popleft()
            for g in gens:
                nxt = g.compose(cur)
                if nxt not in seen:
                    if len(seen) >= MAX_GROUP_ORDER:
                        raise GroupTooLarge(f"group closure exceeds {MAX_GROUP_ORDER} elements")
                    seen[nxt] = nxt
                    queue.append(nxt)
        return cls(gens, tuple(seen), desc)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def inverse(self, sigma: Automorphism) -> Automorphism:
        for tau in self.elements:
            if sigma.compose(tau).is_identity():
                return tau
        raise FieldError(f"{sigma!r} is not in the group")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def is_fixed(a: FieldElement, group: AutomorphismGroup) -> bool:
    """True iff every automorphism in ``group`` fixes ``a``."""
    return all(apply_automorphism(s, a) == a for s in group.elements)
