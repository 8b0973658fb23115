"""Groebner bases: division, S-polynomials, Buchberger, reduced bases."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .poly import (
    LEX,
    Monomial,
    PolyRing,
    Polynomial,
    RingMismatchError,
    TermOrder,
    ZeroPolynomialError,
    format_polynomial,
    leading_monomial,
    make_monic,
    monomial_divides,
    monomial_lcm,
)

MAX_PAIR_REDUCTIONS = 10**6


class ZeroIdealError(ValueError):
    pass


class ResourceExhausted(RuntimeError):
    pass


class NotAGroebnerBasis(ValueError):
    pass


class Ideal:
    """An ideal given by a nonempty list of nonzero generators."""

    def __init__(self, generators: Iterable[Polynomial], ring: PolyRing | None = None):
        gens = list(generators)
        if ring is None:
            if not gens:
                raise ZeroIdealError("an ideal needs at least one generator")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in {ring}")
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(g for g in gens if not g.is_zero())
        if not self.generators:
            raise ZeroIdealError("the zero ideal is not supported")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    """A Groebner basis, elements monic and sorted by leading monomial increasing.

    When ``certificates`` is present, ``certificates[k][j]`` is the cofactor of
    input generator ``j`` in ``elements[k]``.
    """

    ideal: Ideal
    order: TermOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = False
    certificates: tuple[tuple[Polynomial, ...], ...] | None = None

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list[Monomial]:
        return [leading_monomial(self.order, g) for g in self.elements]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def lines(self) -> list[str]:
        return [format_polynomial(g, self.order) for g in self.elements]


# --------------------------------------------------------------------------
# division
# --------------------------------------------------------------------------


def _sub_term_multiple(p: dict, g: dict, c, shift: Monomial) -> None:
    """In place: ``p -= c * x^shift * g``."""
    for gm, gc in g.items():
        m = tuple(a + b for a, b in zip(gm, shift))
        v = p.get(m)
        prod = gc * c
        if v is None:
            p[m] = -prod
        else:
            v = v - prod
            if v.is_zero():
                del p[m]
            else:
                p[m] = v


def _divide(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder, track: bool):
    key = order.key
    heads = []
    for g in divisors:
        lm = max(g.coeffs, key=key)
        heads.append((lm, g.coeffs[lm].inverse(), g.coeffs))
    p = dict(f.coeffs)
    r: dict = {}
    quotients: list[dict] | None = [{} for _ in divisors] if track else None
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, (lm, lc_inv, g) in enumerate(heads):
            if all(x <= y for x, y in zip(lm, m)):
                shift = tuple(x - y for x, y in zip(m, lm))
                t = c * lc_inv
                _sub_term_multiple(p, g, t, shift)
                if track:
                    q = quotients[idx]
                    q[shift] = q[shift] + t if shift in q else t
                break
        else:
            r[m] = c
            del p[m]
    ring = f.ring
    rem = Polynomial(ring, r)
    if not track:
        return rem, None
    return rem, [Polynomial(ring, {m: c for m, c in q.items() if not c.is_zero()}) for q in quotients]


def _check_ring(f: Polynomial, G: Sequence[Polynomial]):
    for g in G:
        if g.ring != f.ring:
            raise RingMismatchError(f"{g} and {f} live in different rings")


def reduce(f: Polynomial, G: Sequence[Polynomial], order: TermOrder = LEX) -> tuple[Polynomial, list[Polynomial]]:
    """Multivariate division of ``f`` by the list ``G``.

    Returns ``(remainder, quotients)`` with ``f = sum(q_i * g_i) + remainder``
    and no remainder term divisible by a leading monomial of ``G``.  Divisors
    are tried in list order; the first whose leading monomial divides the
    current leading term is used.
    """
    G = list(G)
    if not G:
        raise ValueError("division by an empty list")
    if any(g.is_zero() for g in G):
        raise ZeroPolynomialError("division by the zero polynomial")
    _check_ring(f, G)
    return _divide(f, G, order, True)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder = LEX) -> Polynomial:
    """Remainder of ``f`` modulo ``G`` without quotient bookkeeping."""
    _check_ring(f, G)
    return _divide(f, list(G), order, False)[0]


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = LEX) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("S-polynomial of the zero polynomial")
    _check_ring(f, [g])
    mf = leading_monomial(order, f)
    mg = leading_monomial(order, g)
    lcm = monomial_lcm(mf, mg)
    a = f.mul_term(f.coeffs[mf].inverse(), tuple(x - y for x, y in zip(lcm, mf)))
    b = g.mul_term(g.coeffs[mg].inverse(), tuple(x - y for x, y in zip(lcm, mg)))
    return a - b


# --------------------------------------------------------------------------
# Buchberger
# --------------------------------------------------------------------------


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _lin_comb(certs: Sequence[Sequence[Polynomial]], coeffs: Sequence[Polynomial]) -> list[Polynomial]:
    out = None
    for q, cert in zip(coeffs, certs):
        if q.is_zero():
            continue
        term = [q * c for c in cert]
        out = term if out is None else [a + b for a, b in zip(out, term)]
    return out


def _sort_by_lm(order: TermOrder, elements, certs):
    key = order.key
    idx = sorted(range(len(elements)), key=lambda k: key(leading_monomial(order, elements[k])))
    els = tuple(elements[k] for k in idx)
    cs = None if certs is None else tuple(tuple(certs[k]) for k in idx)
    return els, cs


def buchberger(ideal: Ideal, order: TermOrder = LEX, certify: bool = True,
               max_reductions: int = MAX_PAIR_REDUCTIONS) -> GroebnerBasis:
    """Buchberger's algorithm with the normal selection strategy.

    Pairs are processed by smallest lcm (total degree, then ``order``), ties
    by pair index.  Pairs with coprime leading monomials are skipped.  New
    basis elements are made monic.  With ``certify`` each element carries its
    cofactors with respect to the input generators.
    """
    ring = ideal.ring
    key = order.key
    gens = ideal.generators
    ngens = len(gens)

    basis: list[Polynomial] = []
    lms: list[Monomial] = []
    certs: list[list[Polynomial]] | None = [] if certify else None
    for j, g in enumerate(gens):
        lm = leading_monomial(order, g)
        lc_inv = g.coeffs[lm].inverse()
        basis.append(make_monic(order, g))
        lms.append(lm)
        if certify:
            certs.append([ring.constant(lc_inv) if k == j else ring.zero() for k in range(ngens)])

    heap: list = []

    def push_pairs(new: int):
        for i in range(new):
            lcm = monomial_lcm(lms[i], lms[new])
            heapq.heappush(heap, (sum(lcm), key(lcm), i, new))

    for j in range(1, len(basis)):
        push_pairs(j)

    done = 0
    while heap:
        _, _, i, j = heapq.heappop(heap)
        if _coprime(lms[i], lms[j]):
            continue
        done += 1
        if done > max_reductions:
            raise ResourceExhausted(f"more than {max_reductions} S-pair reductions")
        lcm = monomial_lcm(lms[i], lms[j])
        si = tuple(x - y for x, y in zip(lcm, lms[i]))
        sj = tuple(x - y for x, y in zip(lcm, lms[j]))
        one = ring.field.one()
        s = basis[i].mul_term(one, si) - basis[j].mul_term(one, sj)
        if s.is_zero():
            continue
        rem, quots = _divide(s, basis, order, certify)
        if rem.is_zero():
            continue
        lm = leading_monomial(order, rem)
        lc_inv = rem.coeffs[lm].inverse()
        if certify:
            cert_s = [a.mul_term(one, si) - b.mul_term(one, sj) for a, b in zip(certs[i], certs[j])]
            sub = _lin_comb(certs, quots)
            if sub is not None:
                cert_s = [a - b for a, b in zip(cert_s, sub)]
            certs.append([c * lc_inv for c in cert_s])
        basis.append(make_monic(order, rem))
        lms.append(lm)
        push_pairs(len(basis) - 1)

    elements, cs = _sort_by_lm(order, basis, certs)
    return GroebnerBasis(ideal, order, elements, reduced=False, certificates=cs)


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    """Minimalize, make monic and inter-reduce a Groebner basis."""
    order = G.order
    key = order.key
    certify = G.certificates is not None
    pairs = sorted(
        zip(G.elements, G.certificates if certify else [None] * len(G.elements)),
        key=lambda ec: key(leading_monomial(order, ec[0])),
    )
    kept: list[Polynomial] = []
    kept_certs: list = []
    kept_lms: list[Monomial] = []
    for g, cert in pairs:
        lm = leading_monomial(order, g)
        if any(monomial_divides(h, lm) for h in kept_lms):
            continue
        lc_inv = g.coeffs[lm].inverse()
        kept.append(make_monic(order, g))
        kept_certs.append(None if cert is None else [c * lc_inv for c in cert])
        kept_lms.append(lm)

    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            g = kept[i]
            lm = kept_lms[i]
            others = kept[:i] + kept[i + 1:]
            if not others:
                continue
            tail = Polynomial(g.ring, {m: c for m, c in g.coeffs.items() if m != lm})
            rem, quots = _divide(tail, others, order, certify)
            new = rem + Polynomial(g.ring, {lm: g.coeffs[lm]})
            if new != g:
                changed = True
                kept[i] = new
                if certify:
                    other_certs = kept_certs[:i] + kept_certs[i + 1:]
                    sub = _lin_comb(other_certs, quots)
                    if sub is not None:
                        kept_certs[i] = [a - b for a, b in zip(kept_certs[i], sub)]

    elements = tuple(kept)
    lms = [leading_monomial(order, g) for g in elements]
    # distinct leading monomials: what makes the element order canonical
    assert len(set(lms)) == len(lms), "reduced basis with repeated leading monomial"
    return GroebnerBasis(
        G.ideal, order, elements, reduced=True,
        certificates=tuple(tuple(c) for c in kept_certs) if certify else None,
    )


def reduced_groebner_basis(ideal: Ideal, order: TermOrder = LEX, certify: bool = False) -> GroebnerBasis:
    """The unique reduced Groebner basis of ``ideal`` under ``order``."""
    return reduce_basis(buchberger(ideal, order, certify=certify))


def check_certificates(G: GroebnerBasis) -> bool:
    """Re-expand every certificate and compare with its element."""
    if G.certificates is None:
        raise ValueError("basis carries no certificates")
    gens = G.ideal.generators
    ring = G.ideal.ring
    for g, cert in zip(G.elements, G.certificates):
        total = ring.zero()
        for c, h in zip(cert, gens):
            total = total + c * h
        if total != g:
            return False
    return True


# --------------------------------------------------------------------------
# predicates
# --------------------------------------------------------------------------


def is_groebner(G: Sequence[Polynomial], order: TermOrder = LEX) -> bool:
    """Buchberger's criterion: every S-pair reduces to zero modulo ``G``."""
    G = [g for g in G]
    if not G or any(g.is_zero() for g in G):
        return False
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            s = s_polynomial(G[i], G[j], order)
            if not normal_form(s, G, order).is_zero():
                return False
    return True


def is_reduced(G: Sequence[Polynomial], order: TermOrder = LEX) -> bool:
    G = list(G)
    if not is_groebner(G, order):
        return False
    lms = [leading_monomial(order, g) for g in G]
    if any(not g.coeffs[lm].is_one() for g, lm in zip(G, lms)):
        return False
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            if i != j and monomial_divides(a, b):
                return False
    for g, lm in zip(G, lms):
        for m in g.coeffs:
            if m != lm and any(monomial_divides(h, m) for h in lms):
                return False
    return True


def ideal_membership(f: Polynomial, ideal: Ideal, order: TermOrder = LEX,
                     basis: GroebnerBasis | None = None) -> bool:
    if f.ring != ideal.ring:
        raise RingMismatchError(f"{f} is not in {ideal.ring}")
    if f.is_zero():
        return True
    G = basis if basis is not None else reduced_groebner_basis(ideal, order)
    return normal_form(f, G.elements, G.order).is_zero()


def ideal_equal(I: Ideal, J: Ideal, order: TermOrder = LEX) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")
    return reduced_groebner_basis(I, order).elements == reduced_groebner_basis(J, order).elements


def initial_ideal_member(m: Monomial, G: GroebnerBasis | Sequence[Polynomial],
                         order: TermOrder | None = None) -> bool:
    """Whether ``x^m`` lies in the initial ideal of the ideal ``G`` generates.

    A :class:`GroebnerBasis` is trusted; a plain list is first checked with
    :func:`is_groebner` and rejected otherwise.
    """
    if isinstance(G, GroebnerBasis):
        order = G.order
        elements = G.elements
    else:
        order = order or LEX
        elements = list(G)
        if not is_groebner(elements, order):
            raise NotAGroebnerBasis("input does not satisfy Buchberger's criterion")
    return any(monomial_divides(leading_monomial(order, g), tuple(m)) for g in elements)
