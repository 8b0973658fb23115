"""Seeded random fields elements, polynomials and ideals for property tests."""

import random
from fractions import Fraction

from gbdescent.arith import FieldKind, conjugation, finite_field, frobenius, quadratic_field, rationals
from gbdescent.groebner import Ideal
from gbdescent.poly import PolyRing

VARS = ("x", "y", "z")


def field_cases():
    """(label, field, nontrivial automorphism) triples used across suites."""
    qi = quadratic_field(-1)
    q2 = quadratic_field(2)
    gf9 = finite_field(3, [1, 0, 1])
    return [("Q(i)", qi, conjugation(qi)), ("Q(sqrt 2)", q2, conjugation(q2)), ("GF(9)", gf9, frobenius(gf9))]


def rational(rng, bound=10):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def element(field, rng, bound=5, nonzero=False):
    while True:
        if field.kind is FieldKind.FINITE:
            a = field.from_coeffs([rng.randrange(field.p) for _ in range(field.degree)])
        elif field.kind is FieldKind.QUADRATIC:
            a = field.from_coeffs([rational(rng, bound), rational(rng, bound)])
        else:
            a = field(rational(rng, bound))
        if not nonzero or not a.is_zero():
            return a


def monomial(rng, n, max_degree, degree=None):
    d = rng.randint(0, max_degree) if degree is None else degree
    m = [0] * n
    for _ in range(d):
        m[rng.randrange(n)] += 1
    return tuple(m)


def polynomial(ring, rng, max_degree=3, max_terms=4, bound=5, homogeneous_degree=None, nonzero=True):
    """Random polynomial; when ``nonzero`` it is also nonconstant (if ring has variables)."""
    while True:
        terms = {}
        for k in range(rng.randint(1, max_terms)):
            deg = homogeneous_degree
            if deg is None and k == 0 and nonzero and ring.nvars:
                deg = rng.randint(1, max_degree)
            m = monomial(rng, ring.nvars, max_degree, deg)
            terms[m] = element(ring.field, rng, bound, nonzero=True)
        f = ring.from_dict(terms)
        if not nonzero or not f.is_zero():
            return f


def ring(field, rng, min_vars=1, max_vars=3):
    return PolyRing(field, VARS[: rng.randint(min_vars, max_vars)])


def ideal(field, rng, max_vars=3, max_gens=3, max_degree=3, max_terms=4, bound=5, min_vars=1):
    """Random ideal with at most as many generators as variables (mostly proper)."""
    R = ring(field, rng, min_vars, max_vars)
    ngens = rng.randint(1, min(max_gens, R.nvars))
    gens = [polynomial(R, rng, max_degree, max_terms, bound) for _ in range(ngens)]
    return Ideal(gens, ring=R)


def homogeneous_ideal(field, rng, max_vars=3, max_gens=3, max_degree=3, max_terms=3, bound=5):
    R = ring(field, rng, 1, max_vars)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_degree)
        gens.append(polynomial(R, rng, d, max_terms, bound, homogeneous_degree=d))
    return Ideal(gens, ring=R)


def rng_for(*seed_parts):
    return random.Random("/".join(str(s) for s in seed_parts))


__all__ = [
    "VARS",
    "field_cases",
    "rational",
    "element",
    "monomial",
    "polynomial",
    "ring",
    "ideal",
    "homogeneous_ideal",
    "rng_for",
    "rationals",
]
