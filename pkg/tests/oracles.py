"""Independent oracles: nothing here calls the division or Buchberger code."""

from itertools import product

import numpy as np

from gbdescent.arith import FieldKind


def dense_add(f, g, bound):
    """Add two polynomials as full coefficient boxes indexed by exponent tuples."""
    n = f.ring.nvars
    zero = f.ring.field.zero()
    out = {}
    for m in product(range(bound + 1), repeat=n):
        c = f.coeffs.get(m, zero) + g.coeffs.get(m, zero)
        if not c.is_zero():
            out[m] = c
    return out


def dense_mul(f, g, bound):
    """Schoolbook product over the full exponent box (every pair of cells)."""
    n = f.ring.nvars
    zero = f.ring.field.zero()
    box = list(product(range(bound + 1), repeat=n))
    acc = {}
    for a in box:
        ca = f.coeffs.get(a, zero)
        if ca.is_zero():
            continue
        for b in box:
            cb = g.coeffs.get(b, zero)
            if cb.is_zero():
                continue
            m = tuple(x + y for x, y in zip(a, b))
            acc[m] = acc.get(m, zero) + ca * cb
    return {m: c for m, c in acc.items() if not c.is_zero()}


# --------------------------------------------------------------------------
# field oracles
# --------------------------------------------------------------------------


def gf_companion(field, a):
    """Matrix of multiplication by ``a`` on GF(p)^k, built from the modulus."""
    p, k, mod = field.p, field.degree, field.modulus
    comp = np.zeros((k, k), dtype=np.int64)
    for i in range(k - 1):
        comp[i + 1, i] = 1
    for i in range(k):
        comp[i, k - 1] = (-mod[i]) % p
    out = np.zeros((k, k), dtype=np.int64)
    power = np.eye(k, dtype=np.int64)
    for c in a.value:
        out = (out + c * power) % p
        power = (power @ comp) % p
    return out


def gf_mul_oracle(field, a, b):
    """Product via companion matrices: first column of M(a) M(b)."""
    m = (gf_companion(field, a) @ gf_companion(field, b)) % field.p
    return field.from_coeffs([int(v) for v in m[:, 0]])


def quadratic_mul_oracle(field, a, b):
    """Product via the 2x2 regular representation of Q(sqrt d)."""
    import sympy

    d = field.radicand

    def mat(x):
        a0, a1 = (sympy.Rational(int(c.numerator), int(c.denominator)) for c in x.value)
        return sympy.Matrix([[a0, d * a1], [a1, a0]])

    m = mat(a) * mat(b)
    return field.from_coeffs([sympy_to_frac(m[0, 0]), sympy_to_frac(m[1, 0])])


def sympy_to_frac(r):
    from fractions import Fraction

    return Fraction(int(r.p), int(r.q))


# --------------------------------------------------------------------------
# Macaulay-matrix membership
# --------------------------------------------------------------------------


def _monomials_of_degree(n, d):
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for m in product(range(d + 1), repeat=n):
        if sum(m) == d:
            out.append(m)
    return out


def _rank(rows, ncols):
    """Row rank by Gaussian elimination over the coefficient field."""
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if not rows[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero():
                c = rows[i][col]
                rows[i] = [v - c * w for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def macaulay_member(f, generators, degree_bound):
    """Membership of ``f`` in the ideal of homogeneous ``generators``.

    Each homogeneous component ``f_d`` (``d <= degree_bound``) must lie in the
    span of the degree-``d`` multiples ``m * g``; compared by matrix rank.
    """
    ring = f.ring
    n = ring.nvars
    zero = ring.field.zero()
    gdeg = []
    for g in generators:
        degs = {sum(m) for m in g.coeffs}
        assert len(degs) == 1, "oracle needs homogeneous generators"
        gdeg.append(degs.pop())
    comps = {}
    for m, c in f.coeffs.items():
        comps.setdefault(sum(m), {})[m] = c
    for d, comp in comps.items():
        assert d <= degree_bound
        cols = _monomials_of_degree(n, d)
        index = {m: k for k, m in enumerate(cols)}
        rows = []
        for g, dg in zip(generators, gdeg):
            if dg > d:
                continue
            for mult in _monomials_of_degree(n, d - dg):
                row = [zero] * len(cols)
                for gm, gc in g.coeffs.items():
                    row[index[tuple(a + b for a, b in zip(gm, mult))]] = gc
                rows.append(row)
        target = [zero] * len(cols)
        for m, c in comp.items():
            target[index[m]] = c
        if _rank(rows, len(cols)) != _rank(rows + [target], len(cols)):
            return False
    return True


def is_prime_field_element(a):
    if a.field.kind is FieldKind.RATIONALS:
        return True
    return not any(a.value[1:])
