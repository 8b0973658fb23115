"""Automorphism action on polynomials and ideals, and the descent verdict.

If an ideal is carried to itself by every automorphism in a group ``A``, its
reduced Groebner basis is fixed element by element, so every coefficient of
that basis lies in the fixed field of ``A``.  :func:`descent_check` runs this
argument on concrete data and records each step in a :class:`DescentReport`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arith import Automorphism, AutomorphismGroup, FieldElement, FieldMismatchError, apply_automorphism, is_fixed
from .groebner import GroebnerBasis, Ideal, ideal_membership, reduced_groebner_basis
from .poly import LEX, Monomial, Polynomial, TermOrder, is_homogeneous, leading_monomial


class NonHomogeneousError(ValueError):
    """Projective mode was requested for an ideal with an inhomogeneous generator."""


class DescentInvariantViolation(AssertionError):
    """An internal consequence of the descent argument failed; indicates a bug."""


class Verdict(enum.Enum):
    DEFINED_OVER_FIXED_FIELD = "DefinedOverFixedField"
    NOT_INVARIANT = "NotInvariant"


@dataclass(frozen=True)
class InvarianceResult:
    sigma: Automorphism
    invariant: bool
    witness: Polynomial | None = None  # generator g with sigma(g) not in I


@dataclass(frozen=True)
class CoefficientCheck:
    element: int  # index into the reduced basis
    monomial: Monomial
    coefficient: FieldElement
    fixed: bool


@dataclass
class DescentReport:
    order: TermOrder
    verdict: Verdict
    invariance: list[InvarianceResult]
    basis: GroebnerBasis
    coefficients: list[CoefficientCheck] = field(default_factory=list)
    homogeneous: bool = False

    @property
    def defined_over_fixed_field(self) -> bool:
        return self.verdict is Verdict.DEFINED_OVER_FIXED_FIELD

    def witnesses(self) -> list[InvarianceResult]:
        return [r for r in self.invariance if not r.invariant]

    def is_consistent(self) -> bool:
        """A positive verdict never coexists with a non-fixed coefficient."""
        if self.defined_over_fixed_field:
            return all(c.fixed for c in self.coefficients)
        return True


def conjugate_poly(sigma: Automorphism, f: Polynomial) -> Polynomial:
    """Apply ``sigma`` to every coefficient of ``f``."""
    if f.ring.field != sigma.field:
        raise FieldMismatchError(f"automorphism of {sigma.field} applied to polynomial over {f.ring.field}")
    out = {m: apply_automorphism(sigma, c) for m, c in f.coeffs.items()}
    g = Polynomial(f.ring, out)
    # sigma is injective, so no coefficient vanishes and the support (hence
    # every leading monomial) is unchanged
    if any(c.is_zero() for c in out.values()):
        raise DescentInvariantViolation("automorphism sent a nonzero coefficient to zero")
    return g


def conjugate_ideal(sigma: Automorphism, ideal: Ideal) -> Ideal:
    return Ideal([conjugate_poly(sigma, g) for g in ideal.generators], ring=ideal.ring)


def is_invariant(ideal: Ideal, group: AutomorphismGroup, order: TermOrder = LEX) -> tuple[bool, list[InvarianceResult]]:
    """Check ``sigma(I) == I`` for every generator ``sigma`` of ``group``.

    Returns the overall answer and one :class:`InvarianceResult` per group
    generator.  A failing result names a generator ``g`` of ``I`` with
    ``sigma(g)`` outside ``I``.
    """
    basis = reduced_groebner_basis(ideal, order)
    results = []
    for sigma in group.generators:
        conj = conjugate_ideal(sigma, ideal)
        same = reduced_groebner_basis(conj, order).elements == basis.elements
        witness = None
        if not same:
            for g, sg in zip(ideal.generators, conj.generators):
                if not ideal_membership(sg, ideal, order, basis=basis):
                    witness = g
                    break
            if witness is None:
                # sigma(I) ⊆ I with sigma of finite order forces equality
                raise DescentInvariantViolation(f"{sigma!r}: conjugate ideal contained in I but not equal")
        results.append(InvarianceResult(sigma, same, witness))
    return all(r.invariant for r in results), results


def descent_check(ideal: Ideal, group: AutomorphismGroup, order: TermOrder = LEX,
                  projective: bool = False) -> DescentReport:
    """Decide whether an invariant ideal is defined over the fixed field of ``group``."""
    if ideal.ring.field != group.field:
        raise FieldMismatchError(f"group acts on {group.field}, ideal lives over {ideal.ring.field}")
    homogeneous = all(is_homogeneous(g) for g in ideal.generators)
    if projective and not homogeneous:
        bad = next(g for g in ideal.generators if not is_homogeneous(g))
        raise NonHomogeneousError(f"generator {bad} is not homogeneous")

    invariant, results = is_invariant(ideal, group, order)
    basis = reduced_groebner_basis(ideal, order)

    lms = [leading_monomial(order, g) for g in basis.elements]
    if len(set(lms)) != len(lms):
        raise DescentInvariantViolation("two reduced basis elements share a leading monomial")

    if invariant:
        for sigma in group.generators:
            conj = tuple(conjugate_poly(sigma, g) for g in basis.elements)
            if conj != basis.elements:
                raise DescentInvariantViolation(f"{sigma!r} moves an element of the reduced basis of an invariant ideal")

    checks = []
    for idx, g in enumerate(basis.elements):
        for c, m in g.terms(order):
            checks.append(CoefficientCheck(idx, m, c, is_fixed(c, group)))

    verdict = Verdict.DEFINED_OVER_FIXED_FIELD if invariant else Verdict.NOT_INVARIANT
    report = DescentReport(order, verdict, results, basis, checks, homogeneous)
    if not report.is_consistent():
        raise DescentInvariantViolation("invariant ideal with a reduced-basis coefficient outside the fixed field")
    return report


def lemma_check(ideal: Ideal, sigma: Automorphism, order: TermOrder = LEX) -> bool:
    """Compare ``reducedGB(sigma(I))`` with ``sigma(reducedGB(I))`` as sets."""
    left = reduced_groebner_basis(conjugate_ideal(sigma, ideal), order).elements
    right = [conjugate_poly(sigma, g) for g in reduced_groebner_basis(ideal, order).elements]
    return set(left) == set(right)


def symmetrize(f: Polynomial | list[Polynomial], group: AutomorphismGroup) -> Ideal:
    """The ideal generated by the full orbit of ``f`` under ``group``; always invariant."""
    fs = [f] if isinstance(f, Polynomial) else list(f)
    gens = []
    for g in fs:
        for sigma in group.elements:
            gens.append(conjugate_poly(sigma, g))
    return Ideal(gens, ring=fs[0].ring)
