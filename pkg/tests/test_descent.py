import pytest

from gbdescent.arith import Automorphism, AutomorphismGroup, FieldMismatchError, conjugation, finite_field, frobenius, quadratic_field
from gbdescent.descent import (
    NonHomogeneousError,
    Verdict,
    conjugate_ideal,
    conjugate_poly,
    descent_check,
    is_invariant,
    lemma_check,
    symmetrize,
)
from gbdescent.groebner import Ideal, ideal_membership
from gbdescent.poly import DEGLEX, DEGREVLEX, LEX, PolyRing, leading_monomial
from gbdescent.syntax import parse_polynomial

import randgen

QI = quadratic_field(-1)
GF9 = finite_field(3, [1, 0, 1])
RI = PolyRing(QI, ("x", "y"))
R9 = PolyRing(GF9, ("x", "y"))
CONJ = conjugation(QI)
FROB = frobenius(GF9)
A_I = AutomorphismGroup.generate(QI, [CONJ])
A_9 = AutomorphismGroup.generate(GF9, [FROB])


def P(text, ring=RI):
    return parse_polynomial(text, ring)


def ideal(*texts, ring=RI):
    return Ideal([P(t, ring) for t in texts], ring=ring)


def test_conjugate_poly_examples():
    assert conjugate_poly(CONJ, P("i*x + 1")) == P("-i*x + 1")
    f = P("(2 + i)*x*y - 3")
    assert conjugate_poly(Automorphism.identity(QI), f) == f
    assert conjugate_poly(FROB, P("t*x + y", R9)) == P("2*t*x + y", R9)


def test_conjugate_poly_field_mismatch():
    with pytest.raises(FieldMismatchError):
        conjugate_poly(FROB, P("x"))


def test_conjugate_ideal_examples():
    assert conjugate_ideal(CONJ, ideal("x + i")).generators == (P("x - i"),)
    I = ideal("x + i*y", "x - i*y")
    assert conjugate_ideal(Automorphism.identity(QI), I).generators == I.generators
    assert conjugate_ideal(CONJ, I).generators == (P("x - i*y"), P("x + i*y"))


def test_is_invariant_examples():
    ok, results = is_invariant(ideal("x + i*y", "x - i*y"), A_I, LEX)
    assert ok and all(r.invariant for r in results)
    ok, results = is_invariant(ideal("x + i"), A_I, LEX)
    assert not ok
    assert results[0].sigma == CONJ
    assert results[0].witness == P("x + i")
    ok, _ = is_invariant(ideal("x + i", "y^2 - i*x"), AutomorphismGroup.generate(QI, []), LEX)
    assert ok


def test_descent_gaussian_invariant():
    report = descent_check(ideal("x + i*y", "x - i*y"), A_I, LEX)
    assert report.verdict is Verdict.DEFINED_OVER_FIXED_FIELD
    assert report.basis.elements == (P("y"), P("x"))
    assert all(c.fixed for c in report.coefficients)
    assert report.is_consistent()


def test_descent_gaussian_not_invariant():
    report = descent_check(ideal("x + i"), A_I, LEX)
    assert report.verdict is Verdict.NOT_INVARIANT
    (w,) = report.witnesses()
    assert w.witness == P("x + i")
    assert not ideal_membership(conjugate_poly(w.sigma, w.witness), ideal("x + i"), LEX)
    assert not all(c.fixed for c in report.coefficients)


def test_descent_gf9():
    report = descent_check(ideal("x + t*y", "x - t*y", ring=R9), A_9, LEX)
    assert report.verdict is Verdict.DEFINED_OVER_FIXED_FIELD
    assert report.basis.elements == (P("y", R9), P("x", R9))
    assert all(c.coefficient.is_rational() for c in report.coefficients)


def test_descent_nontrivial_basis_over_fixed_field():
    # (x - i)(x + i) = x^2 + 1 generates an invariant ideal with a nonmonomial basis
    report = descent_check(ideal("(x - i)*(x + i)*y", "x^2*y + y"), A_I, DEGREVLEX)
    assert report.defined_over_fixed_field
    assert [str(g) for g in report.basis.elements] == ["x^2*y + y"]


def test_projective_mode():
    report = descent_check(ideal("x^2 + i*x*y", "x^2 - i*x*y"), A_I, LEX, projective=True)
    assert report.homogeneous and report.defined_over_fixed_field
    with pytest.raises(NonHomogeneousError):
        descent_check(ideal("x^2 + y"), A_I, LEX, projective=True)


def test_lemma_examples():
    assert lemma_check(ideal("x + i"), CONJ, LEX)
    assert lemma_check(ideal("x + i*y^2", "y^3 - (1 + i)*x"), Automorphism.identity(QI), DEGLEX)


@pytest.mark.parametrize("label,field,sigma", randgen.field_cases())
def test_order_preservation(label, field, sigma):
    rng = randgen.rng_for("orderpres", label)
    for _ in range(200):
        ring = randgen.ring(field, rng)
        f = randgen.polynomial(ring, rng, 4, 5)
        g = conjugate_poly(sigma, f)
        for order in (LEX, DEGLEX, DEGREVLEX):
            assert leading_monomial(order, g) == leading_monomial(order, f)


@pytest.mark.parametrize("label,field,sigma", randgen.field_cases())
def test_symmetrized_ideals_descend(label, field, sigma):
    rng = randgen.rng_for("sym-small", label)
    A = AutomorphismGroup.generate(field, [sigma])
    for k in range(20):
        ring = randgen.ring(field, rng, 1, 2)
        I = symmetrize(randgen.polynomial(ring, rng, 2, 3), A)
        report = descent_check(I, A, [LEX, DEGLEX, DEGREVLEX][k % 3])
        assert report.defined_over_fixed_field
        assert report.is_consistent()
