"""Exact reduced Groebner bases and descent of automorphism-invariant ideals."""

from .arith import (
    Automorphism,
    AutomorphismGroup,
    FieldDescriptor,
    FieldElement,
    apply_automorphism,
    conjugation,
    finite_field,
    frobenius,
    is_fixed,
    quadratic_field,
    rationals,
    validate_automorphism,
)
from .descent import (
    DescentReport,
    Verdict,
    conjugate_ideal,
    conjugate_poly,
    descent_check,
    is_invariant,
    lemma_check,
    symmetrize,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    ideal_equal,
    ideal_membership,
    initial_ideal_member,
    is_groebner,
    is_reduced,
    reduce,
    reduce_basis,
    reduced_groebner_basis,
    s_polynomial,
)
from .poly import DEGLEX, DEGREVLEX, LEX, PolyRing, Polynomial, TermOrder, compare_monomials, leading_term
from .syntax import parse_field, parse_polynomial

__version__ = "0.1.0"
