import pytest

from gbdescent.arith import FieldKind, quadratic_field, rationals
from gbdescent.poly import LEX, PolyRing
from gbdescent.syntax import ParseError, parse_element, parse_field, parse_polynomial

import randgen

QI = quadratic_field(-1)
RI = PolyRing(QI, ("x", "y"))


@pytest.mark.parametrize("spec,kind,degree", [
    ("Q", FieldKind.RATIONALS, 1),
    ("Q(i)", FieldKind.QUADRATIC, 2),
    ("Q(sqrt 2)", FieldKind.QUADRATIC, 2),
    ("Q(sqrt -5)", FieldKind.QUADRATIC, 2),
    ("GF(7)", FieldKind.FINITE, 1),
    ("GF(3^2; t^2 + 1)", FieldKind.FINITE, 2),
    ("GF(2^3; t^3 + t + 1)", FieldKind.FINITE, 3),
])
def test_field_specs(spec, kind, degree):
    F = parse_field(spec)
    assert F.kind is kind and F.degree == degree
    assert parse_field(str(F)) == F


@pytest.mark.parametrize("spec", ["R", "Q(sqrt 4)", "GF(6)", "GF(3^2; t^2 + 2)", "GF(3^3; t^2 + 1)", "Q(j)"])
def test_bad_field_specs(spec):
    with pytest.raises(ParseError):
        parse_field(spec)


def test_polynomial_forms_agree():
    a = parse_polynomial("x^2*y - (1/2)*i*y^3", RI)
    b = parse_polynomial("x x y - i y^3 / 2", RI)
    c = parse_polynomial("-(1/2)i*y^3 + x^2 y", RI)
    assert a == b == c


def test_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x + z", RI)
    assert exc.value.column == 5
    with pytest.raises(ParseError) as exc:
        parse_polynomial("x + $", RI)
    assert exc.value.column == 5
    with pytest.raises(ParseError):
        parse_polynomial("x / y", RI)
    with pytest.raises(ParseError):
        parse_polynomial("x / 0", RI)
    with pytest.raises(ParseError):
        parse_polynomial("(x + y", RI)
    with pytest.raises(ParseError):
        parse_polynomial("", RI)


def test_characteristic_denominators():
    gf3 = parse_field("GF(3)")
    R = PolyRing(gf3, ("x",))
    assert parse_polynomial("x/2", R) == parse_polynomial("2*x", R)
    with pytest.raises(ParseError):
        parse_polynomial("x/3", R)


def test_parse_element():
    gf9 = parse_field("GF(3^2; t^2 + 1)")
    assert parse_element("t^3", gf9) == 2 * gf9.gen()
    assert parse_element("-i", QI) == -QI.gen()


@pytest.mark.parametrize("label,field,_", randgen.field_cases())
def test_print_parse_round_trip(label, field, _):
    rng = randgen.rng_for("roundtrip", label)
    for _ in range(200):
        ring = randgen.ring(field, rng)
        f = randgen.polynomial(ring, rng, 4, 5, nonzero=False)
        assert parse_polynomial(f.format(LEX), ring) == f


def test_rational_round_trip():
    rng = randgen.rng_for("roundtrip-q")
    for _ in range(200):
        ring = randgen.ring(rationals(), rng)
        f = randgen.polynomial(ring, rng, 4, 5, bound=10)
        assert parse_polynomial(str(f), ring) == f
