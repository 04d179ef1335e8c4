from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centralizer.factor import factor
from centralizer.fields import (
    QQ,
    FieldError,
    FieldMismatchError,
    FiniteField,
    field_from_dict,
    is_prime,
    make_extension_field,
    make_field,
)
from centralizer.parsing import GeneratorMismatchError, ParseError, parse_cycle_type, parse_divisor, parse_poly
from centralizer.poly import Poly, format_poly, poly_gcd, poly_lcm, poly_xgcd

F5 = FiniteField(5)
F25 = make_extension_field(5, 2)
F8 = make_extension_field(2, 3)
F27 = make_extension_field(3, 3)
FIELDS = [QQ, F5, FiniteField(7), F25, F8, F27]


def element(K):
    if K is QQ:
        return st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
    if K.k == 1:
        return st.integers(0, K.p - 1)
    return st.tuples(*[st.integers(0, K.p - 1)] * K.k)


def poly_of(K, max_deg=6):
    return st.lists(element(K), max_size=max_deg + 1).map(lambda cs: Poly(K, cs))


@pytest.mark.parametrize("K", FIELDS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(K, data):
    a, b, c = (data.draw(element(K)) for _ in range(3))
    assert K.add(a, b) == K.add(b, a)
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.sub(K.add(a, b), b) == a
    if not K.is_zero(a):
        assert K.mul(a, K.inv(a)) == K.one


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1) and not is_prime(2**61 + 1)


def test_extension_moduli():
    assert make_extension_field(5, 1) == F5
    assert F25.modulus == (2, 0, 1)
    assert str(F25) == "GF(5^2, t^2+2)"
    assert F8.modulus == (1, 1, 0, 1)
    assert make_extension_field(5, 2) is F25


def test_extension_field_order_of_units():
    # the multiplicative group is cyclic of order q - 1
    for K in (F25, F8, F27):
        elems = [e for e in K.elements() if not K.is_zero(e)]
        assert len(elems) == K.order - 1
        assert all(K.pow(e, K.order - 1) == K.one for e in elems)


def test_bad_fields():
    with pytest.raises(FieldError):
        FiniteField(6)
    with pytest.raises(FieldError):
        FiniteField(5, 2, (1, 0, 1))  # t^2 + 1 = (t - 2)(t - 3)
    with pytest.raises(FieldError):
        FiniteField(5, 2)


def test_field_dicts():
    for K in FIELDS:
        assert field_from_dict(K.to_dict()) == K
    assert make_field(0) == QQ
    assert make_field(5, 2) == F25
    override = field_from_dict({"kind": "GF", "p": 5, "k": 2, "modulus": "t^2 + 3"})
    assert override.modulus == (3, 0, 1) and override != F25


def test_rational_normal_form():
    a = QQ.convert(Fraction(6, -4))
    assert (a.numerator, a.denominator) == (-3, 2)
    assert QQ.format(QQ.zero) == "0"


@pytest.mark.parametrize("K", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_division_identity(K, data):
    f = data.draw(poly_of(K))
    g = data.draw(poly_of(K, 4).filter(lambda g: not g.is_zero()))
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@pytest.mark.parametrize("K", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_xgcd_and_lcm(K, data):
    f = data.draw(poly_of(K, 5))
    g = data.draw(poly_of(K, 5))
    if f.is_zero() and g.is_zero():
        return
    d, s, t = poly_xgcd(f, g)
    assert d == poly_gcd(f, g) and d.is_monic()
    assert s * f + t * g == d
    assert d.divides(f) and d.divides(g)
    if not f.is_zero() and not g.is_zero():
        assert poly_lcm(f, g) * d == (f * g).monic()


@pytest.mark.parametrize("K", FIELDS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_format_parse_roundtrip(K, data):
    f = data.draw(poly_of(K))
    assert parse_poly(format_poly(f), K) == f


def test_gcd_examples():
    x = Poly.x(QQ)
    assert poly_gcd(x**2, x) == x
    f = 3 * x**2 + 6
    assert poly_gcd(f, Poly.zero(QQ)) == f.monic()
    assert poly_gcd(x**4 - 1, x**6 - 1) == x**2 - 1
    with pytest.raises(FieldMismatchError):
        poly_gcd(x, Poly.x(F5))


def test_gcd_against_factorizations():
    # gcd = product of common bases to the minimum exponents
    x = Poly.x(QQ)
    f = (x - 1) ** 3 * (x**2 + 1) * (x + 2)
    g = (x - 1) * (x**2 + 1) ** 2 * (x - 3)
    ff = dict(factor(f).factors)
    gf = dict(factor(g).factors)
    expect = Poly.one(QQ)
    for b in set(ff) & set(gf):
        expect = expect * b ** min(ff[b], gf[b])
    assert poly_gcd(f, g) == expect


def test_formatting():
    x = Poly.x(QQ)
    assert format_poly(x**3 + 2 * x - Fraction(1, 2)) == "x^3 + 2*x - 1/2"
    assert format_poly(Poly.zero(QQ)) == "0"
    assert format_poly(-x) == "-x"
    y = Poly.x(F5)
    assert format_poly(y - 1) == "x + 4"
    t = Poly(F25, [F25.generator])
    assert format_poly(Poly.x(F25) + t * 4 + 3) == "x + (4*t+3)"
    assert format_poly(Poly.x(F25) * t) == "t*x"
    assert format_poly(Poly.x(F25) * (t + 1) + t) == "(t+1)*x + t"


def test_canonical_order():
    x = Poly.x(QQ)
    polys = [x**2, x, x - 1, x + 1, Poly.one(QQ)]
    ordered = sorted(polys, key=Poly.sort_key)
    assert ordered[0] == Poly.one(QQ) and ordered[-1] == x**2
    assert ordered.index(x - 1) < ordered.index(x)
    assert sorted(polys, key=Poly.sort_key) == sorted(reversed(polys), key=Poly.sort_key)


def test_parse_errors_report_columns():
    with pytest.raises(ParseError) as info:
        parse_poly("x^2 + * 3", QQ)
    assert info.value.column == 7
    with pytest.raises(ParseError):
        parse_poly("x/x", QQ)
    with pytest.raises(ParseError):
        parse_poly("1/5", F5)
    with pytest.raises(GeneratorMismatchError):
        parse_poly("t + 1", F5)
    with pytest.raises(FieldMismatchError):
        parse_poly("t + 1", QQ)
    with pytest.raises(ParseError):
        parse_poly("y", QQ)


def test_parse_misc():
    assert parse_poly("(t+1)*x + 2", F25).coeffs == ((2, 0), (1, 1))
    assert parse_poly("1/2", F5).coeffs == (3,)
    base, exp = parse_divisor("(x - 1)^3", QQ)
    assert (format_poly(base), exp) == ("x - 1", 3)
    assert parse_divisor("x^4", QQ)[1] == 4
    assert parse_divisor("x^2 + 1", QQ)[1] == 1
    assert parse_cycle_type("15,1^4") == [15, 1, 1, 1, 1]
    with pytest.raises(ParseError):
        parse_cycle_type("3,0")
    with pytest.raises(ParseError):
        parse_cycle_type("")
