from collections import Counter
from fractions import Fraction
from itertools import product

import pytest
import sympy

from centralizer.factor import (
    cyclotomic,
    factor,
    factor_x_pow_minus_one,
    is_irreducible,
    squarefree_decompose,
)
from centralizer.fields import QQ, FiniteField, make_extension_field
from centralizer.oracle import SplitMix64
from centralizer.parsing import parse_poly
from centralizer.poly import Poly

F5 = FiniteField(5)
X = sympy.Symbol("x")


def P(text, K=QQ):
    return parse_poly(text, K)


def expand(fz, K):
    out = Poly.constant(K, fz.unit)
    for b, e in fz.factors:
        out = out * b**e
    return out


def test_squarefree_examples():
    assert squarefree_decompose(P("x^3")) == [(P("x"), 3)]
    assert squarefree_decompose(P("(x-1)*(x-2)^2")) == [(P("x - 1"), 1), (P("x - 2"), 2)]
    f = P("x^5 - x", F5)
    assert squarefree_decompose(f) == [(f, 1)]


def test_squarefree_char_p_pth_powers():
    K = FiniteField(3)
    f = P("(x^3 + 2*x + 1)^3 * (x+1)^2 * x", K)
    dec = squarefree_decompose(f)
    assert {e for _, e in dec} == {1, 2, 3}
    prod = Poly.one(K)
    for g, e in dec:
        prod = prod * g**e
    assert prod == f


def test_factor_examples():
    assert Counter(dict(factor(P("x^4 - 1")).factors)) == Counter({P("x - 1"): 1, P("x + 1"): 1, P("x^2 + 1"): 1})
    assert dict(factor(P("x^4 - 1", F5)).factors) == {P(f"x - {a}", F5): 1 for a in (1, 2, 3, 4)}
    assert dict(factor(P("x^3 * (x - 1)^4")).factors) == {P("x"): 3, P("x - 1"): 4}


def test_factor_non_monic_over_q():
    f = P("6*x^3 - 3*x^2 + 4*x - 2")  # (2x - 1)(3x^2 + 2)
    fz = factor(f)
    assert fz.unit == 6
    assert dict(fz.factors) == {P("x - 1/2"): 1, P("x^2 + 2/3"): 1}
    assert expand(fz, QQ) == f


def test_irreducibility_examples():
    assert is_irreducible(P("x^2 + 1"))
    assert not is_irreducible(P("x^2 + 1", F5))
    assert is_irreducible(P("x^2 + x + 1", F5))
    assert is_irreducible(P("x^16 + 1"))
    assert not is_irreducible(P("x^4 + 4"))  # Sophie Germain


def test_cyclotomic_examples():
    assert cyclotomic(1) == P("x - 1")
    assert cyclotomic(5) == P("x^4 + x^3 + x^2 + x + 1")
    assert cyclotomic(12) == P("x^4 - x^2 + 1")
    # Phi_105 is the first with a coefficient of absolute value 2
    assert Fraction(-2) in cyclotomic(105).coeffs


@pytest.mark.parametrize("d", range(1, 41))
def test_cyclotomic_product(d):
    prod = Poly.one(QQ)
    for e in range(1, d + 1):
        if d % e == 0:
            prod = prod * cyclotomic(e)
    assert prod == Poly.monomial(QQ, d) - 1
    assert is_irreducible(cyclotomic(d))


def _necklace(q, d):
    # number of monic irreducibles of degree d over F_q
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            mu = sympy.mobius(d // e)
            total += mu * q**e
    return total // d


@pytest.mark.parametrize("K,d", [(FiniteField(2), 1), (FiniteField(2), 4), (FiniteField(3), 3),
                                 (F5, 2), (make_extension_field(2, 2), 2), (make_extension_field(3, 2), 2)])
def test_irreducible_count(K, d):
    elems = list(K.elements())
    count = sum(is_irreducible(Poly(K, list(cs) + [K.one])) for cs in product(elems, repeat=d))
    assert count == _necklace(K.order, d)


@pytest.mark.parametrize("K", [FiniteField(2), FiniteField(3), F5, FiniteField(7), FiniteField(11),
                               make_extension_field(2, 3), make_extension_field(5, 2),
                               make_extension_field(5, 3)], ids=str)
def test_random_finite_field_factorizations(K):
    rng = SplitMix64(K.order)
    elems = list(K.elements())
    for _ in range(25):
        deg = rng.between(1, 12)
        f = Poly(K, [rng.choice(elems) for _ in range(deg)] + [K.one])
        fz = factor(f)
        bases = [b for b, _ in fz.factors]
        assert len(set(bases)) == len(bases)
        assert all(is_irreducible(b) and b.is_monic() for b in bases)
        assert sum(e * b.degree for b, e in fz.factors) == deg
        assert expand(fz, K) == f
        assert factor(f) == fz


def _sympy_monic_factors_mod_p(f: Poly, p: int) -> Counter:
    expr = sum(int(c) * X**i for i, c in enumerate(f.coeffs))
    _, facs = sympy.Poly(expr, X, modulus=p).factor_list()
    out = Counter()
    for g, e in facs:
        cs = [int(c) % p for c in reversed(g.all_coeffs())]
        inv = pow(cs[-1], -1, p)
        out[tuple(c * inv % p for c in cs)] += e
    return out


@pytest.mark.parametrize("p", [2, 3, 5, 13])
def test_prime_field_against_sympy(p):
    K = FiniteField(p)
    rng = SplitMix64(1000 + p)
    for _ in range(30):
        deg = rng.between(1, 14)
        f = Poly(K, [rng.below(p) for _ in range(deg)] + [1])
        ours = Counter({b.coeffs: e for b, e in factor(f).factors})
        assert ours == _sympy_monic_factors_mod_p(f, p), f


def _sympy_factors_q(f: Poly) -> Counter:
    expr = sum(sympy.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(f.coeffs))
    _, facs = sympy.factor_list(expr, X)
    out = Counter()
    for g, e in facs:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(g, X).all_coeffs())]
        lc = cs[-1]
        out[tuple(c / lc for c in cs)] += e
    return out


def test_rational_against_sympy():
    rng = SplitMix64(77)
    for _ in range(40):
        deg = rng.between(1, 10)
        f = Poly(QQ, [rng.between(-9, 9) for _ in range(deg)] + [rng.between(1, 4)])
        if f.degree < 1:
            continue
        ours = Counter({b.coeffs: e for b, e in factor(f).factors})
        assert ours == _sympy_factors_q(f), f


KNOWN_IRREDUCIBLES = ["x", "x - 1", "x + 2", "2*x + 3", "x^2 + 1", "x^2 - 2", "x^2 + x + 1", "x^3 - 2",
                      "x^3 + x + 1", "x^4 + 1", "x^4 - 10*x^2 + 1", "x^4 + x^3 + x^2 + x + 1", "3*x^2 - 5"]


def test_products_of_known_irreducibles():
    rng = SplitMix64(5)
    pool = [P(s) for s in KNOWN_IRREDUCIBLES]
    for _ in range(60):
        chosen = Counter(rng.choice(pool).monic() for _ in range(rng.between(1, 4)))
        f = Poly.one(QQ)
        for b, e in chosen.items():
            f = f * b**e
        assert Counter(dict(factor(f).factors)) == chosen


def test_swinnerton_dyer_like_recombination():
    # x^4 - 10x^2 + 1 splits into linears or quadratics mod every prime
    f = P("x^4 - 10*x^2 + 1") * P("x^4 - 10*x^2 + 1").compose(P("x + 1"))
    fz = factor(f)
    assert sorted(b.degree for b, _ in fz.factors) == [4, 4]


def test_factor_rejects_constants():
    with pytest.raises(ValueError):
        factor(Poly.one(QQ))


def test_x_pow_minus_one():
    assert set(factor_x_pow_minus_one(QQ, 6)) == {cyclotomic(d) for d in (1, 2, 3, 6)}
    F25 = make_extension_field(5, 2)
    assert len(factor_x_pow_minus_one(F25, 12)) == 12
    assert len(factor_x_pow_minus_one(F5, 3)) == 2  # x - 1 and x^2 + x + 1
