import itertools

import pytest

from centralizer.factor import cyclotomic
from centralizer.fields import QQ, FieldMismatchError, FiniteField, make_extension_field
from centralizer.isoclass import (
    CapacityError,
    has_root_in_residue_field,
    prime_power_iso,
    rational_prefilter,
    residue_iso,
    trager_norm,
)
from centralizer.matrix import Matrix, char_poly
from centralizer.parsing import parse_poly
from centralizer.profile import ElementaryDivisor

F5 = FiniteField(5)


def P(text, K=QQ):
    return parse_poly(text, K)


def test_examples():
    assert residue_iso(P("x^2 + 1"), P("x^2 + 4"))
    assert not residue_iso(P("x^2 + 1"), P("x^2 - 2"))
    assert residue_iso(P("x^2 + x + 1", F5), P("x^2 + 2", F5))


def test_prime_power_examples():
    for K in (QQ, F5, make_extension_field(2, 2)):
        assert prime_power_iso(ElementaryDivisor(P("x", K), 3), ElementaryDivisor(P("x - 1", K), 3))
        assert not prime_power_iso(ElementaryDivisor(P("x", K), 3), ElementaryDivisor(P("x", K), 2))
    assert not prime_power_iso(ElementaryDivisor(P("x^2 + 1"), 2), ElementaryDivisor(P("x^2 - 2"), 2))


# (polynomial, label of its number field); equal labels mean isomorphic
RATIONAL_POOL = [
    ("x^2 + 1", "Q(i)"),
    ("x^2 + 4", "Q(i)"),
    ("x^2 + 2*x + 2", "Q(i)"),
    ("x^2 - 2", "Q(sqrt2)"),
    ("x^2 - 8", "Q(sqrt2)"),
    ("x^2 + 3", "Q(sqrt-3)"),
    ("x^2 + x + 1", "Q(sqrt-3)"),
    ("x^2 - 3", "Q(sqrt3)"),
]

HIGHER_POOL = [
    ("x^3 - 2", "Q(cbrt2)"),
    ("x^3 - 4", "Q(cbrt2)"),
    ("x^3 + 2", "Q(cbrt2)"),
    ("x^3 - 3", "Q(cbrt3)"),
    ("x^4 + 1", "Q(zeta8)"),
    ("x^4 - 2*x^2 + 9", "Q(zeta8)"),
    ("x^4 - 2", "Q(2^(1/4))"),
    ("x^4 + 2", "Q((-2)^(1/4))"),
]


@pytest.mark.parametrize("pool", [RATIONAL_POOL, HIGHER_POOL], ids=["quadratic", "cubic-quartic"])
def test_rational_classes(pool):
    polys = [(P(s), label) for s, label in pool]
    for (f, a), (g, b) in itertools.product(polys, repeat=2):
        assert residue_iso(f, g) == (a == b), (str(f), str(g))


@pytest.mark.parametrize("pool", [RATIONAL_POOL, HIGHER_POOL], ids=["quadratic", "cubic-quartic"])
def test_equivalence_relation(pool):
    polys = [P(s) for s, _ in pool]
    rel = {(i, j): residue_iso(f, g) for (i, f), (j, g) in itertools.product(enumerate(polys), repeat=2)}
    n = len(polys)
    for i in range(n):
        assert rel[i, i]
        for j in range(n):
            assert rel[i, j] == rel[j, i]
            for k in range(n):
                if rel[i, j] and rel[j, k]:
                    assert rel[i, k]


def test_prefilter_never_contradicts_norm_method():
    polys = [P(s) for s, _ in RATIONAL_POOL + HIGHER_POOL]
    for f, g in itertools.product(polys, repeat=2):
        if f.degree == g.degree and has_root_in_residue_field(f, g):
            assert rational_prefilter(f, g)


def test_cyclotomic_fields():
    assert residue_iso(cyclotomic(5), cyclotomic(10))
    assert residue_iso(cyclotomic(7), cyclotomic(14))
    assert not residue_iso(cyclotomic(7), cyclotomic(9))
    assert residue_iso(cyclotomic(8), cyclotomic(8))
    assert not residue_iso(cyclotomic(5), cyclotomic(8))
    assert not residue_iso(cyclotomic(5), cyclotomic(12))


def test_finite_fields_equal_degree():
    K = FiniteField(3)
    irr = [P(s, K) for s in ("x", "x + 1", "x^2 + 1", "x^2 + x + 2", "x^3 + 2*x + 1", "x^3 + 2*x + 2")]
    for f, g in itertools.product(irr, repeat=2):
        assert residue_iso(f, g) == (f.degree == g.degree)


def test_trager_norm_is_resultant_norm():
    # norm of x - s*t over Q(i) for x^2+1 with itself at shift 1: char poly of the Kronecker sum
    f = P("x^2 + 1")
    n = trager_norm(f, f, 1)
    assert n.degree == 4
    c = Matrix.companion(f)
    # eigenvalues a + b with a, b in {i, -i}: x^2 (x^2 + 4)
    assert n == P("x^2 * (x^2 + 4)")
    assert char_poly(c) == f


def test_guards():
    with pytest.raises(CapacityError):
        residue_iso(cyclotomic(19), cyclotomic(27))
    assert residue_iso(cyclotomic(19), cyclotomic(19))
    with pytest.raises(ValueError):
        residue_iso(P("x^2 - 1"), P("x^2 + 1"))
    with pytest.raises(FieldMismatchError):
        residue_iso(P("x"), P("x", F5))
