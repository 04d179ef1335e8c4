"""Squarefree decomposition, irreducibility, complete factorization and
cyclotomic polynomials over Q and F_q."""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm

from .fields import QQ, Field, FiniteField
from .poly import Poly, format_poly, poly_gcd, pow_mod
from .zassenhaus import factor_squarefree_int


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(base**exp)``; bases monic irreducible, distinct, canonically sorted."""

    unit: object
    factors: tuple[tuple[Poly, int], ...]

    def expand(self, field: Field) -> Poly:
        out = Poly.constant(field, self.unit)
        for base, e in self.factors:
            out = out * base**e
        return out

    def __str__(self) -> str:
        parts = []
        for base, e in self.factors:
            s = format_poly(base)
            if base.num_terms() > 1:
                s = f"({s})"
            parts.append(s if e == 1 else f"{s}^{e}")
        return " * ".join(parts)


def _check_nonzero(f: Poly) -> None:
    if f.is_zero():
        raise ValueError("zero polynomial")


def _pth_root_poly(f: Poly) -> Poly:
    K = f.field
    p = K.characteristic
    return Poly._raw(K, [K.pth_root(c) for c in f.coeffs[::p]])


def _sqf_char0(f: Poly) -> list[tuple[Poly, int]]:
    # Yun's algorithm
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def _sqf_charp(f: Poly) -> list[tuple[Poly, int]]:
    K = f.field
    p = K.characteristic
    out = []
    df = f.derivative()
    c = poly_gcd(f, df) if not df.is_zero() else f
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        fac = w.exact_div(y)
        if fac.degree > 0:
            out.append((fac, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if c.degree > 0:
        out.extend((g, m * p) for g, m in _sqf_charp(_pth_root_poly(c)))
    return out


def squarefree_decompose(f: Poly) -> list[tuple[Poly, int]]:
    """[(g_1, m_1), ...] with f = prod g_i^m_i, g_i squarefree, monic, pairwise
    coprime and m_1 < m_2 < ...  ``f`` must be monic."""
    _check_nonzero(f)
    if not f.is_monic():
        raise ValueError("squarefree_decompose expects a monic polynomial")
    if f.degree == 0:
        return []
    parts = _sqf_char0(f) if f.field.characteristic == 0 else _sqf_charp(f)
    merged: dict[int, Poly] = {}
    for g, m in parts:
        merged[m] = merged[m] * g if m in merged else g
    return [(merged[m].monic(), m) for m in sorted(merged)]


# -- finite fields -----------------------------------------------------------


def _seeded_rng(f: Poly) -> random.Random:
    digest = hashlib.sha256(f"{f.field}|{format_poly(f)}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _random_element(K: FiniteField, rng: random.Random):
    if K.k == 1:
        return rng.randrange(K.p)
    return tuple(rng.randrange(K.p) for _ in range(K.k))


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic squarefree f into (product of all degree-d factors, d)."""
    K = f.field
    q = K.order
    x = Poly.x(K)
    out = []
    rest = f
    h = x % rest
    d = 1
    while rest.degree >= 2 * d:
        h = pow_mod(h, q, rest)
        g = poly_gcd(h - x, rest)
        if g.degree > 0:
            out.append((g, d))
            rest = rest.exact_div(g)
            h = h % rest
        d += 1
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles."""
    if f.degree == d:
        return [f]
    K = f.field
    q = K.order
    n = f.degree
    while True:
        a = Poly(K, [_random_element(K, rng) for _ in range(n)])
        if a.degree < 1:
            continue
        if q % 2:
            b = pow_mod(a, (q**d - 1) // 2, f) - Poly.one(K)
        else:
            # absolute trace to F_2: a + a^2 + ... + a^(2^(k d - 1))
            b = a % f
            term = b
            for _ in range(K.k * d - 1):
                term = term * term % f
                b = b + term
        if b.is_zero():
            continue
        g = poly_gcd(b, f)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f.exact_div(g), d, rng)


def _factor_squarefree_ff(f: Poly) -> list[Poly]:
    rng = _seeded_rng(f)
    out = []
    for g, d in distinct_degree(f):
        out.extend(equal_degree(g, d, rng))
    return out


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible_ff(f: Poly) -> bool:
    # Rabin's test
    K = f.field
    q = K.order
    n = f.degree
    x = Poly.x(K)
    f = f.monic()
    for r in _prime_divisors(n):
        h = x
        for _ in range(n // r):
            h = pow_mod(h, q, f)
        if not poly_gcd(h - x, f).is_one():
            return False
    h = x
    for _ in range(n):
        h = pow_mod(h, q, f)
    return ((h - x) % f).is_zero()


# -- rationals ---------------------------------------------------------------


def _to_primitive_int(f: Poly) -> list[int]:
    den = reduce(lcm, (c.denominator for c in f.coeffs), 1)
    ints = [int(c * den) for c in f.coeffs]
    g = reduce(gcd, ints, 0)
    return [c // g for c in ints]


def _factor_squarefree_q(f: Poly) -> list[Poly]:
    if f.degree == 1:
        return [f.monic()]
    ints = _to_primitive_int(f)
    return [Poly(QQ, [Fraction(c) for c in h]).monic() for h in factor_squarefree_int(ints)]


# -- public ------------------------------------------------------------------


def factor(f: Poly) -> Factorization:
    """Complete factorization into monic irreducibles with a scalar unit."""
    _check_nonzero(f)
    if f.degree < 1:
        raise ValueError("factor() needs a polynomial of degree >= 1")
    K = f.field
    unit = f.lc
    monic = f.monic()
    split = _factor_squarefree_q if K.characteristic == 0 else _factor_squarefree_ff
    pairs = []
    for g, m in squarefree_decompose(monic):
        pairs.extend((h, m) for h in split(g))
    pairs.sort(key=lambda t: t[0].sort_key())
    return Factorization(unit, tuple(pairs))


def is_irreducible(f: Poly) -> bool:
    _check_nonzero(f)
    if f.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if f.degree == 1:
        return True
    if f.field.characteristic != 0:
        return _is_irreducible_ff(f)
    fac = factor(f)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """The d-th cyclotomic polynomial over Q."""
    if d < 1:
        raise ValueError("cyclotomic polynomial index must be >= 1")
    f = Poly.monomial(QQ, d) - Poly.one(QQ)
    for e in range(1, d):
        if d % e == 0:
            f = f.exact_div(cyclotomic(e))
    return f


@lru_cache(maxsize=None)
def factor_x_pow_minus_one(field: Field, m: int) -> tuple[Poly, ...]:
    """Irreducible factors of x^m - 1 (m coprime to the characteristic)."""
    if field.characteristic == 0:
        return tuple(sorted((cyclotomic(e) for e in range(1, m + 1) if m % e == 0), key=Poly.sort_key))
    f = Poly.monomial(field, m) - Poly.one(field)
    return tuple(b for b, _ in factor(f).factors)
