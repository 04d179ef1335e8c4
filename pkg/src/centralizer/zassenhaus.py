"""Factorization of squarefree integer polynomials: factor modulo a good prime,
Hensel-lift to beyond the Mignotte bound, recombine subsets of lifted factors.

Integer polynomials here are plain ``list[int]``, constant term first.
"""
from __future__ import annotations

from functools import reduce
from itertools import combinations
from math import gcd, isqrt

from .fields import FiniteField, is_prime
from .poly import Poly, poly_gcd, poly_xgcd

# number of good primes tried when looking for the fewest modular factors
PRIMES_TRIED = 5


def content(f: list[int]) -> int:
    return reduce(gcd, f, 0)


def primitive_part(f: list[int]) -> list[int]:
    c = content(f)
    if c == 0:
        return list(f)
    if f[-1] < 0:
        c = -c
    return [x // c for x in f]


def int_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def int_exact_div(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient a / b over Z, or None if b does not divide a."""
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return None
    lb = b[-1]
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % lb:
            return None
        q = c // lb
        quot[i - db] = q
        for j in range(db + 1):
            rem[i - db + j] -= q * b[j]
    if any(rem[:db]):
        return None
    return quot


def symmetric_mod(f: list[int], m: int) -> list[int]:
    half = m // 2
    out = []
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    while out and out[-1] == 0:
        out.pop()
    return out


def _primes_from(start: int):
    n = start
    while True:
        if is_prime(n):
            yield n
        n += 1


def _coefficient_bound(g: list[int]) -> int:
    """Bound on |coefficients| of lc(g) * h / lc(h) for any factor h of g."""
    n = len(g) - 1
    norm2 = isqrt(sum(c * c for c in g)) + 1
    return (1 << n) * norm2 * abs(g[-1])


def modular_factors(g: list[int], p: int) -> list[list[int]] | None:
    """Monic irreducible factors of g mod p, or None if p is not a good prime."""
    from .factor import factor

    if g[-1] % p == 0:
        return None
    F = FiniteField(p)
    gp = Poly(F, g)
    if not poly_gcd(gp, gp.derivative()).is_one():
        return None
    fac = factor(gp)
    return [list(b.coeffs) for b, _ in fac.factors]


def hensel_lift(g: list[int], factors: list[list[int]], p: int, a: int) -> list[list[int]]:
    """Lift g == lc(g) * prod(factors) (mod p) to the same identity mod p^a.

    The factors are monic and pairwise coprime modulo p; the lifts stay monic.
    """
    F = FiniteField(p)
    mods = [Poly(F, f) for f in factors]
    total = reduce(lambda x, y: x * y, mods)
    # s_i * (total / f_i) == 1 (mod f_i); then sum_i s_i * total / f_i == 1
    cofactors = []
    for f in mods:
        other = total.exact_div(f) % f
        h, s, _ = poly_xgcd(other, f)
        if not h.is_one():
            raise ArithmeticError("modular factors are not coprime")
        cofactors.append(s)
    b = g[-1]
    b_inv = pow(b, -1, p)
    lifted = [list(f) for f in factors]
    pk = p
    for _ in range(a - 1):
        modulus = pk * p
        prod = [b % modulus]
        for f in lifted:
            prod = [c % modulus for c in int_mul(prod, f)]
        err = [(x - (prod[i] if i < len(prod) else 0)) for i, x in enumerate(g)]
        if any(c % pk for c in err):
            raise ArithmeticError("Hensel invariant violated")
        e = Poly(F, [(c // pk) * b_inv for c in err])
        if not e.is_zero():
            for idx, (f, s) in enumerate(zip(mods, cofactors)):
                delta = (e * s) % f
                cur = lifted[idx]
                for j, c in enumerate(delta.coeffs):
                    cur[j] = (cur[j] + pk * c) % modulus
        pk = modulus
    return lifted


def factor_squarefree_int(g: list[int]) -> list[list[int]]:
    """Irreducible primitive factors (positive leading coefficient) of a
    squarefree primitive integer polynomial of degree >= 1."""
    g = primitive_part(g)
    n = len(g) - 1
    if n <= 1:
        return [g]
    best: tuple[int, list[list[int]]] | None = None
    tried = 0
    for p in _primes_from(3):
        facs = modular_factors(g, p)
        if facs is None:
            continue
        if len(facs) == 1:
            return [g]
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        tried += 1
        if tried >= PRIMES_TRIED:
            break
    assert best is not None
    p, facs = best
    bound = 2 * _coefficient_bound(g)
    a, pa = 1, p
    while pa <= bound:
        a += 1
        pa *= p
    lifted = hensel_lift(g, facs, p, a)

    found: list[list[int]] = []
    remaining = list(range(len(lifted)))
    current = g
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for subset in combinations(remaining, size):
            cand = [current[-1]]
            for i in subset:
                cand = [c % pa for c in int_mul(cand, lifted[i])]
            cand = primitive_part(symmetric_mod(cand, pa))
            # constant-term screen before the full division
            if cand[0] != 0 and current[0] % cand[0]:
                continue
            quot = int_exact_div(current, cand)
            if quot is None:
                continue
            found.append(cand)
            current = quot
            remaining = [i for i in remaining if i not in subset]
            hit = True
            break
        if not hit:
            size += 1
    found.append(primitive_part(current))
    return found
