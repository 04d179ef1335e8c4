"""Isomorphism of the local algebras K[x]/(p1^a) and K[x]/(p2^b).

Over a perfect field these are isomorphic iff a == b and the residue fields
K[x]/(p1), K[x]/(p2) are.  Over F_q that reduces to equal degrees; over Q it
asks whether p1 has a root in Q[x]/(p2), decided with Trager's norm.
"""
from __future__ import annotations

from functools import lru_cache

from .factor import _to_primitive_int, factor, is_irreducible
from .fields import FiniteField, FieldMismatchError, is_prime
from .matrix import Matrix, char_poly
from .poly import Poly, poly_gcd
from .profile import ElementaryDivisor

# rational residue_iso refuses bases above this degree (norm has degree d^2)
MAX_RATIONAL_DEGREE = 16
PREFILTER_PRIMES = 5


class CapacityError(RuntimeError):
    """Query exceeds the supported problem size."""


def _discriminant_sign(f: Poly) -> int:
    """(-1)^(number of complex-conjugate root pairs), from the real root count."""
    # Sturm sequence count of real roots of a squarefree f
    seq = [f, f.derivative()]
    while seq[-1].degree > 0:
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r)

    def sign_changes(vals):
        signs = [v > 0 for v in vals if v != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    at_neg = [p.lc * (-1 if p.degree % 2 else 1) for p in seq]
    at_pos = [p.lc for p in seq]
    real_roots = sign_changes(at_neg) - sign_changes(at_pos)
    pairs = (f.degree - real_roots) // 2
    return -1 if pairs % 2 else 1


def factor_pattern(f: Poly, p: int) -> tuple[int, ...] | None:
    """Sorted degrees of the factors of f mod p, or None if p is bad for f."""
    ints = _to_primitive_int(f)
    if ints[-1] % p == 0:
        return None
    F = FiniteField(p)
    fp = Poly(F, ints)
    if not poly_gcd(fp, fp.derivative()).is_one():
        return None
    return tuple(sorted(b.degree for b, _ in factor(fp).factors))


def fingerprints(p1: Poly, p2: Poly, count: int = PREFILTER_PRIMES) -> list[tuple[int, tuple, tuple]]:
    """Factor patterns of p1 and p2 at the first ``count`` primes good for both."""
    out = []
    q = 2
    while len(out) < count:
        if is_prime(q):
            a = factor_pattern(p1, q)
            b = factor_pattern(p2, q) if a is not None else None
            if a is not None and b is not None:
                out.append((q, a, b))
        q += 1
    return out


def rational_prefilter(p1: Poly, p2: Poly) -> bool:
    """Necessary condition for Q[x]/(p1) ~ Q[x]/(p2); False rules it out."""
    if p1.degree != p2.degree:
        return False
    if _discriminant_sign(p1) != _discriminant_sign(p2):
        return False
    return all(a == b for _, a, b in fingerprints(p1, p2))


def trager_norm(p1: Poly, p2: Poly, shift: int) -> Poly:
    """N(x) = Res_t(p2(t), p1(x - shift*t)) = prod over roots (x - beta - shift*alpha),
    computed as the characteristic polynomial of C1 (+) shift*C2 (Kronecker sum)."""
    K = p1.field
    c1 = Matrix.companion(p1).rows
    c2 = Matrix.companion(p2).rows
    d1, d2 = p1.degree, p2.degree
    s = K.from_int(shift)
    rows = []
    for a in range(d2):
        for b in range(d1):
            row = []
            for a2 in range(d2):
                for b2 in range(d1):
                    v = K.zero
                    if a == a2:
                        v = c1[b][b2]
                    if b == b2:
                        v = K.add(v, K.mul(s, c2[a][a2]))
                    row.append(v)
            rows.append(row)
    return char_poly(Matrix._raw(K, rows))


def _shifts():
    yield 0
    s = 1
    while True:
        yield s
        yield -s
        s += 1


def has_root_in_residue_field(p1: Poly, p2: Poly) -> bool:
    """Does p1 have a root in Q[t]/(p2)?  (p1, p2 monic irreducible over Q.)"""
    d = p2.degree
    for s in _shifts():
        norm = trager_norm(p1, p2, s)
        if poly_gcd(norm, norm.derivative()).is_one():
            break
    return any(b.degree == d for b, _ in factor(norm).factors)


def _require_irreducible(f: Poly) -> None:
    if not f.is_monic():
        raise ValueError(f"{f} is not monic")
    if not is_irreducible(f):
        raise ValueError(f"{f} is not irreducible")


@lru_cache(maxsize=4096)
def residue_iso(p1: Poly, p2: Poly) -> bool:
    """K[x]/(p1) ~ K[x]/(p2) for monic irreducible p1, p2 over the same field."""
    if p1.field != p2.field:
        raise FieldMismatchError(f"field mismatch: {p1.field} vs {p2.field}")
    _require_irreducible(p1)
    _require_irreducible(p2)
    if p1.degree != p2.degree:
        return False
    if p1 == p2 or p1.degree == 1 or p1.field.characteristic != 0:
        return True
    if p1.degree > MAX_RATIONAL_DEGREE:
        raise CapacityError(
            f"capacity exceeded: rational residue-field test limited to degree {MAX_RATIONAL_DEGREE}"
        )
    if not rational_prefilter(p1, p2):
        return False
    return has_root_in_residue_field(p1, p2)


def prime_power_iso(d1: ElementaryDivisor, d2: ElementaryDivisor) -> bool:
    """K[x]/(d1) ~ K[x]/(d2) as algebras."""
    return d1.exponent == d2.exponent and residue_iso(d1.base, d2.base)
