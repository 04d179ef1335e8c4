"""Permutation matrices handled through their cycle types alone."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .factor import factor_x_pow_minus_one
from .fields import Field
from .matrix import Matrix
from .parsing import parse_cycle_type
from .profile import DivisorProfile, ElementaryDivisor


@dataclass(frozen=True)
class CycleType:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        ps = tuple(sorted((int(x) for x in parts), reverse=True))
        if not ps or ps[-1] < 1:
            raise ValueError("a cycle type is a nonempty list of positive integers")
        object.__setattr__(self, "parts", ps)

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        return cls(parse_cycle_type(text))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def with_fixed_point(self) -> "CycleType":
        return CycleType(self.parts + (1,))

    def __str__(self) -> str:
        counts = Counter(self.parts)
        return ",".join(str(k) if c == 1 else f"{k}^{c}" for k, c in sorted(counts.items(), reverse=True))


def nu(m: int, p: int) -> int:
    """Exponent of p in m (0 when p == 0)."""
    if p == 0:
        return 0
    s = 0
    while m % p == 0:
        m //= p
        s += 1
    return s


def cycle_type_divisors(cycle_type: CycleType, field: Field) -> tuple[ElementaryDivisor, ...]:
    """Elementary divisors of the permutation matrix of the given cycle type.

    A part l = p^v * l' contributes f^(p^v) for each irreducible factor f of
    x^l' - 1 (cyclotomic polynomials over Q).
    """
    p = field.characteristic
    out = []
    for part in cycle_type.parts:
        v = nu(part, p)
        reduced = part // p**v if p else part
        e = p**v if p else 1
        out.extend(ElementaryDivisor(f, e) for f in factor_x_pow_minus_one(field, reduced))
    return tuple(sorted(out, key=ElementaryDivisor.sort_key))


def cycle_type_profile(cycle_type: CycleType, field: Field) -> DivisorProfile:
    return DivisorProfile(field, cycle_type.n, cycle_type_divisors(cycle_type, field))


def permutation_matrix(cycle_type: CycleType, field: Field) -> Matrix:
    """c_sigma = sum_i e_{i, sigma(i)} for sigma = (1 .. l1)(l1+1 .. l1+l2)..."""
    n = cycle_type.n
    sigma = []
    start = 0
    for part in cycle_type.parts:
        sigma.extend(start + (i + 1) % part for i in range(part))
        start += part
    rows = [[field.zero] * n for _ in range(n)]
    for i, j in enumerate(sigma):
        rows[i][j] = field.one
    return Matrix._raw(field, rows)


def p_split(cycle_type: CycleType, p: int) -> tuple[CycleType, CycleType]:
    """(p-regular part, p-singular part), each padded with fixed points to n."""
    n = cycle_type.n
    if p == 0:
        return cycle_type, CycleType([1] * n)
    regular = [x for x in cycle_type.parts if x % p]
    singular = [x for x in cycle_type.parts if x % p == 0]
    pad = lambda parts: CycleType(parts + [1] * (n - sum(parts)))  # noqa: E731
    return pad(regular), pad(singular)


def rep_finite_perm(cycle_type: CycleType, p: int) -> bool:
    """Representation-finiteness: the nonzero p-valuations of the parts agree."""
    if p == 0:
        return True
    return len({nu(x, p) for x in cycle_type.parts} - {0}) <= 1


def fixed_point_extension_equivalent(cycle_type: CycleType, p: int) -> bool:
    """Whether adding a fixed point preserves the Morita (= derived) class:
    true iff some part is prime to p."""
    if p == 0:
        return True
    return any(x % p for x in cycle_type.parts)
