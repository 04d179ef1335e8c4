"""Elementary divisors of a matrix and the combinatorial data built from them:
maximal divisors, power-index sets, H- and J-transforms, centralizer dimension."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .factor import factor
from .fields import Field
from .matrix import Matrix, char_poly, eval_poly_at_matrix, nullity, rank
from .parsing import parse_divisor, parse_poly
from .poly import Poly, format_poly


class ProfileError(ArithmeticError):
    """Internal inconsistency while extracting elementary divisors."""


def format_power(base: Poly, exponent: int) -> str:
    s = format_poly(base)
    if exponent == 1:
        return s
    if base.num_terms() > 1:
        s = f"({s})"
    return f"{s}^{exponent}"


@dataclass(frozen=True)
class ElementaryDivisor:
    base: Poly
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise ValueError("exponent must be >= 1")
        if not self.base.is_monic() or self.base.degree < 1:
            raise ValueError("base must be monic of degree >= 1")

    @property
    def degree(self) -> int:
        return self.base.degree * self.exponent

    def poly(self) -> Poly:
        return self.base**self.exponent

    def sort_key(self) -> tuple:
        return (self.base.sort_key(), self.exponent)

    def __lt__(self, other: "ElementaryDivisor") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_power(self.base, self.exponent)

    @classmethod
    def parse(cls, text: str, field: Field) -> "ElementaryDivisor":
        base, e = parse_divisor(text, field)
        return cls(base, e)


@dataclass(frozen=True)
class MaximalBlock:
    """One maximal divisor base^exponent with its power-index set (strictly decreasing)."""

    base: Poly
    exponent: int
    pset: tuple[int, ...]

    def __post_init__(self) -> None:
        ps = self.pset
        if not ps or ps[0] != self.exponent or any(a <= b for a, b in zip(ps, ps[1:])) or ps[-1] < 1:
            raise ValueError(f"invalid power-index set {ps} for exponent {self.exponent}")

    @property
    def reducible(self) -> bool:
        return self.exponent >= 2

    @property
    def divisor(self) -> ElementaryDivisor:
        return ElementaryDivisor(self.base, self.exponent)

    def sort_key(self) -> tuple:
        return (self.base.sort_key(), self.exponent, self.pset)

    def __str__(self) -> str:
        return format_power(self.base, self.exponent)


@dataclass(frozen=True)
class DivisorProfile:
    """Elementary divisors of an n x n matrix (as a sorted multiset) and the
    maximal blocks derived from them."""

    field: Field
    n: int
    divisors: tuple[ElementaryDivisor, ...]

    def __post_init__(self) -> None:
        total = sum(d.degree for d in self.divisors)
        if total != self.n:
            raise ValueError(f"divisor degrees sum to {total}, expected {self.n}")
        for d in self.divisors:
            if d.base.field != self.field:
                raise ValueError("divisor over a different field")

    @classmethod
    def from_divisors(cls, field: Field, divisors: Iterable[ElementaryDivisor]) -> "DivisorProfile":
        ds = tuple(sorted(divisors, key=ElementaryDivisor.sort_key))
        if not ds:
            raise ValueError("a profile needs at least one divisor")
        return cls(field, sum(d.degree for d in ds), ds)

    @property
    def blocks(self) -> tuple[MaximalBlock, ...]:
        by_base: dict[Poly, set[int]] = {}
        for d in self.divisors:
            by_base.setdefault(d.base, set()).add(d.exponent)
        out = []
        for base, exps in by_base.items():
            ps = tuple(sorted(exps, reverse=True))
            out.append(MaximalBlock(base, ps[0], ps))
        return tuple(sorted(out, key=MaximalBlock.sort_key))

    def multiplicities(self) -> dict[ElementaryDivisor, int]:
        return dict(Counter(self.divisors))

    def distinct(self) -> tuple[ElementaryDivisor, ...]:
        """E_c: the distinct elementary divisors."""
        return tuple(sorted(set(self.divisors), key=ElementaryDivisor.sort_key))

    def maximal(self) -> tuple[ElementaryDivisor, ...]:
        return tuple(b.divisor for b in self.blocks)

    def reducible_blocks(self) -> tuple[MaximalBlock, ...]:
        return tuple(b for b in self.blocks if b.reducible)

    def minimal_polynomial(self) -> Poly:
        out = Poly.one(self.field)
        for b in self.blocks:
            out = out * b.base**b.exponent
        return out

    def characteristic_polynomial(self) -> Poly:
        out = Poly.one(self.field)
        for d in self.divisors:
            out = out * d.poly()
        return out

    def to_dict(self) -> dict:
        mult = self.multiplicities()
        return {
            "field": self.field.to_dict(),
            "n": self.n,
            "divisors": [
                {"divisor": str(d), "base": format_poly(d.base), "exponent": d.exponent, "multiplicity": mult[d]}
                for d in self.distinct()
            ],
            "maximal": [
                {"divisor": str(b), "base": format_poly(b.base), "exponent": b.exponent,
                 "pset": list(b.pset), "reducible": b.reducible}
                for b in self.blocks
            ],
            "reducible_maximal": [str(b) for b in self.reducible_blocks()],
        }

    @classmethod
    def from_dict(cls, d: dict, field: Field | None = None) -> "DivisorProfile":
        from .fields import field_from_dict

        K = field or field_from_dict(d["field"])
        divs = []
        for item in d["divisors"]:
            base = parse_poly(item["base"], K)
            divs.extend([ElementaryDivisor(base, int(item["exponent"]))] * int(item["multiplicity"]))
        prof = cls.from_divisors(K, divs)
        if prof.n != d["n"]:
            raise ValueError("profile dimension does not match its divisors")
        return prof


def elementary_divisors(m: Matrix) -> tuple[ElementaryDivisor, ...]:
    """Multiset of elementary divisors, sorted canonically (repeats kept).

    For each irreducible factor p (degree delta) of the characteristic
    polynomial, N_k = nullity(p(m)^k) is computed until it reaches the algebraic
    multiplicity; the number of divisors p^k is (2 N_k - N_{k-1} - N_{k+1}) / delta.
    """
    out: list[ElementaryDivisor] = []
    for base, alg_mult in factor(char_poly(m)).factors:
        delta = base.degree
        target = alg_mult * delta
        pm = eval_poly_at_matrix(base, m)
        nulls = [0]
        power = pm
        while True:
            nulls.append(nullity(power))
            if nulls[-1] > target or nulls[-1] < nulls[-2]:
                raise ProfileError(f"nullity sequence {nulls} inconsistent for base {base}")
            if nulls[-1] == target:
                break
            if len(nulls) > target + 1:
                raise ProfileError(f"nullity sequence {nulls} did not stabilise for base {base}")
            power = power * pm
        nulls.append(target)
        for k in range(1, len(nulls) - 1):
            num = 2 * nulls[k] - nulls[k - 1] - nulls[k + 1]
            if num % delta or num < 0:
                raise ProfileError(f"non-integral multiplicity for {base}^{k}: {num}/{delta}")
            out.extend([ElementaryDivisor(base, k)] * (num // delta))
    if sum(d.degree for d in out) != m.n:
        raise ProfileError("elementary divisors do not account for the full dimension")
    return tuple(sorted(out, key=ElementaryDivisor.sort_key))


def profile(m: Matrix) -> DivisorProfile:
    return DivisorProfile(m.field, m.n, elementary_divisors(m))


def _check_series(T: Sequence[int]) -> tuple[int, ...]:
    T = tuple(T)
    if not T:
        raise ValueError("empty power-index set")
    if any(a <= b for a, b in zip(T, T[1:])) or T[-1] < 1:
        raise ValueError(f"{T} is not a strictly decreasing sequence of positive integers")
    return T


def h_multiset(T: Sequence[int]) -> tuple[int, ...]:
    """Consecutive differences of a strictly decreasing T followed by its last
    entry, returned sorted (as a multiset)."""
    T = _check_series(T)
    diffs = [a - b for a, b in zip(T, T[1:])] + [T[-1]]
    return tuple(sorted(diffs))


def j_set(T: Sequence[int]) -> tuple[int, ...]:
    """{m1} together with m1 - mi for i >= 2, strictly decreasing."""
    T = _check_series(T)
    top = T[0]
    return tuple(sorted({top} | {top - m for m in T[1:]}, reverse=True))


def centralizer_dim(p: DivisorProfile) -> int:
    """dim of the commutant: sum over ordered divisor pairs of deg gcd."""
    total = 0
    by_base: dict[Poly, list[int]] = {}
    for d in p.divisors:
        by_base.setdefault(d.base, []).append(d.exponent)
    for base, exps in by_base.items():
        total += base.degree * sum(min(a, b) for a in exps for b in exps)
    return total


def is_principal_cyclic(p: DivisorProfile) -> bool:
    """True iff the minimal and characteristic polynomials coincide."""
    bases = [d.base for d in p.divisors]
    return len(bases) == len(set(bases))


def jordan_profile_nilpotent(m: Matrix) -> tuple[int, ...]:
    """Jordan block sizes of a nilpotent matrix from the rank sequence alone
    (descending)."""
    n = m.n
    ranks = [n]
    power = m
    while True:
        ranks.append(rank(power))
        if ranks[-1] == 0:
            break
        if len(ranks) > n:
            raise ValueError("matrix is not nilpotent")
        power = power * m
    ranks.append(0)
    sizes = [t for t in range(1, len(ranks) - 1) if ranks[t + 1] + ranks[t - 1] - 2 * ranks[t] > 0]
    return tuple(sorted(sizes, reverse=True))
