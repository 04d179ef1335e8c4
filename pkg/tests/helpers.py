"""Shared generators for the property suites."""
from __future__ import annotations

import time
from pathlib import Path

from centralizer.fields import QQ, FiniteField
from centralizer.matrixio import read_matrix_file
from centralizer.oracle import SplitMix64
from centralizer.parsing import parse_poly
from centralizer.permutation import CycleType
from centralizer.profile import DivisorProfile, ElementaryDivisor, j_set

DATA = Path(__file__).parent / "data"

# criterion number -> (passed, detail, seconds, limit)
ACCEPTANCE: dict[int, tuple[bool, str, float, float]] = {}

F2, F3, F5, F7 = FiniteField(2), FiniteField(3), FiniteField(5), FiniteField(7)

BASE_POOLS = {
    F2: ["x", "x + 1", "x^2 + x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"],
    F3: ["x", "x + 1", "x + 2", "x^2 + 1", "x^2 + x + 2", "x^2 + 2*x + 2"],
    # several isomorphic residue fields: Q(i) twice, Q(sqrt(-3)) twice
    QQ: ["x", "x - 1", "x + 1", "x^2 + 1", "x^2 + 4", "x^2 - 2", "x^2 + x + 1", "x^2 + 3"],
}


def load(name: str):
    return read_matrix_file(str(DATA / name))


def random_series(rng: SplitMix64, top: int | None = None, max_len: int = 4, max_entry: int = 8) -> tuple[int, ...]:
    top = top or rng.between(1, max_entry)
    rest = [v for v in range(1, top) if rng.below(3) == 0][: max_len - 1]
    return tuple(sorted({top, *rest}, reverse=True))


def series_from_gaps(gaps: list[int]) -> tuple[int, ...]:
    """Series whose consecutive differences (and minimum) are ``gaps`` top-down."""
    out = []
    total = 0
    for g in reversed(gaps):
        total += g
        out.append(total)
    return tuple(reversed(out))


def h_shuffle(rng: SplitMix64, T: tuple[int, ...]) -> tuple[int, ...]:
    gaps = [a - b for a, b in zip(T, T[1:])] + [T[-1]]
    for i in range(len(gaps) - 1, 0, -1):
        j = rng.below(i + 1)
        gaps[i], gaps[j] = gaps[j], gaps[i]
    return series_from_gaps(gaps)


def profile_from_blocks(field, blocks, rng: SplitMix64 | None = None) -> DivisorProfile:
    divs = []
    for base, pset in blocks:
        for e in pset:
            reps = 1 + (rng.below(2) if rng else 0)
            divs.extend([ElementaryDivisor(base, e)] * reps)
    return DivisorProfile.from_divisors(field, divs)


def random_blocks(rng: SplitMix64, field, max_blocks: int = 5, max_exp: int = 8):
    pool = [parse_poly(s, field) for s in BASE_POOLS[field]]
    count = rng.between(1, min(max_blocks, len(pool)))
    bases = []
    while len(bases) < count:
        b = rng.choice(pool)
        if b not in bases:
            bases.append(b)
    return [(b, random_series(rng, max_entry=max_exp)) for b in bases]


def random_profile(rng: SplitMix64, field, **kw) -> DivisorProfile:
    return profile_from_blocks(field, random_blocks(rng, field, **kw), rng)


def related_profile_pair(rng: SplitMix64, field) -> tuple[DivisorProfile, DivisorProfile]:
    """A random profile and a perturbed partner: per block keep, reflect,
    reshuffle the gaps, or replace the P-set; bases are permuted."""
    blocks = random_blocks(rng, field)
    pool = [parse_poly(s, field) for s in BASE_POOLS[field]]
    other = []
    used = set()
    for base, P in blocks:
        roll = rng.below(5)
        if roll == 0:
            Q = P
        elif roll == 1:
            Q = j_set(P)
        elif roll in (2, 3):
            Q = h_shuffle(rng, P)
        else:
            Q = random_series(rng, top=P[0] if rng.below(2) else None)
        candidates = [b for b in pool if b.degree == base.degree and b not in used]
        new_base = rng.choice(candidates) if candidates and rng.below(2) else base
        if new_base in used:
            new_base = base if base not in used else next(b for b in pool if b not in used)
        used.add(new_base)
        other.append((new_base, Q))
    if rng.below(6) == 0:
        extra = [b for b in pool if b not in used]
        if extra:
            other.append((rng.choice(extra), random_series(rng)))
    return profile_from_blocks(field, blocks, rng), profile_from_blocks(field, other, rng)


def random_cycle_type(rng: SplitMix64, n_max: int = 12, part_max: int | None = None) -> CycleType:
    n = rng.between(1, n_max)
    parts = []
    while n:
        part = rng.between(1, min(n, part_max or n))
        parts.append(part)
        n -= part
    return CycleType(parts)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
