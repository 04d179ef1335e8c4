"""Deliberately naive cross-checks for the fast paths.

Random choices come from SplitMix64 so corpora are reproducible from a single
64-bit seed on any platform:

    state <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9     (mod 2^64)
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB     (mod 2^64)
    output z xor (z >> 31)

``below(n)`` is ``output mod n``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .factor import is_irreducible
from .fields import QQ, Field, FiniteField
from .matrix import Matrix, rank_of_rows
from .poly import Poly
from .profile import ElementaryDivisor, centralizer_dim, elementary_divisors, h_multiset, profile
from .structure import cartan_matrix

MASK64 = (1 << 64) - 1
BRUTE_MAX_N = 12
CONGRUENCE_MAX_SIZE = 6
RANDOM_SIMILAR_MAX_DEGREE = 12


class OracleSizeError(ValueError):
    """Input too large for a brute-force oracle."""


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next() % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]


def brute_centralizer_dim(m: Matrix) -> int:
    """Nullity of the n^2 x n^2 linear map X -> mX - Xm."""
    n = m.n
    if n > BRUTE_MAX_N:
        raise OracleSizeError(f"brute-force commutant limited to n <= {BRUTE_MAX_N}, got {n}")
    K = m.field
    a = m.rows
    rows = []
    for i in range(n):
        for j in range(n):
            row = [K.zero] * (n * n)
            for k in range(n):
                # + m[i][k] X[k][j]  - X[i][k] m[k][j]
                row[k * n + j] = K.add(row[k * n + j], a[i][k])
                row[i * n + k] = K.sub(row[i * n + k], a[k][j])
            rows.append(row)
    return n * n - rank_of_rows(K, rows)


def _random_element(K: Field, rng: SplitMix64, lo: int = -3, hi: int = 3):
    if isinstance(K, FiniteField):
        idx = rng.below(K.order)
        if K.k == 1:
            return idx
        return tuple((idx // K.p**i) % K.p for i in range(K.k))
    return K.from_int(rng.between(lo, hi))


def _random_conjugator(K: Field, n: int, rng: SplitMix64) -> tuple[Matrix, Matrix]:
    if isinstance(K, FiniteField):
        while True:
            u = Matrix._raw(K, [[_random_element(K, rng) for _ in range(n)] for _ in range(n)])
            if rank_of_rows(K, [list(r) for r in u.rows]) == n:
                return u, u.inverse()
    # over Q: unimodular integer matrix (permutation * unit lower * unit upper),
    # so both u and its inverse stay integral
    lower = [[K.one if i == j else (K.from_int(rng.between(-2, 2)) if j < i else K.zero) for j in range(n)]
             for i in range(n)]
    upper = [[K.one if i == j else (K.from_int(rng.between(-2, 2)) if j > i else K.zero) for j in range(n)]
             for i in range(n)]
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    pm = Matrix._raw(K, [[K.one if perm[i] == j else K.zero for j in range(n)] for i in range(n)])
    u = pm * Matrix._raw(K, lower) * Matrix._raw(K, upper)
    return u, u.inverse()


def random_similar(divisors: Iterable[ElementaryDivisor], seed: int) -> Matrix:
    """A matrix with exactly the given elementary divisors, scrambled by a
    seeded random conjugation."""
    divisors = list(divisors)
    if not divisors:
        raise ValueError("need at least one divisor")
    K = divisors[0].base.field
    total = sum(d.degree for d in divisors)
    if total > RANDOM_SIMILAR_MAX_DEGREE:
        raise OracleSizeError(f"total degree {total} exceeds {RANDOM_SIMILAR_MAX_DEGREE}")
    rng = SplitMix64(seed)
    block = Matrix.block_diag([Matrix.companion(d.poly()) for d in divisors])
    u, u_inv = _random_conjugator(K, block.n, rng)
    return u * block * u_inv


def random_irreducible(K: Field, degree: int, rng: SplitMix64) -> Poly:
    while True:
        coeffs = [_random_element(K, rng) for _ in range(degree)] + [K.one]
        f = Poly(K, coeffs)
        if is_irreducible(f):
            return f


def random_divisor_multiset(K: Field, rng: SplitMix64, max_total: int = 10) -> list[ElementaryDivisor]:
    """Random prime powers of total degree <= max_total, reusing bases often
    so that several divisors share a base."""
    budget = rng.between(1, max_total)
    bases: list[Poly] = []
    out: list[ElementaryDivisor] = []
    while budget > 0:
        if bases and rng.below(3):
            base = rng.choice(bases)
        else:
            deg = rng.between(1, min(3, budget))
            base = random_irreducible(K, deg, rng)
            if base not in bases:
                bases.append(base)
        if base.degree > budget:
            if any(b.degree <= budget for b in bases):
                continue
            break
        exp = rng.between(1, budget // base.degree)
        out.append(ElementaryDivisor(base, exp))
        budget -= base.degree * exp
        if rng.below(4) == 0:
            break
    if not out:
        out.append(ElementaryDivisor(Poly.x(K), 1))
    return out


def _int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _transpose(a: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(r) for r in zip(*a)]


def signed_permutations(s: int):
    for perm in itertools.permutations(range(s)):
        for signs in itertools.product((1, -1), repeat=s):
            yield [[signs[i] if perm[i] == j else 0 for j in range(s)] for i in range(s)]


def congruent_by_signed_permutation(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """Exhaustive search for a signed permutation H with H^T a H = b."""
    s = len(a)
    if s != len(b):
        raise ValueError("size mismatch")
    if s > CONGRUENCE_MAX_SIZE:
        raise OracleSizeError(f"congruence search limited to size {CONGRUENCE_MAX_SIZE}")
    target = [list(r) for r in b]
    for h in signed_permutations(s):
        if _int_matmul(_int_matmul(_transpose(h), a), h) == target:
            return True
    return False


def diag(entries: Sequence[int]) -> list[list[int]]:
    return [[entries[i] if i == j else 0 for j in range(len(entries))] for i in range(len(entries))]


def congruence_by_signed_permutation(d1: Sequence[int], d2: Sequence[int]) -> bool:
    """Are diag(d1) and diag(d2) congruent via a signed permutation?"""
    if len(d1) != len(d2):
        raise ValueError("size mismatch")
    return congruent_by_signed_permutation(diag(d1), diag(d2))


def u_transform(x: Sequence[Sequence[int]]) -> list[list[int]]:
    """U^T x U with U = I - sum_t e_{t,t+1}."""
    s = len(x)
    u = [[1 if i == j else (-1 if j == i + 1 else 0) for j in range(s)] for i in range(s)]
    return _int_matmul(_int_matmul(_transpose(u), x), u)


def cartan_congruent(p1: Sequence[int], p2: Sequence[int]) -> bool:
    """Congruence of the Cartan matrices of two series with equal tops, by
    diagonalising with U and searching signed permutations."""
    if len(p1) != len(p2):
        raise ValueError("series of different lengths")
    if p1[0] != p2[0]:
        raise ValueError("series must have equal tops")
    # U diagonalises the min-matrix when the series is listed increasingly
    d1 = u_transform([r[::-1] for r in cartan_matrix(p1)[::-1]])
    d2 = u_transform([r[::-1] for r in cartan_matrix(p2)[::-1]])
    for d, p in ((d1, p1), (d2, p2)):
        off = [d[i][j] for i in range(len(d)) for j in range(len(d)) if i != j]
        if any(off) or sorted(d[i][i] for i in range(len(d))) != list(h_multiset(p)):
            raise AssertionError(f"U-transform of the Cartan matrix of {p} is not diag(H)")
    return congruence_by_signed_permutation([d1[i][i] for i in range(len(d1))],
                                             [d2[i][i] for i in range(len(d2))])


# -- corpora -------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


CORPUS_FIELDS: tuple[Field, ...] = (FiniteField(2), FiniteField(5), QQ)


def roundtrip_corpus(count: int = 200, base_seed: int = 0x5EED, max_total: int = 10) -> CheckResult:
    """Construct-then-recover and commutant-dimension agreement."""
    failures = []
    for i in range(count):
        K = CORPUS_FIELDS[i % len(CORPUS_FIELDS)]
        rng = SplitMix64(base_seed + i)
        divs = random_divisor_multiset(K, rng, max_total)
        m = random_similar(divs, rng.next())
        expect = tuple(sorted(divs, key=ElementaryDivisor.sort_key))
        got = elementary_divisors(m)
        if got != expect:
            failures.append(f"case {i} over {K}: expected {[str(d) for d in expect]}, got {[str(d) for d in got]}")
            continue
        fast, slow = centralizer_dim(profile(m)), brute_centralizer_dim(m)
        if fast != slow:
            failures.append(f"case {i} over {K}: centralizer_dim {fast} != brute {slow}")
    return CheckResult("construct/recover + commutant dimension", count, failures)


def permutation_corpus(count: int = 100, base_seed: int = 0xC7C1E, max_n: int = 12) -> CheckResult:
    from .permutation import CycleType, cycle_type_divisors, permutation_matrix

    failures = []
    for i in range(count):
        rng = SplitMix64(base_seed + i)
        K = FiniteField((2, 3, 5)[i % 3])
        n = rng.between(1, max_n)
        parts = []
        while n:
            part = rng.between(1, n)
            parts.append(part)
            n -= part
        ct = CycleType(parts)
        fast = cycle_type_divisors(ct, K)
        slow = elementary_divisors(permutation_matrix(ct, K))
        if fast != slow:
            failures.append(f"{ct} over {K}: fast {[str(d) for d in fast]} vs matrix {[str(d) for d in slow]}")
    return CheckResult("cycle-type fast path vs permutation matrix", count, failures)


def decreasing_series(max_len: int, max_entry: int):
    for s in range(1, max_len + 1):
        for combo in itertools.combinations(range(max_entry, 0, -1), s):
            yield combo


def congruence_corpus(max_len: int = 3, max_entry: int = 6) -> CheckResult:
    """Cartan congruence vs equality of H-multisets, exhaustive over equal tops."""
    failures = []
    cases = 0
    series = list(decreasing_series(max_len, max_entry))
    for a in series:
        for b in series:
            if len(a) != len(b) or a[0] != b[0]:
                continue
            cases += 1
            if cartan_congruent(a, b) != (h_multiset(a) == h_multiset(b)):
                failures.append(f"{a} vs {b}")
    return CheckResult("Cartan congruence <=> equal H-multisets", cases, failures)


def run_selftest(progress: Callable[[CheckResult], None] | None = None, quick: bool = False) -> list[CheckResult]:
    checks = [
        lambda: roundtrip_corpus(40 if quick else 200),
        lambda: permutation_corpus(30 if quick else 100),
        congruence_corpus,
    ]
    results = []
    for check in checks:
        res = check()
        results.append(res)
        if progress:
            progress(res)
    return results
