"""Dense exact square matrices: rank, characteristic polynomial, f(m)."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .fields import Field, FieldMismatchError
from .poly import Poly


class Matrix:
    """Immutable square matrix over an exact field, stored row-major."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        rows = tuple(tuple(field.convert(a) for a in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("empty matrix")
        for r in rows:
            if len(r) != n:
                raise ValueError(f"matrix is not square: {n} rows but a row of length {len(r)}")
        self.field = field
        self.n = n
        self.rows = rows

    @classmethod
    def _raw(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        obj = cls.__new__(cls)
        obj.field = field
        obj.n = len(rows)
        obj.rows = tuple(tuple(r) for r in rows)
        return obj

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, n: int) -> "Matrix":
        return cls._raw(field, [[field.zero] * n for _ in range(n)])

    @classmethod
    def companion(cls, f: Poly) -> "Matrix":
        """Companion matrix of a monic f (subdiagonal ones, last column -coeffs)."""
        if not f.is_monic() or f.degree < 1:
            raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
        K = f.field
        n = f.degree
        rows = [[K.zero] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = K.one
        for i in range(n):
            rows[i][n - 1] = K.neg(f.coeffs[i])
        return cls._raw(K, rows)

    @classmethod
    def jordan_block(cls, field: Field, size: int, eigenvalue=0) -> "Matrix":
        lam = field.convert(eigenvalue)
        rows = [[field.zero] * size for _ in range(size)]
        for i in range(size):
            rows[i][i] = lam
            if i + 1 < size:
                rows[i][i + 1] = field.one
        return cls._raw(field, rows)

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        K = blocks[0].field
        n = sum(b.n for b in blocks)
        rows = [[K.zero] * n for _ in range(n)]
        off = 0
        for b in blocks:
            if b.field != K:
                raise FieldMismatchError(f"field mismatch: {b.field} vs {K}")
            for i, row in enumerate(b.rows):
                rows[off + i][off:off + b.n] = row
            off += b.n
        return cls._raw(K, rows)

    def _check(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"field mismatch: {self.field} vs {other.field}")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        add = self.field.add
        return Matrix._raw(self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        sub = self.field.sub
        return Matrix._raw(self.field, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "Matrix":
        mul = self.field.mul
        return Matrix._raw(self.field, [[mul(c, a) for a in r] for r in self.rows])

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        K = self.field
        if K.characteristic == 0 or K.degree == 1:
            # native operators: Fraction arithmetic, or ints reduced at the end
            p = K.characteristic
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                nz = [(k, a) for k, a in enumerate(r) if a]
                row = []
                for col in cols:
                    s = sum(a * col[k] for k, a in nz)
                    row.append(s % p if p else (s if isinstance(s, Fraction) else Fraction(s)))
                out.append(row)
            return Matrix._raw(K, out)
        add, mul, zero = K.add, K.mul, K.zero
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a != zero]
            row = []
            for col in cols:
                s = zero
                for k, a in nz:
                    b = col[k]
                    if b != zero:
                        s = add(s, mul(a, b))
                row.append(s)
            out.append(row)
        return Matrix._raw(K, out)

    def __pow__(self, e: int) -> "Matrix":
        result = Matrix.identity(self.field, self.n)
        for _ in range(e):
            result = result * self
        return result

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, list(zip(*self.rows)))

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(a == z for r in self.rows for a in r)

    def rank(self) -> int:
        return rank(self)

    def nullity(self) -> int:
        return self.n - rank(self)

    def inverse(self) -> "Matrix":
        K = self.field
        n = self.n
        aug = [list(r) + [K.one if i == j else K.zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((i for i in range(col, n) if not K.is_zero(aug[i][col])), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = K.inv(aug[col][col])
            aug[col] = [K.mul(inv, a) for a in aug[col]]
            for i in range(n):
                if i != col and not K.is_zero(aug[i][col]):
                    c = aug[i][col]
                    aug[i] = [K.sub(a, K.mul(c, b)) for a, b in zip(aug[i], aug[col])]
        return Matrix._raw(K, [r[n:] for r in aug])

    def __str__(self) -> str:
        fmt = self.field.format
        return "\n".join("[" + ", ".join(fmt(a) for a in r) + "]" for r in self.rows)

    def __repr__(self) -> str:
        return f"Matrix({self.n}x{self.n} over {self.field})"


def _rank_rows_q(rows: list[list[Fraction]]) -> int:
    # clear denominators row-wise, then fraction-free elimination with content removal
    work = []
    for r in rows:
        den = reduce(lcm, (a.denominator for a in r), 1)
        ints = [int(a * den) for a in r]
        if any(ints):
            work.append(ints)
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        a = prow[col]
        for i in range(rank + 1, len(work)):
            b = work[i][col]
            if b:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                new = [fa * x - fb * y for x, y in zip(work[i], prow)]
                c = reduce(gcd, new, 0)
                if c > 1:
                    new = [x // c for x in new]
                work[i] = new
        rank += 1
        if rank == len(work):
            break
    return rank


def _rank_rows_field(K: Field, rows: list[list]) -> int:
    work = [list(r) for r in rows]
    zero = K.zero
    rank = 0
    ncols = len(rows[0]) if rows else 0
    prime = K.characteristic if K.degree == 1 else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col] != zero), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        inv = K.inv(prow[col])
        for i in range(rank + 1, len(work)):
            b = work[i][col]
            if b != zero:
                if prime:
                    c = b * inv % prime
                    work[i] = [(x - c * y) % prime for x, y in zip(work[i], prow)]
                else:
                    c = K.mul(b, inv)
                    work[i] = [K.sub(x, K.mul(c, y)) for x, y in zip(work[i], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


def rank_of_rows(field: Field, rows: list[list]) -> int:
    """Rank of a (possibly rectangular) list of rows."""
    if not rows:
        return 0
    if field.characteristic == 0:
        return _rank_rows_q(rows)
    return _rank_rows_field(field, rows)


def rank(m: Matrix) -> int:
    return rank_of_rows(m.field, [list(r) for r in m.rows])


def nullity(m: Matrix) -> int:
    """n - rank(m)."""
    return m.n - rank(m)


def hessenberg(m: Matrix) -> list[list]:
    """Upper Hessenberg matrix similar to m (elimination by similarity transforms)."""
    K = m.field
    n = m.n
    h = [list(r) for r in m.rows]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if not K.is_zero(h[i][j])), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for r in h:
                r[piv], r[j + 1] = r[j + 1], r[piv]
        inv = K.inv(h[j + 1][j])
        for i in range(j + 2, n):
            c = h[i][j]
            if K.is_zero(c):
                continue
            u = K.mul(c, inv)
            # row_i -= u * row_{j+1}; col_{j+1} += u * col_i
            h[i] = [K.sub(a, K.mul(u, b)) for a, b in zip(h[i], h[j + 1])]
            for r in h:
                r[j + 1] = K.add(r[j + 1], K.mul(u, r[i]))
    return h


def char_poly(m: Matrix) -> Poly:
    """det(x I - m), via Hessenberg reduction and the leading-minor recurrence."""
    K = m.field
    h = hessenberg(m)
    n = m.n
    x = Poly.x(K)
    polys = [Poly.one(K)]
    for k in range(n):
        pk = (x - h[k][k]) * polys[k]
        prod = K.one
        for i in range(k - 1, -1, -1):
            prod = K.mul(prod, h[i + 1][i])
            if K.is_zero(prod):
                break
            pk = pk - polys[i].scale(K.mul(prod, h[i][k]))
        polys.append(pk)
    return polys[n]


def eval_poly_at_matrix(f: Poly, m: Matrix) -> Matrix:
    """f(m) by Horner's scheme."""
    if f.field != m.field:
        raise FieldMismatchError(f"field mismatch: {f.field} vs {m.field}")
    K = m.field
    result = Matrix.zeros(K, m.n)
    ident = Matrix.identity(K, m.n)
    for c in reversed(f.coeffs):
        result = result * m + ident.scale(c)
    return result
