"""Dense univariate polynomials over an exact field."""
from __future__ import annotations

from typing import Iterable, Sequence

from .fields import Field, FieldMismatchError


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of ``x^i``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        cs = [field.convert(c) for c in coeffs]
        zero = field.zero
        while cs and cs[-1] == zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, field: Field, coeffs: list) -> "Poly":
        # coeffs are already canonical elements; only trim
        zero = field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls._raw(field, [field.zero, field.one])

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, [c])

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls._raw(field, [field.one])

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls._raw(field, [])

    @classmethod
    def monomial(cls, field: Field, degree: int, c=None) -> "Poly":
        c = field.one if c is None else field.convert(c)
        return cls._raw(field, [field.zero] * degree + [c])

    @classmethod
    def from_roots(cls, field: Field, roots: Sequence) -> "Poly":
        result = cls.one(field)
        for r in roots:
            result = result * cls._raw(field, [field.neg(field.convert(r)), field.one])
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    @property
    def lc(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        if self.is_monic():
            return self
        return self.scale(self.field.inv(self.lc))

    def scale(self, c) -> "Poly":
        K = self.field
        return Poly._raw(K, [K.mul(c, a) for a in self.coeffs])

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"field mismatch: {self.field} vs {other.field}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly(self.field, [other])

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        K = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = K.add(out[i], c)
        return Poly._raw(K, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        K = self.field
        return Poly._raw(K, [K.neg(c) for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(self.field.convert(other))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(self.field, [])
        K = self.field
        add, mul, zero = K.add, K.mul, K.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(K, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        K = self.field
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly._raw(K, []), self
        inv_lc = K.inv(other.lc)
        b = other.coeffs
        quot = [K.zero] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == K.zero:
                continue
            q = K.mul(c, inv_lc)
            quot[i - db] = q
            shift = i - db
            for j in range(db + 1):
                rem[shift + j] = K.sub(rem[shift + j], K.mul(q, b[j]))
        return Poly._raw(K, quot), Poly._raw(K, rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def __call__(self, a):
        """Evaluate at a field element (Horner)."""
        K = self.field
        acc = K.zero
        for c in reversed(self.coeffs):
            acc = K.add(K.mul(acc, a), c)
        return acc

    def compose(self, other: "Poly") -> "Poly":
        self._check(other)
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def derivative(self) -> "Poly":
        K = self.field
        return Poly._raw(K, [K.mul(K.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def sort_key(self) -> tuple:
        """Canonical order: degree, then coefficient strings from the top down."""
        fmt = self.field.format
        return (self.degree, tuple(fmt(c) for c in reversed(self.coeffs)))

    def __lt__(self, other: "Poly") -> bool:
        return self.sort_key() < other.sort_key()

    def num_terms(self) -> int:
        return sum(1 for c in self.coeffs if c != self.field.zero)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, {self.field})"


def format_poly(f: Poly, var: str = "x") -> str:
    """Canonical string: ``x^3 + 2*x - 1/2``; ``x^2 + (t+1)*x + 2`` over F_{p^k}."""
    K = f.field
    if f.is_zero():
        return "0"
    parts: list[tuple[str, str]] = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == K.zero:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        sign = "+"
        if K.characteristic == 0 and c < 0:
            sign, c = "-", -c
        s = K.format(c)
        if K.characteristic != 0 and not K.is_integer_literal(c) and "+" in s:
            s = f"({s})"
        if not mono:
            term = s
        elif c == K.one:
            term = mono
        else:
            term = f"{s}*{mono}"
        parts.append((sign, term))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.field != b.field:
        raise FieldMismatchError(f"field mismatch: {a.field} vs {b.field}")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s*a + t*b = g, g monic."""
    K = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(K), Poly.zero(K)
    t0, t1 = Poly.zero(K), Poly.one(K)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = K.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def pow_mod(base: Poly, e: int, modulus: Poly) -> Poly:
    result = Poly.one(base.field)
    base = base % modulus
    while e:
        if e & 1:
            result = result * base % modulus
        e >>= 1
        if e:
            base = base * base % modulus
    return result


def poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(poly_gcd(a, b)).monic()
