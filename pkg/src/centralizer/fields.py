"""Exact ground fields: the rationals and finite fields F_p, F_{p^k}.

A field object carries all arithmetic; elements are plain Python values:

* ``Rationals``: :class:`fractions.Fraction` (always in lowest terms).
* ``FiniteField`` with ``k == 1``: ``int`` in ``range(p)``.
* ``FiniteField`` with ``k > 1``: ``tuple`` of ``k`` ints in ``range(p)``, the
  coefficient vector (constant term first) of a residue modulo ``modulus``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Iterator


class FieldError(ValueError):
    """Invalid field construction or an element that does not belong to a field."""


class FieldMismatchError(FieldError):
    """Two objects over different fields were combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    if n < 41 * 41:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _format_int_poly(coeffs: tuple[int, ...], var: str) -> str:
    """Compact rendering of a polynomial in ``var`` with small nonnegative coefficients."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


class Field:
    """Common interface of the supported exact fields."""

    characteristic: int
    degree: int

    zero: Any
    one: Any

    def is_finite(self) -> bool:
        return self.characteristic != 0

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int):
        raise NotImplementedError

    def convert(self, a):
        """Coerce ``a`` into a canonical element, raising FieldError if impossible."""
        raise NotImplementedError

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def format(self, a) -> str:
        raise NotImplementedError

    def is_integer_literal(self, a) -> bool:
        """True when ``format(a)`` needs no parentheses as a coefficient."""
        return True

    def require_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError(f"field mismatch: {self} vs {other}")

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(Field):
    characteristic: int = field(default=0, init=False)
    degree: int = field(default=1, init=False)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n: int):
        return Fraction(n)

    def convert(self, a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int) and not isinstance(a, bool):
            return Fraction(a)
        raise FieldError(f"{a!r} is not a rational number")

    def format(self, a) -> str:
        return str(a)

    def is_integer_literal(self, a) -> bool:
        return a.denominator == 1

    def __str__(self) -> str:
        return "Q"

    def to_dict(self) -> dict:
        return {"kind": "Q"}


@dataclass(frozen=True)
class FiniteField(Field):
    """F_{p^k}; for ``k > 1`` the monic irreducible ``modulus`` (coefficients
    over F_p, constant term first, leading 1 included) defines the model."""

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None
    _inverses: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if not isinstance(self.k, int) or self.k < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.k}")
        if self.k == 1:
            if self.modulus is not None:
                raise FieldError("prime field takes no modulus")
            return
        if self.modulus is None:
            raise FieldError("extension field requires a modulus; use make_extension_field")
        mod = tuple(int(c) % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {self.k}")
        if not _modulus_irreducible(self.p, mod):
            raise FieldError(f"modulus {_format_int_poly(mod, 't')} is reducible over F_{self.p}")

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    @property
    def degree(self) -> int:  # type: ignore[override]
        return self.k

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def zero(self):  # type: ignore[override]
        return 0 if self.k == 1 else (0,) * self.k

    @property
    def one(self):  # type: ignore[override]
        return 1 if self.k == 1 else (1,) + (0,) * (self.k - 1)

    @property
    def generator(self):
        """The class of ``t`` (for k == 1 there is no generator)."""
        if self.k == 1:
            raise FieldError("prime field has no generator t")
        return (0, 1) + (0,) * (self.k - 2)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def add(self, a, b):
        p = self.p
        if self.k == 1:
            return (a + b) % p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        if self.k == 1:
            return (a - b) % p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        if self.k == 1:
            return -a % p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p = self.p
        if self.k == 1:
            return a * b % p
        k = self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        mod = self.modulus
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d] % p
            if c:
                base = d - k
                for i in range(k):
                    prod[base + i] -= c * mod[i]
        return tuple(c % p for c in prod[:k])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        cached = self._inverses.get(a)
        if cached is None:
            cached = self.pow(a, self.order - 2)
            self._inverses[a] = cached
        return cached

    def from_int(self, n: int):
        if self.k == 1:
            return n % self.p
        return (n % self.p,) + (0,) * (self.k - 1)

    def convert(self, a):
        if self.k == 1:
            if isinstance(a, int) and not isinstance(a, bool):
                return a % self.p
            if isinstance(a, Fraction):
                return a.numerator * pow(a.denominator, -1, self.p) % self.p
        else:
            if isinstance(a, int) and not isinstance(a, bool):
                return self.from_int(a)
            if isinstance(a, (tuple, list)) and len(a) == self.k:
                return tuple(int(c) % self.p for c in a)
        raise FieldError(f"{a!r} is not an element of {self}")

    def frobenius(self, a):
        """a -> a^p."""
        return self.pow(a, self.p)

    def pth_root(self, a):
        """Inverse of the Frobenius map (a^(p^(k-1)))."""
        return self.pow(a, self.p ** (self.k - 1))

    def elements(self) -> Iterator:
        if self.k == 1:
            yield from range(self.p)
        else:
            for digits in product(range(self.p), repeat=self.k):
                yield tuple(reversed(digits))

    def element_index(self, a) -> int:
        if self.k == 1:
            return a
        return sum(c * self.p**i for i, c in enumerate(a))

    def format(self, a) -> str:
        if self.k == 1:
            return str(a)
        return _format_int_poly(a, "t")

    def is_integer_literal(self, a) -> bool:
        return self.k == 1 or all(c == 0 for c in a[1:])

    def __str__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, {_format_int_poly(self.modulus, 't')})"

    def to_dict(self) -> dict:
        if self.k == 1:
            return {"kind": "GF", "p": self.p, "k": 1}
        return {"kind": "GF", "p": self.p, "k": self.k, "modulus": _format_int_poly(self.modulus, "t")}


QQ = Rationals()


@lru_cache(maxsize=None)
def _modulus_irreducible(p: int, mod: tuple[int, ...]) -> bool:
    from .factor import is_irreducible
    from .poly import Poly

    return is_irreducible(Poly(FiniteField(p), mod))


@lru_cache(maxsize=None)
def make_extension_field(p: int, k: int = 1) -> FiniteField:
    """F_{p^k} modelled by the smallest monic irreducible of degree ``k``.

    Candidates ``x^k + c_{k-1} x^{k-1} + ... + c_0`` are scanned in increasing
    order of ``(c_{k-1}, ..., c_0)``; the first irreducible one is the modulus.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError(f"extension degree must be >= 1, got {k}")
    if k == 1:
        return FiniteField(p)
    for code in range(p**k):
        low = tuple((code // p**i) % p for i in range(k))
        mod = low + (1,)
        if low[0] == 0:
            continue
        if _modulus_irreducible(p, mod):
            return FiniteField(p, k, mod)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_from_dict(d: dict) -> Field:
    """Inverse of ``Field.to_dict``; the matrix-file ``field`` object."""
    kind = d.get("kind")
    if kind == "Q":
        return QQ
    if kind == "GF":
        p = d.get("p")
        k = d.get("k", 1)
        if not isinstance(p, int) or not isinstance(k, int):
            raise FieldError("GF field needs integer 'p' and 'k'")
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        mod = d.get("modulus")
        if mod is None or k == 1:
            if mod is not None and k == 1:
                raise FieldError("prime field takes no modulus")
            return make_extension_field(p, k)
        return FiniteField(p, k, _parse_modulus(mod, p, k))
    raise FieldError(f"unknown field kind {kind!r}")


def _parse_modulus(text: str, p: int, k: int) -> tuple[int, ...]:
    from .parsing import parse_int_poly

    coeffs = parse_int_poly(text, "t")
    coeffs = [c % p for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) != k + 1:
        raise FieldError(f"modulus {text!r} does not have degree {k} over F_{p}")
    return tuple(coeffs)


def make_field(char: int, ext: int = 1) -> Field:
    """``char == 0`` gives Q; otherwise F_{char^ext}."""
    if char == 0:
        if ext != 1:
            raise FieldError("characteristic 0 takes no extension degree")
        return QQ
    return make_extension_field(char, ext)
