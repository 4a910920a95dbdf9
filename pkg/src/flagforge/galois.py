"""Arithmetic in GF(p^e).

Elements are plain integers in ``[0, q)``: the base-p digits of the code are
the polynomial coordinates of the element, constant term first.  All
arithmetic methods on :class:`FieldSpec` accept either Python ints or numpy
integer arrays and broadcast like numpy ufuncs.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import DivisionByZero, FieldMismatch, FormatError, NotPrime, TooLarge

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``q == p**e``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise NotPrime(f"{p ** e * q} is not a prime power")
    return p, e


def to_digits(code: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        code, d = divmod(code, base)
        out.append(d)
    return out


def from_digits(digits: Sequence[int], base: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * base + int(d)
    return code


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^e) defined by a monic irreducible ``modulus``.

    ``modulus`` holds e+1 coefficients in GF(p), constant term first.
    """

    p: int
    e: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if not is_prime(self.p):
            raise NotPrime(f"characteristic {self.p} is not prime")
        if self.e < 1:
            raise FormatError("extension degree must be >= 1")
        if self.p ** self.e > MAX_ORDER:
            raise TooLarge(f"GF({self.p}^{self.e}) exceeds the order cap {MAX_ORDER}")
        if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
            raise FormatError(f"modulus {self.modulus} is not monic of degree {self.e}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise FormatError(f"modulus {self.modulus} has coefficients outside GF({self.p})")
        if self.e > 1 and not is_irreducible(self.modulus, prime_field(self.p)):
            raise FormatError(f"modulus {self.modulus} is reducible over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __repr__(self):
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    # -- encoding ---------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(to_digits(int(a), self.p, self.e))

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e:
            raise FormatError("too many coordinates")
        return from_digits([int(c) % self.p for c in coeffs], self.p)

    def elements(self) -> range:
        return range(self.q)

    def contains(self, a) -> bool:
        arr = np.asarray(a)
        return bool(np.all((arr >= 0) & (arr < self.q)))

    def element(self, a: int) -> "FieldElement":
        if not 0 <= int(a) < self.q:
            raise FieldMismatch(f"{a} is not an element code of GF({self.q})")
        return FieldElement(self, int(a))

    # -- arithmetic -------------------------------------------------------

    @property
    def _t(self) -> "_Tables":
        return _tables(self)

    def add(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            if self.p == 2:
                return a ^ b
            if self.e == 1:
                return (a + b) % self.p
            return self._t.add_list(a, b)
        a, b = np.asarray(a), np.asarray(b)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.e == 1:
            return (a + b) % self.p
        t = self._t
        return ((t.digits[a] + t.digits[b]) % self.p) @ t.weights

    def neg(self, a):
        if self.p == 2:
            return a
        if isinstance(a, int):
            return self._t.neg_list[a]
        return self._t.neg[np.asarray(a)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            if self.e == 1:
                return a * b % self.p
            if a == 0 or b == 0:
                return 0
            t = self._t
            return t.exp_list[t.log_list[a] + t.log_list[b]]
        a, b = np.asarray(a), np.asarray(b)
        if self.e == 1:
            return a * b % self.p
        t = self._t
        out = t.exp[t.log[a] + t.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        if isinstance(a, int):
            if a == 0:
                raise DivisionByZero("0 has no inverse")
            t = self._t
            return t.exp_list[(self.q - 1 - t.log_list[a]) % (self.q - 1)]
        a = np.asarray(a)
        if np.any(a == 0):
            raise DivisionByZero("0 has no inverse")
        t = self._t
        return t.exp[(self.q - 1 - t.log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        a = int(a)
        if a == 0:
            if n < 0:
                raise DivisionByZero("0 has no inverse")
            return 1 if n == 0 else 0
        t = self._t
        return t.exp_list[(t.log_list[a] * n) % (self.q - 1)]

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, doc: dict) -> "FieldSpec":
        try:
            return cls(int(doc["p"]), int(doc["e"]), tuple(doc["modulus"]))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad field document: {exc}") from exc


@dataclass(frozen=True)
class FieldElement:
    """An element of ``field`` with operator overloads, for interactive use."""

    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other.value
        return self.field.element(other).value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElement({self.value} in GF({self.field.q}))"


class _Tables:
    """Digit, negation and log/antilog tables for one field."""

    def __init__(self, f: FieldSpec):
        p, e, q = f.p, f.e, f.q
        self.p, self.e = p, e
        codes = np.arange(q, dtype=np.int64)
        self.weights = p ** np.arange(e, dtype=np.int64)
        self.digits = (codes[:, None] // self.weights[None, :]) % p
        self.neg = ((-self.digits) % p) @ self.weights
        self.neg_list = self.neg.tolist()

        # multiplication by x on every element at once
        top = self.digits[:, -1]
        shifted = np.zeros_like(self.digits)
        shifted[:, 1:] = self.digits[:, :-1]
        red = np.asarray(f.modulus[:-1], dtype=np.int64)
        times_x = ((shifted - top[:, None] * red[None, :]) % p) @ self.weights

        exp = None
        for g in range(1, q):
            g_digits = to_digits(g, p, e)
            acc = np.zeros_like(self.digits)
            cur = codes
            for gi in g_digits:
                acc = (acc + gi * self.digits[cur]) % p
                cur = times_x[cur]
            mul_g = (acc @ self.weights).tolist()
            powers = [1]
            x = mul_g[1]
            while x != 1:
                powers.append(x)
                x = mul_g[x]
            if len(powers) == q - 1:
                exp = powers
                break
        assert exp is not None, "no primitive element found"
        self.primitive = exp[1] if q > 2 else 1
        self.exp_list = exp + exp
        self.exp = np.asarray(self.exp_list, dtype=np.int64)
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        self.log_list = log
        self.log = np.asarray(log, dtype=np.int64)

    def add_list(self, a: int, b: int) -> int:
        p = self.p
        out, w = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out


@functools.lru_cache(maxsize=None)
def _tables(f: FieldSpec) -> _Tables:
    return _Tables(f)


# -- polynomials over a FieldSpec (coefficient lists, constant term first) ----

def poly_trim(a: Sequence[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], b: Sequence[int], f: FieldSpec) -> list[int]:
    """Remainder of ``a`` modulo the nonzero polynomial ``b``."""
    a, b = poly_trim(a), poly_trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    lead_inv = f.inv(b[-1])
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = f.mul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = f.sub(a[shift + i], f.mul(c, bi))
        a = poly_trim(a)
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], f: FieldSpec) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(ai, bj))
    return poly_trim(out)


def monic_polys(degree: int, f: FieldSpec) -> Iterator[list[int]]:
    """All monic polynomials of ``degree`` over ``f`` in integer-encoding order."""
    for low in range(f.q ** degree):
        yield to_digits(low, f.q, degree) + [1]


def is_irreducible(poly: Sequence[int], f: FieldSpec) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = poly_trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(d, f):
            if not poly_mod(poly, g, f):
                return False
    return True


def find_irreducible(f: FieldSpec, degree: int) -> tuple[int, ...]:
    """The monic irreducible of ``degree`` over ``f`` with the smallest encoding."""
    for cand in monic_polys(degree, f):
        if is_irreducible(cand, f):
            return tuple(cand)
    raise AssertionError("irreducible polynomials exist in every degree")


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> FieldSpec:
    return FieldSpec(p, 1, (0, 1))


@functools.lru_cache(maxsize=None)
def field_make(p: int, e: int = 1) -> FieldSpec:
    """Build GF(p^e) using the smallest-encoding monic irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** e > MAX_ORDER:
        raise TooLarge(f"q = {p}^{e} exceeds the cap {MAX_ORDER}")
    if e == 1:
        return prime_field(p)
    return FieldSpec(p, e, find_irreducible(prime_field(p), e))


def field_of_order(q: int) -> FieldSpec:
    p, e = prime_power(q)
    return field_make(p, e)


def gf_add(a: int, b: int, f: FieldSpec) -> int:
    return f.add(a, b)


def gf_neg(a: int, f: FieldSpec) -> int:
    return f.neg(a)


def gf_mul(a: int, b: int, f: FieldSpec) -> int:
    return f.mul(a, b)


def gf_inv(a: int, f: FieldSpec) -> int:
    return f.inv(a)


def gf_pow(a: int, n: int, f: FieldSpec) -> int:
    return f.pow(a, n)
