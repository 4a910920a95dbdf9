"""Square Gabidulin codes over GF(q) and rank-distance utilities.

A codeword of the code with parameters (m, delta) is the m x m matrix of the
GF(q)-linear map ``x -> a_0 x + a_1 x^q + ... + a_{m-delta} x^{q^{m-delta}}``
on GF(q^m), written in the polynomial basis (1, alpha, ..., alpha^{m-1}) with
the row-vector convention: row i holds the coordinates of the image of
alpha^i.  For delta = m the codewords are the multiplication maps of GF(q^m).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, InvalidDelta, InvalidT, TooLarge
from .galois import (FieldSpec, field_of_order, find_irreducible, poly_mod, poly_mul,
                     to_digits)
from .matgfq import MatGF, rank, rank_of_array, top_rows

ENUMERATION_CAP = 1 << 20


class ExtensionField:
    """GF(q^m) as polynomials over ``base`` modulo ``modulus``.

    Elements are tuples of m base-field codes, constant term first.
    """

    def __init__(self, base: FieldSpec, modulus: Sequence[int]):
        self.base = base
        self.modulus = tuple(modulus)
        self.m = len(self.modulus) - 1

    def element(self, code: int) -> tuple[int, ...]:
        return tuple(to_digits(code, self.base.q, self.m))

    def _pad(self, poly: Sequence[int]) -> tuple[int, ...]:
        return tuple(poly) + (0,) * (self.m - len(poly))

    def add(self, u, v):
        return tuple(self.base.add(a, b) for a, b in zip(u, v))

    def mul(self, u, v):
        return self._pad(poly_mod(poly_mul(u, v, self.base), self.modulus, self.base))

    def pow(self, u, n: int):
        result = self._pad([1])
        while n:
            if n & 1:
                result = self.mul(result, u)
            u = self.mul(u, u)
            n >>= 1
        return result

    def alpha_powers(self) -> list[tuple[int, ...]]:
        alpha = self._pad([0, 1]) if self.m > 1 else self._pad([self.base.neg(self.modulus[0])])
        out = [self._pad([1])]
        for _ in range(self.m - 1):
            out.append(self.mul(out[-1], alpha))
        return out


@dataclass(frozen=True)
class MrdCode:
    """Square [m x m, delta]_q Gabidulin code."""

    field: FieldSpec
    m: int
    delta: int
    ext_modulus: tuple[int, ...]
    _images: tuple = dc_field(default=(), repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def dim(self) -> int:
        return self.m * (self.m - self.delta + 1)

    @property
    def size(self) -> int:
        return self.q ** self.dim

    @property
    def n_coeffs(self) -> int:
        return self.m - self.delta + 1

    def codeword(self, coeffs: Sequence[int]) -> MatGF:
        """Matrix of the linearized polynomial with GF(q^m) coefficients ``coeffs``.

        ``coeffs[j]`` is the integer code (base-q digits, constant first) of the
        coefficient of x^{q^j}.
        """
        if len(coeffs) != self.n_coeffs:
            raise DimensionMismatch(f"expected {self.n_coeffs} coefficients")
        ext = ExtensionField(self.field, self.ext_modulus)
        coeff_elems = [ext.element(c) for c in coeffs]
        rows = []
        for i in range(self.m):
            acc = ext.element(0)
            for j, a in enumerate(coeff_elems):
                acc = ext.add(acc, ext.mul(a, self._images[i][j]))
            rows.append(acc)
        return MatGF(self.field, np.array(rows, dtype=np.int64).reshape(self.m, self.m), cols=self.m)

    def to_json(self) -> dict:
        return {"q": self.q, "m": self.m, "delta": self.delta,
                "ext_modulus": list(self.ext_modulus)}


def gabidulin_square(m: int, delta: int, f: FieldSpec | int) -> MrdCode:
    """The square Gabidulin code with minimum rank distance ``delta``."""
    if isinstance(f, int):
        f = field_of_order(f)
    if m < 1 or not 1 <= delta <= m:
        raise InvalidDelta(f"need 1 <= delta <= m, got m={m}, delta={delta}")
    if f.q ** m > 1 << 24:
        raise TooLarge(f"GF({f.q}^{m}) is too large to tabulate")
    ext_modulus = find_irreducible(f, m)
    ext = ExtensionField(f, ext_modulus)
    basis = ext.alpha_powers()
    k = m - delta + 1
    images = tuple(tuple(ext.pow(b, f.q ** j) for j in range(k)) for b in basis)
    return MrdCode(f, m, delta, ext_modulus, images)


def coefficient_vectors(code: MrdCode) -> Iterator[tuple[int, ...]]:
    """Coefficient vectors in integer-encoding order, a_0 least significant."""
    qm = code.q ** code.m
    for idx in range(qm ** code.n_coeffs):
        yield tuple(to_digits(idx, qm, code.n_coeffs))


def enumerate_codewords(code: MrdCode, cap: int = ENUMERATION_CAP) -> list[MatGF]:
    """All codewords, zero first, ordered by coefficient-vector encoding."""
    if code.size > cap:
        raise TooLarge(f"{code.size} codewords exceed the enumeration cap {cap}")
    return [code.codeword(c) for c in coefficient_vectors(code)]


def rank_distance(a: MatGF, b: MatGF) -> int:
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} vs {b.shape}")
    return rank(a - b)


def truncate_code(codewords: Sequence[MatGF], t: int) -> list[MatGF]:
    """Top ``t`` rows of every codeword."""
    if not codewords:
        return []
    m = codewords[0].rows
    if not 1 <= t <= m:
        raise InvalidT(f"need 1 <= t <= {m}, got {t}")
    return [top_rows(c, t) for c in codewords]


def min_rank_distance(codewords: Sequence[MatGF]) -> int | None:
    """Exact minimum pairwise rank distance; None for fewer than two words."""
    if not codewords:
        return None
    shape = codewords[0].shape
    if any(c.shape != shape for c in codewords):
        raise DimensionMismatch("codewords of mixed shapes")
    f = codewords[0].field
    best = None
    for a, b in itertools.combinations(codewords, 2):
        d = rank_of_array(f, f.sub(a.data, b.data))
        if best is None or d < best:
            best = d
            if best == 0:
                break
    return best


def verify_mrd(codewords: Sequence[MatGF], delta: int) -> bool:
    """True iff every pair of distinct positions is at rank distance >= delta."""
    if not codewords:
        raise DimensionMismatch("empty code")
    shape = codewords[0].shape
    if any(c.shape != shape for c in codewords):
        raise DimensionMismatch("codewords of mixed shapes")
    if delta > min(shape):
        return len(codewords) <= 1
    d = min_rank_distance(codewords)
    return d is None or d >= delta
