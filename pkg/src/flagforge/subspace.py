"""Canonical subspaces of GF(q)^n, the subspace metric and identifying vectors."""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import AmbientMismatch, FormatError, LengthMismatch, ZeroMatrix
from .galois import FieldSpec
from .matgfq import MatGF, inv_rref, rank_of_array, rref, submatrix


class Subspace:
    """Row space of a matrix, stored by its RREF basis.

    Equality and hashing use the RREF basis only.  The inverse RREF basis is
    computed on first access and memoised.
    """

    def __init__(self, basis: MatGF, pivots: tuple[int, ...]):
        # callers go through subspace_from_matrix, which canonicalises
        self.basis = basis
        self.pivots = pivots

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def n(self) -> int:
        return self.basis.cols

    @property
    def dim(self) -> int:
        return self.basis.rows

    @functools.cached_property
    def _inverse(self):
        return inv_rref(self.basis)

    @property
    def inverse_basis(self) -> MatGF:
        return self._inverse.matrix

    @property
    def inverse_pivots(self) -> tuple[int, ...]:
        return self._inverse.pivots

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim}, basis={self.basis.tolist()})"

    def __contains__(self, vec) -> bool:
        v = np.asarray(vec, dtype=np.int64).reshape(1, -1)
        return rank_of_array(self.field, np.vstack([self.basis.data, v])) == self.dim

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return intersection_dim(self, other) == self.dim

    def to_json(self) -> dict:
        return {"n": self.n, "dim": self.dim, "basis": self.basis.to_json()}

    @classmethod
    def from_json(cls, field: FieldSpec, doc: dict) -> "Subspace":
        try:
            m = MatGF.from_json(field, doc["basis"])
            n, dim = int(doc["n"]), int(doc["dim"])
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad subspace document: {exc}") from exc
        u = subspace_from_matrix(m)
        if u.n != n or u.dim != dim or u.basis != m:
            raise FormatError("subspace basis is not a canonical RREF of the declared size")
        return u


def subspace_from_matrix(m: MatGF) -> Subspace:
    """Canonical subspace spanned by the rows of ``m``."""
    res = rref(m)
    if res.rank == 0:
        raise ZeroMatrix("a zero matrix spans no subspace")
    return Subspace(res.matrix, res.pivots)


def full_space(field: FieldSpec, n: int) -> Subspace:
    return subspace_from_matrix(MatGF(field, np.eye(n, dtype=np.int64), cols=n))


def _check_ambient(u: Subspace, v: Subspace):
    if u.n != v.n or u.field != v.field:
        raise AmbientMismatch(f"GF({u.field.q})^{u.n} vs GF({v.field.q})^{v.n}")


def sum_dim(u: Subspace, v: Subspace) -> int:
    _check_ambient(u, v)
    return rank_of_array(u.field, np.vstack([u.basis.data, v.basis.data]))


def intersection_dim(u: Subspace, v: Subspace) -> int:
    return u.dim + v.dim - sum_dim(u, v)


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """dim U + dim V - 2 dim(U & V), via the rank of the stacked bases."""
    return 2 * sum_dim(u, v) - u.dim - v.dim


@dataclass(frozen=True)
class IdVector:
    bits: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


def _pivot_vector(n: int, pivots) -> IdVector:
    bits = [0] * n
    for c in pivots:
        bits[c] = 1
    return IdVector(tuple(bits))


def identifying_vector(u: Subspace) -> IdVector:
    return _pivot_vector(u.n, u.pivots)


def inverse_identifying_vector(u: Subspace) -> IdVector:
    return _pivot_vector(u.n, u.inverse_pivots)


def hamming_distance(a: IdVector, b: IdVector) -> int:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)}")
    return sum(x != y for x, y in zip(a.bits, b.bits))


def pivot_complement(u: Subspace, variant: str = "rref") -> MatGF:
    """The echelon basis with its pivot columns deleted (column order kept)."""
    if variant == "rref":
        basis, pivots = u.basis, u.pivots
    elif variant == "inverse":
        basis, pivots = u.inverse_basis, u.inverse_pivots
    else:
        raise ValueError(f"unknown variant {variant!r}")
    keep = [c for c in range(u.n) if c not in set(pivots)]
    return submatrix(basis, cols=keep)


def random_subspace(field: FieldSpec, n: int, k: int, rng: np.random.Generator) -> Subspace:
    """Uniform-ish random k-dimensional subspace: resample until full rank."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    while True:
        data = rng.integers(0, field.q, size=(k, n))
        if rank_of_array(field, data) == k:
            return subspace_from_matrix(MatGF(field, data, cols=n))
