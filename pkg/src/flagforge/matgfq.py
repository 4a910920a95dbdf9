"""Dense matrices over GF(q) with echelon forms and block assembly."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, FormatError, NotInvertible
from .galois import FieldSpec


class MatGF:
    """An immutable rows x cols matrix of element codes over ``field``."""

    __slots__ = ("field", "data", "_key")

    def __init__(self, field: FieldSpec, data, cols: int | None = None):
        arr = np.array(data, dtype=np.int64)
        if arr.size == 0:
            rows = arr.shape[0] if arr.ndim >= 1 else 0
            arr = arr.reshape(rows, cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0))
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d grid, got shape {arr.shape}")
        if cols is not None and arr.shape[1] != cols:
            raise DimensionMismatch(f"expected {cols} columns, got {arr.shape[1]}")
        if not field.contains(arr):
            raise FieldMismatch(f"entries outside GF({field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr
        self._key = None

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __repr__(self):
        return f"MatGF(GF({self.field.q}), {self.tolist()})"

    def _check(self, other: "MatGF"):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def __eq__(self, other):
        if not isinstance(other, MatGF):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(
            np.array_equal(self.data, other.data))

    def __hash__(self):
        if self._key is None:
            self._key = hash((self.field, self.shape, self.data.tobytes()))
        return self._key

    def __add__(self, other: "MatGF") -> "MatGF":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return MatGF(self.field, self.field.add(self.data, other.data))

    def __sub__(self, other: "MatGF") -> "MatGF":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return MatGF(self.field, self.field.sub(self.data, other.data))

    def __neg__(self) -> "MatGF":
        return MatGF(self.field, self.field.neg(self.data))

    def scale(self, c: int) -> "MatGF":
        return MatGF(self.field, self.field.mul(self.data, c))

    def __matmul__(self, other: "MatGF") -> "MatGF":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        f = self.field
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        for j in range(self.cols):
            out = f.add(out, f.mul(self.data[:, j:j + 1], other.data[j:j + 1, :]))
        return MatGF(f, out)

    def is_zero(self) -> bool:
        return not self.data.any()

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "data": self.tolist()}

    @classmethod
    def from_json(cls, field: FieldSpec, doc: dict) -> "MatGF":
        try:
            rows, cols, data = int(doc["rows"]), int(doc["cols"]), doc["data"]
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad matrix document: {exc}") from exc
        if not isinstance(data, list) or len(data) != rows or any(
                not isinstance(r, list) or len(r) != cols for r in data):
            raise FormatError(f"matrix data does not match declared shape {rows}x{cols}")
        if any(not isinstance(x, int) or isinstance(x, bool) for r in data for x in r):
            raise FormatError("matrix entries must be integers")
        return cls(field, data, cols=cols)


def identity(field: FieldSpec, n: int) -> MatGF:
    return MatGF(field, np.eye(n, dtype=np.int64), cols=n)


def zeros(field: FieldSpec, rows: int, cols: int) -> MatGF:
    return MatGF(field, np.zeros((rows, cols), dtype=np.int64), cols=cols)


@dataclass(frozen=True)
class EchelonResult:
    matrix: MatGF
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _eliminate(f: FieldSpec, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination in place; returns the nonzero rows and pivots."""
    rows, cols = a.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = f.mul(a[r], f.inv(lead))
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = f.sub(a[hit], f.mul(col[hit, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_of_array(f: FieldSpec, data: np.ndarray) -> int:
    """Rank of a raw code array (no echelon form kept)."""
    a = np.array(data, dtype=np.int64)
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        below = a[r + 1:, c]
        hit = np.flatnonzero(below)
        if hit.size:
            factors = f.mul(below[hit], f.inv(int(a[r, c])))
            idx = hit + r + 1
            a[idx] = f.sub(a[idx], f.mul(factors[:, None], a[r][None, :]))
        r += 1
    return r


def rref(m: MatGF) -> EchelonResult:
    """Reduced row echelon form with zero rows dropped."""
    out, pivots = _eliminate(m.field, m.data.copy())
    return EchelonResult(MatGF(m.field, out, cols=m.cols), tuple(pivots))


def reverse_columns(m: MatGF) -> MatGF:
    return MatGF(m.field, m.data[:, ::-1], cols=m.cols)


def inv_rref(m: MatGF) -> EchelonResult:
    """Inverse reduced row echelon form: rref conjugated by column reversal.

    Pivots are reported in the original column coordinates, in row order
    (so they decrease down the rows).
    """
    res = rref(reverse_columns(m))
    n = m.cols
    return EchelonResult(reverse_columns(res.matrix), tuple(n - 1 - c for c in res.pivots))


def rank(m: MatGF) -> int:
    return rank_of_array(m.field, m.data)


def is_invertible(m: MatGF) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def inverse(m: MatGF) -> MatGF:
    """Inverse of a square matrix via elimination on [M | I]."""
    if m.rows != m.cols:
        raise NotInvertible(f"{m.shape} is not square")
    n = m.rows
    aug = np.hstack([m.data, np.eye(n, dtype=np.int64)])
    red, pivots = _eliminate(m.field, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise NotInvertible("matrix is singular")
    return MatGF(m.field, red[:, n:], cols=n)


def stack(a: MatGF, b: MatGF) -> MatGF:
    a._check(b)
    if a.cols != b.cols:
        raise DimensionMismatch(f"cannot stack {a.shape} on {b.shape}")
    return MatGF(a.field, np.vstack([a.data, b.data]), cols=a.cols)


def hstack(a: MatGF, b: MatGF) -> MatGF:
    a._check(b)
    if a.rows != b.rows:
        raise DimensionMismatch(f"cannot place {a.shape} beside {b.shape}")
    return MatGF(a.field, np.hstack([a.data, b.data]), cols=a.cols + b.cols)


def top_rows(m: MatGF, j: int) -> MatGF:
    """The top ``j`` rows of ``m``; requires 1 <= j <= rows."""
    if not 1 <= j <= m.rows:
        raise DimensionMismatch(f"top_rows: j={j} outside [1, {m.rows}]")
    return MatGF(m.field, m.data[:j], cols=m.cols)


def submatrix(m: MatGF, rows: slice | Sequence[int] = slice(None),
              cols: slice | Sequence[int] = slice(None)) -> MatGF:
    data = m.data[rows][:, cols]
    return MatGF(m.field, data, cols=data.shape[1])


def block_assemble(layout: Sequence[Sequence[MatGF]]) -> MatGF:
    """Concatenate a grid of blocks after checking heights and widths agree.

    Blocks may have zero rows or zero columns; every row of the grid must
    have a common height and every column of the grid a common width.
    """
    if not layout or not layout[0]:
        raise DimensionMismatch("empty layout")
    ncols = len(layout[0])
    if any(len(row) != ncols for row in layout):
        raise DimensionMismatch("ragged block layout")
    field = layout[0][0].field
    widths = [layout[0][j].cols for j in range(ncols)]
    for i, row in enumerate(layout):
        height = row[0].rows
        for j, blk in enumerate(row):
            if blk.field != field:
                raise FieldMismatch("blocks over different fields")
            if blk.rows != height:
                raise DimensionMismatch(f"block ({i},{j}) height {blk.rows} != {height}")
            if blk.cols != widths[j]:
                raise DimensionMismatch(f"block ({i},{j}) width {blk.cols} != {widths[j]}")
    data = np.vstack([np.hstack([blk.data for blk in row]) if row[0].rows else
                      np.zeros((0, sum(widths)), dtype=np.int64) for row in layout])
    return MatGF(field, data, cols=sum(widths))


def random_invertible(field: FieldSpec, n: int, rng: np.random.Generator) -> MatGF:
    """Random invertible n x n matrix by rejection sampling."""
    while True:
        data = rng.integers(0, field.q, size=(n, n))
        if rank_of_array(field, data) == n:
            return MatGF(field, data, cols=n)
