"""Flags, flag codes, and the MRD-based optimum distance flag code construction.

Write ``n = (a+1)k + r`` with ``0 <= r < k``.  Every codeword of the
construction is the flag cut from the top rows of an invertible n x n matrix.
The matrices come from five templates:

* ``D``      one per nonzero codeword of the square MRD code of side n-k,
* ``G<i>``   one per nonzero codeword of the MRD code of side n-(i+2)k,
             for 0 <= i <= a-2,
* ``O<i>``   the zero codeword of that same code,
* ``M(a)``   and ``M(a+1)``, two fixed permutation matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (BadParams, BadTypeSet, FormatError, InternalAssert, NotInvertible,
                     TypeMismatch)
from .galois import FieldSpec, field_of_order
from .matgfq import (MatGF, block_assemble, identity, is_invertible, rank, rank_of_array,
                     top_rows, zeros)
from .rankmetric import enumerate_codewords, gabidulin_square
from .subspace import Subspace, intersection_dim, subspace_distance, subspace_from_matrix

FORMAT = "flagforge/1"


@dataclass(frozen=True)
class FlagType:
    n: int
    ticks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ticks", tuple(int(t) for t in self.ticks))
        if not self.ticks:
            raise BadTypeSet("a flag type needs at least one dimension")
        if any(b <= a for a, b in zip(self.ticks, self.ticks[1:])):
            raise BadTypeSet(f"type {self.ticks} is not strictly increasing")
        if not 0 < self.ticks[0] or not self.ticks[-1] < self.n:
            raise BadTypeSet(f"type {self.ticks} must lie strictly between 0 and {self.n}")

    def __len__(self):
        return len(self.ticks)

    def __iter__(self):
        return iter(self.ticks)


@dataclass(frozen=True)
class Flag:
    """A nested chain of subspaces; ``generator`` is the matrix it was cut from."""

    type: FlagType
    subspaces: tuple[Subspace, ...]
    generator: MatGF | None = dc_field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "subspaces", tuple(self.subspaces))
        if len(self.subspaces) != len(self.type.ticks):
            raise TypeMismatch("one subspace per tick required")
        for t, u in zip(self.type.ticks, self.subspaces):
            if u.n != self.type.n or u.dim != t:
                raise TypeMismatch(f"subspace of dim {u.dim} in GF(q)^{u.n} at tick {t}")
        for small, big in zip(self.subspaces, self.subspaces[1:]):
            if intersection_dim(small, big) != small.dim:
                raise TypeMismatch("flag subspaces are not nested")

    @property
    def field(self) -> FieldSpec:
        return self.subspaces[0].field

    def __getitem__(self, i: int) -> Subspace:
        return self.subspaces[i]


@dataclass(frozen=True)
class Provenance:
    family: str
    index: int

    def to_json(self) -> dict:
        return {"family": self.family, "index": self.index}


@dataclass(frozen=True)
class FlagCode:
    field: FieldSpec
    type: FlagType
    flags: tuple[Flag, ...]
    k: int | None = None
    provenance: tuple[Provenance, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "flags", tuple(self.flags))
        if self.provenance is not None:
            object.__setattr__(self, "provenance", tuple(self.provenance))
            if len(self.provenance) != len(self.flags):
                raise BadParams("one provenance record per flag required")
        for fl in self.flags:
            if fl.type != self.type or fl.field != self.field:
                raise TypeMismatch("all flags must share the code's type and field")
        if len(set(self.flags)) != len(self.flags):
            raise BadParams("duplicate flags in code")

    @property
    def n(self) -> int:
        return self.type.n

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def params(self) -> dict:
        out = {"q": self.q, "n": self.n, "k": self.k, "r": None, "a": None}
        if self.k:
            a, r = split_params(self.n, self.k)
            out.update(r=r, a=a)
        return out

    def __len__(self):
        return len(self.flags)

    def __iter__(self):
        return iter(self.flags)


def split_params(n: int, k: int) -> tuple[int, int]:
    """Return ``(a, r)`` with ``n = (a+1)k + r`` and ``0 <= r < k``."""
    if k < 1 or n < 2 * k:
        raise BadParams(f"need n >= 2k >= 2, got n={n}, k={k}")
    quot, r = divmod(n, k)
    return quot - 1, r


def flag_distance(f: Flag, g: Flag) -> int:
    if f.type != g.type:
        raise TypeMismatch(f"types {f.type.ticks} and {g.type.ticks} differ")
    return sum(subspace_distance(u, v) for u, v in zip(f.subspaces, g.subspaces))


def flag_type_set(n: int, k: int) -> FlagType:
    """The type {1..k} U {n-k..n-1}."""
    if k < 1 or n < 2 * k:
        raise BadParams(f"need n >= 2k >= 2, got n={n}, k={k}")
    return FlagType(n, tuple(sorted(set(range(1, k + 1)) | set(range(n - k, n)))))


def flag_from_matrix(m: MatGF, t: FlagType) -> Flag:
    """Flag whose i-th subspace is the row space of the top ``t_i`` rows of ``m``."""
    if m.rows != t.n or not is_invertible(m):
        raise NotInvertible(f"generator {m.shape} is not an invertible {t.n}x{t.n} matrix")
    subs = tuple(subspace_from_matrix(top_rows(m, j)) for j in t.ticks)
    return Flag(t, subs, m)


def _assemble(f: FieldSpec, heights: Sequence[int], widths: Sequence[int],
              fill: Mapping[tuple[int, int], MatGF | str]) -> MatGF:
    """Block matrix from a sparse map of blocks; ``"I"`` means an identity block."""
    layout = []
    for i, h in enumerate(heights):
        row = []
        for j, w in enumerate(widths):
            blk = fill.get((i, j))
            if blk is None:
                blk = zeros(f, h, w)
            elif isinstance(blk, str):
                if h != w:
                    raise InternalAssert(f"identity block ({i},{j}) is {h}x{w}")
                blk = identity(f, h)
            row.append(blk)
        layout.append(row)
    return block_assemble(layout)


def _require_invertible(m: MatGF, what: str) -> MatGF:
    if not is_invertible(m):
        raise InternalAssert(f"{what} is not invertible")
    return m


def _template_d(f: FieldSpec, n: int, k: int, d: MatGF) -> MatGF:
    a = top_rows(d, k)
    b = MatGF(f, d.data[k:], cols=d.cols)
    if rank(a) != k:
        raise InternalAssert("top k rows of an MRD codeword are not independent")
    return _assemble(f, [k, n - 2 * k, k], [n - k, k],
                     {(0, 0): a, (0, 1): "I", (1, 0): b, (2, 0): a})


def _template_g(f: FieldSpec, n: int, k: int, i: int, g: MatGF) -> MatGF:
    w = n - (i + 2) * k
    c = top_rows(g, k)
    rest = MatGF(f, g.data[k:], cols=w)
    if rank(c) != k:
        raise InternalAssert("top k rows of an MRD codeword are not independent")
    return _assemble(f, [k, w - k, i * k, k, k], [i * k, k, w, k],
                     {(0, 1): "I", (0, 2): c, (1, 2): rest, (2, 0): "I",
                      (3, 3): "I", (4, 2): c})


def _template_zero(f: FieldSpec, n: int, k: int, i: int) -> MatGF:
    w = n - (i + 3) * k
    return _assemble(f, [k, w, i * k, k, k], [i * k, k, k, w, k],
                     {(0, 1): "I", (1, 3): "I", (2, 0): "I", (3, 4): "I", (4, 2): "I"})


def _template_a(f: FieldSpec, n: int, k: int) -> MatGF:
    return _assemble(f, [k, n - 2 * k, k], [k, n - 2 * k, k],
                     {(0, 2): "I", (1, 1): "I", (2, 0): "I"})


def _template_a1(f: FieldSpec, n: int, k: int) -> MatGF:
    return _assemble(f, [k, n - 2 * k, k], [n - 2 * k, k, k],
                     {(0, 1): "I", (1, 0): "I", (2, 2): "I"})


def build_matrix_set(n: int, k: int, f: FieldSpec | int) -> list[tuple[MatGF, Provenance]]:
    """All generator matrices of the construction, in a fixed order."""
    if isinstance(f, int):
        f = field_of_order(f)
    a, r = split_params(n, k)
    out = []
    top = gabidulin_square(n - k, n - k, f)
    for idx, d in enumerate(enumerate_codewords(top)):
        if idx == 0:
            continue
        out.append((_template_d(f, n, k, d), Provenance("D", idx)))
    for i in range(a - 1):
        side = n - (i + 2) * k
        code = gabidulin_square(side, side, f)
        for idx, g in enumerate(enumerate_codewords(code)):
            if idx == 0:
                out.append((_template_zero(f, n, k, i), Provenance(f"O{i}", 0)))
            else:
                out.append((_template_g(f, n, k, i, g), Provenance(f"G{i}", idx)))
    out.append((_template_a(f, n, k), Provenance("M(a)", 0)))
    out.append((_template_a1(f, n, k), Provenance("M(a+1)", 0)))

    for m, prov in out:
        if m.shape != (n, n):
            raise InternalAssert(f"{prov} template has shape {m.shape}")
        _require_invertible(m, f"{prov.family}[{prov.index}] template")
    expected = sum(f.q ** (i * k + r) for i in range(1, a + 1)) + 1
    if len(out) != expected:
        raise InternalAssert(f"built {len(out)} matrices, expected {expected}")
    return out


def allowed_ticks(n: int, k: int) -> tuple[int, ...]:
    return flag_type_set(n, k).ticks


def construct_odfc(n: int, k: int, ticks: Iterable[int] | None = None,
                   f: FieldSpec | int = 2) -> FlagCode:
    """The flag code of the construction, restricted to the dimensions ``ticks``.

    ``ticks`` defaults to the full allowed set {1..k} U {n-k..n-1}.  Restricting
    simply drops the other subspaces of every flag.
    """
    if isinstance(f, int):
        f = field_of_order(f)
    allowed = allowed_ticks(n, k)
    chosen = tuple(sorted(set(allowed if ticks is None else ticks)))
    if not chosen:
        raise BadTypeSet("the type set must be nonempty")
    stray = set(chosen) - set(allowed)
    if stray:
        raise BadTypeSet(f"dimensions {sorted(stray)} are outside {list(allowed)}")
    ftype = FlagType(n, chosen)
    built = build_matrix_set(n, k, f)
    flags = tuple(flag_from_matrix(m, ftype) for m, _ in built)
    return FlagCode(f, ftype, flags, k=k, provenance=tuple(p for _, p in built))


def replace_flag(code: FlagCode, index: int, generator: MatGF) -> FlagCode:
    """Copy of ``code`` with flag ``index`` recut from ``generator``."""
    flags = list(code.flags)
    flags[index] = flag_from_matrix(generator, code.type)
    prov = None
    if code.provenance is not None:
        prov = list(code.provenance)
        prov[index] = Provenance("replaced", index)
    return FlagCode(code.field, code.type, tuple(flags), k=code.k, provenance=prov)


# -- serialization -----------------------------------------------------------

def _generator(fl: Flag) -> MatGF:
    """A matrix whose top rows cut out ``fl``; built from the bases if needed."""
    if fl.generator is not None:
        return fl.generator
    f, n = fl.field, fl.type.n
    rows: list[np.ndarray] = []
    current = np.zeros((0, n), dtype=np.int64)
    for u in list(fl.subspaces) + [None]:
        cand = np.eye(n, dtype=np.int64) if u is None else u.basis.data
        for v in cand:
            trial = np.vstack([current, v[None, :]])
            if rank_of_array(f, trial) > current.shape[0]:
                current = trial
    return MatGF(f, current, cols=n)


def code_to_json(code: FlagCode) -> dict:
    f = code.field
    flags = []
    for i, fl in enumerate(code.flags):
        prov = code.provenance[i] if code.provenance is not None else Provenance("input", i)
        flags.append({"generator": _generator(fl).to_json(), "provenance": prov.to_json()})
    return {"format": FORMAT, "q": f.q, "p": f.p, "e": f.e, "modulus": list(f.modulus),
            "n": code.n, "k": code.k, "type": list(code.type.ticks), "flags": flags}


def code_from_json(doc: dict) -> FlagCode:
    """Parse a FlagCode document, recomputing every subspace from its generator."""
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise FormatError(f"not a {FORMAT} document")
    try:
        f = FieldSpec(int(doc["p"]), int(doc["e"]), tuple(doc["modulus"]))
        if int(doc["q"]) != f.q:
            raise FormatError(f"q={doc['q']} disagrees with p^e={f.q}")
        n = int(doc["n"])
        k = None if doc.get("k") is None else int(doc["k"])
        ftype = FlagType(n, tuple(doc["type"]))
        flags, prov = [], []
        for entry in doc["flags"]:
            m = MatGF.from_json(f, entry["generator"])
            if m.shape != (n, n):
                raise FormatError(f"generator shape {m.shape} is not {n}x{n}")
            flags.append(flag_from_matrix(m, ftype))
            p = entry.get("provenance") or {}
            prov.append(Provenance(str(p.get("family", "input")), int(p.get("index", len(prov)))))
        return FlagCode(f, ftype, tuple(flags), k=k, provenance=tuple(prov))
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, NotInvertible) as exc:
        raise FormatError(f"malformed flag code: {exc}") from exc


def dumps(code: FlagCode) -> str:
    return json.dumps(code_to_json(code), indent=1) + "\n"


def loads(text: str) -> FlagCode:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return code_from_json(doc)
