"""Exhaustive ODFC verification and the size / upper-bound formulas.

All bound arithmetic is exact integer arithmetic; the square-root floor in
the partial-spread bound uses :func:`math.isqrt`.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadParams, BadTick, BadTypeSet, CharacterizationMismatch, DimMismatch, TooSmall
from .flag import FlagCode, FlagType, allowed_ticks, flag_distance, split_params
from .subspace import Subspace, intersection_dim, subspace_distance

OPTIMAL = "optimal"
NOT_PROVEN = "not-proven-optimal"
INAPPLICABLE = "bound-inapplicable"


# -- formulas ----------------------------------------------------------------

def gaussian_binomial_1(r: int, q: int) -> int:
    """Number of lines in GF(q)^r, i.e. (q^r - 1)/(q - 1)."""
    return (q ** r - 1) // (q - 1)


def odfc_size_formula(n: int, k: int, q: int) -> int:
    """(q^n - q^{k+r})/(q^k - 1) + 1 with r = n mod k."""
    _, r = split_params(n, k)
    num = q ** n - q ** (k + r)
    assert num % (q ** k - 1) == 0
    return num // (q ** k - 1) + 1


def drake_freeman_bound(n: int, k: int, q: int) -> int:
    """Partial k-spread upper bound for k not dividing n (requires r != 0)."""
    _, r = split_params(n, k)
    if r == 0:
        raise BadParams("the bound needs n mod k != 0")
    qk, qr = q ** k, q ** r
    head = (q ** n - qr) // (qk - 1)
    # floor((sqrt(x) - c) / 2) == (isqrt(x) - c) // 2 for integer c
    x = 4 * qk * (qk - qr) + 1
    c = 2 * qk - 2 * qr + 1
    return head - (math.isqrt(x) - c) // 2 - 1


@dataclass(frozen=True)
class CdcBound:
    bound: int
    exact: bool
    drake_freeman: int | None = None
    exact_value: int | None = None


def cdc_upper_bound(n: int, k: int, q: int) -> CdcBound:
    """Upper bound on the size of a partial k-spread in GF(q)^n.

    ``exact`` is set when the value is known to be attained, which happens for
    r = 0 and whenever k > (q^r - 1)/(q - 1).
    """
    if q < 2:
        raise BadParams("q must be at least 2")
    _, r = split_params(n, k)
    df = drake_freeman_bound(n, k, q) if r else None
    exact_value = None
    if k > gaussian_binomial_1(r, q):
        exact_value = (q ** n - q ** (k + r)) // (q ** k - 1) + 1
    if exact_value is not None:
        return CdcBound(exact_value, True, df, exact_value)
    return CdcBound(df, False, df, None)


@dataclass(frozen=True)
class OdfcBounds:
    size_formula: int
    upper_bound: int | None
    verdict: str
    drake_freeman: int | None = None
    exact_value: int | None = None


def bound_applies(n: int, k: int, ticks: Iterable[int]) -> bool:
    return bool({k, n - k} & set(ticks))


def odfc_bounds(n: int, k: int, q: int, ticks: Iterable[int]) -> OdfcBounds:
    """Construction size, the ODFC upper bound when it applies, and a verdict."""
    ticks = set(ticks)
    if not ticks or not ticks <= set(allowed_ticks(n, k)):
        raise BadTypeSet(f"type set {sorted(ticks)} not within {{1..k}} U {{n-k..n-1}}")
    size = odfc_size_formula(n, k, q)
    if not bound_applies(n, k, ticks):
        return OdfcBounds(size, None, INAPPLICABLE)
    cdc = cdc_upper_bound(n, k, q)
    verdict = OPTIMAL if size == cdc.bound else NOT_PROVEN
    return OdfcBounds(size, cdc.bound, verdict, cdc.drake_freeman, cdc.exact_value)


def max_flag_distance_bound(n: int, t: FlagType | Sequence[int]) -> int:
    """Largest possible minimum distance of a flag code of the given type."""
    ticks = t.ticks if isinstance(t, FlagType) else tuple(t)
    half = n // 2
    return 2 * sum(ti if ti <= half else n - ti for ti in ticks)


def tick_target(n: int, t: int) -> int:
    return min(2 * t, 2 * (n - t))


# -- projections and pairwise distances --------------------------------------

def projected_code(code: FlagCode, t: int) -> tuple[Subspace, ...]:
    """Distinct t-dimensional components, in order of first appearance."""
    if t not in code.type.ticks:
        raise BadTick(f"{t} is not a dimension of type {code.type.ticks}")
    i = code.type.ticks.index(t)
    return tuple(dict.fromkeys(fl.subspaces[i] for fl in code.flags))


def is_disjoint(code: FlagCode) -> bool:
    return all(len(projected_code(code, t)) == len(code) for t in code.type.ticks)


def _distance_chunk(args) -> list[int]:
    subs, pairs = args
    return [subspace_distance(subs[i], subs[j]) for i, j in pairs]


def _pairwise(subs: Sequence[Subspace], parallel: int) -> np.ndarray:
    """Symmetric matrix of subspace distances."""
    m = len(subs)
    pairs = list(itertools.combinations(range(m), 2))
    out = np.zeros((m, m), dtype=np.int64)
    if parallel > 1 and len(pairs) > 1:
        chunks = [pairs[w::parallel] for w in range(parallel)]
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_distance_chunk, [(subs, c) for c in chunks]))
        values = {}
        for c, res in zip(chunks, results):
            values.update(zip(c, res))
        dists = [values[p] for p in pairs]
    else:
        dists = _distance_chunk((subs, pairs))
    for (i, j), d in zip(pairs, dists):
        out[i, j] = out[j, i] = d
    return out


@dataclass
class _Tables:
    projections: list[tuple[Subspace, ...]]
    index: list[list[int]]          # per tick: flag -> position in projection
    distances: list[np.ndarray]     # per tick: pairwise distances of projection


def _tables(code: FlagCode, parallel: int) -> _Tables:
    projections, index, distances = [], [], []
    for pos, t in enumerate(code.type.ticks):
        proj = projected_code(code, t)
        where = {u: i for i, u in enumerate(proj)}
        projections.append(proj)
        index.append([where[fl.subspaces[pos]] for fl in code.flags])
        distances.append(_pairwise(proj, parallel))
    return _Tables(projections, index, distances)


def _flag_distance_matrix(code: FlagCode, tables: _Tables) -> np.ndarray:
    total = np.zeros((len(code), len(code)), dtype=np.int64)
    for idx, dist in zip(tables.index, tables.distances):
        ix = np.asarray(idx)
        total += dist[np.ix_(ix, ix)]
    return total


def _resolve_parallel(parallel: int | None) -> int:
    if parallel is None or parallel < 1:
        return os.cpu_count() or 1
    return parallel


def min_flag_distance(code: FlagCode, parallel: int = 1) -> int:
    """Exact minimum flag distance over all unordered pairs."""
    if len(code) < 2:
        raise TooSmall("minimum distance needs at least two flags")
    tables = _tables(code, _resolve_parallel(parallel))
    dist = _flag_distance_matrix(code, tables)
    return int(dist[np.triu_indices(len(code), 1)].min())


def partial_spread_check(subspaces: Sequence[Subspace]) -> bool:
    """True iff all pairs of the (equal-dimension) subspaces meet trivially."""
    subspaces = list(subspaces)
    if len({u.dim for u in subspaces}) > 1:
        raise DimMismatch("partial spread members must share one dimension")
    return all(intersection_dim(u, v) == 0 for u, v in itertools.combinations(subspaces, 2))


# -- report ------------------------------------------------------------------

@dataclass(frozen=True)
class TickReport:
    t: int
    projected_size: int
    projected_min_distance: int | None
    target: int


@dataclass(frozen=True)
class VerificationReport:
    q: int
    n: int
    k: int | None
    r: int | None
    a: int | None
    type: tuple[int, ...]
    size: int
    min_flag_distance: int
    max_distance_bound: int
    per_tick: tuple[TickReport, ...]
    disjoint: bool
    is_odfc: bool
    size_formula: int | None
    upper_bound: int | None
    optimality: str

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["type"] = list(self.type)
        doc["per_tick"] = [asdict(t) for t in self.per_tick]
        return doc

    def render(self) -> str:
        lines = [
            f"flag code over GF({self.q}), n={self.n}, k={self.k}, type={list(self.type)}",
            f"  size                  {self.size}",
            f"  size formula          {self.size_formula if self.size_formula is not None else '-'}",
            f"  upper bound           {self.upper_bound if self.upper_bound is not None else '-'}",
            f"  min flag distance     {self.min_flag_distance}",
            f"  max distance bound    {self.max_distance_bound}",
            f"  disjoint              {'yes' if self.disjoint else 'no'}",
            f"  ODFC                  {'yes' if self.is_odfc else 'no'}",
            f"  optimality            {self.optimality}",
            "",
            "     t  |C_t|  d_S(C_t)  target",
        ]
        for tr in self.per_tick:
            d = "-" if tr.projected_min_distance is None else tr.projected_min_distance
            lines.append(f"  {tr.t:4d}  {tr.projected_size:5d}  {d!s:>8}  {tr.target:6d}")
        return "\n".join(lines)


def verify_odfc(code: FlagCode, parallel: int = 1) -> VerificationReport:
    """Check a flag code against both ODFC characterisations and the bounds.

    The distance test (minimum flag distance equals the type's ceiling) and the
    projection test (disjoint, every projection at its maximum distance) are
    computed separately; disagreement raises CharacterizationMismatch.
    """
    if len(code) < 2:
        raise TooSmall("verification needs at least two flags")
    n, ticks = code.n, code.type.ticks
    tables = _tables(code, _resolve_parallel(parallel))
    dist = _flag_distance_matrix(code, tables)
    dmin = int(dist[np.triu_indices(len(code), 1)].min())
    ceiling = max_flag_distance_bound(n, code.type)

    per_tick = []
    for t, proj, d in zip(ticks, tables.projections, tables.distances):
        pmin = int(d[np.triu_indices(len(proj), 1)].min()) if len(proj) > 1 else None
        per_tick.append(TickReport(t, len(proj), pmin, tick_target(n, t)))
    disjoint = all(tr.projected_size == len(code) for tr in per_tick)

    by_distance = dmin == ceiling
    by_projection = disjoint and all(tr.projected_min_distance == tr.target for tr in per_tick)
    if by_distance != by_projection:
        raise CharacterizationMismatch(
            f"distance test says {by_distance}, projection test says {by_projection}")

    k = code.k
    a = r = size_formula = upper = None
    optimality = INAPPLICABLE
    if k:
        a, r = split_params(n, k)
        size_formula = odfc_size_formula(n, k, code.q)
        if by_distance and set(ticks) <= set(allowed_ticks(n, k)) and bound_applies(n, k, ticks):
            upper = cdc_upper_bound(n, k, code.q).bound
            optimality = OPTIMAL if len(code) == upper else NOT_PROVEN
    return VerificationReport(
        q=code.q, n=n, k=k, r=r, a=a, type=tuple(ticks), size=len(code),
        min_flag_distance=dmin, max_distance_bound=ceiling, per_tick=tuple(per_tick),
        disjoint=disjoint, is_odfc=by_distance, size_formula=size_formula,
        upper_bound=upper, optimality=optimality)


def is_odfc_by_projection(code: FlagCode) -> bool:
    """Disjoint and every projected code at distance min(2t, 2(n-t))."""
    for t in code.type.ticks:
        proj = projected_code(code, t)
        if len(proj) != len(code):
            return False
        target = tick_target(code.n, t)
        if any(subspace_distance(u, v) < target for u, v in itertools.combinations(proj, 2)):
            return False
    return True


def is_odfc_by_distance(code: FlagCode) -> bool:
    """Minimum flag distance equals the type's ceiling (brute-force pairs)."""
    ceiling = max_flag_distance_bound(code.n, code.type)
    return all(flag_distance(f, g) == ceiling for f, g in itertools.combinations(code.flags, 2))
