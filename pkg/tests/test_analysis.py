import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from flagforge import errors
from flagforge.analysis import (INAPPLICABLE, NOT_PROVEN, OPTIMAL, cdc_upper_bound, drake_freeman_bound,
                                gaussian_binomial_1, is_disjoint, is_odfc_by_distance,
                                is_odfc_by_projection, max_flag_distance_bound, min_flag_distance,
                                odfc_bounds, odfc_size_formula, partial_spread_check, projected_code,
                                verify_odfc)
from flagforge.flag import FlagCode, FlagType, construct_odfc, flag_from_matrix, replace_flag
from flagforge.galois import field_make
from flagforge.matgfq import MatGF, identity
from flagforge.selftest import random_flag_code
from flagforge.subspace import intersection_dim, subspace_from_matrix

from oracles import drake_freeman_float

F2 = field_make(2, 1)


def test_size_formula_examples():
    assert odfc_size_formula(5, 2, 2) == 9
    assert odfc_size_formula(6, 2, 2) == 21
    assert odfc_size_formula(7, 2, 2) == 41 == (2 ** 7 - 2 ** 3) // 3 + 1
    assert odfc_size_formula(8, 3, 2) == 33
    assert odfc_size_formula(5, 2, 3) == 28
    assert gaussian_binomial_1(2, 2) == 3 and gaussian_binomial_1(0, 5) == 0


def test_cdc_bound_examples():
    b = cdc_upper_bound(7, 3, 2)
    assert b.bound == 17 and b.exact
    b = cdc_upper_bound(8, 3, 2)
    assert b.bound == 34 and not b.exact and b.drake_freeman == 34
    b = cdc_upper_bound(6, 2, 2)
    assert b.bound == 21 and b.exact and b.drake_freeman is None
    with pytest.raises(errors.BadParams):
        cdc_upper_bound(5, 3, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_drake_freeman_matches_high_precision(q, k):
    for n in range(2 * k + 1, 5 * k):
        if n % k:
            assert drake_freeman_bound(n, k, q) == drake_freeman_float(n, k, q)


def test_drake_freeman_needs_remainder():
    with pytest.raises(errors.BadParams):
        drake_freeman_bound(6, 2, 2)


def test_bound_identities():
    for q in (2, 3, 4, 5):
        for k in range(1, 5):
            for n in range(2 * k, 6 * k):
                size = odfc_size_formula(n, k, q)
                bound = cdc_upper_bound(n, k, q)
                assert size <= bound.bound
                if n % k == 0:
                    assert size == (q ** n - 1) // (q ** k - 1) == bound.bound
                if n == 2 * k + 1 and k >= 2:
                    assert size == q ** (k + 1) + 1
                if k > gaussian_binomial_1(n % k, q):
                    assert bound.exact and size == bound.bound


def test_odfc_bounds_examples():
    b = odfc_bounds(5, 2, 2, (1, 2, 3, 4))
    assert (b.size_formula, b.upper_bound, b.verdict) == (9, 9, OPTIMAL)
    b = odfc_bounds(8, 3, 2, (3, 5))
    assert (b.size_formula, b.upper_bound, b.verdict) == (33, 34, NOT_PROVEN)
    b = odfc_bounds(7, 2, 2, (1,))
    assert (b.size_formula, b.upper_bound, b.verdict) == (41, None, INAPPLICABLE)
    with pytest.raises(errors.BadTypeSet):
        odfc_bounds(7, 2, 2, (3,))


def test_max_distance_examples():
    assert max_flag_distance_bound(5, (1, 2, 3, 4)) == 12
    assert max_flag_distance_bound(4, (1, 2, 3)) == 8
    assert max_flag_distance_bound(7, FlagType(7, (1, 2, 3, 4, 5, 6))) == 24


def test_min_distance_examples():
    std = flag_from_matrix(identity(F2, 4), FlagType(4, (1, 2, 3)))
    swapped = flag_from_matrix(MatGF(F2, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]),
                               FlagType(4, (1, 2, 3)))
    assert min_flag_distance(FlagCode(F2, std.type, (std, swapped))) == 2
    assert min_flag_distance(construct_odfc(4, 2, None, F2)) == 8
    assert min_flag_distance(construct_odfc(5, 2, None, F2)) == 12
    with pytest.raises(errors.TooSmall):
        min_flag_distance(FlagCode(F2, std.type, (std,)))


def test_projections():
    code = construct_odfc(4, 2, None, F2)
    planes = projected_code(code, 2)
    assert len(planes) == 5 and partial_spread_check(planes)
    assert len(projected_code(code, 1)) == 5
    assert is_disjoint(code)
    single = FlagCode(F2, code.type, code.flags[:1])
    assert projected_code(single, 2) == (code.flags[0][1],) and is_disjoint(single)
    with pytest.raises(errors.BadTick):
        projected_code(code, 4)
    # two flags sharing their line
    m = MatGF(F2, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    shared = FlagCode(F2, code.type, (flag_from_matrix(identity(F2, 4), code.type),
                                      flag_from_matrix(m, code.type)))
    assert not is_disjoint(shared)


def test_partial_spread_examples():
    def s(rows):
        return subspace_from_matrix(MatGF(F2, rows))
    assert partial_spread_check([s([[1, 0, 0, 0], [0, 1, 0, 0]]), s([[0, 0, 1, 0], [0, 0, 0, 1]])])
    assert not partial_spread_check([s([[1, 0, 0], [0, 1, 0]]), s([[0, 1, 0], [0, 0, 1]])])
    with pytest.raises(errors.DimMismatch):
        partial_spread_check([s([[1, 0, 0]]), s([[0, 1, 0], [0, 0, 1]])])


def test_seven_two_projection_is_partial_spread():
    planes = projected_code(construct_odfc(7, 2, None, F2), 2)
    assert len(planes) == 41
    assert all(intersection_dim(u, v) == 0 for u, v in itertools.combinations(planes, 2))


@pytest.mark.parametrize("n,k,q,ticks,size,dmin,verdict,upper", [
    (4, 2, 2, None, 5, 8, OPTIMAL, 5),
    (5, 2, 2, None, 9, 12, OPTIMAL, 9),
    (6, 2, 2, None, 21, 12, OPTIMAL, 21),
    (5, 2, 3, None, 28, 12, OPTIMAL, 28),
    (6, 3, 3, None, 28, 18, OPTIMAL, 28),
    (8, 3, 2, (3, 5), 33, 12, NOT_PROVEN, 34),
    (7, 2, 2, (1,), 41, 2, INAPPLICABLE, None),
])
def test_verify_constructed_codes(n, k, q, ticks, size, dmin, verdict, upper):
    rep = verify_odfc(construct_odfc(n, k, ticks, q))
    assert rep.is_odfc and rep.disjoint
    assert (rep.size, rep.min_flag_distance, rep.optimality, rep.upper_bound) == (size, dmin, verdict, upper)
    assert rep.size_formula == size
    assert all(t.projected_min_distance == t.target for t in rep.per_tick)


def test_corrupted_code_is_not_odfc():
    code = construct_odfc(5, 2, None, F2)
    m = MatGF(F2, [[1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    rep = verify_odfc(replace_flag(code, 0, m))
    assert not rep.is_odfc
    assert rep.upper_bound is None and rep.optimality == INAPPLICABLE
    assert rep.min_flag_distance < 12


def test_parallel_matches_serial():
    code = construct_odfc(6, 2, None, F2)
    assert verify_odfc(code, parallel=2) == verify_odfc(code, parallel=1)


def test_report_json_and_render():
    rep = verify_odfc(construct_odfc(4, 2, None, F2))
    doc = rep.to_json()
    assert doc["size"] == 5 and doc["optimality"] == OPTIMAL and doc["type"] == [1, 2, 3]
    assert [t["t"] for t in doc["per_tick"]] == [1, 2, 3]
    assert "min flag distance     8" in rep.render()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_characterisations_agree(seed):
    code = random_flag_code(np.random.default_rng(seed))
    assert is_odfc_by_distance(code) == is_odfc_by_projection(code)
    assert verify_odfc(code).is_odfc == is_odfc_by_distance(code)
