import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from flagforge import errors
from flagforge.galois import field_make, field_of_order
from flagforge.matgfq import MatGF, identity, rank, top_rows, zeros
from flagforge.rankmetric import rank_distance
from flagforge.selftest import _pair_same_pivots
from flagforge.subspace import (IdVector, Subspace, full_space, hamming_distance, identifying_vector,
                                intersection_dim, inverse_identifying_vector, pivot_complement,
                                random_subspace, subspace_distance, subspace_from_matrix, sum_dim)

from oracles import brute_subspace_distance

F2 = field_make(2, 1)


def sub(rows, f=F2):
    return subspace_from_matrix(MatGF(f, rows))


def e(i, n):
    return [1 if j == i else 0 for j in range(n)]


def test_from_matrix_examples():
    assert sub([e(0, 3), e(1, 3)]).basis == top_rows(identity(F2, 3), 2)
    assert sub([[1, 1, 0], [1, 0, 1]]).basis.tolist() == [[1, 0, 1], [0, 1, 1]]
    u = sub([[1, 1], [1, 1]])
    assert u.dim == 1 and u.basis.tolist() == [[1, 1]]
    with pytest.raises(errors.ZeroMatrix):
        subspace_from_matrix(zeros(F2, 2, 3))


def test_distance_examples():
    u = sub([e(0, 4)])
    assert subspace_distance(u, u) == 0
    assert subspace_distance(u, sub([e(1, 4)])) == 2
    a, b = sub([e(0, 3), e(1, 3)]), sub([e(1, 3), e(2, 3)])
    assert subspace_distance(a, b) == 2
    assert intersection_dim(a, a) == 2
    assert intersection_dim(sub([e(0, 3)]), sub([e(1, 3)])) == 0
    assert intersection_dim(a, b) == 1
    assert sum_dim(a, b) == 3
    with pytest.raises(errors.AmbientMismatch):
        subspace_distance(u, a)


def test_identifying_vectors():
    u = sub([[1, 1, 0], [1, 0, 1]])
    assert identifying_vector(u).bits == (1, 1, 0)
    assert inverse_identifying_vector(u).bits == (0, 1, 1)
    assert identifying_vector(u).weight == 2
    assert hamming_distance(IdVector((1, 1, 0)), IdVector((1, 1, 0))) == 0
    assert hamming_distance(IdVector((1, 1, 0)), IdVector((0, 1, 1))) == 2
    assert hamming_distance(IdVector((1, 0, 0, 0)), IdVector((0, 0, 0, 1))) == 2
    with pytest.raises(errors.LengthMismatch):
        hamming_distance(IdVector((1,)), IdVector((1, 0)))


def test_pivot_complement_examples():
    c = pivot_complement(sub([e(0, 3), e(1, 3)]))
    assert c.shape == (2, 1) and c.is_zero()
    assert pivot_complement(sub([[1, 0, 1], [0, 1, 1]])).tolist() == [[1], [1]]
    assert pivot_complement(full_space(F2, 3)).shape == (3, 0)


def test_membership_and_nesting():
    a = sub([e(0, 3), e(1, 3)])
    assert [1, 1, 0] in a and [0, 0, 1] not in a
    assert sub([[1, 1, 0]]).is_subspace_of(a)
    assert Subspace.from_json(F2, a.to_json()) == a


params = st.tuples(st.sampled_from([2, 3]), st.integers(2, 5), st.integers(0, 2**32 - 1))


@settings(max_examples=40, deadline=None)
@given(params)
def test_distance_matches_span_enumeration(p):
    q, n, seed = p
    f = field_of_order(q)
    rng = np.random.default_rng(seed)
    u = random_subspace(f, n, int(rng.integers(1, n)), rng)
    v = random_subspace(f, n, int(rng.integers(1, n)), rng)
    assert subspace_distance(u, v) == brute_subspace_distance(u.basis.tolist(), v.basis.tolist(), f)


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.sampled_from([2, 3]), st.integers(2, 8), st.integers(0, 2**32 - 1)))
def test_identifying_vector_bounds_and_equalities(p):
    q, n, seed = p
    f = field_of_order(q)
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, n))
    u = random_subspace(f, n, k, rng)
    v = _pair_same_pivots(u, rng) if rng.random() < 0.5 else random_subspace(f, n, k, rng)
    d = subspace_distance(u, v)
    assert d == subspace_distance(v, u) and d % 2 == 0
    iu, iv = identifying_vector(u), identifying_vector(v)
    ju, jv = inverse_identifying_vector(u), inverse_identifying_vector(v)
    assert iu.weight == ju.weight == k
    assert d >= hamming_distance(iu, iv)
    assert d >= hamming_distance(ju, jv)
    if iu == iv:
        assert d == 2 * rank_distance(pivot_complement(u), pivot_complement(v))
    if ju == jv:
        assert d == 2 * rank_distance(pivot_complement(u, "inverse"), pivot_complement(v, "inverse"))
