import numpy as np
import pytest

from flagforge import errors
from flagforge.galois import field_make
from flagforge.matgfq import MatGF, identity, rank
from flagforge.rankmetric import (enumerate_codewords, gabidulin_square, min_rank_distance,
                                  rank_distance, truncate_code, verify_mrd)

from oracles import schoolbook_mul, smallest_irreducible

F2 = field_make(2, 1)


def multiplication_matrices(q, m):
    """Full-distance codewords straight from GF(q^m) arithmetic: row i is a * x^i."""
    mod = smallest_irreducible(q, m)
    out = []
    for a in range(q ** m):
        rows = []
        for i in range(m):
            c = schoolbook_mul(a, q ** i, q, mod)
            rows.append([(c // q ** j) % q for j in range(m)])
        out.append(rows)
    return out


def test_scalar_code():
    words = enumerate_codewords(gabidulin_square(1, 1, 2))
    assert [w.tolist() for w in words] == [[[0]], [[1]]]


def test_gf4_code():
    words = enumerate_codewords(gabidulin_square(2, 2, F2))
    a = [[0, 1], [1, 1]]
    assert [w.tolist() for w in words] == [[[0, 0], [0, 0]], [[1, 0], [0, 1]], a, [[1, 1], [1, 0]]]


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_full_distance_code_is_multiplication_by_field_elements(q, m):
    words = enumerate_codewords(gabidulin_square(m, m, q))
    assert [w.tolist() for w in words] == multiplication_matrices(q, m)


def test_counts_and_dimension():
    code = gabidulin_square(3, 2, 2)
    assert code.size == 2 ** 6 and len(enumerate_codewords(code)) == 64
    assert len(enumerate_codewords(gabidulin_square(2, 2, 3))) == 9


def test_delta_two_code_is_mrd():
    words = enumerate_codewords(gabidulin_square(3, 2, 2))
    assert min(rank(w) for w in words[1:]) == 2
    # linear code: closed under addition
    s = set(words)
    assert all(words[i] + words[j] in s for i in range(0, 64, 7) for j in range(0, 64, 5))


def test_errors():
    with pytest.raises(errors.InvalidDelta):
        gabidulin_square(2, 3, 2)
    with pytest.raises(errors.InvalidDelta):
        gabidulin_square(2, 0, 2)
    with pytest.raises(errors.TooLarge):
        enumerate_codewords(gabidulin_square(6, 1, 2))
    with pytest.raises(errors.InvalidT):
        truncate_code(enumerate_codewords(gabidulin_square(2, 2, 2)), 3)
    with pytest.raises(errors.DimensionMismatch):
        rank_distance(identity(F2, 2), identity(F2, 3))


def test_truncation_examples():
    words = enumerate_codewords(gabidulin_square(2, 2, 2))
    assert truncate_code(words, 2) == words
    top = truncate_code(words, 1)
    assert sorted(w.tolist()[0] for w in top) == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert min_rank_distance(top) == 1
    top = truncate_code(enumerate_codewords(gabidulin_square(3, 3, 2)), 2)
    assert len(top) == 8 and all(w.shape == (2, 3) for w in top)
    assert min_rank_distance(top) == 2


def test_rank_distance_is_a_metric():
    words = enumerate_codewords(gabidulin_square(3, 2, 2))
    rng = np.random.default_rng(0)
    for _ in range(50):
        a, b, c = (words[i] for i in rng.integers(0, len(words), 3))
        assert rank_distance(a, b) == rank_distance(b, a)
        assert (rank_distance(a, b) == 0) == (a == b)
        assert rank_distance(a, c) <= rank_distance(a, b) + rank_distance(b, c)


def test_verify_mrd():
    words = enumerate_codewords(gabidulin_square(2, 2, 2))
    assert verify_mrd([MatGF(F2, [[0, 0], [0, 0]])], 5)
    assert verify_mrd(words, 2)
    assert not verify_mrd(words, 3)
    assert min_rank_distance(words[:1]) is None
