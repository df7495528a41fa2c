import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stairgcs.arith import GF, QQ, Fp
from stairgcs.matrix import RingMatrix, det, inverse, rng, trailing_minors


def leibniz(M):
    n = M.rows
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i, p in enumerate(perm):
            term = term * M[i + 1, p + 1]
        total = total + term
    return total


mats = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=80)
@given(mats)
def test_det_matches_leibniz_over_rationals(rows):
    M = RingMatrix(rows, QQ)
    assert det(M) == leibniz(M)


@settings(max_examples=40)
@given(mats)
def test_det_matches_leibniz_over_prime_field(rows):
    M = RingMatrix([[Fp(x) for x in r] for r in rows], GF)
    assert det(M) == leibniz(M)


def test_inverse_times_matrix_is_identity(rnd):
    M = RingMatrix.from_function(4, 4, lambda i, j: GF.random(rnd), GF)
    Mi = inverse(M)
    assert Mi @ M == RingMatrix.identity(4, GF)


def test_trailing_minors_match_direct_determinants(rnd):
    M = RingMatrix.from_function(6, 6, lambda i, j: GF.random(rnd), GF)
    phi = trailing_minors(M)
    for i in range(1, 7):
        assert phi[i - 1] == det(M.sub(rng(i, 6), rng(i, 6)))


def test_one_based_indexing_and_out_of_range():
    M = RingMatrix([[1, 2], [3, 4]], QQ)
    assert M[1, 2] == 2 and M[2, 1] == 3
    with pytest.raises(IndexError):
        M[0, 1]


def test_json_roundtrip():
    M = RingMatrix([[Fp(1), Fp(2)], [Fp(3), Fp(4)]], GF)
    assert RingMatrix.from_json(M.to_json(), GF) == M
