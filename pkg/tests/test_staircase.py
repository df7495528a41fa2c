import random

import pytest

from stairgcs.arith import GF, Fp, exact_div
from stairgcs.matrix import RingMatrix, det, rng
from stairgcs.staircase import (
    SIGNS, ShapeViolation, StaircaseData, compute_U, context, core_matrix, detphi_residuals, gamma, main_identity_sides,
    pencil_coeffs, phi1_star, random_staircase, staircase_polyring, symbolic_staircase, validate_shape, var_index,
    verify_detphi_forms, verify_main_identity, verify_pencil,
)


def named(n, a, b):
    P = staircase_polyring(n)
    X = RingMatrix.from_function(n, n, lambda i, j: P.gen(var_index(n, "x", i, j)) if i <= a and j > b else P.zero, P)
    Y = RingMatrix.from_function(n, n, lambda i, j: P.zero if i > a and j <= b else P.gen(var_index(n, "y", i, j)), P)
    return P, validate_shape(n, a, b, X, Y)


def expected_from_segments(P, n, size, rows):
    """rows: one list of (start column, letter, row index, first j, last j) per core row."""
    out = []
    for segments in rows:
        row = [P.zero] * size
        for start, letter, r, j0, j1 in segments:
            for t, j in enumerate(range(j0, j1 + 1)):
                row[start - 1 + t] = P.gen(var_index(n, letter, r, j))
        out.append(row)
    return RingMatrix(out, P, size)


def test_core_952_reference():
    P, S = named(9, 5, 2)
    rows = [[(1, "y", r, 1, 9)] for r in range(2, 6)]
    rows += [[(3, "y", r, 3, 9)] for r in range(6, 10)]
    rows += [[(3, "x", r, 3, 9), (10, "y", r, 1, 9)] for r in range(2, 6)]
    rows += [[(12, "y", r, 3, 9)] for r in range(6, 10)]
    rows += [[(12, "x", r, 3, 9), (19, "y", r, 1, 2)] for r in range(2, 6)]
    assert core_matrix(S) == expected_from_segments(P, 9, 20, rows)


def test_core_330_reference():
    P, S = named(3, 3, 0)
    rows = [[(1, "y", 2, 1, 3)], [(1, "y", 3, 1, 3)],
            [(1, "x", 2, 1, 3), (4, "y", 2, 1, 3)], [(1, "x", 3, 1, 3), (4, "y", 3, 1, 3)],
            [(4, "x", 2, 1, 3)], [(4, "x", 3, 1, 3)]]
    assert core_matrix(S) == expected_from_segments(P, 3, 6, rows)


@pytest.mark.parametrize("a,b", [(1, 0), (3, 2), (2, 3)])
def test_shape_violations(a, b):
    with pytest.raises(ShapeViolation):
        validate_shape(4, a, b, RingMatrix.zeros(4, 4, GF), RingMatrix.zeros(4, 4, GF))


def test_nonzero_entry_outside_staircase_rejected(rnd):
    S = random_staircase(5, 3, 1, rnd)
    X = S.X.with_entry(5, 4, Fp(1))
    with pytest.raises(ShapeViolation):
        validate_shape(5, 3, 1, X, S.Y)


def test_core_size_and_k():
    S = random_staircase(9, 5, 2, random.Random(1))
    assert S.k == 3 and S.size == 20


@pytest.mark.parametrize("shape", [(9, 5, 2), (6, 6, 0), (7, 3, 0), (5, 4, 1), (4, 2, 0)])
def test_pencil_over_prime_field(shape, rnd):
    for _ in range(3):
        assert verify_pencil(random_staircase(*shape, rnd), rnd).passed


def test_pencil_degree_is_k(rnd):
    S = random_staircase(6, 4, 1, rnd)
    c = pencil_coeffs(S)
    assert len(c) == S.k + 1
    assert c[0] == det(S.Y)


def test_sign_constants_table():
    assert set(SIGNS) >= {"phi1", "phi2", "phi_last", "long"}
    for n in range(2, 8):
        for k in range(2, 7):
            assert SIGNS["phi2"](n, k) == -SIGNS["phi1"](n, k)


@pytest.mark.parametrize("shape", [(3, 3, 0), (3, 3, 1)])
def test_detphi_symbolic_small(shape):
    assert verify_detphi_forms(symbolic_staircase(*shape)).passed


@pytest.mark.parametrize("shape", [(9, 5, 2), (3, 3, 0), (5, 4, 1), (5, 5, 1), (6, 6, 0), (4, 2, 0)])
def test_main_identity_prime_field(shape, rnd):
    fresh = lambda: random_staircase(*shape, rnd)
    rep = verify_main_identity(fresh(), resample=fresh)
    assert rep.passed, rep


def test_main_identity_detects_a_wrong_phi1_star(rnd):
    ctx = context(random_staircase(5, 4, 1, rnd))
    lhs, rhs = main_identity_sides(ctx)
    assert lhs == rhs
    assert ctx.core[1] * (phi1_star(ctx) + 1) != rhs


def test_gamma_matches_definition(rnd):
    S = random_staircase(5, 3, 0, rnd)
    Y = S.Y
    g = gamma(Y)
    assert g * det(Y.sub(rng(2, 5), rng(2, 5))) == det(Y.sub([1, 3, 4, 5], rng(2, 5)))


def test_U_has_size_k(rnd):
    S = random_staircase(7, 5, 2, rnd)
    U = compute_U(S)
    assert U.shape == (S.k, S.k)
    # c_k = det Y det U
    assert pencil_coeffs(S)[-1] == det(S.Y) * det(U)
