"""Determinantal identities used by the regularity arguments, as residuals.

Every ``*_residual`` function returns LHS - RHS, which must be exactly
zero.  Row deletions are written ``rows=...`` and column deletions
``cols=...`` (the hatted sub/superscripts of the usual notation).
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import GF, QQ, PolyRing, interpolate
from .matrix import RingMatrix, det, inverse, rng, unit_vector
from .report import Report
from .staircase import k_star, krylov


class IndexInvalid(ValueError):
    pass


class WitnessSearchFailed(RuntimeError):
    pass


class NonzeroResidual(AssertionError):
    pass


IdentityReport = Report


def _minor(M, rows=(), cols=()):
    return det(M.delete(rows, cols))


def desnanot_jacobi_residual(A, alpha, beta, gamma, delta):
    """det A det A_{ab}^{gd} + det A_a^d det A_b^g - det A_a^g det A_b^d."""
    n = A.rows
    if A.cols != n:
        raise IndexInvalid("matrix must be square")
    # the signs as written assume both pairs are increasing
    if not (alpha < beta and gamma < delta):
        raise IndexInvalid("need alpha < beta and gamma < delta")
    for v in (alpha, beta, gamma, delta):
        if not 1 <= v <= n:
            raise IndexInvalid(f"index {v} outside 1..{n}")
    m = lambda r, c: _minor(A, r, c)
    return (det(A) * m([alpha, beta], [gamma, delta]) + m([alpha], [delta]) * m([beta], [gamma])
            - m([alpha], [gamma]) * m([beta], [delta]))


def plucker_residual(B, alpha, beta, gamma, delta):
    """Short Pluecker relation for an m x (m+1) matrix (columns a, b, g; row d)."""
    m = B.rows
    if B.cols != m + 1:
        raise IndexInvalid("need an m x (m+1) matrix")
    if not alpha < beta < gamma:
        raise IndexInvalid("need columns alpha < beta < gamma")
    for v in (alpha, beta, gamma):
        if not 1 <= v <= m + 1:
            raise IndexInvalid(f"column {v} outside 1..{m + 1}")
    if not 1 <= delta <= m:
        raise IndexInvalid(f"row {delta} outside 1..{m}")
    c = lambda r, cs: _minor(B, r, cs)
    return (c([delta], [alpha, beta]) * c([], [gamma]) + c([delta], [beta, gamma]) * c([], [alpha])
            - c([delta], [alpha, gamma]) * c([], [beta]))


def pluckpluck_sides(B):
    """(LHS, RHS) of the three-term corollary for an m x (m+1) matrix, m >= 3."""
    m = B.rows
    if B.cols != m + 1 or m < 3:
        raise IndexInvalid("need an m x (m+1) matrix with m >= 3")
    c = lambda r, cs: _minor(B, r, cs)
    p = c([1, 2], [1, m, m + 1])
    lhs = (p * c([1], [1, 2]) * c([], [m + 1])
           + c([1, 2], [1, 2, m + 1]) * c([1], [m, m + 1]) * c([], [1]))
    rhs = c([1], [1, m + 1]) * (p * c([], [2]) - c([1, 2], [2, m, m + 1]) * c([], [1]))
    return lhs, rhs


def pluckpluck_residual(B):
    lhs, rhs = pluckpluck_sides(B)
    return lhs - rhs


def long_identity_sides(A, u, v):
    """(LHS, RHS) of det(det K1 A - det K2 I) = (-1)^{k(k-1)/2} det K det K*."""
    k = A.rows
    K, K1, K2 = krylov(A, u, v)
    d1, d2 = det(K1), det(K2)
    ring = A.ring
    lhs = det(A.scale(d1) - RingMatrix.identity(k, ring).scale(d2))
    sign = -1 if (k * (k - 1) // 2) & 1 else 1
    rhs = sign * det(K) * det(k_star(A, u, v))
    return lhs, rhs


def long_identity_residual(A, u, v):
    lhs, rhs = long_identity_sides(A, u, v)
    return lhs - rhs


# ---------------------------------------------------------------------------
# witness for the coprimality argument


def leading_minors(A):
    return [det(A.sub(rng(1, i), rng(1, i))) for i in range(1, A.rows + 1)]


def gencop_witness(k, gamma, rng_=None, strengthened=True, max_doublings=64, attempts=8):
    """Invertible A with det K(A; e1) = 0 and det K*(A; e1, A^{-1}(e2 + gamma e1)) != 0.

    A = C^{-1} diag(t, t^2, ..., t^k) C over the rationals, where C has
    c11 = 0 (this kills det K(A; e1) for every t), nonzero c_{i1} for
    i >= 2, c12 != 0 and c22 + gamma c21 != 0.  t runs through powers of
    two until the remaining conditions hold.  ``gamma`` is a rational.
    With ``strengthened`` all leading principal minors must be nonzero too.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    rng_ = rng_ or random.Random(0)
    gamma = Fraction(gamma)
    nz = lambda: rng_.choice([-1, 1]) * rng_.randint(1, 9)
    for _ in range(attempts):
        C = [[rng_.randint(-9, 9) for _ in range(k)] for _ in range(k)]
        C[0][0] = 0
        for i in range(1, k):
            C[i][0] = nz()
        C[0][1] = nz()
        while C[1][1] + gamma * C[1][0] == 0:
            C[1][1] = rng_.randint(-9, 9)
        Cm = RingMatrix(C, QQ)
        if not det(Cm):
            continue
        Ci = inverse(Cm)
        t = 2
        for _ in range(max_doublings):
            D = RingMatrix.diag([t ** (i + 1) for i in range(k)], QQ)
            A = Ci @ D @ Cm
            if witness_conditions(A, gamma, strengthened)["ok"]:
                return A
            t *= 2
    raise WitnessSearchFailed(f"no witness for k={k}, gamma={gamma}")


def witness_conditions(A, gamma, strengthened=True):
    k = A.rows
    ring = A.ring
    e1, e2 = unit_vector(k, 1, ring), unit_vector(k, 2, ring)
    K, _, _ = krylov(A, e1, e1)
    v = inverse(A).apply([x + gamma * y for x, y in zip(e2, e1)])
    dk = det(K)
    dks = det(k_star(A, e1, v))
    da = det(A)
    lead = leading_minors(A) if strengthened else []
    ok = dk == 0 and dks != 0 and da != 0 and all(lead)
    return {"ok": ok, "det_K": dk, "det_K_star": dks, "det_A": da, "leading": lead}


# ---------------------------------------------------------------------------
# theta perturbations


@dataclass
class PerturbationSpec:
    """How to perturb a matrix and which identity to evaluate on a window.

    ``entries``: 1-based positions (i, j) where theta is added.
    ``rows``/``cols``: 1-based window taken after perturbation.
    ``identity``: ``pluckpluck``, ``plucker`` or ``jacobi``; ``args`` are the
    index arguments for the latter two.
    ``degree``: stated degree bound in theta; ``coefficient``: the power of
    theta whose coefficient is the exchange relation of interest.
    """

    entries: list
    rows: list
    cols: list
    identity: str = "pluckpluck"
    args: tuple = ()
    degree: int = 3
    coefficient: int = 1
    label: str = ""


def _sides(name, B, args):
    if name == "pluckpluck":
        return pluckpluck_sides(B)
    if name == "plucker":
        r = plucker_residual(B, *args)
        return r, r * 0
    if name == "jacobi":
        r = desnanot_jacobi_residual(B, *args)
        return r, r * 0
    raise ValueError(f"unknown identity {name!r}")


def perturbed(M, entries, theta):
    out = M.copy()
    for i, j in entries:
        out.data[i - 1][j - 1] = out.data[i - 1][j - 1] + theta
    return out


def theta_exchange_check(M, spec):
    """Evaluate the identity on the window of M(theta) as a polynomial in theta.

    Both sides are interpolated from ``degree + 2`` points, so a side of
    degree above the bound would show up as a nonzero top coefficient.
    Returns an :class:`IdentityReport` whose residual is the largest
    nonzero coefficient of LHS - RHS (zero when the identity holds).
    """
    ring = M.ring
    npts = spec.degree + 2
    lhs_vals, rhs_vals = [], []
    for t in range(npts):
        B = perturbed(M, spec.entries, ring.coerce(t)).sub(spec.rows, spec.cols)
        lhs, rhs = _sides(spec.identity, B, spec.args)
        lhs_vals.append(lhs)
        rhs_vals.append(rhs)
    lc = interpolate(lhs_vals)
    rc = interpolate(rhs_vals)
    diff = [x - y for x, y in zip(lc, rc)]
    within = not lc[-1] and not rc[-1]
    vanishes = not any(diff)
    degree = max((i for i, x in enumerate(lc) if x), default=-1)
    residual = next((x for x in reversed(diff) if x), ring.zero)
    meta = {
        "degree_bound": spec.degree,
        "lhs_degree": degree,
        "within_bound": within,
        "coefficient": spec.coefficient,
        "exchange_term_nonzero": bool(lc[spec.coefficient]) if spec.coefficient < len(lc) else False,
    }
    return IdentityReport(f"theta-{spec.identity}", spec.label, residual, vanishes and within, meta)


# ---------------------------------------------------------------------------
# randomized trial drivers


def random_matrix(rows, cols, rng_, ring=GF):
    return RingMatrix([[ring.random(rng_) for _ in range(cols)] for _ in range(rows)], ring, cols)


def jacobi_trial(rng_, max_n=6):
    n = rng_.randint(2, max_n)
    A = random_matrix(n, n, rng_)
    alpha, beta = sorted(rng_.sample(range(1, n + 1), 2))
    gamma, delta = sorted(rng_.sample(range(1, n + 1), 2))
    r = desnanot_jacobi_residual(A, alpha, beta, gamma, delta)
    return IdentityReport("jacobi", f"n={n} ({alpha},{beta},{gamma},{delta})", r, not r)


def plucker_trial(rng_, max_m=6):
    m = rng_.randint(2, max_m)
    B = random_matrix(m, m + 1, rng_)
    alpha, beta, gamma = sorted(rng_.sample(range(1, m + 2), 3))
    delta = rng_.randint(1, m)
    r = plucker_residual(B, alpha, beta, gamma, delta)
    return IdentityReport("plucker", f"m={m} ({alpha},{beta},{gamma},{delta})", r, not r)


def pluckpluck_trial(rng_, max_m=6):
    m = rng_.randint(3, max_m)
    B = random_matrix(m, m + 1, rng_)
    r = pluckpluck_residual(B)
    return IdentityReport("pluckpluck", f"m={m}", r, not r)


def longid_trial(rng_, k):
    A = random_matrix(k, k, rng_)
    u = [GF.random(rng_) for _ in range(k)]
    v = [GF.random(rng_) for _ in range(k)]
    r = long_identity_residual(A, u, v)
    return IdentityReport("longid", f"k={k}", r, not r)


def generic_matrix(rows, cols, prefix="m"):
    """A rows x cols matrix of independent indeterminates."""
    names = {(i - 1) * cols + (j - 1): f"{prefix}{i}_{j}" for i in range(1, rows + 1) for j in range(1, cols + 1)}
    P = PolyRing(rows * cols, names)
    return RingMatrix.from_function(rows, cols, lambda i, j: P.gen((i - 1) * cols + (j - 1)), P)


def symbolic_reports():
    """Identically-zero checks at small sizes: Jacobi (n = 3, 4, all index
    choices at n = 3), Pluecker (m = 2, 3), the corollary (m = 3) and the
    long identity (k = 2, 3)."""
    out = []
    A = generic_matrix(3, 3)
    for al, be in [(1, 2), (1, 3), (2, 3)]:
        for ga, de in [(1, 2), (1, 3), (2, 3)]:
            r = desnanot_jacobi_residual(A, al, be, ga, de)
            out.append(IdentityReport("jacobi", f"symbolic n=3 ({al},{be},{ga},{de})", r, not r))
    r = desnanot_jacobi_residual(generic_matrix(4, 4), 1, 4, 2, 3)
    out.append(IdentityReport("jacobi", "symbolic n=4 (1,4,2,3)", r, not r))
    for m in (2, 3):
        B = generic_matrix(m, m + 1)
        for d in range(1, m + 1):
            r = plucker_residual(B, 1, 2, 3, d)
            out.append(IdentityReport("plucker", f"symbolic m={m} (1,2,3,{d})", r, not r))
    r = pluckpluck_residual(generic_matrix(3, 4))
    out.append(IdentityReport("pluckpluck", "symbolic m=3", r, not r))
    for k in (2, 3):
        A = generic_matrix(k, k + 2)
        M = A.sub(rng(1, k), rng(1, k))
        u = [A[i, k + 1] for i in range(1, k + 1)]
        v = [A[i, k + 2] for i in range(1, k + 1)]
        r = long_identity_residual(M, u, v)
        out.append(IdentityReport("longid", f"symbolic k={k}", r, not r))
    return out
