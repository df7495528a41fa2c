"""Periodic staircase matrices: the core, its trailing minors, U and the
exchange relation for the core determinant.

A staircase instance is a pair of n x n matrices X, Y with

    X = [[0_{a x b}, *], [0, 0]],    Y = [[*, *], [0_{(n-a) x b}, *]],

and a > b + 1 >= 1.  The periodic block matrix with repeating block row
``[X Y]`` has ``k - 1 = a - b - 1`` inner diagonals.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import GF, LocalRing, PolyRing, exact_div, interpolate
from .matrix import RingMatrix, Singular, det, inverse, rng, trailing_minors, unit_vector
from .report import Report


class ShapeViolation(ValueError):
    pass


class SingularPoint(ZeroDivisionError):
    """An evaluation point lies on a singular locus (det Y = 0 and the like)."""


# Sign constants of the closed forms for phi_1, phi_2, phi_{n+1} and of the
# prefactor of phi_1^*, as functions of (n, k).  Checked against symbolic
# expansion at small types and random prime-field points at larger ones
# (tests/test_staircase.py); no correction was needed.
SIGNS = {
    "phi1": lambda n, k: (-1) ** (n * k * (k - 1) // 2),
    "phi2": lambda n, k: -((-1) ** (n * k * (k - 1) // 2)),
    "phi_last": lambda n, k: (-1) ** (n * (k - 2) * (k - 3) // 2),
    "long": lambda n, k: (-1) ** (k * (k - 1) // 2),
}


@dataclass(frozen=True)
class StaircaseData:
    n: int
    a: int
    b: int
    X: RingMatrix
    Y: RingMatrix

    @property
    def k(self):
        return self.a - self.b

    @property
    def size(self):
        """Side length (k - 1) n + b of the core."""
        return (self.k - 1) * self.n + self.b

    @property
    def ring(self):
        return self.Y.ring

    def to_json(self):
        return {"n": self.n, "a": self.a, "b": self.b, "X": self.X.to_json(), "Y": self.Y.to_json()}

    @classmethod
    def from_json(cls, obj, ring=GF):
        X = RingMatrix.from_json(obj["X"], ring)
        Y = RingMatrix.from_json(obj["Y"], ring)
        return validate_shape(obj["n"], obj["a"], obj["b"], X, Y)


def validate_shape(n, a, b, X, Y):
    """Check the staircase conditions and return a :class:`StaircaseData`."""
    if not (a > b + 1 >= 1):
        raise ShapeViolation(f"need a > b + 1 >= 1, got a={a}, b={b}")
    if a > n:
        raise ShapeViolation(f"need a <= n, got a={a}, n={n}")
    for name, M in (("X", X), ("Y", Y)):
        if M.shape != (n, n):
            raise ShapeViolation(f"{name} must be {n}x{n}, got {M.rows}x{M.cols}")
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            if X[i, j]:
                raise ShapeViolation(f"X[{i},{j}] must vanish (upper-left {a}x{b} block)")
    for i in range(a + 1, n + 1):
        for j in range(1, n + 1):
            if X[i, j]:
                raise ShapeViolation(f"X[{i},{j}] must vanish (rows below {a})")
        for j in range(1, b + 1):
            if Y[i, j]:
                raise ShapeViolation(f"Y[{i},{j}] must vanish (lower-left {n - a}x{b} block)")
    return StaircaseData(n, a, b, X, Y)


def free_entries(n, a, b):
    """The (matrix, i, j) positions left free by the staircase shape."""
    out = []
    for i in range(1, a + 1):
        for j in range(b + 1, n + 1):
            out.append(("x", i, j))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i > a and j <= b:
                continue
            out.append(("y", i, j))
    return out


def var_index(n, which, i, j):
    """Flat variable index: x_ij -> (i-1)n + (j-1), y_ij -> n^2 + (i-1)n + (j-1)."""
    base = 0 if which == "x" else n * n
    return base + (i - 1) * n + (j - 1)


def staircase_polyring(n):
    names = {}
    for which in "xy":
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                names[var_index(n, which, i, j)] = f"{which}{i}{j}" if n < 10 else f"{which}{i}_{j}"
    return PolyRing(2 * n * n, names)


def symbolic_staircase(n, a, b, ring=None):
    """Staircase instance whose free entries are independent indeterminates.

    The entries live in a :class:`LocalRing` so that ``Y^{-1}`` and friends
    can be formed; call :func:`localize` to register the denominators.
    """
    poly = staircase_polyring(n)
    ring = ring or LocalRing(poly)
    free = set(free_entries(n, a, b))

    def entry(which):
        def fn(i, j):
            if (which, i, j) in free:
                return ring.gen(var_index(n, which, i, j))
            return ring.zero
        return fn

    X = RingMatrix.from_function(n, n, entry("x"), ring)
    Y = RingMatrix.from_function(n, n, entry("y"), ring)
    S = validate_shape(n, a, b, X, Y)
    localize(S)
    return S


def localize(S):
    """Register det Y, det Y_2, det Ybar and c_k as allowed denominators."""
    ring = S.ring
    if not isinstance(ring, LocalRing):
        return
    for d in (det(S.Y), det(y2_block(S)), det(ybar(S))):
        ring.add_atom(d.to_poly())
    ring.add_atom(pencil_coeffs(S)[-1].to_poly())


def random_staircase(n, a, b, rng_, ring=GF):
    """Random instance over the prime field with the staircase zero pattern."""
    free = set(free_entries(n, a, b))

    def entry(which):
        return lambda i, j: ring.random(rng_) if (which, i, j) in free else ring.zero

    X = RingMatrix.from_function(n, n, entry("x"), ring)
    Y = RingMatrix.from_function(n, n, entry("y"), ring)
    return validate_shape(n, a, b, X, Y)


def specialize(S, assignment):
    """Evaluate a symbolic instance at a prime-field point."""
    ev = lambda e: GF.coerce(e.eval(assignment, GF.one)) if hasattr(e, "eval") else GF.coerce(e)
    return StaircaseData(S.n, S.a, S.b, S.X.map(ev, GF), S.Y.map(ev, GF))


# ---------------------------------------------------------------------------
# core and minors


@dataclass
class CoreMinors:
    Phi: RingMatrix
    phi: list = field(default_factory=list)

    def __getitem__(self, i):
        """1-based trailing minor; ``self[size + 1] == 1``."""
        return self.phi[i - 1]


def core_matrix(S):
    """The core: rows 2.. of each block row of the periodic matrix, cropped."""
    n, a, k = S.n, S.a, S.k
    N = S.size
    zero = S.ring.zero
    rows = []
    for t in range(1, k + 1):
        last_row = a if t == k else n
        for r in range(2, last_row + 1):
            row = [zero] * N
            for j in range(1, n + 1):
                cx = (t - 2) * n + j
                if 1 <= cx <= N:
                    row[cx - 1] = S.X[r, j]
                cy = (t - 1) * n + j
                if cy <= N:
                    row[cy - 1] = S.Y[r, j]
            rows.append(row)
    assert len(rows) == N == (k - 1) * (n - 1) + (a - 1)
    return RingMatrix(rows, S.ring, N)


def build_core(S):
    Phi = core_matrix(S)
    return CoreMinors(Phi, trailing_minors(Phi))


# ---------------------------------------------------------------------------
# blocks, U, pencil


def ybar(S):
    return S.Y.sub(rng(2, S.n), rng(2, S.n))


def y2_block(S):
    return S.Y.sub(rng(S.k + 1, S.a), rng(1, S.b))


def compute_U(S):
    """U = W11 - Y1 Y2^{-1} W21 where X Y^{-1} = [W; 0]."""
    n, a, b, k = S.n, S.a, S.b, S.k
    try:
        Yinv = inverse(S.Y)
    except (Singular, ZeroDivisionError) as exc:
        raise SingularPoint("det Y = 0") from exc
    W = (S.X @ Yinv).sub(rng(1, a), rng(1, a))
    W11 = W.sub(rng(1, k), rng(1, k))
    if b == 0:
        return W11
    W21 = W.sub(rng(k + 1, a), rng(1, k))
    Y1 = S.Y.sub(rng(1, k), rng(1, b))
    try:
        Y2inv = inverse(y2_block(S))
    except (Singular, ZeroDivisionError) as exc:
        raise SingularPoint("det Y2 = 0") from exc
    return W11 - Y1 @ Y2inv @ W21


def pencil_coeffs(S):
    """c_0..c_k with det(lam Y + mu X) = lam^(n-k) sum c_i mu^i lam^(k-i).

    Read off by evaluating det(Y + mu X) at mu = 0..k and interpolating.
    """
    values = [det(S.Y + S.X.scale(S.ring.coerce(mu))) for mu in range(S.k + 1)]
    return interpolate(values)


def pencil_value(c, n, k, lam, mu):
    return lam ** (n - k) * sum((ci * mu ** i * lam ** (k - i) for i, ci in enumerate(c)), lam * 0)


def gamma(Y):
    """gamma = det Y_{1 u [3,n]}^{[2,n]} / det Ybar."""
    n = Y.rows
    cols = rng(2, n)
    d = det(Y.sub(cols, cols))
    if not d:
        raise SingularPoint("det Ybar = 0")
    return exact_div(det(Y.sub([1] + rng(3, n), cols)), d)


# ---------------------------------------------------------------------------
# Krylov matrices


def mat_powers_apply(A, u, count):
    """[u, Au, ..., A^(count-1) u]."""
    out = []
    v = list(u)
    for _ in range(count):
        out.append(v)
        v = A.apply(v)
    return out


def krylov(A, u, v):
    """(K, K1, K2) for the k x k matrix A and vectors u, v."""
    k = A.rows
    if len(u) != k or len(v) != k or A.cols != k:
        raise ValueError("dimension mismatch in krylov")
    us = mat_powers_apply(A, u, k)
    K = RingMatrix.from_columns(us, A.ring)
    K1 = RingMatrix.from_columns([list(v)] + us[: k - 1], A.ring)
    K2 = RingMatrix.from_columns([A.apply(v)] + us[: k - 1], A.ring)
    return K, K1, K2


def adjoint_last_row(M):
    """Last row w of adj(M), so that w M = det(M) e_k^T."""
    k = M.rows
    if M.cols != k:
        raise ValueError("adjoint of a non-square matrix")
    w = []
    for j in range(1, k + 1):
        c = det(M.delete([j], [k]))
        w.append(-c if (j + k) & 1 else c)
    return w


def k_star(A, u, v):
    """Matrix with rows w, wA, ..., wA^(k-1), w the last adjugate row of K1."""
    _, K1, _ = krylov(A, u, v)
    w = adjoint_last_row(K1)
    rows = []
    for _ in range(A.rows):
        rows.append(w)
        w = A.rapply(w)
    return RingMatrix(rows, A.ring, A.rows)


# ---------------------------------------------------------------------------
# closed forms for phi_1, phi_2, phi_{n+1} and phi_1^*


@dataclass
class StaircaseContext:
    """Everything derived from one instance, computed once."""

    S: StaircaseData
    core: CoreMinors
    U: RingMatrix
    gamma: object
    v_gamma: list
    c: list
    det_Y: object
    det_Y2: object
    det_Ybar: object


def context(S):
    ring = S.ring
    core = build_core(S)
    det_Y = det(S.Y)
    det_Ybar = det(ybar(S))
    det_Y2 = det(y2_block(S))
    if not det_Y:
        raise SingularPoint("det Y = 0")
    if not det_Ybar:
        raise SingularPoint("det Ybar = 0")
    if not det_Y2:
        raise SingularPoint("det Y2 = 0")
    U = compute_U(S)
    g = gamma(S.Y)
    k = S.k
    e1, e2 = unit_vector(k, 1, ring), unit_vector(k, 2, ring)
    v_gamma = U.apply([x + g * y for x, y in zip(e2, e1)])
    c = pencil_coeffs(S)
    if hasattr(ring, "promote"):
        det_Y, det_Y2, det_Ybar = (ring.promote(d) for d in (det_Y, det_Y2, det_Ybar))
        c[k] = ring.promote(c[k])
    return StaircaseContext(S, core, U, g, v_gamma, c, det_Y, det_Y2, det_Ybar)


def _det_cols(cols, ring):
    return det(RingMatrix.from_columns(cols, ring))


def phi1_closed_form(ctx):
    S, U = ctx.S, ctx.U
    n, k, ring = S.n, S.k, S.ring
    cols = mat_powers_apply(U, unit_vector(k, 1, ring), k)[::-1]
    return SIGNS["phi1"](n, k) * ctx.det_Y ** (k - 1) * ctx.det_Y2 * _det_cols(cols, ring)


def phi2_closed_form(ctx):
    S, U = ctx.S, ctx.U
    n, k, ring = S.n, S.k, S.ring
    us = mat_powers_apply(U, unit_vector(k, 1, ring), k - 1)[::-1]
    first = mat_powers_apply(U, ctx.v_gamma, k - 1)[-1]
    return SIGNS["phi2"](n, k) * ctx.det_Y ** (k - 2) * ctx.det_Ybar * ctx.det_Y2 * _det_cols([first] + us, ring)


def phi_last_closed_form(ctx):
    """Closed form for phi_{n+1}; U^{k-3} v_gamma is taken as U^{k-2}(e2 + gamma e1)."""
    S, U = ctx.S, ctx.U
    n, k, ring = S.n, S.k, S.ring
    e1, e2 = unit_vector(k, 1, ring), unit_vector(k, 2, ring)
    w = [x + ctx.gamma * y for x, y in zip(e2, e1)]
    head = mat_powers_apply(U, e1, k - 1)[-1]
    second = mat_powers_apply(U, w, k - 1)[-1]
    tail = mat_powers_apply(U, e1, k - 2)[::-1]
    return SIGNS["phi_last"](n, k) * ctx.det_Y ** (k - 2) * ctx.det_Y2 * _det_cols([head, second] + tail, ring)


def phi1_star(ctx):
    """phi_1^* from det K^*(U^{-1}; e1, v_gamma) and the pencil coefficient c_k."""
    S = ctx.S
    n, k, ring = S.n, S.k, S.ring
    try:
        Uinv = inverse(ctx.U)
    except (Singular, ZeroDivisionError) as exc:
        raise SingularPoint("det U = 0") from exc
    Kst = k_star(Uinv, unit_vector(k, 1, ring), ctx.v_gamma)
    e1, e2 = SIGNS["phi1"](n, k), SIGNS["phi2"](n, k)
    sign = SIGNS["long"](n, k) * e1 * e2 ** k
    value = det(Kst) * ctx.c[k] ** ((k - 1) * (k - 2)) * ctx.det_Y2 ** (k - 1) * ctx.det_Ybar ** k
    return sign * value


def main_rhs(ctx):
    """sum_i c_i ((-1)^(n-1) det Ybar phi_{n+1})^i phi_2^(k-i)."""
    S = ctx.S
    n, k = S.n, S.k
    phi2 = ctx.core[2]
    phin1 = ctx.core[n + 1]
    t = (-1) ** (n - 1) * ctx.det_Ybar * phin1
    total = S.ring.zero
    for i, ci in enumerate(ctx.c):
        total = total + ci * t ** i * phi2 ** (k - i)
    return total


# ---------------------------------------------------------------------------
# checks

RETRY_BUDGET = 32


def _resampled(S, check, resample, budget):
    retries = 0
    while True:
        try:
            return check(S), retries
        except SingularPoint:
            if resample is None or retries >= budget:
                raise
            retries += 1
            S = resample()


def shape_label(S):
    return f"(n,a,b)=({S.n},{S.a},{S.b})"


def main_identity_sides(ctx):
    return ctx.core[1] * phi1_star(ctx), main_rhs(ctx)


def verify_main_identity(S, resample=None, budget=RETRY_BUDGET):
    """phi_1 phi_1^* - sum_i c_i ((-1)^(n-1) det Ybar phi_{n+1})^i phi_2^(k-i).

    ``resample`` (a zero-argument callable returning a fresh instance) is
    used when the point is singular, at most ``budget`` times.
    """
    def check(S):
        lhs, rhs = main_identity_sides(context(S))
        return lhs - rhs

    residual, retries = _resampled(S, check, resample, budget)
    return Report("main-identity", shape_label(S), residual, not residual, {"k": S.k, "retries": retries})


def detphi_residuals(ctx):
    return {
        "phi1": ctx.core[1] - phi1_closed_form(ctx),
        "phi2": ctx.core[2] - phi2_closed_form(ctx),
        "phi_n+1": ctx.core[ctx.S.n + 1] - phi_last_closed_form(ctx),
    }


def verify_detphi_forms(S, resample=None, budget=RETRY_BUDGET):
    """Closed forms of phi_1, phi_2 and phi_{n+1} in terms of U."""
    res, retries = _resampled(S, lambda S: detphi_residuals(context(S)), resample, budget)
    worst = next((r for r in res.values() if r), S.ring.zero)
    meta = {"retries": retries, "residuals": {name: not r for name, r in res.items()}}
    return Report("detphi", shape_label(S), worst, not any(res.values()), meta)


def verify_pencil(S, rng_, points=5):
    """det(lam Y + mu X) against lam^(n-k) sum c_i mu^i lam^(k-i) at random points,
    together with c_0 = det Y and c_k = det Y det U."""
    ring = S.ring
    c = pencil_coeffs(S)
    worst = ring.zero
    for _ in range(points):
        lam, mu = ring.random(rng_), ring.random(rng_)
        r = det(S.Y.scale(lam) + S.X.scale(mu)) - pencil_value(c, S.n, S.k, lam, mu)
        worst = worst or r
    r0 = c[0] - det(S.Y)
    rk = c[-1] - det(S.Y) * det(compute_U(S))
    meta = {"c0": not r0, "ck": not rk, "points": points}
    return Report("pencil", shape_label(S), worst or r0 or rk, not (worst or r0 or rk), meta)
