"""The worked seeds: the Drinfeld double of GL_n, periodic band matrices,
and the GL_6 example with two special vertices.

Grid coordinates are compiled to flat integer vertex ids; every seed keeps
the map in ``seed.meta["layout"]`` (id -> [row, col]) next to the label of
each vertex.

Both special-vertex strings are stored in the orientation in which the
generalized exchange polynomial of the quiver equals the right-hand side
of the core-determinant identity: with the edges as built here the r-th
term carries u_> = phi_2 to the power r, so p_r is the coefficient of
phi_2^r, i.e. c~_{d-r}.
"""

import random
from dataclasses import dataclass, field

from .arith import GF, PolyRing, exact_div, scalar_to_str
from .gcs import ONE, ExtendedSeed, GQuiver, Monomial, mutate
from .matrix import RingMatrix, det, rng, trailing_minors
from .report import Report
from .staircase import StaircaseData, core_matrix, pencil_coeffs, staircase_polyring, validate_shape, var_index


class BandDegenerate(ValueError):
    pass


class IndexInvalid(ValueError):
    pass


def _sign(e):
    return -1 if e & 1 else 1


# ---------------------------------------------------------------------------
# the double D(GL_n)


@dataclass
class DoubleLayout:
    n: int

    @property
    def rows(self):
        return 2 * self.n - 1

    def vid(self, i, j):
        return (i - 1) * self.n + (j - 1)

    @property
    def g11(self):
        return self.rows * self.n

    def ctilde(self, i):
        return self.g11 + i

    @property
    def special(self):
        return self.vid(2, 1)


def double_quiver(n):
    """Q_n: the (2n-1) x n grid, the g_11 vertex and n-1 isolated vertices."""
    if n < 3:
        raise ValueError("the double seed needs n >= 3")
    L = DoubleLayout(n)
    q = GQuiver()
    for i in range(1, L.rows + 1):
        for j in range(1, n + 1):
            frozen = i == 1 or (j == 1 and i > n)
            mult = n if (i, j) == (2, 1) else 1
            q.add_vertex(L.vid(i, j), frozen, mult)
    q.add_vertex(L.g11, True)
    for i in range(1, n):
        q.add_vertex(L.ctilde(i), True)

    def edge(a, b):
        if q.is_frozen(L.vid(*a)) and q.is_frozen(L.vid(*b)):
            return
        q.add_edge(L.vid(*a), L.vid(*b))

    for i in range(1, L.rows - 1 + 1):
        for j in range(1, n):
            edge((i, j), (i + 1, j + 1))
    for i in range(2, L.rows + 1):
        for j in range(2, n + 1):
            edge((i, j), (i, j - 1))
            edge((i, j), (i - 1, j))
    for i in range(2, n + 1):
        edge((i, 1), (i - 1, 1))
    # the dashed path (n+1,n) -> (3,1) -> (n+2,n) -> (4,1) -> ... -> (n,1) -> (2n-1,n)
    for m in range(3, n + 1):
        edge((n + m - 2, n), (m, 1))
        edge((m, 1), (n + m - 1, n))
    q.add_edge(L.g11, L.special)
    return q


def double_functions(n, X, Y):
    """The family F_n as a dict label -> value."""
    N = (n - 1) * n
    S = StaircaseData(n, n, 0, X, Y)
    phi = trailing_minors(core_matrix(S))
    out = {}
    for i in range(1, N - n + 2):
        out[f"phi{i}"] = phi[i - 1]
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            out[f"g{i}{j}"] = det(X.sub(rng(i, n), rng(j, j + n - i)))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            out[f"h{i}{j}"] = det(Y.sub(rng(i, i + n - j), rng(j, n)))
    c = pencil_coeffs(S)
    for i in range(1, n):
        out[f"c{i}"] = _sign(i * (n - 1)) * c[i]
    return out, phi


def double_attachment(n):
    """label -> grid position (or reserved id) for every function in F_n."""
    L = DoubleLayout(n)
    N = (n - 1) * n
    where = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            where[f"h{i}{j}"] = L.vid(i, j)
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            if (i, j) != (1, 1):
                where[f"g{i}{j}"] = L.vid(n + i - 1, j)
    where["g11"] = L.g11
    for k in range(0, n - 2):
        for i in range(1, n + 1):
            where[f"phi{k * n + i}"] = L.vid(i + k + 1, i)
    where[f"phi{N - n + 1}"] = L.vid(n, 1)
    for i in range(1, n):
        where[f"c{i}"] = L.ctilde(i)
    return where


def build_sigma_double(n, X, Y):
    """The seed Sigma_n evaluated at (X, Y) (prime field or polynomial entries)."""
    q = double_quiver(n)
    L = DoubleLayout(n)
    funcs, _ = double_functions(n, X, Y)
    where = double_attachment(n)
    if len(set(where.values())) != len(where) or set(where.values()) != set(q.vertices):
        raise AssertionError("attachment does not cover the quiver bijectively")
    values = {}
    for label, v in where.items():
        values[v] = funcs[label]
        q.vertices[v] = q.vertices[v].__class__(q.vertices[v].frozen, q.vertices[v].mult, label)
    string = (ONE,) + tuple(Monomial.var(L.ctilde(n - r)) for r in range(1, n)) + (ONE,)
    layout = {L.vid(i, j): [i, j] for i in range(1, L.rows + 1) for j in range(1, n + 1)}
    meta = {"model": "double", "n": n, "special": L.special, "layout": layout, "one": Y.ring.one}
    return ExtendedSeed(q, values, {L.special: string}, meta)


def generic_double(n):
    """Polynomial X, Y with independent entries x_ij, y_ij."""
    P = staircase_polyring(n)
    X = RingMatrix.from_function(n, n, lambda i, j: P.gen(var_index(n, "x", i, j)), P)
    Y = RingMatrix.from_function(n, n, lambda i, j: P.gen(var_index(n, "y", i, j)), P)
    return X, Y


def random_double(n, rng_, ring=GF):
    X = RingMatrix.from_function(n, n, lambda i, j: ring.random(rng_), ring)
    Y = RingMatrix.from_function(n, n, lambda i, j: ring.random(rng_), ring)
    return X, Y


# ---------------------------------------------------------------------------
# periodic band matrices


def band_polyring(k, n):
    names = {}
    for i in range(1, k + 2):
        for j in range(1, n + 1):
            names[(i - 1) * n + (j - 1)] = f"a{i}{j}" if n < 10 else f"a{i}_{j}"
    return PolyRing((k + 1) * n, names)


def generic_band(k, n):
    """Band entries a_ij as independent indeterminates, keyed by (i, j)."""
    P = band_polyring(k, n)
    return {(i, j): P.gen((i - 1) * n + (j - 1)) for i in range(1, k + 2) for j in range(1, n + 1)}, P


def random_band(k, n, rng_, ring=GF):
    return {(i, j): ring.random(rng_) for i in range(1, k + 2) for j in range(1, n + 1)}


def band_staircase(k, n, a, ring=None):
    """The pair (X, Y) of an n-periodic (k+1)-diagonal band matrix.

    Row r of the periodic matrix carries a_{1r}, ..., a_{k+1,r} in columns
    r-k, ..., r; entries left of column 1 fall into the X block.
    """
    if not 2 <= k < n:
        raise ValueError(f"need 2 <= k < n, got k={k}, n={n}")
    ring = ring or _ring_of_values(a)
    X = RingMatrix.zeros(n, n, ring)
    Y = RingMatrix.zeros(n, n, ring)
    for r in range(1, n + 1):
        for i in range(1, k + 2):
            c = r - k - 1 + i
            if c >= 1:
                Y.data[r - 1][c - 1] = a[i, r]
            else:
                X.data[r - 1][c + n - 1] = a[i, r]
    return validate_shape(n, k, 0, X, Y)


def _ring_of_values(a):
    from .arith import ring_of
    return ring_of(next(iter(a.values())))


def check_band(k, n, a):
    for j in range(1, n + 1):
        if not a[1, j] or not a[k + 1, j]:
            raise BandDegenerate(f"extreme diagonal entry vanishes at column {j}")


def _prod_of(values, one):
    out = one
    for v in values:
        out = out * v
    return out


def band_identity_report(k, n, a):
    """Band specializations of the staircase formulas at one point.

    Checks gamma = 0, det U and c_k against the extreme diagonals (with the
    sign (-1)^{k(n-1)}), phi_i = phi~_i a_12 ... a_1k, and the reduced
    exchange relation for phi~_1 (the k = 2 form when k = 2).
    """
    from .staircase import compute_U, context, phi1_star

    S = band_staircase(k, n, a)
    ring = S.ring
    one = ring.one
    ctx = context(S)
    m = (k - 1) * (n - 1)
    top = _prod_of([a[1, j] for j in range(1, n + 1)], one)
    bottom = _prod_of([a[k + 1, j] for j in range(1, n + 1)], one)
    mid = _prod_of([a[1, j] for j in range(2, k + 1)], one)
    sign = _sign(k * (n - 1))
    tphi = trailing_minors(core_matrix(S).sub(rng(1, m), rng(1, m))) + [one]
    t = lambda i: tphi[i - 1] if i <= m + 1 else one
    res = {}
    res["gamma"] = ctx.gamma
    res["det_U"] = det(ctx.U) * bottom - sign * top
    res["c_k"] = ctx.c[k] - sign * top
    res["phi_factor"] = sum((ctx.core[i] - t(i) * mid for i in range(1, m + 1)), ring.zero)
    ct = [_sign(i * (n - 1)) * ctx.c[i] for i in range(k + 1)]
    star = phi1_star(ctx)
    if k == 2:
        tstar = exact_div(star, ctx.det_Ybar)
        rhs = a[3, 1] * a[1, 2] * t(2) ** 2 + ct[1] * t(2) + exact_div(ct[2], a[1, 2]) * ctx.det_Ybar
    else:
        tstar = exact_div(star, mid ** (k - 1) * ctx.det_Ybar)
        rhs = a[k + 1, 1] * t(2) ** k
        for i in range(1, k + 1):
            rhs = rhs + ct[i] * ctx.det_Ybar ** (i - 1) * t(n + 1) ** i * t(2) ** (k - i)
    res["exchange"] = t(1) * tstar - rhs
    passed = all(not r for r in res.values())
    worst = next((r for r in res.values() if r), ring.zero)
    meta = {"k": k, "n": n, "residuals": {key: scalar_to_str(r) for key, r in res.items()},
            "sign_of_c_k": sign}
    return Report("band-identity", f"(k,n)=({k},{n})", worst, passed, meta)


@dataclass
class BandLayout:
    k: int
    n: int

    def vid(self, i, j):
        """Grid vertex (i, j), 0 <= i <= n-1, 1 <= j <= k+1."""
        return i * (self.k + 1) + (j - 1)

    def ctilde(self, i):
        return self.n * (self.k + 1) + i

    @property
    def special(self):
        return self.vid(1, self.k)

    def t_index(self, i, j):
        """phi~_t sits at (i, j) with t = (k - j)(n - 1) + i."""
        return (self.k - j) * (self.n - 1) + i


def band_quiver(k, n):
    L = BandLayout(k, n)
    q = GQuiver()
    for j in (1, k + 1):
        q.add_vertex(L.vid(0, j), True)
    for i in range(1, n):
        for j in range(1, k + 2):
            frozen = j in (1, k + 1)
            q.add_vertex(L.vid(i, j), frozen, k if (i, j) == (1, k) else 1)
    for i in range(1, k):
        q.add_vertex(L.ctilde(i), True)

    def edge(a, b, c=1):
        q.add_edge(L.vid(*a), L.vid(*b), c)

    for i in range(1, n - 1):
        for j in range(2, k + 1):
            edge((i, j), (i + 1, j))
            edge((i + 1, j), (i, j + 1))
    for i in range(1, n):
        for j in range(2, k + 1):
            if (i, j) != (1, k):
                edge((i, j), (i, j - 1))
    # dotted path (n-1,3) -> (1,2) -> (n-1,4) -> (1,3) -> ... -> (1,k-1) -> (n-1,k+1)
    for j in range(2, k):
        edge((n - 1, j + 1), (1, j))
        edge((1, j), (n - 1, j + 2))
    s = (1, k)
    for i in range(1, n):
        edge((i, k + 1), s, k - 1)
    edge(s, (0, k + 1))
    edge((0, 1), s)
    for i in range(1, n):
        if k == 2 and i == 1:
            edge(s, (1, 1))
        else:
            edge((i, 1), s)
    return q


def band_functions(k, n, a):
    """F_kn as a dict label -> value, plus the staircase data."""
    S = band_staircase(k, n, a)
    m = (k - 1) * (n - 1)
    Phi = core_matrix(S)
    tphi = trailing_minors(Phi.sub(rng(1, m), rng(1, m)))
    out = {f"tphi{i}": tphi[i - 1] for i in range(1, m + 1)}
    # c_k = (-1)^{k(n-1)} a_11 ... a_1n, so c~_k = a_11 ... a_1n and the
    # top-left frozen vertex carries a_11 itself
    out["a11"] = a[1, 1]
    for j in range(2, n + 1):
        out[f"a1{j}"] = a[1, j]
    for j in range(1, n + 1):
        out[f"a{k + 1}{j}"] = a[k + 1, j]
    c = pencil_coeffs(S)
    for i in range(1, k):
        out[f"c{i}"] = _sign(i * (n - 1)) * c[i]
    return out, S, tphi


def band_attachment(k, n):
    L = BandLayout(k, n)
    where = {"a11": L.vid(0, 1)}
    for i in range(1, n):
        where[f"a1{i + 1}"] = L.vid(i, 1)
    for i in range(0, n):
        where[f"a{k + 1}{i + 1}"] = L.vid(i, k + 1)
    for i in range(1, n):
        for j in range(2, k + 1):
            where[f"tphi{L.t_index(i, j)}"] = L.vid(i, j)
    for i in range(1, k):
        where[f"c{i}"] = L.ctilde(i)
    return where


def build_sigma_band(k, n, a):
    """The seed Sigma_kn at band entries ``a`` (dict (i, j) -> scalar)."""
    check_band(k, n, a)
    q = band_quiver(k, n)
    L = BandLayout(k, n)
    funcs, S, _ = band_functions(k, n, a)
    where = band_attachment(k, n)
    if len(set(where.values())) != len(where) or set(where.values()) != set(q.vertices):
        raise AssertionError("attachment does not cover the quiver bijectively")
    values = {}
    for label, v in where.items():
        values[v] = funcs[label]
        rec = q.vertices[v]
        q.vertices[v] = rec.__class__(rec.frozen, rec.mult, label)
    string = (ONE,) + tuple(Monomial.var(L.ctilde(k - r)) for r in range(1, k)) + (ONE,)
    layout = {L.vid(i, j): [i, j] for i in range(0, n) for j in range(1, k + 2) if L.vid(i, j) in q.vertices}
    meta = {"model": "band", "k": k, "n": n, "special": L.special, "layout": layout, "one": S.ring.one}
    return ExtendedSeed(q, values, {L.special: string}, meta)


# ---------------------------------------------------------------------------
# regularity: every mutable direction from the initial seed


def regularity_report(seed, label=""):
    """Mutate once in every mutable direction; each exchange must divide exactly.

    Meaningful in symbolic mode, where the values are polynomials in the
    matrix entries and exact division fails unless the new variable is a
    polynomial again.
    """
    from .arith import NotDivisible

    failures = []
    for v in seed.quiver.mutable():
        try:
            mutate(seed, v)
        except NotDivisible:
            failures.append(seed.quiver.vertices[v].label or v)
    meta = {"vertices": len(seed.quiver.mutable()), "failures": failures}
    return Report("regularity", label, len(failures), not failures, meta)


# ---------------------------------------------------------------------------
# dense principal minors and the finite-type exploration (k = 2)


def band_entry(k, n, a, r, c):
    """Entry (r, c) of the infinite n-periodic band matrix, any integers r, c."""
    m = c - r + k + 1
    if not 1 <= m <= k + 1:
        return None
    return a[m, (r - 1) % n + 1]


def yz_labels(n):
    """All (i, j) indexing dense principal minors of size < n."""
    out = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1) if (i, j) != (1, n)]
    out += [(i, j) for i in range(3, n + 1) for j in range(1, i - 1)]
    return out


def dense_principal_minor(a, n, i, j, ring=None):
    """x_[i,j]: the dense minor of the k = 2 band matrix whose diagonal is
    a_2i, a_2,i+1, ..., a_2j (indices cyclic when j < i)."""
    if (i, j) not in set(yz_labels(n)):
        raise IndexInvalid(f"no dense principal minor x_[{i},{j}] for n={n}")
    last = j if j >= i else j + n
    rows = list(range(i, last + 1))
    ring = ring or _ring_of_values(a)
    M = RingMatrix.from_function(
        len(rows), len(rows),
        lambda p, q: band_entry(2, n, a, rows[p - 1], rows[q - 1] - 1) or ring.zero, ring)
    return det(M)


FINGERPRINT_POINTS = 3


def fingerprint_points(variables, seed=20240531, count=FINGERPRINT_POINTS):
    r = random.Random(seed)
    return [{v: GF.random(r) for v in variables} for _ in range(count)]


def fingerprint(value, points):
    """Values of a polynomial at fixed random prime-field points."""
    if hasattr(value, "eval"):
        return tuple(int(GF.coerce(value.eval(p, GF.one))) for p in points)
    return tuple(int(GF.coerce(value)) for _ in points)


def yz_shift_cycle(n):
    """Special mutation, then (2,2), (3,2), ..., (n-1,2), as vertex ids."""
    L = BandLayout(2, n)
    return [L.special] + [L.vid(i, 2) for i in range(2, n)]


def yz_frozen_shift(n, q, times=1):
    """Relabel the frozen vertices of a k = 2 band quiver by the cyclic shift
    a_1j -> a_1,j+1, a_3j -> a_3,j+1 (applied ``times`` times)."""
    L = BandLayout(2, n)
    perm = {}
    for i in range(n):
        for j in (1, 3):
            perm[L.vid(i, j)] = L.vid((i + times) % n, j)
    move = lambda v: perm.get(v, v)
    # labels stay with the positions: only the edges move
    out = GQuiver(q.vertices)
    for (i, j), c in q.edges.items():
        out.add_edge(move(i), move(j), c)
    return out


def mutable_part(q):
    keep = set(q.mutable())
    return {e: c for e, c in q.edges.items() if e[0] in keep and e[1] in keep}


def yz_exploration(n, a=None):
    """Run the shift cycle n-1 times from Sigma_2n and match the collected
    mutable variables against the dense principal minors x_[i,j].

    With ``a`` omitted the band entries are indeterminates and matching is
    by exact polynomial equality (and, independently, by fingerprint).
    """
    if a is None:
        a, P = generic_band(2, n)
    seed = build_sigma_band(2, n, a)
    initial_quiver = seed.quiver
    collected = []
    for v in seed.quiver.mutable():
        collected.append(seed.values[v])
    cycle = yz_shift_cycle(n)
    # frozen values never move, so the frozen edges come back only after
    # relabelling a_ij -> a_i,j+1; the mutable part comes back literally
    quiver_back, mutable_back = [], []
    for t in range(1, n):
        for v in cycle:
            seed = mutate(seed, v)
            collected.append(seed.values[v])
        quiver_back.append(seed.quiver == yz_frozen_shift(n, initial_quiver, t))
        mutable_back.append(mutable_part(seed.quiver) == mutable_part(initial_quiver))
    minors = {ij: dense_principal_minor(a, n, *ij) for ij in yz_labels(n)}
    variables = sorted({var for x in a.values() if hasattr(x, "variables") for var in x.variables()})
    points = fingerprint_points(variables)
    # distinct variables, up to sign (minors are matched with their sign too)
    distinct = []
    for x in collected:
        if not any(x == y for y in distinct):
            distinct.append(x)
    matched = {}
    for x in distinct:
        hit = [ij for ij, m in minors.items() if m == x]
        matched[str(fingerprint(x, points))] = [list(ij) for ij in hit]
    fp_minors = {fingerprint(m, points) for m in minors.values()}
    fp_ok = all(fingerprint(x, points) in fp_minors for x in distinct)
    exact_ok = all(v for v in matched.values()) and len(distinct) == len(minors)
    meta = {
        "n": n,
        "collected": len(distinct),
        "expected": n * (n - 1),
        "all_matched": exact_ok,
        "fingerprints_matched": fp_ok,
        "quiver_restored": quiver_back,
        "mutable_part_restored": mutable_back,
        "matches": matched,
    }
    ok = exact_ok and fp_ok and all(quiver_back) and all(mutable_back) and len(distinct) == n * (n - 1)
    unmatched = sum(1 for v in matched.values() if not v)
    return Report("yz", f"n={n}", unmatched + abs(len(distinct) - n * (n - 1)), ok, meta)


def explore_orbit(seed, max_seeds=10000, points=None):
    """Breadth-first search of the exchange graph, seeds identified by the set
    of fingerprints of their mutable values.  Returns (clusters, variables)."""
    from collections import deque

    if points is None:
        raise ValueError("fingerprint points are required")
    mut = seed.quiver.mutable()

    def key(s):
        return frozenset(fingerprint(s.values[v], points) for v in mut)

    seen = {key(seed)}
    variables = {fingerprint(seed.values[v], points): seed.values[v] for v in mut}
    queue = deque([seed])
    while queue:
        s = queue.popleft()
        for v in mut:
            t = mutate(s, v)
            kt = key(t)
            variables.setdefault(fingerprint(t.values[v], points), t.values[v])
            if kt not in seen:
                seen.add(kt)
                if len(seen) > max_seeds:
                    raise RuntimeError(f"more than {max_seeds} clusters; not of finite type?")
                queue.append(t)
    return seen, variables


# ---------------------------------------------------------------------------
# the GL_6 example


@dataclass
class Gamma6Data:
    R: RingMatrix
    S: RingMatrix
    L1: StaircaseData
    L2: StaircaseData
    Phi1: RingMatrix
    Phi2: RingMatrix
    phi1: list
    phi2: list
    c11: object
    c21: object
    extra: dict = field(default_factory=dict)


def _minor(M, rows, cols):
    return det(M.sub(rows, cols))


def gamma6_pairs(R, S):
    """(X1, Y1) of shape (5,2,0) and (X2, Y2) of shape (7,6,4)."""
    ring = R.ring
    z = ring.zero
    X1 = RingMatrix.from_function(5, 5, lambda i, j: S[i + 3, j + 1] if i <= 2 else z, ring)

    def y1(i, j):
        if i <= 2:
            return R[i + 4, j] if j <= 2 else z
        return S[i - 2, j + 1]

    Y1 = RingMatrix.from_function(5, 5, y1, ring)
    X2 = RingMatrix.from_function(7, 7, lambda i, j: S[i + 1, j - 1] if i <= 2 and j >= 5 else z, ring)

    def y2(i, j):
        if i <= 6:
            return R[i, j] if j <= 6 else z
        return S[1, j - 1] if j >= 5 else z

    Y2 = RingMatrix.from_function(7, 7, y2, ring)
    return validate_shape(5, 2, 0, X1, Y1), validate_shape(7, 6, 4, X2, Y2)


def generic_gamma6():
    """R and S as 6 x 6 matrices of indeterminates r_ij, s_ij in one ring."""
    names = {i: f"{'rs'[i // 36]}{i % 36 // 6 + 1}{i % 6 + 1}" for i in range(72)}
    P = PolyRing(72, names)
    R = RingMatrix.from_function(6, 6, lambda i, j: P.gen((i - 1) * 6 + j - 1), P)
    S = RingMatrix.from_function(6, 6, lambda i, j: P.gen(36 + (i - 1) * 6 + j - 1), P)
    return R, S


def gamma6_cores(R, S):
    """(Phi_1, Phi_2) without the pencil data, cheap on symbolic input."""
    L1, L2 = gamma6_pairs(R, S)
    return core_matrix(L1), core_matrix(StaircaseData(7, 2, 0, L2.X, L2.Y))


def build_gamma6(R, S):
    """Both staircase pairs, their cores and middle pencil coefficients.

    The (7,6,4) core is 11 x 11 and block upper triangular: its leading
    7 x 7 block is Phi_2 and the complementary block is R_[3,6]^[1,4]
    (because rows 3..6 of X_2 vanish).  Phi_2 is also exactly the core of
    the same pair read with shape (7,2,0).
    """
    L1, L2 = gamma6_pairs(R, S)
    Phi1 = core_matrix(L1)
    Phi2 = core_matrix(StaircaseData(7, 2, 0, L2.X, L2.Y))
    c1 = pencil_coeffs(L1)
    c2 = pencil_coeffs(L2)
    return Gamma6Data(R, S, L1, L2, Phi1, Phi2, trailing_minors(Phi1), trailing_minors(Phi2), c1[1], c2[1],
                      {"pencil1": c1, "pencil2": c2, "core2_full": core_matrix(L2)})


def gamma_identity_residuals(G):
    """Residuals of the two exchange relations for phi_11 and phi_21, with
    phi^* taken from the general closed form for phi_1^*."""
    from .staircase import context, phi1_star

    R, S = G.R, G.S
    S46 = _minor(S, rng(1, 3), rng(4, 6))
    S26 = _minor(S, rng(1, 5), rng(2, 6))
    R12 = _minor(R, rng(5, 6), rng(1, 2))
    R14 = _minor(R, rng(3, 6), rng(1, 4))
    R26 = _minor(R, rng(2, 6), rng(2, 6))
    detR = det(R)
    r62, s16 = R[6, 2], S[1, 6]
    star1 = exact_div(phi1_star(context(G.L1)), S46)
    star2 = exact_div(phi1_star(context(G.L2)), R14 * s16)
    p1, p2 = G.phi1, G.phi2
    res1 = p1[0] * star1 - (S26 * S46 * r62 ** 2 + G.c11 * r62 * p1[1] + R12 * p1[1] ** 2)
    res2 = p2[0] * star2 - (s16 * S46 * R14 * R26 ** 2 + G.c21 * R26 * p2[1] + detR * p2[1] ** 2)
    return res1, res2, star1, star2


def standard_g(R, i, j):
    n = R.rows
    return _minor(R, rng(i, n), rng(j, j + n - i))


def standard_h(R, i, j):
    n = R.rows
    return _minor(R, rng(i, i + n - j), rng(j, n))


def gamma_frozen_residuals(R):
    """The same two relations at S = R, written through g_ij(R), h_ij(R)."""
    G = build_gamma6(R, R)
    _, _, star1, star2 = gamma_identity_residuals(G)
    g = lambda i, j: standard_g(R, i, j)
    h = lambda i, j: standard_h(R, i, j)
    p1, p2 = G.phi1, G.phi2
    res1 = p1[0] * star1 - (h(1, 2) * h(1, 4) * g(6, 2) ** 2 + G.c11 * g(6, 2) * p1[1] + g(5, 1) * p1[1] ** 2)
    res2 = p2[0] * star2 - (h(1, 6) * h(1, 4) * g(3, 1) * g(2, 2) ** 2 + G.c21 * g(2, 2) * p2[1] + g(1, 1) * p2[1] ** 2)
    return res1, res2


GAMMA_REMOVED_G = [(i + 1, i) for i in range(1, 6)] + [(6, 1)]
GAMMA_REMOVED_H = [(i, i + 2) for i in range(1, 5)] + [(1, 5), (2, 6)]


def gamma_family(R):
    """F_Gamma at (R, R) as label -> value, before deduplication."""
    G = build_gamma6(R, R)
    out = {}
    for i in range(1, 7):
        for j in range(1, i + 1):
            if (i, j) not in GAMMA_REMOVED_G:
                out[f"g{i}{j}"] = standard_g(R, i, j)
    for i in range(1, 7):
        for j in range(i + 1, 7):
            if (i, j) not in GAMMA_REMOVED_H:
                out[f"h{i}{j}"] = standard_h(R, i, j)
    for i in range(1, 5):
        out[f"phi1_{i}"] = G.phi1[i - 1]
    for i in range(1, 7):
        out[f"phi2_{i}"] = G.phi2[i - 1]
    return out


def gamma_family_size(points=FINGERPRINT_POINTS, seed=7):
    """|F_Gamma| after deduplication by fingerprints at random points."""
    r = random.Random(seed)
    prints = None
    for _ in range(points):
        R = RingMatrix.from_function(6, 6, lambda i, j: GF.random(r), GF)
        fam = gamma_family(R)
        vals = {lab: int(v) for lab, v in fam.items()}
        prints = {lab: (v,) for lab, v in vals.items()} if prints is None else {lab: prints[lab] + (vals[lab],) for lab in prints}
    return len(set(prints.values())), len(prints)


def gamma_star_seeds(R):
    """The two special vertices with their neighbours, at S = R.

    Only these stars are built; the rest of the quiver on the 6 x 6 grid is
    not reconstructed.  Orientation as for the other models: u_> = phi_i2.
    """
    G = build_gamma6(R, R)
    g = lambda i, j: standard_g(R, i, j)
    h = lambda i, j: standard_h(R, i, j)
    seeds = []
    specs = [
        (G.phi1[0], G.phi1[1], g(6, 2), [g(5, 1)], [h(1, 2), h(1, 4)], G.c11, "phi1_1"),
        (G.phi2[0], G.phi2[1], g(2, 2), [g(1, 1)], [h(1, 6), h(1, 4), g(3, 1)], G.c21, "phi2_1"),
    ]
    for x, up, down, vout, vin, coeff, label in specs:
        q = GQuiver()
        q.add_vertex(0, False, 2, label)
        q.add_vertex(1, False, 1, "u>")
        q.add_vertex(2, False, 1, "u<")
        q.add_vertex(3, True, 1, "c")
        values = {0: x, 1: up, 2: down, 3: coeff}
        q.add_edge(0, 1)
        q.add_edge(2, 0)
        vid = 4
        for f in vout:
            q.add_vertex(vid, True)
            q.add_edge(0, vid)
            values[vid] = f
            vid += 1
        for f in vin:
            q.add_vertex(vid, True)
            q.add_edge(vid, 0)
            values[vid] = f
            vid += 1
        string = (ONE, Monomial.var(3), ONE)
        seeds.append(ExtendedSeed(q, values, {0: string}, {"model": "gamma6-star", "one": R.ring.one}))
    return seeds


# ---------------------------------------------------------------------------
# theta-perturbed windows used by the regularity arguments


def _with_column(M, col, left=True):
    """M with an extra column (a list of length M.rows) on the left or right."""
    C = RingMatrix.from_function(M.rows, 1, lambda i, j: col[i - 1], M.ring)
    return C.hstack(M) if left else M.hstack(C)


def previous_column(S, Phi):
    """The column of the periodic matrix just left of the core: the last
    column of X (rows 2..n) next to the uppermost copy of Y, then zeros."""
    ring = Phi.ring
    return [S.X[r, S.n] for r in range(2, S.n + 1)] + [ring.zero] * (Phi.rows - S.n + 1)


def double_theta_cases(n, X, Y, fixed_row=False):
    """(label, matrix, PerturbationSpec) for the middle phi_i and the h_ii.

    phi_i, n+1 <= i <= N-1: the core with the previous column of the
    periodic matrix prepended (so every column index below is shifted by
    one), theta at ((n-1)^2+1, (n-1)^2-1), window rows [i-n, N] by columns
    [i-n-1, N].

    h_ii, 3 <= i <= n: [Phi e_N e_N] with theta at (i-1, n+1) and
    (N-1, N+1), window rows [i-2, N] by columns [i-1, N+2].  The first theta
    sits in the second row of the window; at i = n this is (n-1, n+1).  With
    ``fixed_row`` it is kept at row n-1 for every i, which raises the theta
    degree to 5 when i < n.  h_22: the same with the first row of Y (padded
    by zeros) on top.
    """
    from .identities import PerturbationSpec

    N = (n - 1) * n
    S = StaircaseData(n, n, 0, X, Y)
    Phi = core_matrix(S)
    ring = Phi.ring
    ext = _with_column(Phi, previous_column(S, Phi))
    cases = []
    for i in range(n + 1, N):
        spec = PerturbationSpec([((n - 1) ** 2 + 1, (n - 1) ** 2)], rng(i - n, N), rng(i - n, N + 1),
                                "pluckpluck", (), 3, 1, f"phi{i}")
        cases.append((f"phi{i}", ext, spec))
    eN = [ring.zero] * (N - 1) + [ring.one]
    bar = _with_column(_with_column(Phi, eN, left=False), eN, left=False)
    for i in range(3, n + 1):
        row = n - 1 if fixed_row else i - 1
        spec = PerturbationSpec([(row, n + 1), (N - 1, N + 1)], rng(i - 2, N), rng(i - 1, N + 2),
                                "pluckpluck", (), 4, 2, f"h{i}{i}")
        cases.append((f"h{i}{i}", bar, spec))
    top = RingMatrix.from_function(1, N + 2, lambda r, c: Y[1, c] if c <= n else ring.zero, ring)
    bar2 = top.vstack(bar)
    row = n if fixed_row else 2
    spec = PerturbationSpec([(row, n + 1), (N, N + 1)], rng(1, N + 1), rng(1, N + 2), "pluckpluck", (), 4, 2, "h22")
    cases.append(("h22", bar2, spec))
    return cases


def six_valent(q):
    """Mutable vertices with exactly six neighbours (counting each once)."""
    out = []
    for v in q.mutable():
        nb = set(q.out_edges(v)) | set(q.in_edges(v))
        if len(nb) == 6:
            out.append(v)
    return out


def band_theta_cases(k, n, a):
    """(label, matrix, PerturbationSpec) for every six-valent band vertex.

    The core gets the previous periodic column prepended, so a window that
    starts at column 0 is available; all column indices shift by one.
    """
    from .identities import PerturbationSpec

    S = band_staircase(k, n, a)
    Phi = core_matrix(S)
    ext = _with_column(Phi, previous_column(S, Phi))
    m = (k - 1) * (n - 1)
    L = BandLayout(k, n)
    q = band_quiver(k, n)
    pos = {L.vid(i, j): (i, j) for i in range(1, n) for j in range(2, k + 1)}
    base = (k - 2) * (n - 1)
    entries = [(base + i, base + i - 1) for i in range(1, n) if base + i - 2 >= 0]
    cases = []
    for v in six_valent(q):
        i, j = pos[v]
        r0 = (k - j - 1) * (n - 1) + i - 1
        if r0 < 1:
            raise IndexInvalid(f"window for ({i},{j}) starts at row {r0}")
        spec = PerturbationSpec(entries, rng(r0, m), rng(r0, m + 1), "pluckpluck", (), 3 * (n - 1), n - 1,
                                f"tphi{L.t_index(i, j)}")
        cases.append((f"({i},{j})", ext, spec))
    return cases
