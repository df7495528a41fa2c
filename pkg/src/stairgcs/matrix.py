"""Dense exact matrices over any scalar ring, with 1-based index helpers.

Public indices are 1-based so that ``M.sub(rng(2, n), rng(2, n))`` reads
like the usual ``M_{[2,n]}^{[2,n]}`` notation.  Storage is 0-based.
"""

from fractions import Fraction

from .arith import GF, PRIME, QQ, Fp, PolyRing, exact_div, ring_of, scalar_from_str, scalar_to_str


class MatrixError(ValueError):
    pass


class IndexOutOfRange(MatrixError, IndexError):
    pass


class NotSquare(MatrixError):
    pass


class DimensionMismatch(MatrixError):
    pass


class Singular(ZeroDivisionError):
    """Raised when an inverse or a solve meets a zero determinant."""


def rng(first, last):
    """The 1-based closed range ``[first, last]`` as a list (empty if last < first)."""
    return list(range(first, last + 1))


class RingMatrix:
    """Immutable dense matrix; ``data`` is a list of row lists."""

    __slots__ = ("rows", "cols", "data", "ring")

    def __init__(self, data, ring=None, cols=None):
        data = [list(r) for r in data]
        self.rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        self.cols = cols
        self.data = data
        if ring is None:
            ring = ring_of(data[0][0]) if data and cols else QQ
        self.ring = ring

    # -- constructors
    @classmethod
    def zeros(cls, rows, cols, ring=QQ):
        return cls([[ring.zero] * cols for _ in range(rows)], ring, cols)

    @classmethod
    def identity(cls, n, ring=QQ):
        m = cls.zeros(n, n, ring)
        for i in range(n):
            m.data[i][i] = ring.one
        return m

    @classmethod
    def from_function(cls, rows, cols, fn, ring=QQ):
        """Build from ``fn(i, j)`` with 1-based ``i, j``."""
        return cls([[fn(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)], ring, cols)

    @classmethod
    def diag(cls, values, ring=QQ):
        m = cls.zeros(len(values), len(values), ring)
        for i, v in enumerate(values):
            m.data[i][i] = v
        return m

    @classmethod
    def from_columns(cls, columns, ring=QQ):
        if not columns:
            return cls([], ring, 0)
        n = len(columns[0])
        return cls([[c[i] for c in columns] for i in range(n)], ring, len(columns))

    # -- access
    def __getitem__(self, ij):
        i, j = ij
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexOutOfRange(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return self.data[i - 1][j - 1]

    def with_entry(self, i, j, value):
        out = self.copy()
        out.data[i - 1][j - 1] = value
        return out

    def copy(self):
        return RingMatrix([list(r) for r in self.data], self.ring, self.cols)

    def row(self, i):
        return list(self.data[i - 1])

    def column(self, j):
        return [r[j - 1] for r in self.data]

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self):
        return self.rows == self.cols

    def sub(self, rows=None, cols=None):
        """Submatrix on 1-based strictly increasing ``rows`` and ``cols`` (None = all)."""
        rows = rng(1, self.rows) if rows is None else list(rows)
        cols = rng(1, self.cols) if cols is None else list(cols)
        for idx, bound in ((rows, self.rows), (cols, self.cols)):
            for t, v in enumerate(idx):
                if not 1 <= v <= bound:
                    raise IndexOutOfRange(f"index {v} outside 1..{bound}")
                if t and idx[t - 1] >= v:
                    raise IndexOutOfRange("indices must be strictly increasing")
        return RingMatrix([[self.data[i - 1][j - 1] for j in cols] for i in rows], self.ring, len(cols))

    def delete(self, rows=(), cols=()):
        """Submatrix with the listed 1-based rows and columns removed."""
        rows, cols = set(rows), set(cols)
        for v in rows:
            if not 1 <= v <= self.rows:
                raise IndexOutOfRange(f"row {v} outside 1..{self.rows}")
        for v in cols:
            if not 1 <= v <= self.cols:
                raise IndexOutOfRange(f"column {v} outside 1..{self.cols}")
        keep_r = [i for i in rng(1, self.rows) if i not in rows]
        keep_c = [j for j in rng(1, self.cols) if j not in cols]
        return self.sub(keep_r, keep_c)

    # -- arithmetic
    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return RingMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.ring, self.cols)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return RingMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.ring, self.cols)

    def __neg__(self):
        return RingMatrix([[-a for a in r] for r in self.data], self.ring, self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        zero = self.ring.zero
        ocols = list(zip(*other.data)) if other.rows else [()] * other.cols
        out = []
        for r in self.data:
            row = []
            for c in ocols:
                s = zero
                for a, b in zip(r, c):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return RingMatrix(out, self.ring, other.cols)

    def scale(self, c):
        return RingMatrix([[c * a for a in r] for r in self.data], self.ring, self.cols)

    def transpose(self):
        return RingMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)], self.ring, self.rows)

    @property
    def T(self):
        return self.transpose()

    def apply(self, vec):
        """Matrix times column vector (a list)."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length")
        zero = self.ring.zero
        out = []
        for r in self.data:
            s = zero
            for a, b in zip(r, vec):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def rapply(self, vec):
        """Row vector (a list) times matrix."""
        if len(vec) != self.rows:
            raise DimensionMismatch("vector length")
        zero = self.ring.zero
        out = [zero] * self.cols
        for a, r in zip(vec, self.data):
            if a:
                out = [s + a * b if b else s for s, b in zip(out, r)]
        return out

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row counts")
        return RingMatrix([r + s for r, s in zip(self.data, other.data)], self.ring, self.cols + other.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatch("vstack column counts")
        return RingMatrix(self.data + other.data, self.ring, self.cols)

    def map(self, fn, ring=None):
        return RingMatrix([[fn(a) for a in r] for r in self.data], ring or self.ring, self.cols)

    def is_zero(self):
        return not any(a for r in self.data for a in r)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for r, s in zip(self.data, other.data) for a, b in zip(r, s))

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __repr__(self):
        return f"RingMatrix({self.rows}x{self.cols}, {self.ring!r})"

    def __str__(self):
        cells = [[str(a) for a in r] for r in self.data]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    # -- linear algebra
    def det(self, method="auto"):
        return det(self, method)

    def inverse(self):
        return inverse(self)

    # -- serialization
    def to_json(self):
        return {"rows": self.rows, "cols": self.cols, "entries": [[scalar_to_str(a) for a in r] for r in self.data]}

    @classmethod
    def from_json(cls, obj, ring=QQ):
        data = [[scalar_from_str(s, ring) for s in r] for r in obj["entries"]]
        if len(data) != obj["rows"]:
            raise DimensionMismatch("row count disagrees with entries")
        return cls(data, ring, obj["cols"])


# ---------------------------------------------------------------------------
# determinants


def det(M, method="auto"):
    """Exact determinant.

    ``method`` is one of ``auto``, ``gauss`` (fields), ``bareiss``
    (fraction-free, any integral domain), ``minors`` (division-free
    expansion with memoized minors) or ``cofactor`` (plain Laplace, small
    sizes only).  ``auto`` picks Gaussian elimination on raw residues for
    the prime field, Bareiss for rationals, and minor expansion for
    polynomials.
    """
    if not M.is_square():
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return M.ring.one
    if method == "auto":
        if M.ring is GF:
            method = "gauss"
        elif M.ring is QQ:
            method = "bareiss"
        else:
            method = "minors"
    if method == "gauss":
        if M.ring is GF:
            return Fp(_det_mod_p([[int(a) for a in r] for r in M.data], PRIME))
        return _det_gauss(M)
    if method == "bareiss":
        return _det_bareiss(M)
    if method == "minors":
        return _det_minors(M)
    if method == "cofactor":
        return _det_cofactor(M.data, M.ring)
    raise ValueError(f"unknown determinant method {method!r}")


def _det_mod_p(a, p):
    n = len(a)
    a = [[x % p for x in r] for r in a]
    d = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        pv = a[c][c]
        d = d * pv % p
        inv = pow(pv, p - 2, p)
        rowc = a[c]
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = f * inv % p
                rr = a[r]
                for j in range(c + 1, n):
                    if rowc[j]:
                        rr[j] = (rr[j] - f * rowc[j]) % p
    return d % p


def _det_gauss(M):
    a = [list(r) for r in M.data]
    n = len(a)
    d = M.ring.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return M.ring.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        pv = a[c][c]
        d = d * pv
        for r in range(c + 1, n):
            if a[r][c]:
                f = exact_div(a[r][c], pv)
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def _det_bareiss(M):
    a = [list(r) for r in M.data]
    n = len(a)
    one = M.ring.one
    sign = 1
    prev = one
    for c in range(n - 1):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return M.ring.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pv = a[c][c]
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                a[r][j] = exact_div(a[r][j] * pv - a[r][c] * a[c][j], prev)
            a[r][c] = M.ring.zero
        prev = pv
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def _det_minors(M):
    """Division-free determinant by column-wise expansion over row subsets.

    ``layer`` maps a bitmask of used rows to the determinant of those rows
    against the leading columns; zero entries are skipped, which keeps the
    work small for the sparse structured matrices used here.
    """
    a = M.data
    n = M.rows
    layer = {0: M.ring.one}
    for c in range(n):
        nxt = {}
        for mask, val in layer.items():
            # sign of inserting row i: number of used rows above i
            above = 0
            for i in range(n):
                bit = 1 << i
                if mask & bit:
                    above += 1
                    continue
                x = a[i][c]
                if not x:
                    continue
                # expansion along column c of the (c+1)-row block: row i sits
                # at position `above` among rows mask|bit, column c is last
                term = x * val
                if (c - above) & 1:
                    term = -term
                key = mask | bit
                old = nxt.get(key)
                nxt[key] = term if old is None else old + term
        layer = {m: v for m, v in nxt.items() if v}
        if not layer:
            return M.ring.zero
    return layer.get((1 << n) - 1, M.ring.zero)


def trailing_minors(M):
    """All trailing principal minors ``det M_{[i,N]}^{[i,N]}`` for i = 1..N+1.

    Returned as a list indexed so that ``out[i - 1]`` is the i-th minor; the
    last entry (i = N+1) is 1.  Over the prime field every minor is a
    separate elimination; otherwise one right-to-left expansion pass
    produces them all.
    """
    if not M.is_square():
        raise NotSquare("trailing minors of a non-square matrix")
    n = M.rows
    one = M.ring.one
    if M.ring is GF or M.ring is QQ:
        return [det(M.sub(rng(i, n), rng(i, n))) for i in range(1, n + 1)] + [one]
    a = M.data
    out = [one]
    layer = {0: one}
    for c in range(n - 1, -1, -1):
        nxt = {}
        for mask, val in layer.items():
            above = 0
            for i in range(n):
                bit = 1 << i
                if mask & bit:
                    continue
                x = a[i][c]
                if x:
                    above = bin(mask & (bit - 1)).count("1")
                    term = x * val
                    if above & 1:
                        term = -term
                    key = mask | bit
                    old = nxt.get(key)
                    nxt[key] = term if old is None else old + term
        layer = {m: v for m, v in nxt.items() if v}
        full = ((1 << n) - 1) ^ ((1 << c) - 1)
        out.append(layer.get(full, M.ring.zero))
    return out[::-1]


def _det_cofactor(a, ring):
    n = len(a)
    if n == 0:
        return ring.one
    if n == 1:
        return a[0][0]
    total = ring.zero
    for j in range(n):
        if not a[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in a[1:]]
        term = a[0][j] * _det_cofactor(minor, ring)
        total = total - term if j & 1 else total + term
    return total


def inverse(M):
    """Exact inverse over a field (rationals or prime field)."""
    if not M.is_square():
        raise NotSquare("inverse of a non-square matrix")
    if hasattr(M.ring, "reciprocal"):
        d = det(M)
        if not d:
            raise Singular("matrix is singular")
        inv = adjugate(M).scale(M.ring.reciprocal(d))
        return inv.map(lambda x: x.reduced()) if hasattr(d, "reduced") else inv
    if isinstance(M.ring, PolyRing):
        raise MatrixError("inverse over a polynomial ring is not supported")
    n = M.rows
    one, zero = M.ring.one, M.ring.zero
    a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(M.data)]
    if M.ring is QQ:
        a = [[Fraction(x) for x in r] for r in a]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise Singular("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    data = [r[n:] for r in a]
    if M.ring is QQ:
        data = [[x.numerator if x.denominator == 1 else x for x in r] for r in data]
    return RingMatrix(data, M.ring, n)


def adjugate(M):
    """Classical adjoint: ``adjugate(M) @ M == det(M) * I``."""
    if not M.is_square():
        raise NotSquare("adjugate of a non-square matrix")
    n = M.rows
    out = [[None] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = det(M.delete([i], [j]))
            out[j - 1][i - 1] = -c if (i + j) & 1 else c
    return RingMatrix(out, M.ring, n)


def solve(M, rhs):
    """Solve ``M x = rhs`` for a column vector over a field."""
    return inverse(M).apply(rhs)


def unit_vector(k, i, ring=QQ):
    """The 1-based unit vector e_i of length k."""
    return [ring.one if t == i - 1 else ring.zero for t in range(k)]


def matmul(A, B):
    return A @ B


def matadd(A, B):
    return A + B


def scalar_mul(c, A):
    return A.scale(c)


def submatrix(M, rows, cols):
    return M.sub(rows, cols)
