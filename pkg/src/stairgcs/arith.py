"""Exact scalars: rationals, a large prime field, and sparse polynomials.

Three kinds of scalar are used throughout the package:

* rationals: plain ``int`` and ``fractions.Fraction`` values,
* prime-field elements: :class:`Fp`, residues modulo :data:`PRIME`,
* polynomials: :class:`Poly`, sparse with rational coefficients.

Each kind has a matching ring descriptor (:data:`QQ`, :data:`GF`,
:class:`PolyRing`) that knows its zero, one and how to coerce integers.
Matrix code is written against ordinary arithmetic operators plus
:func:`exact_div`, so it runs unchanged over any of the three.
"""

import heapq
import os
import re
from fractions import Fraction

# Mersenne prime 2^61 - 1; override with STAIRGCS_PRIME for experiments.
DEFAULT_PRIME = (1 << 61) - 1
PRIME = int(os.environ.get("STAIRGCS_PRIME", DEFAULT_PRIME))


class NotDivisible(ArithmeticError):
    """Raised when an exact division has no exact quotient."""


class MissingVariable(KeyError):
    """Raised when evaluating a polynomial at an incomplete assignment."""


# ---------------------------------------------------------------------------
# prime field


class Fp:
    """An element of the prime field of size :data:`PRIME`."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = int(v) % PRIME

    @staticmethod
    def _lift(other):
        if isinstance(other, Fp):
            return other.v
        if isinstance(other, int):
            return other % PRIME
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, PRIME) % PRIME
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Fp(self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Fp(self.v - o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.v)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Fp(self.v * o)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v)

    def __pos__(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in the prime field")
        return Fp(pow(self.v, PRIME - 2, PRIME))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * Fp(o).inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Fp(o) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.v, e, PRIME))

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.v == o

    def __hash__(self):
        return hash(("Fp", self.v))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v})"

    def __str__(self):
        return f"{self.v} mod {PRIME}"


# ---------------------------------------------------------------------------
# sparse polynomials
#
# A monomial is packed into one Python int: every variable gets a 16-bit
# field, and the total degree sits in the most significant field.  Product of
# monomials is then integer addition, and integer comparison is exactly the
# graded lexicographic order with variable 0 the largest.  The top bit of each
# field is kept clear and used as a guard for the divisibility test.

_W = 16
_FIELD = (1 << _W) - 1


class PolyRing:
    """Polynomials over the rationals in ``nvars`` indeterminates.

    ``names`` optionally maps a variable index to a printable name.
    """

    def __init__(self, nvars, names=None):
        self.nvars = nvars
        self.names = dict(names or {})
        self._deg_shift = nvars * _W
        self._guard = 0
        for i in range(nvars + 1):
            self._guard |= 1 << (i * _W + _W - 1)

    def __repr__(self):
        return f"PolyRing({self.nvars})"

    # -- monomial helpers
    def _shift(self, var):
        return (self.nvars - 1 - var) * _W

    def mono(self, exps):
        """Pack a ``{var: exponent}`` map into a monomial key."""
        key = 0
        total = 0
        for var, e in exps.items():
            if not 0 <= var < self.nvars:
                raise IndexError(f"variable {var} outside ring of size {self.nvars}")
            if e:
                key += e << self._shift(var)
                total += e
        return key + (total << self._deg_shift)

    def exponents(self, key):
        """Unpack a monomial key into ``{var: exponent}``."""
        out = {}
        body = key & ((1 << self._deg_shift) - 1)
        var = self.nvars - 1
        while body:
            e = body & _FIELD
            if e:
                out[var] = e
            body >>= _W
            var -= 1
        return out

    def divides(self, d, m):
        g = self._guard
        return ((m | g) - d) & g == g

    # -- element construction
    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return Poly(self, {0: 1})

    def coerce(self, c):
        if isinstance(c, Poly):
            if c.ring is not self:
                raise ValueError("mixing polynomials from different rings")
            return c
        return Poly(self, {0: c} if c else {})

    def gen(self, var):
        return Poly(self, {self.mono({var: 1}): 1})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def var_name(self, var):
        return self.names.get(var, f"v{var}")

    def name_index(self):
        return {name: var for var, name in self.names.items()}

    def parse(self, text):
        """Parse the canonical printed form produced by ``str(poly)``."""
        return parse_poly(self, text)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _cdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return _norm(Fraction(a) / Fraction(b))


class Poly:
    """Sparse multivariate polynomial with rational coefficients.

    Immutable by convention: ``terms`` maps packed monomial keys to nonzero
    ``int`` or ``Fraction`` coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise ValueError("mixing polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.coerce(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o.terms) > len(self.terms):
            big, small = o.terms, self.terms
        else:
            big, small = self.terms, o.terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if not a or not b:
            return Poly(self.ring, {})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            return Poly(self.ring, {m + mb: c * cb for m, c in a.items()})
        out = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                k = ma + mb
                out[k] = get(k, 0) + ca * cb
        return Poly(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __truediv__(self, other):
        return self.exact_div(other)

    # -- queries
    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant(self):
        return self.terms.get(0, 0)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.terms) >> self.ring._deg_shift

    def variables(self):
        out = set()
        for m in self.terms:
            out.update(self.ring.exponents(m))
        return out

    def leading(self):
        m = max(self.terms)
        return m, self.terms[m]

    # -- exact division
    def exact_div(self, other):
        """Return ``q`` with ``self == other * q`` or raise :class:`NotDivisible`."""
        if not isinstance(other, Poly):
            if other == 0:
                raise ZeroDivisionError("division by zero polynomial")
            return Poly(self.ring, {m: _cdiv(c, other) for m, c in self.terms.items()})
        o = self._coerce(other)
        if not o.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if len(o.terms) == 1:
            (mq, cq), = o.terms.items()
            ring = self.ring
            out = {}
            for m, c in self.terms.items():
                if not ring.divides(mq, m):
                    raise NotDivisible("monomial divisor does not divide")
                out[m - mq] = _cdiv(c, cq)
            return Poly(ring, out)
        return _long_divide(self, o)

    # -- evaluation
    def eval(self, assignment, one=1):
        """Evaluate at ``assignment`` (var index -> scalar)."""
        ring = self.ring
        total = one * 0
        powers = {}
        for m, c in self.terms.items():
            term = one * c
            for var, e in ring.exponents(m).items():
                key = (var, e)
                p = powers.get(key)
                if p is None:
                    try:
                        base = assignment[var]
                    except KeyError:
                        raise MissingVariable(var) from None
                    p = base ** e
                    powers[key] = p
                term = term * p
            total = total + term
        return total

    def subs(self, mapping):
        """Substitute polynomials (or scalars) for some variables."""
        ring = self.ring
        out = ring.zero
        for m, c in self.terms.items():
            term = ring.coerce(c)
            rest = {}
            for var, e in ring.exponents(m).items():
                if var in mapping:
                    term = term * (ring.coerce(mapping[var]) ** e)
                else:
                    rest[var] = e
            if rest:
                term = term * Poly(ring, {ring.mono(rest): 1})
            out = out + term
        return out

    # -- printing
    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            exps = ring.exponents(m)
            factors = []
            for var in sorted(exps):
                e = exps[var]
                name = ring.var_name(var)
                factors.append(name if e == 1 else f"{name}^{e}")
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{mag}*{body}"
            else:
                body = str(mag)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def _long_divide(p, q):
    ring = p.ring
    lm_q = max(q.terms)
    lc_q = q.terms[lm_q]
    rest = [(m, c) for m, c in q.terms.items() if m != lm_q]
    rem = dict(p.terms)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        m = -heapq.heappop(heap)
        c = rem.get(m)
        if c is None:
            continue
        # duplicate heap entries may remain for m; the dict check skips them
        if not ring.divides(lm_q, m):
            raise NotDivisible("leading monomial not divisible")
        t = m - lm_q
        ct = _cdiv(c, lc_q)
        quot[t] = ct
        del rem[m]
        for mq, cq in rest:
            k = t + mq
            old = rem.get(k)
            if old is None:
                rem[k] = -ct * cq
                heapq.heappush(heap, -k)
            else:
                v = old - ct * cq
                if v:
                    rem[k] = v
                else:
                    del rem[k]
    return Poly(ring, quot)


def poly_div_exact(p, q):
    """Exact quotient ``p / q``; raises :class:`NotDivisible` otherwise."""
    return p.exact_div(q)


def poly_eval(p, assignment, one=1):
    return p.eval(assignment, one)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(ring, text):
    index = ring.name_index()
    text = text.strip()
    if text == "0":
        return ring.zero
    out = ring.zero
    for sign, body in _TERM_RE.findall(text):
        coeff = Fraction(1)
        exps = {}
        for factor in body.strip().split("*"):
            factor = factor.strip()
            if not factor:
                continue
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, e = factor.partition("^")
            if name in index:
                var = index[name]
            elif re.fullmatch(r"v\d+", name):
                var = int(name[1:])
            else:
                raise ValueError(f"unknown variable {name!r}")
            exps[var] = exps.get(var, 0) + (int(e) if e else 1)
        if sign == "-":
            coeff = -coeff
        out = out + Poly(ring, {ring.mono(exps): _norm(coeff)})
    return out


# ---------------------------------------------------------------------------
# ring descriptors


class _Rationals:
    name = "rational"
    zero = 0
    one = 1
    is_field = True

    def coerce(self, c):
        return _norm(Fraction(c))

    def random(self, rng, bound=99):
        # small integers keep rational determinants readable
        return rng.randint(-bound, bound)

    def __repr__(self):
        return "QQ"


class _PrimeField:
    name = "prime-field"
    is_field = True

    @property
    def zero(self):
        return Fp(0)

    @property
    def one(self):
        return Fp(1)

    def coerce(self, c):
        if isinstance(c, Fp):
            return c
        return Fp(0) + c

    def random(self, rng):
        return Fp(rng.randrange(PRIME))

    def __repr__(self):
        return f"GF({PRIME})"


QQ = _Rationals()
GF = _PrimeField()

PolyRing.is_field = False
PolyRing.name = "symbolic"


def ring_of(x):
    """Best-effort ring descriptor for a scalar."""
    if isinstance(x, Fp):
        return GF
    if isinstance(x, (Poly, LFrac)):
        return x.ring
    return QQ


def exact_div(a, b):
    """Exact quotient ``a / b`` in whatever ring ``a`` and ``b`` live in."""
    if isinstance(a, LFrac) or isinstance(b, LFrac):
        if not isinstance(a, LFrac):
            a = b.ring.coerce(a)
        return a.exact_div(b)
    if isinstance(a, Poly) or isinstance(b, Poly):
        if not isinstance(a, Poly):
            a = b.ring.coerce(a)
        return a.exact_div(b)
    if isinstance(a, Fp) or isinstance(b, Fp):
        if b == 0:
            raise ZeroDivisionError("division by zero in the prime field")
        return a / b
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return _cdiv(a, b)


def is_zero(x):
    return not x


def random_assignment(variables, rng):
    """Independent uniform prime-field values for each variable index."""
    return {v: Fp(rng.randrange(PRIME)) for v in sorted(variables)}


# ---------------------------------------------------------------------------
# serialization


def scalar_to_str(x):
    if isinstance(x, Fp):
        return str(x)
    if isinstance(x, (Poly, LFrac)):
        return str(x)
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def scalar_from_str(text, ring=QQ):
    text = text.strip()
    if isinstance(ring, PolyRing):
        return ring.parse(text)
    if " mod " in text:
        r, _, p = text.partition(" mod ")
        if int(p) != PRIME:
            raise ValueError(f"modulus {p} differs from active prime {PRIME}")
        return Fp(int(r))
    value = _norm(Fraction(text))
    if ring is GF:
        return GF.coerce(value)
    return value


# ---------------------------------------------------------------------------
# polynomials localized at a few fixed denominators


class LocalRing:
    """Polynomials with a fixed finite set of allowed denominators ("atoms").

    Elements are ``num / prod(atom_j ** e_j)``.  No gcds are ever taken:
    since every atom is nonzero, an element is zero exactly when its
    numerator is, which is all that identity checking needs.  Used to run
    the staircase formulas that involve ``Y^{-1}`` on symbolic inputs.
    """

    is_field = False
    name = "symbolic"

    def __init__(self, polyring, atoms=()):
        self.poly = polyring
        self.atoms = []
        for a in atoms:
            self.add_atom(a)

    def add_atom(self, atom):
        atom = self.poly.coerce(atom)
        if not atom:
            raise ZeroDivisionError("zero cannot be a denominator")
        if atom.is_constant():
            return None
        for j, a in enumerate(self.atoms):
            if a == atom:
                return j
        self.atoms.append(atom)
        return len(self.atoms) - 1

    def __repr__(self):
        return f"LocalRing({self.poly!r}, atoms={len(self.atoms)})"

    def _den(self, exps=()):
        exps = tuple(exps)
        return exps + (0,) * (len(self.atoms) - len(exps))

    @property
    def zero(self):
        return LFrac(self, self.poly.zero, ())

    @property
    def one(self):
        return LFrac(self, self.poly.one, ())

    def coerce(self, c):
        if isinstance(c, LFrac):
            return c
        return LFrac(self, self.poly.coerce(c), ())

    def gen(self, var):
        return LFrac(self, self.poly.gen(var), ())

    def atom_power(self, exps):
        out = self.poly.one
        for a, e in zip(self.atoms, exps):
            if e:
                out = out * a ** e
        return out

    def strip_atoms(self, p):
        """Write ``p = rest * prod(atom ** e)`` greedily; returns ``(rest, e)``."""
        exps = [0] * len(self.atoms)
        changed = True
        while changed and not p.is_constant():
            changed = False
            for j, a in enumerate(self.atoms):
                if a.degree() > p.degree():
                    continue
                try:
                    p = p.exact_div(a)
                except NotDivisible:
                    continue
                exps[j] += 1
                changed = True
        return p, exps

    def promote(self, x):
        """Rewrite ``x`` as a pure atom monomial when its numerator is one.

        Multiplying by the promoted form only shifts exponents, so repeated
        products with det Y and friends never grow numerators.
        """
        x = self.coerce(x)
        if x.num.is_constant():
            return x
        for sign in (1, -1):
            for j, a in enumerate(self.atoms):
                if x.num == a * sign:
                    den = list(self._den(x.den))
                    den[j] -= 1
                    return LFrac(self, self.poly.coerce(sign), den)
        return x

    def reciprocal(self, x):
        x = self.coerce(x)
        rest, exps = self.strip_atoms(x.num)
        if not rest.is_constant() or not rest:
            raise NotDivisible("denominator is not a product of registered atoms")
        c = rest.constant()
        den = [e - d for e, d in zip(exps, self._den(x.den))]
        return LFrac(self, self.poly.coerce(_cdiv(1, c)), den).reduced()


class LFrac:
    """``num * prod(atom_j ** -den_j)``; negative ``den`` entries are factors."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring, num, den):
        self.ring = ring
        self.num = num
        # trailing zeros are dropped so equal denominators compare equal
        den = tuple(den)
        while den and den[-1] == 0:
            den = den[:-1]
        self.den = den

    def _coerce(self, other):
        if isinstance(other, LFrac):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return self.ring.coerce(other)
        return None

    def _common(self, other):
        if self.den == other.den:
            return self.num, other.num, self.den
        n = max(len(self.den), len(other.den))
        da = self.den + (0,) * (n - len(self.den))
        db = other.den + (0,) * (n - len(other.den))
        m = tuple(max(x, y) for x, y in zip(da, db))
        ring = self.ring
        na = self.num * ring.atom_power([x - y for x, y in zip(m, da)])
        nb = other.num * ring.atom_power([x - y for x, y in zip(m, db)])
        return na, nb, m

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        na, nb, d = self._common(o)
        return LFrac(self.ring, na + nb, d)

    __radd__ = __add__

    def __neg__(self):
        return LFrac(self.ring, -self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Fraction):
                return LFrac(self.ring, self.num * other, self.den)
            return NotImplemented
        if not self.num or not o.num:
            return self.ring.zero
        n = max(len(self.den), len(o.den))
        da = self.den + (0,) * (n - len(self.den))
        db = o.den + (0,) * (n - len(o.den))
        return LFrac(self.ring, self.num * o.num, tuple(x + y for x, y in zip(da, db)))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.ring.reciprocal(self) ** (-e)
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other):
        return self.exact_div(other)

    def exact_div(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return LFrac(self.ring, self.num.exact_div(other), self.den)
        o = self._coerce(other)
        ring = self.ring
        rest, exps = ring.strip_atoms(o.num)
        q = self.num.exact_div(rest)
        da, db = ring._den(self.den), ring._den(o.den)
        return LFrac(ring, q, [x + e - y for x, e, y in zip(da, exps, db)])

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        na, nb, _ = self._common(o)
        return na == nb

    def __hash__(self):
        return hash(self.den)

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return not any(e > 0 for e in self.den)

    def reduced(self):
        """Cancel registered atoms shared by numerator and denominator."""
        if not any(self.den) or not self.num:
            return LFrac(self.ring, self.num, ()) if not self.num else self
        num = self.num
        den = list(self.den)
        for j, e in enumerate(den):
            atom = self.ring.atoms[j]
            while den[j] > 0 and atom.degree() <= num.degree():
                try:
                    num = num.exact_div(atom)
                except NotDivisible:
                    break
                den[j] -= 1
        return LFrac(self.ring, num, den)

    def to_poly(self):
        """The polynomial value; raises :class:`NotDivisible` if there is none."""
        ring = self.ring
        num = self.num
        up = [max(-e, 0) for e in self.den]
        down = [max(e, 0) for e in self.den]
        if any(up):
            num = num * ring.atom_power(up)
        if any(down):
            num = num.exact_div(ring.atom_power(down))
        return num

    def eval(self, assignment, one=1):
        value = self.num.eval(assignment, one)
        for atom, e in zip(self.ring.atoms, self.den):
            if e:
                value = value * atom.eval(assignment, one) ** (-e)
        return value

    def __str__(self):
        if not any(self.den):
            return str(self.num)
        parts = [f"A{j}^{e}" if e > 1 else f"A{j}" for j, e in enumerate(self.den) if e]
        return f"({self.num}) / ({'*'.join(parts)})"

    __repr__ = __str__


def interpolate(values):
    """Coefficients c_0..c_d of the polynomial taking ``values[t]`` at t = 0..d.

    Newton divided differences on the integer nodes, then expansion to the
    monomial basis.  Works over any ring containing the rationals.
    """
    d = len(values) - 1
    coef = list(values)
    for level in range(1, d + 1):
        for t in range(d, level - 1, -1):
            coef[t] = (coef[t] - coef[t - 1]) * Fraction(1, level)
    # Newton form: sum coef[t] * x (x-1) ... (x-t+1)
    zero = values[0] * 0
    out = [zero] * (d + 1)
    for t in range(d, -1, -1):
        # out = out * (x - t) + coef[t]
        shifted = [zero] + out[:-1]
        out = [s - o * t for s, o in zip(shifted, out)]
        out[0] = out[0] + coef[t]
    return out
