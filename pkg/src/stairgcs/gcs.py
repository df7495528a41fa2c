"""Quivers with multiplicities, extended seeds and generalized mutations.

A mutable vertex k of multiplicity d_k exchanges by

    x_k x_k' = sum_{r=0}^{d_k} p_{kr} u_>^r v_>^{[r]} u_<^{d_k-r} v_<^{[d_k-r]}

where u_> (u_<) is the product of mutable out- (in-) neighbours, and the
stable monomials v^{[r]} carry frozen neighbours to the power
floor(r * edges / d_k).  Quiver mutation adds, for every path i -> k -> j,
d_k edges i -> j when both ends are mutable and d_j (resp. d_i) edges when
i (resp. j) is frozen, then reverses the edges at k and cancels 2-cycles.
"""

import json
from dataclasses import dataclass, field

from .arith import GF, QQ, exact_div, scalar_from_str, scalar_to_str


class NotMutable(ValueError):
    pass


class ZeroClusterValue(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class Vertex:
    frozen: bool = False
    mult: int = 1
    label: str = ""


class GQuiver:
    """Directed multigraph with frozen flags and vertex multiplicities.

    ``vertices`` maps a hashable id to a :class:`Vertex`; ``edges`` maps an
    ordered pair to a positive edge count.
    """

    def __init__(self, vertices=None, edges=None):
        self.vertices = dict(vertices or {})
        self.edges = {}
        for (i, j), c in (edges or {}).items():
            if c:
                self.add_edge(i, j, c)

    def copy(self):
        q = GQuiver(self.vertices)
        q.edges = dict(self.edges)
        return q

    def add_vertex(self, v, frozen=False, mult=1, label=""):
        self.vertices[v] = Vertex(frozen, mult, label)

    def add_edge(self, i, j, count=1):
        if i not in self.vertices or j not in self.vertices:
            raise KeyError(f"edge {i}->{j} between unknown vertices")
        if i == j:
            raise ValueError("loops are not allowed")
        c = self.edges.get((i, j), 0) + count
        if c:
            self.edges[(i, j)] = c
        else:
            self.edges.pop((i, j), None)

    def count(self, i, j):
        return self.edges.get((i, j), 0)

    def is_frozen(self, v):
        return self.vertices[v].frozen

    def mult(self, v):
        return self.vertices[v].mult

    def mutable(self):
        return [v for v, rec in self.vertices.items() if not rec.frozen]

    def frozen(self):
        return [v for v, rec in self.vertices.items() if rec.frozen]

    def isolated(self):
        touched = {v for e in self.edges for v in e}
        return [v for v in self.vertices if v not in touched]

    def special(self):
        return [v for v, rec in self.vertices.items() if not rec.frozen and rec.mult > 1]

    def out_edges(self, k):
        return {j: c for (i, j), c in self.edges.items() if i == k}

    def in_edges(self, k):
        return {i: c for (i, j), c in self.edges.items() if j == k}

    def has_two_cycles(self):
        return any((j, i) in self.edges and not (self.is_frozen(i) and self.is_frozen(j)) for (i, j) in self.edges)

    def mutate(self, k):
        """Quiver mutation at mutable vertex k (returns a new quiver)."""
        if self.vertices[k].frozen:
            raise NotMutable(f"vertex {k} is frozen")
        q = self.copy()
        ins = self.in_edges(k)
        outs = self.out_edges(k)
        for i, ci in ins.items():
            fi = self.is_frozen(i)
            for j, cj in outs.items():
                if i == j:
                    continue
                fj = self.is_frozen(j)
                if fi and fj:
                    continue
                if not fi and not fj:
                    factor = self.mult(k)
                elif fi:
                    factor = self.mult(j)
                else:
                    factor = self.mult(i)
                q.add_edge(i, j, ci * cj * factor)
        for (i, j), c in list(q.edges.items()):
            if k in (i, j):
                del q.edges[(i, j)]
        for i, c in ins.items():
            q.edges[(k, i)] = c
        for j, c in outs.items():
            q.edges[(j, k)] = c
        q._cancel_two_cycles()
        return q

    def _cancel_two_cycles(self):
        for (i, j) in list(self.edges):
            if (i, j) not in self.edges or (j, i) not in self.edges:
                continue
            if self.is_frozen(i) and self.is_frozen(j):
                continue
            a, b = self.edges[(i, j)], self.edges[(j, i)]
            m = min(a, b)
            self.add_edge(i, j, -m)
            self.add_edge(j, i, -m)

    def __eq__(self, other):
        return isinstance(other, GQuiver) and self.vertices == other.vertices and self.edges == other.edges

    def __repr__(self):
        return f"GQuiver({len(self.vertices)} vertices, {sum(self.edges.values())} edges)"

    # -- export
    def to_json(self):
        return {
            "vertices": [{"id": v, "frozen": r.frozen, "multiplicity": r.mult, "label": r.label} for v, r in self.vertices.items()],
            "edges": [{"from": i, "to": j, "count": c} for (i, j), c in sorted(self.edges.items(), key=lambda e: (str(e[0][0]), str(e[0][1])))],
        }

    @classmethod
    def from_json(cls, obj):
        q = cls()
        for rec in obj["vertices"]:
            q.add_vertex(rec["id"], rec.get("frozen", False), rec.get("multiplicity", 1), rec.get("label", ""))
        for rec in obj["edges"]:
            q.add_edge(rec["from"], rec["to"], rec.get("count", 1))
        return q

    def to_dot(self, name="Q"):
        lines = [f"digraph {name} {{"]
        for v, r in self.vertices.items():
            shape = "box" if r.frozen else ("doublecircle" if r.mult > 1 else "circle")
            label = r.label or str(v)
            if r.mult > 1:
                label += f" [{r.mult}]"
            lines.append(f'  "{v}" [shape={shape}, label="{label}"];')
        for (i, j), c in self.edges.items():
            attr = f' [label="{c}"]' if c > 1 else ""
            lines.append(f'  "{i}" -> "{j}"{attr};')
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Monomial:
    """``coeff * prod(x_v ** e)`` over frozen vertices v."""

    coeff: int = 1
    exps: tuple = ()

    @classmethod
    def of(cls, coeff=1, **_):
        return cls(coeff, ())

    @classmethod
    def var(cls, v, e=1):
        return cls(1, ((v, e),))

    def value(self, values):
        out = self.coeff
        for v, e in self.exps:
            out = values[v] ** e * out
        return out

    def to_json(self):
        return {"coeff": self.coeff, "exps": [[v, e] for v, e in self.exps]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj.get("coeff", 1), tuple((v, e) for v, e in obj.get("exps", [])))


ONE = Monomial()


def trivial_string(d):
    return (ONE,) * (d + 1)


def reverse_string(s):
    return tuple(reversed(s))


@dataclass
class ExtendedSeed:
    """Cluster values + quiver + exchange coefficient strings.

    ``values`` maps every vertex to a scalar (prime-field element,
    rational, polynomial or localized fraction); ``strings`` maps special
    vertices to tuples of :class:`Monomial` of length d_k + 1.
    """

    quiver: GQuiver
    values: dict
    strings: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def string(self, k):
        return self.strings.get(k) or trivial_string(self.quiver.mult(k))

    def copy(self):
        return ExtendedSeed(self.quiver.copy(), dict(self.values), dict(self.strings), dict(self.meta))

    def __eq__(self, other):
        if not isinstance(other, ExtendedSeed):
            return NotImplemented
        if self.quiver != other.quiver or self.values.keys() != other.values.keys():
            return False
        strings = lambda s: {k: v for k, v in s.strings.items() if v != trivial_string(s.quiver.mult(k))}
        if strings(self) != strings(other):
            return False
        return all(self.values[v] == other.values[v] for v in self.values)

    def to_json(self):
        return {
            **self.quiver.to_json(),
            "strings": {str(k): [m.to_json() for m in s] for k, s in self.strings.items()},
            "values": {str(v): scalar_to_str(x) for v, x in self.values.items()},
            "meta": {k: v for k, v in self.meta.items() if k != "one"},
        }

    @classmethod
    def from_json(cls, obj, ring=GF):
        q = GQuiver.from_json(obj)
        ids = {str(v): v for v in q.vertices}
        strings = {ids[k]: tuple(Monomial.from_json(m) for m in s) for k, s in obj.get("strings", {}).items()}
        values = {ids[k]: scalar_from_str(x, ring) for k, x in obj.get("values", {}).items()}
        meta = dict(obj.get("meta", {}))
        meta["one"] = ring.one
        return cls(q, values, strings, meta)

    def dumps(self):
        return json.dumps(self.to_json(), indent=1, default=str)


def _prod(values, exps, one):
    out = one
    for v, e in exps.items():
        if e:
            out = out * values[v] ** e
    return out


def tau_monomials(seed, k, r):
    """(u_>, u_<, v_>^{[r]}, v_<^{[r]}) at mutable vertex k."""
    q = seed.quiver
    if q.is_frozen(k):
        raise NotMutable(f"vertex {k} is frozen")
    d = q.mult(k)
    if not 0 <= r <= d:
        raise ValueError(f"r={r} outside 0..{d}")
    one = seed.meta.get("one", 1)
    outs, ins = q.out_edges(k), q.in_edges(k)
    vals = seed.values
    u_gt = _prod(vals, {j: c for j, c in outs.items() if not q.is_frozen(j)}, one)
    u_lt = _prod(vals, {i: c for i, c in ins.items() if not q.is_frozen(i)}, one)
    v_gt = _prod(vals, {j: (r * c) // d for j, c in outs.items() if q.is_frozen(j)}, one)
    v_lt = _prod(vals, {i: (r * c) // d for i, c in ins.items() if q.is_frozen(i)}, one)
    return u_gt, u_lt, v_gt, v_lt


def exchange_polynomial(seed, k):
    """Right-hand side of the generalized exchange relation at k."""
    d = seed.quiver.mult(k)
    p = seed.string(k)
    if len(p) != d + 1:
        raise ValueError(f"string at {k} has length {len(p)}, expected {d + 1}")
    total = None
    for r in range(d + 1):
        u_gt, u_lt, v_gt, _ = tau_monomials(seed, k, r)
        _, _, _, v_lt = tau_monomials(seed, k, d - r)
        term = p[r].value(seed.values) * u_gt ** r * v_gt * u_lt ** (d - r) * v_lt
        total = term if total is None else total + term
    return total


def generalized_exchange(seed, k):
    """The new value x_k' (exact division; may raise NotDivisible)."""
    x = seed.values[k]
    if not x:
        raise ZeroClusterValue(f"cluster value at {k} is zero")
    return exact_div(exchange_polynomial(seed, k), x)


def coeff_mutate(strings, k):
    out = dict(strings)
    if k in out:
        out[k] = reverse_string(out[k])
    return out


def mutate(seed, k):
    """The adjacent seed in direction k."""
    if seed.quiver.is_frozen(k):
        raise NotMutable(f"vertex {k} is frozen")
    new_value = generalized_exchange(seed, k)
    values = dict(seed.values)
    values[k] = new_value
    return ExtendedSeed(seed.quiver.mutate(k), values, coeff_mutate(seed.strings, k), dict(seed.meta))


def apply_sequence(seed, ks):
    for k in ks:
        seed = mutate(seed, k)
    return seed


def quiver_mutate(q, k):
    return q.mutate(k)


def random_quiver(rng_, size=None, max_mult=3, max_edges=3):
    """A random quiver with multiplicities: about 30% frozen vertices, no
    frozen-frozen edges, at most one direction per pair."""
    size = size or rng_.randint(2, 8)
    q = GQuiver()
    for v in range(size):
        frozen = rng_.random() < 0.3
        q.add_vertex(v, frozen, 1 if frozen else rng_.randint(1, max_mult))
    for i in range(size):
        for j in range(size):
            if i == j or (j, i) in q.edges or (q.is_frozen(i) and q.is_frozen(j)):
                continue
            if rng_.random() < 0.3:
                q.add_edge(i, j, rng_.randint(1, max_edges))
    return q
