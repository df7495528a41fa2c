import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stairgcs.arith import GF, PolyRing, exact_div
from stairgcs.gcs import (
    ONE, ExtendedSeed, GQuiver, Monomial, NotMutable, ZeroClusterValue, exchange_polynomial, mutate, reverse_string,
    random_quiver, tau_monomials, trivial_string,
)


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=10**9))
def test_quiver_mutation_is_an_involution(s):
    r = random.Random(s)
    q = random_quiver(r)
    for k in q.mutable():
        assert q.mutate(k).mutate(k) == q


def test_frozen_vertex_cannot_mutate():
    q = GQuiver()
    q.add_vertex(0, True)
    q.add_vertex(1)
    q.add_edge(0, 1)
    with pytest.raises(NotMutable):
        q.mutate(0)


def test_multiplicity_scaling_rule():
    # i -> k -> j with d_k = 2: mutable ends get d_k, a frozen end uses the other end's multiplicity
    q = GQuiver()
    q.add_vertex("i", False, 3)
    q.add_vertex("k", False, 2)
    q.add_vertex("j", False, 1)
    q.add_vertex("f", True)
    q.add_edge("i", "k")
    q.add_edge("k", "j")
    q.add_edge("f", "k")
    m = q.mutate("k")
    assert m.count("i", "j") == 2
    assert m.count("f", "j") == 1
    assert m.count("k", "i") == 1 and m.count("j", "k") == 1 and m.count("k", "f") == 1


def test_two_cycles_cancel_except_between_frozen():
    q = GQuiver()
    q.add_vertex(0)
    q.add_vertex(1)
    q.add_vertex(2)
    q.add_edge(0, 2)
    q.add_edge(2, 1)
    q.add_edge(1, 0, 2)
    m = q.mutate(2)
    assert m.count(1, 0) == 1 and m.count(0, 1) == 0
    assert not m.has_two_cycles()


def test_classical_exchange_when_all_multiplicities_are_one():
    # A_2 with one frozen vertex: binomial exchanges and period five
    q = GQuiver()
    for v in (0, 1):
        q.add_vertex(v)
    q.add_vertex(2, True)
    q.add_edge(0, 1)
    q.add_edge(2, 0)
    s = ExtendedSeed(q, {0: Fraction(2), 1: Fraction(3), 2: Fraction(5)}, {}, {"one": 1})
    assert exchange_polynomial(s, 0) == 3 + 5
    assert mutate(s, 0).values[0] == Fraction(8, 2)
    t = s
    for k in [0, 1, 0, 1, 0]:
        t = mutate(t, k)
    assert {t.values[0], t.values[1]} == {2, 3}


def test_generalized_exchange_uses_the_string_and_stable_monomials():
    q = GQuiver()
    q.add_vertex("k", False, 2)
    q.add_vertex("u", False)
    q.add_vertex("w", False)
    q.add_vertex("c", True)
    q.add_vertex("f", True)
    q.add_edge("k", "u")
    q.add_edge("w", "k")
    q.add_edge("k", "f", 3)
    P = PolyRing(5, {0: "x", 1: "u", 2: "w", 3: "c", 4: "f"})
    x, u, w, c, f = P.gens()
    s = ExtendedSeed(q, {"k": x, "u": u, "w": w, "c": c, "f": f},
                     {"k": (ONE, Monomial.var("c"), ONE)}, {"one": P.one})
    # v_>^{[r]} = f^{floor(3r/2)}
    assert tau_monomials(s, "k", 1)[2] == f
    assert tau_monomials(s, "k", 2)[2] == f ** 3
    assert exchange_polynomial(s, "k") == w ** 2 + c * u * w * f + u ** 2 * f ** 3


def test_string_reverses_and_double_mutation_restores_the_seed():
    q = GQuiver()
    q.add_vertex(0, False, 3)
    q.add_vertex(1)
    q.add_vertex(2, True)
    q.add_edge(0, 1)
    q.add_edge(2, 0)
    r = random.Random(3)
    string = (ONE, Monomial.var(2), Monomial.var(2, 2), ONE)
    s = ExtendedSeed(q, {v: GF.random(r) for v in range(3)}, {0: string}, {"one": GF.one})
    t = mutate(s, 0)
    assert t.strings[0] == reverse_string(string) != string
    assert mutate(t, 0) == s


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_seed_mutation_is_an_involution_over_prime_field(s):
    r = random.Random(s)
    q = random_quiver(r)
    values = {v: GF.random(r) for v in q.vertices}
    seed = ExtendedSeed(q, values, {}, {"one": GF.one})
    for k in q.mutable():
        assert mutate(mutate(seed, k), k) == seed


def test_zero_cluster_value_rejected():
    q = GQuiver()
    q.add_vertex(0)
    seed = ExtendedSeed(q, {0: GF.zero}, {}, {"one": GF.one})
    with pytest.raises(ZeroClusterValue):
        mutate(seed, 0)


def test_json_roundtrip(rnd):
    q = random_quiver(rnd, 6)
    values = {v: GF.random(rnd) for v in q.vertices}
    special = next((v for v in q.mutable() if q.mult(v) > 1), None)
    strings = {special: trivial_string(q.mult(special))} if special is not None else {}
    seed = ExtendedSeed(q, values, strings, {"one": GF.one})
    import json
    back = ExtendedSeed.from_json(json.loads(seed.dumps()), GF)
    assert back == seed
    assert "digraph" in q.to_dot()
