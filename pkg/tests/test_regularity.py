import pytest

from stairgcs.gcs import ExtendedSeed, GQuiver
from stairgcs.arith import PolyRing
from stairgcs.models import build_sigma_band, build_sigma_double, generic_band, generic_double
from stairgcs.regularity import RegularityConfig, flint, symbolic_regularity


def test_native_band_seeds_are_regular():
    for k, n in [(2, 4), (3, 4)]:
        a, _ = generic_band(k, n)
        seed = build_sigma_band(k, n, a)
        rep = symbolic_regularity(seed, cfg=RegularityConfig(backend="native"))
        assert rep.passed and rep.meta["vertices"] == len(seed.quiver.mutable())


@pytest.mark.skipif(flint is None, reason="python-flint not installed")
def test_backends_agree_on_double_n3():
    seed = build_sigma_double(3, *generic_double(3))
    native = symbolic_regularity(seed, cfg=RegularityConfig(backend="native"))
    fast = symbolic_regularity(seed, cfg=RegularityConfig(backend="flint"))
    assert native.passed and fast.passed
    assert {v: r["exchange_terms"] for v, r in native.meta["checked"].items()} == \
           {v: r["exchange_terms"] for v, r in fast.meta["checked"].items()}


def non_regular_seed():
    # exchanges y + 1 over x_0 = y + 2 and y + 3 over x_1 = y: neither divides
    P = PolyRing(1, {0: "y"})
    y = P.gen(0)
    q = GQuiver()
    q.add_vertex(0)
    q.add_vertex(1)
    q.add_edge(0, 1)
    return ExtendedSeed(q, {0: y + 2, 1: y}, {}, {"one": P.one})


@pytest.mark.parametrize("backend", ["native"] + (["flint"] if flint is not None else []))
def test_non_divisible_direction_is_reported(backend):
    rep = symbolic_regularity(non_regular_seed(), cfg=RegularityConfig(backend=backend))
    assert not rep.passed and rep.meta["failures"] == ["0", "1"]


def test_isolated_child_timeout_is_exhausted():
    seed = build_sigma_double(3, *generic_double(3))
    rep = symbolic_regularity(seed, cfg=RegularityConfig(isolate=True, timeout=0), only={"phi1"})
    assert not rep.passed and rep.meta["exhausted"] == {"phi1": "timeout"}


def test_isolated_child_result_matches_inline():
    seed = build_sigma_double(3, *generic_double(3))
    inline = symbolic_regularity(seed, only={"h22"})
    child = symbolic_regularity(seed, cfg=RegularityConfig(isolate=True, memory_limit=2 ** 30), only={"h22"})
    assert inline.passed and child.passed
    assert inline.meta["checked"]["h22"]["quotient_terms"] == child.meta["checked"]["h22"]["quotient_terms"]
