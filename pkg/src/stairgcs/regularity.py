"""Symbolic regularity: one exact division per mutable vertex.

A seed whose cluster values are polynomials in the matrix entries is
regular in direction v when the exchange polynomial at v is divisible by
x_v.  The in-house :class:`~stairgcs.arith.Poly` handles the small seeds;
at n = 4 the exchange polynomials reach 10^6 - 10^7 terms and the optional
python-flint backend is used when it is installed.  Each vertex can be run
in a forked child with an address-space cap, so a direction whose
expansion does not fit in memory is reported as exhausted instead of taking
the whole process down.
"""

import faulthandler
import multiprocessing as mp
import os
import resource
import time
from dataclasses import dataclass

from .arith import NotDivisible, exact_div
from .gcs import ExtendedSeed, exchange_polynomial
from .report import Report

try:
    import flint
except ImportError:  # optional extra
    flint = None


@dataclass
class RegularityConfig:
    backend: str = "auto"  # "auto", "flint" or "native"
    isolate: bool = False  # run every vertex in a forked child
    memory_limit: int | None = None  # bytes on top of the parent's footprint
    timeout: float | None = None  # seconds per vertex, isolated runs only

    def resolved_backend(self):
        if self.backend == "auto":
            return "flint" if flint is not None else "native"
        if self.backend == "flint" and flint is None:
            raise RuntimeError("backend 'flint' requested but python-flint is not installed")
        if self.backend not in ("flint", "native"):
            raise ValueError(f"unknown backend {self.backend!r}")
        return self.backend


def _poly_ring(seed):
    for x in seed.values.values():
        if hasattr(x, "terms"):
            return x.ring
    return None


def to_flint(seed):
    """The same seed with every polynomial value converted to fmpz_mpoly."""
    P = _poly_ring(seed)
    names = tuple(P.var_name(i) for i in range(P.nvars))
    ctx = flint.fmpz_mpoly_ctx.get(names, "lex")
    zero = (0,) * P.nvars

    def conv(p):
        if not hasattr(p, "terms"):
            return ctx.from_dict({zero: int(p)})
        out = {}
        for key, c in p.terms.items():
            if getattr(c, "denominator", 1) != 1:
                raise ValueError("non-integer coefficient; use the native backend")
            e = P.exponents(key)
            out[tuple(e.get(i, 0) for i in range(P.nvars))] = int(c)
        return ctx.from_dict(out)

    values = {v: conv(x) for v, x in seed.values.items()}
    meta = dict(seed.meta, one=ctx.from_dict({zero: 1}))
    return ExtendedSeed(seed.quiver, values, seed.strings, meta)


def _terms(x):
    return len(x.terms) if hasattr(x, "terms") else len(x) if hasattr(x, "__len__") else 1


def divide_at(seed, v, backend):
    """(divides, terms of the exchange polynomial, terms of the quotient)."""
    E = exchange_polynomial(seed, v)
    x = seed.values[v]
    if backend == "flint":
        q, r = divmod(E, x)
        return r == 0, len(E), len(q) if r == 0 else 0
    try:
        q = exact_div(E, x)
    except NotDivisible:
        return False, _terms(E), 0
    return True, _terms(E), _terms(q)


def _footprint():
    try:
        with open("/proc/self/statm") as f:
            return int(f.read().split()[0]) * os.sysconf("SC_PAGE_SIZE")
    except (OSError, ValueError):
        return 0


def _child(conn, seed, v, backend, limit):
    # an aborted allocation is expected here; skip the inherited traceback dump
    faulthandler.disable()
    if limit:
        cap = _footprint() + limit
        resource.setrlimit(resource.RLIMIT_AS, (cap, cap))
    try:
        conn.send(("ok", divide_at(seed, v, backend)))
    except MemoryError:
        conn.send(("exhausted", "MemoryError"))
    conn.close()


def _isolated(seed, v, backend, cfg):
    ctx = mp.get_context("fork")
    recv, send = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_child, args=(send, seed, v, backend, cfg.memory_limit))
    proc.start()
    send.close()
    got = None
    timed_out = not recv.poll(cfg.timeout)
    if not timed_out:
        try:
            got = recv.recv()
        except EOFError:  # the child died, typically an aborted allocation
            pass
    if got is None:
        proc.kill()
        proc.join()
        return "exhausted", "timeout" if timed_out else f"child exited with code {proc.exitcode}"
    proc.join()
    return got


def symbolic_regularity(seed, label="", cfg=None, only=None):
    """Exact division at every mutable vertex (or the labels in ``only``).

    The report passes when every direction divides.  meta lists the
    per-vertex term counts, the directions that failed to divide and the
    directions that ran out of memory or time.
    """
    cfg = cfg or RegularityConfig()
    backend = cfg.resolved_backend()
    work = to_flint(seed) if backend == "flint" and _poly_ring(seed) is not None else seed
    if work is seed:
        backend = "native"
    q = seed.quiver
    checked, failures, exhausted = {}, [], {}
    for v in q.mutable():
        name = q.vertices[v].label or str(v)
        if only is not None and name not in only:
            continue
        t = time.time()
        if cfg.isolate:
            status, out = _isolated(work, v, backend, cfg)
        else:
            status, out = "ok", divide_at(work, v, backend)
        if status != "ok":
            exhausted[name] = out
            continue
        ok, e_terms, q_terms = out
        if not ok:
            failures.append(name)
        checked[name] = {"exchange_terms": e_terms, "quotient_terms": q_terms,
                         "seconds": round(time.time() - t, 2)}
    meta = {"backend": backend, "vertices": len(checked) + len(exhausted),
            "checked": checked, "failures": failures, "exhausted": exhausted}
    bad = len(failures) + len(exhausted)
    return Report("symbolic-regularity", label, bad, bad == 0, meta)
