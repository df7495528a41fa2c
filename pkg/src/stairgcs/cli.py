"""Command-line front end.

    python3 -m stairgcs verify main-identity --n 9 --a 5 --b 2 --trials 20 --seed 7
    python3 -m stairgcs seed build double --n 4 -o sigma4.json
    python3 -m stairgcs seed mutate --in sigma4.json --at 4 -o next.json
    python3 -m stairgcs explore yz --n 4

Every check writes one JSON record per line to stdout (or ``--out``); the
exit code is 0 exactly when every record passes.  Records carry the RNG
seed; apart from the ``elapsed`` field, reruns are byte-identical.
"""

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field

from .arith import GF, QQ, scalar_to_str
from .gcs import ExtendedSeed, mutate
from .matrix import RingMatrix
from .report import Report

RINGS = {"prime": GF, "rational": QQ}

# symbolic mode is exact but exponential; beyond these sizes it does not
# finish on a desk machine
SYMBOLIC_CAPS = {"staircase_n": 4, "double_n": 3, "band_kn": 16}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    target: str = ""
    model: str = ""
    n: int = None
    a: int = None
    b: int = None
    k: int = None
    trials: int = 1
    seed: int = 0
    ring: str = "prime"
    inp: str = None
    out: str = None
    dot: str = None
    at: str = None
    extra: dict = field(default_factory=dict)

    def validate(self):
        if self.trials < 1:
            raise ConfigError("--trials must be at least 1")
        if self.ring not in ("prime", "rational", "symbolic"):
            raise ConfigError(f"unknown ring {self.ring!r}")
        if self.ring == "symbolic":
            if self.command == "verify" and self.target in ("main-identity", "detphi") and (self.n or 0) > SYMBOLIC_CAPS["staircase_n"]:
                raise ConfigError(f"symbolic staircase checks are capped at n <= {SYMBOLIC_CAPS['staircase_n']}")
            if self.command == "seed" and self.model == "double" and (self.n or 0) > SYMBOLIC_CAPS["double_n"]:
                raise ConfigError(f"symbolic double seeds are capped at n <= {SYMBOLIC_CAPS['double_n']}")
            if self.command == "seed" and self.model == "band" and (self.k or 0) * (self.n or 0) > SYMBOLIC_CAPS["band_kn"]:
                raise ConfigError(f"symbolic band seeds are capped at k*n <= {SYMBOLIC_CAPS['band_kn']}")
        return self

    @property
    def scalar_ring(self):
        return RINGS.get(self.ring, GF)


def _need(cfg, *names):
    missing = [name for name in names if getattr(cfg, name) is None]
    if missing:
        raise ConfigError(f"{cfg.command} {cfg.target or cfg.model}: missing " + ", ".join("--" + m for m in missing))


# ---------------------------------------------------------------------------
# verify


def _verify_identity(cfg, r):
    from . import identities as ident

    if cfg.ring == "symbolic":
        return [rep for rep in ident.symbolic_reports() if rep.name == cfg.target]
    ring = cfg.scalar_ring
    out = []
    for _ in range(cfg.trials):
        if cfg.target == "jacobi":
            n = cfg.n or r.randint(2, 6)
            A = ident.random_matrix(n, n, r, ring)
            al, be = sorted(r.sample(range(1, n + 1), 2))
            ga, de = sorted(r.sample(range(1, n + 1), 2))
            res = ident.desnanot_jacobi_residual(A, al, be, ga, de)
            out.append(Report("jacobi", f"n={n} ({al},{be},{ga},{de})", res, not res))
        elif cfg.target == "plucker":
            m = cfg.n or r.randint(2, 6)
            B = ident.random_matrix(m, m + 1, r, ring)
            al, be, ga = sorted(r.sample(range(1, m + 2), 3))
            de = r.randint(1, m)
            res = ident.plucker_residual(B, al, be, ga, de)
            out.append(Report("plucker", f"m={m} ({al},{be},{ga},{de})", res, not res))
        elif cfg.target == "pluckpluck":
            m = cfg.n or r.randint(3, 6)
            res = ident.pluckpluck_residual(ident.random_matrix(m, m + 1, r, ring))
            out.append(Report("pluckpluck", f"m={m}", res, not res))
        else:
            k = cfg.k or 3
            A = ident.random_matrix(k, k + 2, r, ring)
            M = A.sub(list(range(1, k + 1)), list(range(1, k + 1)))
            u = [A[i, k + 1] for i in range(1, k + 1)]
            v = [A[i, k + 2] for i in range(1, k + 1)]
            res = ident.long_identity_residual(M, u, v)
            out.append(Report("longid", f"k={k}", res, not res))
    return out


def _verify_staircase(cfg, r):
    from . import staircase as st

    _need(cfg, "n", "a", "b")
    check = st.verify_main_identity if cfg.target == "main-identity" else st.verify_detphi_forms
    if cfg.ring == "symbolic":
        return [check(st.symbolic_staircase(cfg.n, cfg.a, cfg.b))]
    ring = cfg.scalar_ring
    fresh = lambda: st.random_staircase(cfg.n, cfg.a, cfg.b, r, ring)
    out = []
    for _ in range(cfg.trials):
        out.append(check(fresh(), resample=fresh))
        if cfg.target == "main-identity":
            out.append(st.verify_pencil(fresh(), r))
    return out


def _random_square(r, n, ring):
    return RingMatrix.from_function(n, n, lambda i, j: ring.random(r), ring)


def _verify_gamma6(cfg, r):
    from . import models as md

    out = []
    for t in range(cfg.trials):
        R, S = _random_square(r, 6, GF), _random_square(r, 6, GF)
        G = md.build_gamma6(R, S)
        r1, r2, _, _ = md.gamma_identity_residuals(G)
        out.append(Report("gamma6", f"trial {t} phi_11", r1, not r1))
        out.append(Report("gamma6", f"trial {t} phi_21", r2, not r2))
    size, raw = md.gamma_family_size()
    out.append(Report("gamma6-family", "F_Gamma", size - 34, size == 34, {"distinct": size, "listed": raw}))
    return out


def _verify_theta(cfg, r):
    from . import models as md
    from .identities import theta_exchange_check

    _need(cfg, "n")
    out = []
    for _ in range(cfg.trials):
        if cfg.k:
            cases = md.band_theta_cases(cfg.k, cfg.n, md.random_band(cfg.k, cfg.n, r))
        else:
            cases = md.double_theta_cases(cfg.n, *md.random_double(cfg.n, r))
        out.extend(theta_exchange_check(M, spec) for _, M, spec in cases)
    return out


def _verify_band(cfg, r):
    from . import models as md

    _need(cfg, "k", "n")
    return [md.band_identity_report(cfg.k, cfg.n, md.random_band(cfg.k, cfg.n, r)) for _ in range(cfg.trials)]


def _verify_regularity(cfg, r):
    from . import models as md
    from .regularity import RegularityConfig, symbolic_regularity

    _need(cfg, "n")
    if cfg.k:
        a, _ = md.generic_band(cfg.k, cfg.n)
        seed, label = md.build_sigma_band(cfg.k, cfg.n, a), f"band (k,n)=({cfg.k},{cfg.n})"
    else:
        seed, label = md.build_sigma_double(cfg.n, *md.generic_double(cfg.n)), f"double n={cfg.n}"
    # always symbolic; each vertex in its own process so one blow-up is contained
    cfg.ring = "symbolic"
    return [symbolic_regularity(seed, label, RegularityConfig(isolate=True))]


VERIFY = {
    "jacobi": _verify_identity,
    "plucker": _verify_identity,
    "pluckpluck": _verify_identity,
    "longid": _verify_identity,
    "main-identity": _verify_staircase,
    "detphi": _verify_staircase,
    "gamma6": _verify_gamma6,
    "theta": _verify_theta,
    "band": _verify_band,
    "regularity": _verify_regularity,
}


# ---------------------------------------------------------------------------
# seeds


def _point_to_json(M):
    return [[scalar_to_str(M[i, j]) for j in range(1, M.cols + 1)] for i in range(1, M.rows + 1)]


def build_seed(cfg, r):
    from . import models as md

    _need(cfg, "n")
    if cfg.model == "double":
        if cfg.ring == "symbolic":
            X, Y = md.generic_double(cfg.n)
        else:
            X, Y = md.random_double(cfg.n, r, cfg.scalar_ring)
        seed = md.build_sigma_double(cfg.n, X, Y)
        seed.meta["point"] = {"X": _point_to_json(X), "Y": _point_to_json(Y)}
    elif cfg.model == "band":
        _need(cfg, "k")
        if cfg.ring == "symbolic":
            a, _ = md.generic_band(cfg.k, cfg.n)
        else:
            a = md.random_band(cfg.k, cfg.n, r, cfg.scalar_ring)
        seed = md.build_sigma_band(cfg.k, cfg.n, a)
        seed.meta["point"] = {f"{i},{j}": scalar_to_str(v) for (i, j), v in a.items()}
    else:
        raise ConfigError(f"unknown model {cfg.model!r}; expected double or band")
    seed.meta["rng_seed"] = cfg.seed
    seed.meta["ring"] = cfg.ring
    return seed


def load_seed(path):
    with open(path) as fh:
        obj = json.load(fh)
    ring = obj.get("meta", {}).get("ring", "prime")
    if ring == "symbolic":
        raise ConfigError("symbolic seed files can be shown but not reloaded")
    seed = ExtendedSeed.from_json(obj, RINGS[ring])
    # JSON object keys are strings; restore the integer ids used by the models
    for key in ("special",):
        if key in seed.meta:
            seed.meta[key] = int(seed.meta[key])
    return seed


def _parse_vertex(seed, text):
    if text is None:
        raise ConfigError("seed mutate: missing --at")
    for v, rec in seed.quiver.vertices.items():
        if str(v) == text or rec.label == text:
            return v
    raise ConfigError(f"no vertex {text!r} in the seed")


def _seed_summary(seed, name, instance):
    q = seed.quiver
    meta = {
        "vertices": len(q.vertices),
        "mutable": len(q.mutable()),
        "frozen": len(q.frozen()),
        "isolated": len(q.isolated()),
        "special": [[v, q.mult(v)] for v in q.special()],
        "edges": sum(q.edges.values()),
    }
    return Report(name, instance, 0, True, meta)


def _phi1_star_of(seed):
    """phi_1^* (double) or phi~_1^* (band) recomputed from the stored point."""
    from . import models as md
    from .staircase import context, phi1_star
    from .arith import exact_div, scalar_from_str

    point = seed.meta.get("point")
    if not point:
        return None
    ring = RINGS[seed.meta.get("ring", "prime")]
    if seed.meta.get("model") == "double":
        n = seed.meta["n"]
        X = RingMatrix([[scalar_from_str(x, ring) for x in row] for row in point["X"]], ring, n)
        Y = RingMatrix([[scalar_from_str(x, ring) for x in row] for row in point["Y"]], ring, n)
        from .staircase import StaircaseData
        return phi1_star(context(StaircaseData(n, n, 0, X, Y)))
    k, n = seed.meta["k"], seed.meta["n"]
    a = {tuple(int(t) for t in key.split(",")): scalar_from_str(v, ring) for key, v in point.items()}
    ctx = context(md.band_staircase(k, n, a))
    mid = ring.one
    for j in range(2, k + 1):
        mid = mid * a[1, j]
    div = ctx.det_Ybar if k == 2 else mid ** (k - 1) * ctx.det_Ybar
    return exact_div(phi1_star(ctx), div)


def _seed_command(cfg, r):
    if cfg.target == "build":
        seed = build_seed(cfg, r)
        rep = _seed_summary(seed, "seed-build", f"{cfg.model} n={cfg.n}" + (f" k={cfg.k}" if cfg.k else ""))
        return [rep], seed
    if cfg.inp is None:
        raise ConfigError(f"seed {cfg.target}: missing --in")
    if cfg.target == "show":
        with open(cfg.inp) as fh:
            obj = json.load(fh)
        from .gcs import GQuiver
        q = GQuiver.from_json(obj)
        seed = ExtendedSeed(q, {}, {}, obj.get("meta", {}))
        return [_seed_summary(seed, "seed-show", cfg.inp)], seed
    seed = load_seed(cfg.inp)
    v = _parse_vertex(seed, cfg.at)
    new = mutate(seed, v)
    meta = {"vertex": v, "label": seed.quiver.vertices[v].label, "value": scalar_to_str(new.values[v])}
    passed = True
    if v == seed.meta.get("special"):
        star = _phi1_star_of(seed)
        if star is not None:
            meta["matches_phi1_star"] = star == new.values[v]
            passed = meta["matches_phi1_star"]
    return [Report("seed-mutate", cfg.inp, 0, passed, meta)], new


# ---------------------------------------------------------------------------
# exploration


def _explore(cfg, r):
    from . import models as md

    _need(cfg, "n")
    if cfg.target == "yz":
        rep = md.yz_exploration(cfg.n)
        rep.meta.pop("matches", None)
        rep.meta["minors"] = [f"x[{i},{j}]" for i, j in md.yz_labels(cfg.n)]
        return [rep]
    a = md.random_band(2, cfg.n, r)
    seed = md.build_sigma_band(2, cfg.n, a)
    points = md.fingerprint_points([], count=1)
    clusters, variables = md.explore_orbit(seed, points=points)
    mutable = len(variables)
    expected = cfg.n * (cfg.n - 1)
    meta = {"clusters": len(clusters), "variables": mutable, "expected_variables": expected}
    return [Report("orbit", f"band k=2 n={cfg.n}", mutable - expected, mutable == expected, meta)]


# ---------------------------------------------------------------------------
# driver


def run(cfg, stream=None):
    """Execute one configuration; returns the exit code."""
    cfg.validate()
    stream = stream or sys.stdout
    r = random.Random(cfg.seed)
    seed_out = None
    t0 = time.perf_counter()
    if cfg.command == "verify":
        if cfg.target not in VERIFY:
            raise ConfigError(f"unknown check {cfg.target!r}")
        reports = VERIFY[cfg.target](cfg, r)
    elif cfg.command == "seed":
        reports, seed_out = _seed_command(cfg, r)
    elif cfg.command == "explore":
        reports = _explore(cfg, r)
    else:
        raise ConfigError(f"unknown command {cfg.command!r}")
    elapsed = round(time.perf_counter() - t0, 3)
    lines = []
    for i, rep in enumerate(reports):
        rec = rep.to_json()
        rec.update({"trial": i, "seed": cfg.seed, "ring": cfg.ring})
        lines.append(json.dumps(rec, default=str))
    summary = {"summary": True, "checks": len(reports), "passed": sum(r_.passed for r_ in reports),
               "seed": cfg.seed, "elapsed": elapsed}
    lines.append(json.dumps(summary))
    if cfg.command == "seed" and seed_out is not None and cfg.out and cfg.target != "show":
        with open(cfg.out, "w") as fh:
            fh.write(seed_out.dumps())
        out_stream = stream
    elif cfg.out:
        out_stream = open(cfg.out, "w")
    else:
        out_stream = stream
    for line in lines:
        out_stream.write(line + "\n")
    if out_stream is not stream:
        out_stream.close()
    if cfg.dot and seed_out is not None:
        with open(cfg.dot, "w") as fh:
            fh.write(seed_out.quiver.to_dot() + "\n")
    ok = bool(reports) and all(rep.passed for rep in reports)
    return 0 if ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="stairgcs", description="Exact checks for staircase generalized cluster structures")
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("n", "a", "b", "k"):
        common.add_argument(f"--{flag}", type=int)
    common.add_argument("--trials", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--ring", choices=["prime", "rational", "symbolic"], default="prime")
    common.add_argument("--in", dest="inp")
    common.add_argument("--out", "-o", dest="out")
    common.add_argument("--dot")
    common.add_argument("--at")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run an identity check")
    v.add_argument("target", choices=sorted(VERIFY))
    s = sub.add_parser("seed", parents=[common], help="build, mutate or show a seed")
    s.add_argument("target", choices=["build", "mutate", "show"])
    s.add_argument("model", nargs="?", default="")
    e = sub.add_parser("explore", parents=[common], help="explore the k = 2 band structure")
    e.add_argument("target", choices=["yz", "orbit"])
    return p


def config_from_args(argv=None):
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command, target=ns.target, model=getattr(ns, "model", ""),
        n=ns.n, a=ns.a, b=ns.b, k=ns.k, trials=ns.trials, seed=ns.seed, ring=ns.ring,
        inp=ns.inp, out=ns.out, dot=ns.dot, at=ns.at,
    )


def main(argv=None):
    from .models import BandDegenerate, IndexInvalid
    from .staircase import ShapeViolation

    try:
        cfg = config_from_args(argv)
        return run(cfg)
    except (ConfigError, OSError, ShapeViolation, BandDegenerate, IndexInvalid) as exc:
        print(f"stairgcs: {exc}", file=sys.stderr)
        return 2
