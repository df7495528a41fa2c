"""Theta-degrees of the perturbed exchange windows, double and band seeds.

For the double seed both theta placements for h_ii are shown: the one used
by the library and the literal row n-1 placement.

    python3 scripts/theta_degrees.py --n 3 4 5 --band 4,5 4,7 5,6
"""

import argparse
import random
from dataclasses import dataclass, field

from stairgcs.identities import theta_exchange_check
from stairgcs.models import band_theta_cases, double_theta_cases, random_band, random_double


@dataclass
class Experiment:
    n: list = field(default_factory=lambda: [3, 4, 5])
    band: list = field(default_factory=lambda: [(4, 5), (4, 7), (5, 6)])
    seed: int = 0


def row(kind, label, rep):
    m = rep.meta
    print(f"{kind:>16} {label:>8} {m['lhs_degree']:>6} {m['degree_bound']:>6} "
          f"{str(m['exchange_term_nonzero']):>9} {'nonzero' if rep.residual else 'zero'}"
          + ("" if m["within_bound"] else "  (over the degree bound)"))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="*", default=Experiment().n)
    p.add_argument("--band", nargs="*", default=None, help="k,n pairs")
    p.add_argument("--seed", type=int, default=0)
    ns = p.parse_args()
    band = [tuple(int(t) for t in s.split(",")) for s in ns.band] if ns.band else Experiment().band
    exp = Experiment(ns.n, band, ns.seed)
    r = random.Random(exp.seed)
    print(f"{'seed':>16} {'vertex':>8} {'degree':>6} {'bound':>6} {'exch term':>9} residual")
    for n in exp.n:
        X, Y = random_double(n, r)
        for fixed in (False, True):
            kind = f"double n={n}" + (" fixed" if fixed else "")
            for label, M, spec in double_theta_cases(n, X, Y, fixed_row=fixed):
                if fixed and not label.startswith("h"):
                    continue
                row(kind, label, theta_exchange_check(M, spec))
    for k, n in exp.band:
        for label, M, spec in band_theta_cases(k, n, random_band(k, n, r)):
            row(f"band ({k},{n})", label, theta_exchange_check(M, spec))


if __name__ == "__main__":
    main()
