"""Exchange-graph size and cluster variables of the k = 2 band seed.

    python3 scripts/yz_orbit.py --n 3 4 5
"""

import argparse
import time
from dataclasses import dataclass, field

from stairgcs.models import build_sigma_band, explore_orbit, fingerprint_points, generic_band, yz_exploration


@dataclass
class Experiment:
    n: list = field(default_factory=lambda: [3, 4, 5])
    max_seeds: int = 5000


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="*", default=Experiment().n)
    p.add_argument("--max-seeds", type=int, default=Experiment.max_seeds)
    ns = p.parse_args()
    exp = Experiment(ns.n, ns.max_seeds)
    print(f"{'n':>3} {'cycle vars':>10} {'n(n-1)':>7} {'minors':>7} {'clusters':>9} {'orbit vars':>10} {'seconds':>8}")
    for n in exp.n:
        t = time.time()
        rep = yz_exploration(n)
        a, P = generic_band(2, n)
        clusters, variables = explore_orbit(build_sigma_band(2, n, a), exp.max_seeds, fingerprint_points(range(P.nvars)))
        print(f"{n:>3} {rep.meta['collected']:>10} {n * (n - 1):>7} {str(rep.meta['all_matched']):>7} "
              f"{len(clusters):>9} {len(variables):>10} {time.time() - t:>8.1f}")


if __name__ == "__main__":
    main()
