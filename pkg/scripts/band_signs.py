"""Sign of c_k relative to the product of the top band diagonal, over (k, n).

    python3 scripts/band_signs.py --kmax 5 --nmax 9
"""

import argparse
import random
from dataclasses import dataclass

from stairgcs.models import band_identity_report, random_band


@dataclass
class Experiment:
    kmax: int = 5
    nmax: int = 9
    seed: int = 0


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--kmax", type=int, default=Experiment.kmax)
    p.add_argument("--nmax", type=int, default=Experiment.nmax)
    p.add_argument("--seed", type=int, default=Experiment.seed)
    exp = Experiment(**vars(p.parse_args()))
    r = random.Random(exp.seed)
    print(f"{'k':>3} {'n':>3} {'sign':>5} {'(-1)^k(n-1)':>12} identities")
    for k in range(2, exp.kmax + 1):
        for n in range(k + 1, exp.nmax + 1):
            rep = band_identity_report(k, n, random_band(k, n, r))
            print(f"{k:>3} {n:>3} {rep.meta['sign_of_c_k']:>5} {(-1) ** (k * (n - 1)):>12} "
                  f"{'all zero' if rep.passed else rep.meta['residuals']}")


if __name__ == "__main__":
    main()
