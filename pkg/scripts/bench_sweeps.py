#!/usr/bin/env python3
"""Time the symbolic axiom sweep as rank, kmax, and degmax grow.

Useful when tuning bounds for a new machine: instance counts scale like
(number of basis terms)^2 x (number of monomials) / 2, and the rank-3
row is the budget item.
"""

import argparse
import time

from wittmod import CheckConfig, Family, ModuleSpec, verify_axioms

CASES = [
    (Family.OMEGA, 1, 2, 2),
    (Family.OMEGA, 1, 4, 3),
    (Family.OMEGA, 2, 2, 2),
    (Family.GAMMA, 1, 4, 3),
    (Family.OMEGA_S, 2, 2, 2),
    (Family.VIRASORO_OMEGA, 1, 4, 3),
    (Family.OMEGA, 3, 2, 2),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--skip-rank3", action="store_true")
    args = parser.parse_args()
    for family, n, kmax, degmax in CASES:
        if args.skip_rank3 and n == 3:
            continue
        S = frozenset({1}) if family is Family.OMEGA_S else None
        spec = (
            ModuleSpec(family, n, S=S)
            if family is Family.OMEGA_S
            else ModuleSpec(family, n)
        )
        cfg = CheckConfig(spec=spec, kmax=kmax, degmax=degmax)
        t0 = time.perf_counter()
        report = verify_axioms(cfg, jobs=args.jobs)
        dt = time.perf_counter() - t0
        print(
            f"{report.check_name:<55} {report.status.value:<6} "
            f"{report.stats['pairs_checked']:>9} instances  {dt:7.2f}s"
        )


if __name__ == "__main__":
    main()
