#!/usr/bin/env python3
"""Run every verification suite and the simplicity grid in one pass.

Prints one report line per check (or a JSON array with --json) and
exits 1 if anything fails.  This is the long-form driver; the wittmod
CLI runs any single check with the same semantics.
"""

import argparse
import os
import sys
from fractions import Fraction

from wittmod import (
    Algebra,
    CheckConfig,
    CheckStatus,
    Family,
    ModuleSpec,
    antisymmetry_check,
    gamma_coincidence,
    jacobi_check,
    report_line,
    report_to_json,
    simplicity_probe,
    theorem2_suite,
    theorem3_suite,
    verify_axioms,
    verify_lemma1_shift,
    w_plus_closure_check,
    write_report,
)
from wittmod.verify import module_monomials

GRID = [
    (Family.OMEGA, 1, None, 2),
    (Family.OMEGA, 2, None, 2),
    (Family.OMEGA, 3, None, 2),
    (Family.GAMMA, 1, None, 3),
    (Family.OMEGA_S, 2, frozenset(), 2),
    (Family.OMEGA_S, 2, frozenset({1}), 2),
    (Family.OMEGA_S, 2, frozenset({2}), 2),
    (Family.OMEGA_S, 2, frozenset({1, 2}), 2),
    (Family.VIRASORO_OMEGA, 1, None, 3),
]

SIMPLICITY_AS = [Fraction(-1), Fraction(0), Fraction(1), Fraction(1, 2)]


def family_configs():
    for family, n, S, kmax in GRID:
        spec = (
            ModuleSpec(family, n, S=S)
            if family is Family.OMEGA_S
            else ModuleSpec(family, n)
        )
        yield CheckConfig(spec=spec, kmax=kmax, degmax=2)


def simplicity_reports():
    for n in (1, 2):
        lam = (2,) if n == 1 else (2, 3)
        for a in SIMPLICITY_AS:
            spec = ModuleSpec(Family.OMEGA, n, lam=lam, a=a)
            seeds = module_monomials(spec.context(), 2)
            cfg = CheckConfig(spec=spec, kmax=4, degmax=2, depth=4)
            yield simplicity_probe(spec, seeds, cfg)
        spec = ModuleSpec(Family.OMEGA_S, n, lam=lam, a=Fraction(-1), S=frozenset({1}))
        seeds = module_monomials(spec.context(), 2)
        cfg = CheckConfig(spec=spec, kmax=4, degmax=2, depth=4)
        yield simplicity_probe(spec, seeds, cfg)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("WITTMOD_JOBS", "0")) or (os.cpu_count() or 1),
    )
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    reports = []
    for cfg in family_configs():
        reports.append(verify_axioms(cfg, jobs=args.jobs))
        reports.append(verify_lemma1_shift(cfg))
    reports.append(gamma_coincidence(6))
    reports.append(theorem2_suite())
    reports.append(theorem3_suite())
    for algebra, n in [
        (Algebra.W, 1),
        (Algebra.W, 2),
        (Algebra.W_PLUS, 1),
        (Algebra.W_PLUS, 2),
        (Algebra.VIRASORO, 1),
    ]:
        reports.append(antisymmetry_check(algebra, n, 4))
        reports.append(jacobi_check(algebra, n, 2))
    reports.append(w_plus_closure_check(1, 2))
    reports.append(w_plus_closure_check(2, 2))
    reports.extend(simplicity_reports())

    if args.json:
        print(report_to_json([write_report(r) for r in reports]))
    else:
        for r in reports:
            print(report_line(r))
    bad = [r for r in reports if r.status is CheckStatus.FAIL]
    vague = [r for r in reports if r.status is CheckStatus.INCONCLUSIVE]
    if not args.json:
        print(
            f"{len(reports)} checks: {len(reports) - len(bad) - len(vague)} ok, "
            f"{len(bad)} failed, {len(vague)} inconclusive"
        )
    return 1 if bad or vague else 0


if __name__ == "__main__":
    sys.exit(main())
