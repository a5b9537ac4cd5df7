"""Command-line front end.

Subcommands: act, bracket, verify {axioms, lemma1, gamma-iso, theorem2,
theorem3}, simplicity.  Exit codes: 0 all checks PASS (or evidence as
requested), 1 a check FAILED or evidence contradicted --expect,
2 usage/parse/configuration error.

STRUCTURED output (--json) is byte-deterministic for a fixed command
line apart from stats.elapsed_ms.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .exprio import (
    ExprParseError,
    parse_element,
    parse_poly,
    print_element,
    print_poly,
    report_line,
    report_to_json,
    write_report,
)
from .modfam import Family, ModuleSpec, act
from .polyring import (
    ContextMismatchError,
    ExponentDomainError,
    ParameterDomainError,
    VarContext,
)
from .verify import (
    CheckConfig,
    CheckStatus,
    gamma_coincidence,
    module_monomials,
    simplicity_probe,
    theorem2_suite,
    theorem3_suite,
    verify_axioms,
    verify_lemma1_shift,
)
from .wittalg import Algebra, AlgebraMismatchError, InadmissibleTermError, bracket

_FAMILIES = {f.value: f for f in Family}
_ALGEBRAS = {"w": Algebra.W, "w+": Algebra.W_PLUS, "virasoro": Algebra.VIRASORO}
_EXPECT_STATUS = {
    "simple": CheckStatus.EVIDENCE_REACHED_ONE,
    "not-simple": CheckStatus.EVIDENCE_NOT_SIMPLE,
}


class CliError(ValueError):
    """Configuration problem detected before any computation."""


def _default_jobs() -> int:
    env = os.environ.get("WITTMOD_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as err:
            raise CliError(f"WITTMOD_JOBS must be an integer, got {env!r}") from err
    return os.cpu_count() or 1


def _parse_lambda(text: str | None, n: int):
    if text is None or text == "sym":
        return None
    try:
        values = tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as err:
        raise CliError(f"bad --lambda value {text!r}") from err
    if len(values) != n:
        raise CliError(f"--lambda needs {n} entries at rank {n}, got {len(values)}")
    return values


def _parse_a(text: str | None):
    if text is None or text == "sym":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise CliError(f"bad --a value {text!r}") from err


def _parse_S(text: str | None):
    if text is None or text == "":
        return frozenset()
    try:
        return frozenset(int(part) for part in text.split(","))
    except ValueError as err:
        raise CliError(f"bad --S value {text!r}") from err


def _module_spec(args) -> ModuleSpec:
    family = _FAMILIES[args.family]
    n = args.n
    S = _parse_S(args.S) if family is Family.OMEGA_S else None
    return ModuleSpec(
        family, n, lam=_parse_lambda(args.lam, n), a=_parse_a(args.a), S=S
    )


def _emit(args, report) -> None:
    if args.json:
        print(report_to_json(write_report(report)))
    else:
        print(report_line(report))


def _report_exit(args, report) -> int:
    expect = getattr(args, "expect", None)
    if expect is not None:
        return 0 if report.status is _EXPECT_STATUS[expect] else 1
    return 0 if report.status is not CheckStatus.FAIL else 1


def _add_module_flags(p: argparse.ArgumentParser, family_required=True):
    p.add_argument(
        "--family",
        choices=sorted(_FAMILIES),
        required=family_required,
        help="module family",
    )
    p.add_argument("--n", type=int, default=1, help="rank (default 1)")
    p.add_argument(
        "--lambda",
        dest="lam",
        default="sym",
        help="'sym' or comma-separated nonzero rationals, one per index",
    )
    p.add_argument("--a", default="sym", help="'sym' or a rational")
    p.add_argument("--S", default=None, help="comma-separated index set (omega-s)")


def _add_common_flags(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="STRUCTURED report output")
    p.add_argument("--jobs", type=int, default=None, help="worker count")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="wittmod",
        description="Exact checks for Witt and Virasoro module families.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_act = sub.add_parser("act", help="apply an algebra element to a module element")
    _add_module_flags(p_act)
    p_act.add_argument("--term", required=True, help="algebra element, e.g. 'd2'")
    p_act.add_argument("--f", default="1", help="module element (default 1)")
    _add_common_flags(p_act)

    p_br = sub.add_parser("bracket", help="bracket of two algebra elements")
    p_br.add_argument("--algebra", choices=sorted(_ALGEBRAS), default="w")
    p_br.add_argument("--n", type=int, default=1)
    p_br.add_argument("--x", required=True)
    p_br.add_argument("--y", required=True)
    _add_common_flags(p_br)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    vsub = p_verify.add_subparsers(dest="suite", required=True)

    p_ax = vsub.add_parser("axioms", help="module-axiom sweep")
    _add_module_flags(p_ax)
    p_ax.add_argument("--kmax", type=int, default=2)
    p_ax.add_argument("--degmax", type=int, default=2)
    _add_common_flags(p_ax)

    p_l1 = vsub.add_parser("lemma1", help="shift-law sweep")
    _add_module_flags(p_l1)
    p_l1.add_argument("--kmax", type=int, default=2)
    p_l1.add_argument("--degmax", type=int, default=2)
    _add_common_flags(p_l1)

    p_gi = vsub.add_parser("gamma-iso", help="gamma a=0 vs a=-1 coincidence")
    p_gi.add_argument("--kmax", type=int, default=6)
    _add_common_flags(p_gi)

    p_t2 = vsub.add_parser("theorem2", help="derivation-chain identities")
    _add_common_flags(p_t2)

    p_t3 = vsub.add_parser("theorem3", help="d_{-2} identity and central vanishing")
    p_t3.add_argument("--degmax", type=int, default=3)
    _add_common_flags(p_t3)

    p_si = sub.add_parser("simplicity", help="bounded-depth simplicity probe")
    _add_module_flags(p_si)
    p_si.add_argument("--kmax", type=int, default=4)
    p_si.add_argument("--depth", type=int, default=4)
    p_si.add_argument(
        "--seed",
        action="append",
        default=None,
        help="seed module element; repeatable; default: all monomials of degree <= 2",
    )
    p_si.add_argument("--expect", choices=sorted(_EXPECT_STATUS))
    _add_common_flags(p_si)

    return top


def _cmd_act(args) -> int:
    spec = _module_spec(args)
    ctx = spec.context()
    el = parse_element(args.term, spec.algebra, spec.n)
    f = parse_poly(args.f, ctx)
    image = act(spec, el, f)
    if args.json:
        print(report_to_json({"result": print_poly(image)}))
    else:
        print(print_poly(image))
    return 0


def _cmd_bracket(args) -> int:
    algebra = _ALGEBRAS[args.algebra]
    x = parse_element(args.x, algebra, args.n)
    y = parse_element(args.y, algebra, args.n)
    out = bracket(x, y)
    if args.json:
        print(report_to_json({"result": print_element(out)}))
    else:
        print(print_element(out))
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "axioms":
        cfg = CheckConfig(spec=_module_spec(args), kmax=args.kmax, degmax=args.degmax)
        report = verify_axioms(cfg, jobs=args.jobs or _default_jobs())
    elif args.suite == "lemma1":
        cfg = CheckConfig(spec=_module_spec(args), kmax=args.kmax, degmax=args.degmax)
        report = verify_lemma1_shift(cfg)
    elif args.suite == "gamma-iso":
        report = gamma_coincidence(args.kmax)
    elif args.suite == "theorem2":
        report = theorem2_suite()
    else:
        report = theorem3_suite(degmax=args.degmax)
    _emit(args, report)
    return _report_exit(args, report)


def _cmd_simplicity(args) -> int:
    spec = _module_spec(args)
    if spec.lam is None or spec.a is None:
        raise CliError("simplicity needs concrete --lambda and --a")
    ctx = spec.context()
    if args.seed:
        seeds = [parse_poly(s, ctx) for s in args.seed]
    else:
        seeds = module_monomials(ctx, 2)
    cfg = CheckConfig(spec=spec, kmax=args.kmax, degmax=2, depth=args.depth)
    report = simplicity_probe(spec, seeds, cfg)
    _emit(args, report)
    return _report_exit(args, report)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_err:
        return int(exit_err.code or 0)
    try:
        if args.command == "act":
            return _cmd_act(args)
        if args.command == "bracket":
            return _cmd_bracket(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "simplicity":
            return _cmd_simplicity(args)
        raise CliError(f"unknown command {args.command!r}")
    except (
        CliError,
        ExprParseError,
        ParameterDomainError,
        ExponentDomainError,
        ContextMismatchError,
        InadmissibleTermError,
        AlgebraMismatchError,
    ) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
