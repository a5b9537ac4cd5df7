"""Submodule closures and the bounded simplicity probe."""

from fractions import Fraction

import pytest

from wittmod import (
    CheckConfig,
    CheckStatus,
    Family,
    ModuleSpec,
    ParameterDomainError,
    Poly,
    SubspaceBasis,
    act_on_generator,
    simplicity_probe,
    submodule_closure,
    write_report,
)
from wittmod.verify import basis_terms, module_monomials


def conc_spec(a, n=1, family=Family.OMEGA, **kw):
    lam = (2,) if n == 1 else (2, 3)
    return ModuleSpec(family, n, lam=lam, a=a, **kw)


def closure(spec, seeds, kmax, depth):
    cfg = CheckConfig(spec=spec, kmax=kmax, degmax=2, depth=depth)
    return submodule_closure(spec, seeds, cfg)


def x1(spec, e=1):
    return Poly.var(spec.context(), "x1", e)


def test_a_minus_one_rows_have_zero_constant_term():
    spec = conc_spec(-1)
    basis = closure(spec, [x1(spec)], kmax=3, depth=3)
    ctx = spec.context()
    const = ctx.monomial()
    assert basis.rows
    for row in basis.rows:
        assert row.coeff_of(const) == 0
    assert basis.member(x1(spec))
    assert basis.member(x1(spec, 2) - 3 * x1(spec))
    assert not basis.member(Poly.one(ctx))
    assert not basis.member(x1(spec) + 1)


def test_seed_one_contains_generator_images():
    spec = conc_spec(Fraction(1, 2))
    basis = closure(spec, [Poly.one(spec.context())], kmax=2, depth=1)
    assert basis.member(Poly.one(spec.context()))
    for t in basis_terms(spec.algebra, 1, 2):
        assert basis.member(act_on_generator(spec, t))


def test_a_zero_reaches_one():
    spec = conc_spec(0)
    basis = closure(spec, [x1(spec, 2)], kmax=4, depth=4)
    assert basis.member(Poly.one(spec.context()))


def test_monotone_in_depth_kmax_and_seeds():
    spec = conc_spec(1)
    seed = [x1(spec, 2)]
    for small, large in [
        (closure(spec, seed, 2, 1), closure(spec, seed, 2, 2)),
        (closure(spec, seed, 1, 2), closure(spec, seed, 2, 2)),
        (
            closure(spec, seed, 2, 2),
            closure(spec, seed + [x1(spec, 3)], 2, 2),
        ),
    ]:
        assert len(small.rows) <= len(large.rows)
        for row in small.rows:
            assert large.member(row)


def test_closure_deterministic():
    spec = conc_spec(-1)
    b1 = closure(spec, [x1(spec)], 3, 3)
    b2 = closure(spec, [x1(spec)], 3, 3)
    assert b1.rows == b2.rows
    assert [str(r) for r in b1.rows] == [str(r) for r in b2.rows]


def test_symbolic_parameters_rejected():
    sym = ModuleSpec(Family.OMEGA, 1)
    cfg = CheckConfig(spec=sym, kmax=2, degmax=2, depth=2)
    seeds = [Poly.var(sym.context(), "x1")]
    with pytest.raises(ParameterDomainError):
        submodule_closure(sym, seeds, cfg)
    with pytest.raises(ParameterDomainError):
        simplicity_probe(sym, seeds, cfg)
    half = ModuleSpec(Family.OMEGA, 1, lam=(2,))  # a still symbolic
    with pytest.raises(ParameterDomainError):
        submodule_closure(half, seeds, cfg)


def test_member_rejects_rank1_leftovers():
    spec = conc_spec(-1)
    basis = closure(spec, [x1(spec)], 2, 2)
    empty = SubspaceBasis(())
    assert not empty.member(x1(spec))
    assert empty.member(Poly.zero(spec.context()))
    assert not basis.member(x1(spec, 9))  # beyond the reached degrees


def test_probe_not_simple_with_certificate():
    spec = conc_spec(-1)
    cfg = CheckConfig(spec=spec, kmax=3, degmax=2, depth=3)
    report = simplicity_probe(spec, [x1(spec)], cfg)
    assert report.status is CheckStatus.EVIDENCE_NOT_SIMPLE
    assert "zero-constant-term-invariance" in report.witness
    doc = write_report(report)
    assert "zero-constant-term-invariance" in doc["witness"]


def test_probe_reached_one_with_word_trace():
    spec = conc_spec(0)
    cfg = CheckConfig(spec=spec, kmax=3, degmax=2, depth=3)
    report = simplicity_probe(spec, [x1(spec, 2)], cfg)
    assert report.status is CheckStatus.EVIDENCE_REACHED_ONE
    assert "seed:x1^2" in report.witness


def test_probe_rank2_grid_seeds():
    spec = conc_spec(0, n=2)
    ctx = spec.context()
    seeds = module_monomials(ctx, 2)
    cfg = CheckConfig(spec=spec, kmax=2, degmax=2, depth=3)
    report = simplicity_probe(spec, seeds, cfg)
    assert report.status is CheckStatus.EVIDENCE_REACHED_ONE
    assert report.stats["seeds"] == 6


def test_probe_omega_s_simple_at_a_minus_one():
    spec = conc_spec(-1, family=Family.OMEGA_S, S=frozenset({1}))
    cfg = CheckConfig(spec=spec, kmax=3, degmax=2, depth=3)
    report = simplicity_probe(spec, [x1(spec)], cfg)
    assert report.status is CheckStatus.EVIDENCE_REACHED_ONE


def test_probe_inconclusive_is_honest():
    """Starved bounds neither reach 1 nor certify invariance; the same
    seed resolves once the word length grows."""
    spec = conc_spec(1)
    seed = [x1(spec, 3)]
    shallow = CheckConfig(spec=spec, kmax=1, degmax=2, depth=1)
    deeper = CheckConfig(spec=spec, kmax=1, degmax=2, depth=2)
    assert (
        simplicity_probe(spec, seed, shallow).status is CheckStatus.INCONCLUSIVE
    )
    assert (
        simplicity_probe(spec, seed, deeper).status
        is CheckStatus.EVIDENCE_REACHED_ONE
    )


def test_mixed_seeds_at_a_minus_one():
    """The constant seed trivially contains 1; the x seed certifies.
    Certification wins: the module has a proper submodule."""
    spec = conc_spec(-1)
    ctx = spec.context()
    cfg = CheckConfig(spec=spec, kmax=2, degmax=2, depth=2)
    report = simplicity_probe(spec, [Poly.one(ctx), x1(spec)], cfg)
    assert report.status is CheckStatus.EVIDENCE_NOT_SIMPLE
