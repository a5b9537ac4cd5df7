"""Executable verification suites.

Every check here is an exact polynomial identity (or an exact linear
algebra fact) over Q; there are no tolerances.  Suites return Report
values rather than raising, so a FAIL carries a printable
counterexample and every EVIDENCE verdict carries a witness.

The module-axiom sweep checks, for every ordered pair of basis terms x,
y within the exponent bound and every monomial f within the degree
bound,

    act(x, act(y, f)) - act(y, act(x, f)) = act([x, y], f)

in symbolic-parameter mode.  The two ordered residuals of a pair are
negatives of each other, so each unordered pair is computed once.  The
sweep runs on core form (see modfam): the lam monomial of an image is
an exponent offset, and offsets agree on both sides of the identity by
construction, which reduces the check to core-dict equality.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from multiprocessing import get_context

from .polyring import (
    ParameterDomainError,
    Poly,
    VarContext,
    grlex_key,
)
from .wittalg import (
    CENTRAL,
    AlgElement,
    Algebra,
    WittTerm,
    bracket,
    bracket_basis,
    in_plus_domain,
)
from .modfam import (
    CoreAction,
    Family,
    ModuleSpec,
    act,
    act_basis,
    act_on_generator,
    core_to_poly,
)


class CheckStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    EVIDENCE_NOT_SIMPLE = "EVIDENCE_NOT_SIMPLE"
    EVIDENCE_REACHED_ONE = "EVIDENCE_REACHED_ONE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CheckConfig:
    """Bounds for a sweep: |k_i| <= kmax, deg f <= degmax, word length
    <= depth for closures."""

    spec: ModuleSpec | None = None
    kmax: int = 2
    degmax: int = 2
    depth: int = 4

    def __post_init__(self):
        if self.kmax < 1:
            raise ValueError("kmax must be >= 1")
        if self.degmax < 0:
            raise ValueError("degmax must be >= 0")
        if self.depth < 1:
            raise ValueError("depth must be >= 1")


@dataclass
class Report:
    check_name: str
    status: CheckStatus
    counterexample: dict | None = None
    witness: str | None = None
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS


@dataclass
class SubspaceBasis:
    """Reduced row-echelon basis over Q; rows have distinct leading
    monomials and are listed with decreasing leads."""

    rows: tuple[Poly, ...]

    def member(self, p: Poly) -> bool:
        """Membership by reduction to zero against the basis."""
        rem = p
        by_lead = {row.leading_monomial(): row for row in self.rows}
        while not rem.is_zero:
            lead = rem.leading_monomial()
            row = by_lead.get(lead)
            if row is None:
                return False
            rem = rem - row * rem.coeff_of(lead)
        return True


# -- enumeration -----------------------------------------------------------


def basis_terms(algebra: Algebra, n: int, kmax: int) -> list[WittTerm]:
    """All admissible derivation terms with |k|_inf <= kmax, sorted by
    (k, i); for VIRASORO the central term is appended last."""
    terms: set[WittTerm] = set()
    if algebra is Algebra.W_PLUS:
        for i in range(1, n + 1):
            ranges = [
                range(-1, kmax + 1) if pos == i - 1 else range(0, kmax + 1)
                for pos in range(n)
            ]
            for k in itertools.product(*ranges):
                terms.add(WittTerm(k, i))
    else:
        for k in itertools.product(range(-kmax, kmax + 1), repeat=n):
            for i in range(1, n + 1):
                terms.add(WittTerm(k, i))
    out = sorted(terms, key=WittTerm.sort_key)
    if algebra is Algebra.VIRASORO:
        out.append(CENTRAL)
    return out


def module_monomial_cores(n: int, degmax: int) -> list[dict]:
    """Core dicts of the x-monomials with total degree <= degmax, in
    ascending graded lexicographic order."""
    monos = []
    for e in itertools.product(range(degmax + 1), repeat=n):
        if sum(e) <= degmax:
            monos.append(e + (0,))
    monos.sort(key=grlex_key)
    return [{m: 1} for m in monos]


def module_monomials(ctx: VarContext, degmax: int) -> list[Poly]:
    return [
        core_to_poly(ctx, core) for core in module_monomial_cores(ctx.n, degmax)
    ]


# -- module-axiom sweep ----------------------------------------------------


def _first_level(ca: CoreAction, terms, fcores):
    """images[it][jf] = core of act(terms[it], fcores[jf]); the lam
    offset is terms[it].k and is tracked implicitly."""
    return [[ca.act_term(t, fc)[1] for fc in fcores] for t in terms]


def _scan_pairs(spec, terms, fcores, iy_range, bracket_fn, ca=None):
    """Scan unordered pairs (ix <= iy) for iy in iy_range.

    Returns (instances, failure) with failure the scan-order-first
    failing (iy, ix, jf) or None.  No early abort: the result does not
    depend on how the iy space is chunked.
    """
    if ca is None:
        ca = CoreAction(spec)
    algebra, n = spec.algebra, spec.n
    images = _first_level(ca, terms, fcores)
    nf = len(fcores)
    actf: dict = {}
    instances = 0
    failure = None
    for iy in iy_range:
        y = terms[iy]
        img_y = images[iy]
        for ix in range(iy + 1):
            x = terms[ix]
            img_x = images[ix]
            rhs_terms = []
            for t, c in bracket_fn(algebra, n, x, y).terms.items():
                if t.central:
                    continue  # C acts as zero in every family here
                key = (t.k, t.i)
                cached = actf.get(key)
                if cached is None:
                    cached = [ca.act(t.k, t.i, fc)[1] for fc in fcores]
                    actf[key] = cached
                rhs_terms.append((c, cached))
            for jf in range(nf):
                if x.central:
                    a_core = {}
                else:
                    a_core = ca.act(x.k, x.i, img_y[jf])[1]
                if y.central:
                    res = dict(a_core)
                else:
                    res = dict(a_core)
                    for m, c in ca.act(y.k, y.i, img_x[jf])[1].items():
                        acc = res.get(m, 0) - c
                        if acc:
                            res[m] = acc
                        else:
                            res.pop(m, None)
                for c, cached in rhs_terms:
                    for m, w in cached[jf].items():
                        acc = res.get(m, 0) - c * w
                        if acc:
                            res[m] = acc
                        else:
                            res.pop(m, None)
                instances += 1
                if res and failure is None:
                    failure = (iy, ix, jf)
    return instances, failure


def _axiom_chunks(nterms: int, jobs: int) -> list[range]:
    """Split 0..nterms-1 into contiguous iy ranges with roughly equal
    pair counts (weight of iy is iy + 1)."""
    total = nterms * (nterms + 1) // 2
    bounds = [0]
    acc = 0
    for iy in range(nterms):
        acc += iy + 1
        if acc >= total * len(bounds) // max(jobs, 1) and len(bounds) <= jobs:
            bounds.append(iy + 1)
    if bounds[-1] != nterms:
        bounds.append(nterms)
    return [range(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]


def _scan_worker(args):
    spec, terms, fcores, lo, hi = args
    return _scan_pairs(spec, terms, fcores, range(lo, hi), bracket_basis)


def verify_axioms(cfg: CheckConfig, jobs: int = 1, *, core_action=None, bracket_fn=None) -> Report:
    """Bracket-compatibility sweep for the configured module.

    core_action and bracket_fn are injection points for mutation
    self-tests; custom injections always run sequentially.
    """
    spec = cfg.spec
    t0 = time.perf_counter()
    terms = basis_terms(spec.algebra, spec.n, cfg.kmax)
    fcores = module_monomial_cores(spec.n, cfg.degmax)
    name = f"axioms[{spec.describe()} kmax={cfg.kmax} degmax={cfg.degmax}]"
    injected = core_action is not None or bracket_fn is not None
    bfn = bracket_fn or bracket_basis
    if jobs > 1 and not injected:
        chunks = _axiom_chunks(len(terms), jobs)
        payload = [(spec, terms, fcores, r.start, r.stop) for r in chunks]
        with get_context("fork").Pool(processes=jobs) as pool:
            results = pool.map(_scan_worker, payload)
        instances = sum(r[0] for r in results)
        failure = min(
            (r[1] for r in results if r[1] is not None), default=None
        )
    else:
        instances, failure = _scan_pairs(
            spec, terms, fcores, range(len(terms)), bfn, ca=core_action
        )
    stats = {
        "pairs_checked": len(terms) ** 2 * len(fcores),
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
    if failure is None:
        return Report(name, CheckStatus.PASS, stats=stats)
    iy, ix, jf = failure
    ca = core_action or CoreAction(spec)
    x, y = terms[ix], terms[iy]
    ctx = spec.context()
    f_poly = core_to_poly(ctx, fcores[jf])
    off_y, gy = ca.act_term(y, fcores[jf])
    off_x, gx = ca.act_term(x, fcores[jf])
    off_a, a_core = ca.act_term(x, gy)
    off_b, b_core = ca.act_term(y, gx)
    off_lhs = tuple(u + v for u, v in zip(off_a, off_y))
    off_rhs = tuple(u + v for u, v in zip(off_b, off_x))
    lhs = core_to_poly(ctx, a_core, off_lhs) - core_to_poly(ctx, b_core, off_rhs)
    rhs = Poly.zero(ctx)
    for t, c in bfn(spec.algebra, spec.n, x, y).terms.items():
        if not t.central:
            off_t, t_core = ca.act_term(t, fcores[jf])
            rhs = rhs + core_to_poly(ctx, t_core, off_t) * c
    return Report(
        name,
        CheckStatus.FAIL,
        counterexample={
            "x": str(x),
            "y": str(y),
            "f": str(f_poly),
            "lhs": str(lhs),
            "rhs": str(rhs),
        },
        stats=stats,
    )


# -- shift law -------------------------------------------------------------


def verify_lemma1_shift(cfg: CheckConfig, action_fn=None) -> Report:
    """act(t, f) = shift_sub(f, k) * act(t, 1) over the cfg ranges.

    Runs at the Poly level on purpose: an independent route from the
    core-kernel sweep of verify_axioms.  action_fn is the mutation
    injection point and is used on both sides.
    """
    spec = cfg.spec
    afn = action_fn or act_basis
    t0 = time.perf_counter()
    ctx = spec.context()
    terms = basis_terms(spec.algebra, spec.n, cfg.kmax)
    fs = module_monomials(ctx, cfg.degmax)
    name = f"lemma1-shift[{spec.describe()} kmax={cfg.kmax} degmax={cfg.degmax}]"
    checked = 0
    for t in terms:
        if t.central:
            continue
        gen_image = afn(spec, t, Poly.one(ctx))
        for f in fs:
            lhs = afn(spec, t, f)
            rhs = f.shift_sub(t.k) * gen_image
            checked += 1
            if lhs != rhs:
                stats = {
                    "pairs_checked": checked,
                    "elapsed_ms": int((time.perf_counter() - t0) * 1000),
                }
                return Report(
                    name,
                    CheckStatus.FAIL,
                    counterexample={
                        "x": str(t),
                        "f": str(f),
                        "lhs": str(lhs),
                        "rhs": str(rhs),
                    },
                    stats=stats,
                )
    stats = {
        "pairs_checked": checked,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
    return Report(name, CheckStatus.PASS, stats=stats)


# -- the Gamma parameter coincidence ---------------------------------------


def gamma_coincidence(kmax: int, a_values: tuple = (0, -1)) -> Report:
    """The a = 0 and a = -1 actions of the rank-1 Gamma family are the
    same polynomials, generator by generator, for -1 <= k <= kmax."""
    t0 = time.perf_counter()
    a0, a1 = a_values
    spec0 = ModuleSpec(Family.GAMMA, a=a0)
    spec1 = ModuleSpec(Family.GAMMA, a=a1)
    name = f"gamma-coincidence[a={a0} vs a={a1} k=-1..{kmax}]"
    checked = 0
    for k in range(-1, kmax + 1):
        t = WittTerm((k,), 1)
        p0 = act_on_generator(spec0, t)
        p1 = act_on_generator(spec1, t)
        checked += 1
        if p0 != p1:
            return Report(
                name,
                CheckStatus.FAIL,
                counterexample={
                    "x": str(t),
                    "f": "1",
                    "lhs": str(p0),
                    "rhs": str(p1),
                },
                stats={
                    "pairs_checked": checked,
                    "elapsed_ms": int((time.perf_counter() - t0) * 1000),
                },
            )
    return Report(
        name,
        CheckStatus.PASS,
        stats={
            "pairs_checked": checked,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        },
    )


# -- derivation-chain suites -----------------------------------------------


def _suite_report(name, t0, sub_results, checked) -> Report:
    stats = {
        "pairs_checked": checked,
        "sub_checks": {sub: ("PASS" if ok else "FAIL") for sub, ok, _ in sub_results},
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
    for sub, ok, ce in sub_results:
        if not ok:
            return Report(name, CheckStatus.FAIL, counterexample=ce, stats=stats)
    return Report(name, CheckStatus.PASS, stats=stats)


def _gamma_g_polys(ctx: VarContext, f1: Poly | None = None) -> dict[int, Poly]:
    """g_2 = b and the recursion
    (k-1) g_{k+1}(x) = g_k(x-1) f_1(x) - g_k(x) f_1(x-k), k = 2, 3, 4,
    with f_1 = (x+a)(x-(a+1)); x stands for d_0."""
    x = Poly.var(ctx, "x1")
    a = Poly.var(ctx, "a")
    if f1 is None:
        f1 = (x + a) * (x - (a + 1))
    g = {1: Poly.zero(ctx), 2: Poly.var(ctx, "b")}
    for k in (2, 3, 4):
        raw = g[k].shift_sub((1,)) * f1 - g[k] * f1.shift_sub((k,))
        g[k + 1] = raw * Fraction(1, k - 1)
    return g


def _fk0(ctx: VarContext, k: int) -> Poly:
    """f_{k,0}(x) = (prod_{i=0}^{k-1}(x+a-i)) (x - k(a+1))."""
    from .polyring import falling_product

    x = Poly.var(ctx, "x1")
    a = Poly.var(ctx, "a")
    return falling_product(x + a, k) * (x - k * (a + 1))


def theorem2_suite(f1_override: Poly | None = None) -> Report:
    """Five exact identities from the rank-1 derivation chain.

    x1 plays the role of d_0 throughout; in case_ii_obstruction the
    module variables x2..x6 of a wider context stand for the generic
    coefficients a_0..a_4.  f1_override replaces the recursion input
    f_1 for the mutation self-test.
    """
    t0 = time.perf_counter()
    ctx = VarContext(1)
    x = Poly.var(ctx, "x1")
    a = Poly.var(ctx, "a")
    b = Poly.var(ctx, "b")
    subs = []
    checked = 0

    def record(sub, lhs, rhs):
        nonlocal checked
        checked += 1
        ok = lhs == rhs
        ce = None if ok else {"lhs": str(lhs), "rhs": str(rhs)}
        subs.append((sub, ok, ce))
        return ok

    def record_all(sub, pairs):
        nonlocal checked
        ce = None
        for lhs, rhs in pairs:
            checked += 1
            if ce is None and lhs != rhs:
                ce = {"lhs": str(lhs), "rhs": str(rhs)}
        subs.append((sub, ce is None, ce))

    # (1) the case-(i) normalization of f_2 = d_0 - 2a
    f2_i = x - 2 * a
    record(
        "case_i_f2",
        3 * (x - a),
        (x + a) * f2_i.shift_sub((-1,)) - (x + a - 2) * f2_i,
    )

    # (2) leading-term obstruction with generic coefficients a_0..a_s
    wide = VarContext(6)
    xw = Poly.var(wide, "x1")
    aw = Poly.var(wide, "a")
    pairs = []
    for s in range(5):
        coeffs = [Poly.var(wide, f"x{t + 2}") for t in range(s + 1)]
        fpoly = Poly.zero(wide)
        for t, cf in enumerate(coeffs):
            fpoly = fpoly + cf * xw**t
        expr = (xw - aw) * (xw + aw + 1) * (fpoly.shift_sub((-1, 0, 0, 0, 0, 0)) - fpoly)
        expr = expr + 2 * (2 * xw - 1) * fpoly
        lead = expr.coeff_in_var("x1", s + 1)
        pairs.append((lead, coeffs[s] * (s + 4)))
    record_all("case_ii_obstruction", pairs)

    # (3) the g-recursion reproduces the displayed g_3, g_4, g_5 and
    # dies at b = 0
    g = _gamma_g_polys(ctx, f1_override)
    displayed = {
        3: 2 * b * (2 * x - 3),
        4: 2 * b * (5 * x**2 - 20 * x + (18 + a + a**2)),
        5: 2
        * b
        * (
            10 * x**3
            - 75 * x**2
            + (173 + 6 * a + 6 * a**2) * x
            - (120 + 15 * a + 15 * a**2)
        ),
    }
    rec_pairs = [(g[k], displayed[k]) for k in (3, 4, 5)]
    rec_pairs += [
        (g[k].eval_params({"b": 0}), Poly.zero(ctx)) for k in (3, 4, 5)
    ]
    record_all("g_recursion", rec_pairs)

    # (4) the two computations of g_5 differ by exactly
    # 8b(b - (4a^3 + 6a^2 + 2a))
    f20 = _fk0(ctx, 2)
    f30 = _fk0(ctx, 3)
    g2, g3 = g[2], g[3]
    alt = (
        f20 * g3.shift_sub((2,))
        + f30.shift_sub((2,)) * g2
        + g2 * g3.shift_sub((2,))
        - f30 * g2.shift_sub((3,))
        - f20.shift_sub((3,)) * g3
        - g3 * g2.shift_sub((3,))
    )
    record(
        "b_constraint",
        g[5] - alt,
        8 * b * (b - (4 * a**3 + 6 * a**2 + 2 * a)),
    )

    # (5) f_2 factorization
    record(
        "f2_factorization",
        (x + a) * (x + a - 1) * (x - 2 * (a + 1)) + (4 * a**3 + 6 * a**2 + 2 * a),
        (x - (a + 1)) * (x - (a + 1) - 1) * (x + 2 * a),
    )

    return _suite_report("theorem2", t0, subs, checked)


def theorem3_suite(degmax: int = 3, bracket_fn=None) -> Report:
    """The d_{-2} identity and the forced vanishing of the central
    action, with the bracket injectable for the mutation self-test."""
    t0 = time.perf_counter()
    bfn = bracket_fn or bracket_basis
    ctx = VarContext(1)
    x = Poly.var(ctx, "x1")
    a = Poly.var(ctx, "a")
    subs = []
    checked = 0

    # (1) the d_{-2} normalization
    gm = x + 2 * (a + 1)
    lhs1 = -3 * (x + a + 1)
    rhs1 = (x - a - 1) * gm.shift_sub((1,)) - (x - a + 1) * gm
    checked += 1
    ok1 = lhs1 == rhs1
    subs.append(
        ("dm2_identity", ok1, None if ok1 else {"lhs": str(lhs1), "rhs": str(rhs1)})
    )

    # (2) central_zero: the bracket value is pinned first (this is the
    # cocycle-sensitive part: C acts as zero, so action values alone
    # cannot see a mutated cocycle), then the action identities.
    spec = ModuleSpec(Family.VIRASORO_OMEGA)
    dm2 = WittTerm((-2,), 1)
    d2 = WittTerm((2,), 1)
    el = bfn(Algebra.VIRASORO, 1, dm2, d2)
    frozen = AlgElement(
        Algebra.VIRASORO, 1, {WittTerm((0,), 1): 4, CENTRAL: Fraction(-1, 2)}
    )
    ce = None
    checked += 1
    if el != frozen:
        ce = {"lhs": str(el), "rhs": str(frozen)}
    for f in module_monomials(ctx, degmax):
        two_step = act_basis(spec, dm2, act_basis(spec, d2, f)) - act_basis(
            spec, d2, act_basis(spec, dm2, f)
        )
        via_bracket = act(spec, el, f)
        expected = 4 * x * f
        central_image = act_basis(spec, CENTRAL, f)
        checked += 3
        if ce is None and two_step != expected:
            ce = {"f": str(f), "lhs": str(two_step), "rhs": str(expected)}
        if ce is None and via_bracket != two_step:
            ce = {"f": str(f), "lhs": str(via_bracket), "rhs": str(two_step)}
        if ce is None and not central_image.is_zero:
            ce = {"f": str(f), "lhs": str(central_image), "rhs": "0"}
    subs.append(("central_zero", ce is None, ce))

    return _suite_report("theorem3", t0, subs, checked)


# -- algebra laws ----------------------------------------------------------


def antisymmetry_check(algebra: Algebra, n: int, kmax: int) -> Report:
    """bracket(x, y) = -bracket(y, x) on all basis pairs in range."""
    t0 = time.perf_counter()
    terms = basis_terms(algebra, n, kmax)
    name = f"antisymmetry[{algebra.value} n={n} kmax={kmax}]"
    checked = 0
    for x, y in itertools.combinations_with_replacement(terms, 2):
        checked += 1
        if not (bracket_basis(algebra, n, x, y) + bracket_basis(algebra, n, y, x)).is_zero:
            return Report(
                name,
                CheckStatus.FAIL,
                counterexample={"x": str(x), "y": str(y)},
                stats={"pairs_checked": checked, "elapsed_ms": 0},
            )
    return Report(
        name,
        CheckStatus.PASS,
        stats={
            "pairs_checked": checked,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        },
    )


def jacobi_check(algebra: Algebra, n: int, kmax: int) -> Report:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on basis triples.

    Unordered triples suffice: the Jacobiator flips sign under
    transpositions and is invariant under cyclic rotation, so it
    vanishes on all ordered triples iff it vanishes on unordered ones.
    """
    t0 = time.perf_counter()
    terms = basis_terms(algebra, n, kmax)
    name = f"jacobi[{algebra.value} n={n} kmax={kmax}]"
    checked = 0
    for x, y, z in itertools.combinations_with_replacement(terms, 3):
        ex = AlgElement.term(algebra, n, x)
        ey = AlgElement.term(algebra, n, y)
        ez = AlgElement.term(algebra, n, z)
        total = (
            bracket(ex, bracket_basis(algebra, n, y, z))
            + bracket(ey, bracket_basis(algebra, n, z, x))
            + bracket(ez, bracket_basis(algebra, n, x, y))
        )
        checked += 1
        if not total.is_zero:
            return Report(
                name,
                CheckStatus.FAIL,
                counterexample={"x": str(x), "y": str(y), "f": str(z)},
                stats={"pairs_checked": checked, "elapsed_ms": 0},
            )
    return Report(
        name,
        CheckStatus.PASS,
        stats={
            "pairs_checked": checked,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        },
    )


def w_plus_closure_check(n: int, kmax: int) -> Report:
    """Every bracket of admissible W_PLUS terms stays admissible; the
    boundary cases (r+s)_i = -1 rely on the coefficient vanishing and
    are counted separately in the stats."""
    t0 = time.perf_counter()
    terms = basis_terms(Algebra.W_PLUS, n, kmax)
    name = f"w-plus-closure[n={n} kmax={kmax}]"
    checked = 0
    boundary_hits = 0
    for x, y in itertools.product(terms, repeat=2):
        out = bracket_basis(Algebra.W_PLUS, n, x, y)  # raises if it escaped
        checked += 1
        ks = tuple(r + s for r, s in zip(x.k, y.k))
        for t in (WittTerm(ks, y.i), WittTerm(ks, x.i)):
            if not in_plus_domain(t.k, t.i) and t not in out.terms:
                boundary_hits += 1
        for t in out.terms:
            if not in_plus_domain(t.k, t.i):
                return Report(
                    name,
                    CheckStatus.FAIL,
                    counterexample={"x": str(x), "y": str(y), "lhs": str(out)},
                    stats={"pairs_checked": checked, "elapsed_ms": 0},
                )
    return Report(
        name,
        CheckStatus.PASS,
        stats={
            "pairs_checked": checked,
            "boundary_zero_cases": boundary_hits,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        },
    )


# -- submodule closure and the simplicity probe ----------------------------


def _exact_div(w, c):
    q = Fraction(w) / Fraction(c)
    return q.numerator if q.denominator == 1 else q


class _Echelon:
    """Forward echelon over Q with monic rows keyed by leading monomial.

    Rows added earlier are never modified during the BFS (soundness of
    the frontier-only argument); full back-reduction happens once at
    the end.
    """

    def __init__(self):
        self.rows: dict[tuple, tuple[dict, str]] = {}

    def reduce(self, v: dict) -> tuple[tuple | None, dict | None]:
        v = dict(v)
        while v:
            lead = max(v, key=grlex_key)
            hit = self.rows.get(lead)
            if hit is None:
                return lead, v
            c = v.pop(lead)
            for m, rc in hit[0].items():
                if m == lead:
                    continue
                acc = v.get(m, 0) - c * rc
                if acc:
                    v[m] = acc
                else:
                    v.pop(m, None)
        return None, None

    def add(self, lead: tuple, v: dict, word: str) -> dict:
        c = v[lead]
        monic = {m: _exact_div(w, c) for m, w in v.items()}
        self.rows[lead] = (monic, word)
        return monic

    def back_reduce(self):
        for lead in sorted(self.rows, key=grlex_key):
            row, _ = self.rows[lead]
            for other_lead, (other, word) in self.rows.items():
                if other_lead == lead or lead not in other:
                    continue
                c = other[lead]
                new = dict(other)
                for m, rc in row.items():
                    acc = new.get(m, 0) - c * rc
                    if acc:
                        new[m] = acc
                    else:
                        new.pop(m, None)
                self.rows[other_lead] = (new, word)


def _require_concrete(spec: ModuleSpec):
    if spec.lam is None or spec.a is None:
        raise ParameterDomainError(
            "closure needs concrete lam and a (symbolic parameters present)"
        )


def _closure_generators(spec: ModuleSpec, kmax: int) -> list[WittTerm]:
    return [t for t in basis_terms(spec.algebra, spec.n, kmax) if not t.central]


def _closure_scan(spec: ModuleSpec, seeds: list[Poly], cfg: CheckConfig):
    """BFS closure of the joint seed span under words of length <=
    depth.  Only frontier rows receive the generators: the image of an
    older row lies in an earlier word-length span, which the basis
    already contains."""
    _require_concrete(spec)
    ca = CoreAction(spec)
    gens = _closure_generators(spec, cfg.kmax)
    ech = _Echelon()
    acts = 0
    frontier: list[tuple[dict, str]] = []
    from .modfam import core_from_poly

    for seed in seeds:
        lead, red = ech.reduce(core_from_poly(seed))
        if lead is not None:
            monic = ech.add(lead, red, f"seed:{seed}")
            frontier.append((monic, f"seed:{seed}"))
    for _level in range(cfg.depth):
        new: list[tuple[dict, str]] = []
        for row, word in frontier:
            for g in gens:
                acts += 1
                img = ca.act(g.k, g.i, row)[1]
                lead, red = ech.reduce(img)
                if lead is not None:
                    next_word = f"{g} . {word}"
                    monic = ech.add(lead, red, next_word)
                    new.append((monic, next_word))
        frontier = new
        if not frontier:
            break
    ech.back_reduce()
    return ech, ca, gens, acts


def submodule_closure(spec: ModuleSpec, seeds: list[Poly], cfg: CheckConfig) -> SubspaceBasis:
    """Echelon basis of span{act(w, s) : s in seeds, |w| <= depth}."""
    ech, _, _, _ = _closure_scan(spec, seeds, cfg)
    ctx = spec.context()
    rows = [
        core_to_poly(ctx, ech.rows[lead][0])
        for lead in sorted(ech.rows, key=grlex_key, reverse=True)
    ]
    return SubspaceBasis(tuple(rows))


def _zero_const_certificate(ca: CoreAction, ech: _Echelon, gens) -> bool:
    """All basis rows have zero constant term and stay that way under
    every bounded generator: the bounded invariance certificate that 1
    is unreachable."""
    const = (0,) * (ca.n + 1)
    rows = [row for row, _ in ech.rows.values()]
    if any(row.get(const, 0) != 0 for row in rows):
        return False
    for row in rows:
        for g in gens:
            if ca.act(g.k, g.i, row)[1].get(const, 0) != 0:
                return False
    return True


def simplicity_probe(spec: ModuleSpec, seeds: list[Poly], cfg: CheckConfig) -> Report:
    """Bounded-depth evidence for (non-)simplicity; never a proof.

    EVIDENCE_REACHED_ONE if each seed's closure contains 1;
    EVIDENCE_NOT_SIMPLE if some seed's closure passes the
    zero-constant-term invariance certificate; else INCONCLUSIVE.
    """
    t0 = time.perf_counter()
    name = f"simplicity[{spec.describe()} kmax={cfg.kmax} depth={cfg.depth}]"
    reached: list[str] = []
    certified: list[str] = []
    pending: list[str] = []
    total_acts = 0
    rows_total = 0
    for seed in seeds:
        ech, ca, gens, acts = _closure_scan(spec, [seed], cfg)
        total_acts += acts
        rows_total += len(ech.rows)
        const = (0,) * (spec.n + 1)
        hit = ech.rows.get(const)
        if hit is not None:
            reached.append(f"{seed}: {hit[1]}")
        elif _zero_const_certificate(ca, ech, gens):
            certified.append(
                f"zero-constant-term-invariance holds for seed {seed} "
                f"({len(ech.rows)} basis rows, {len(gens)} generators)"
            )
        else:
            pending.append(str(seed))
    stats = {
        "pairs_checked": total_acts,
        "seeds": len(seeds),
        "rows_total": rows_total,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
    if reached and len(reached) == len(seeds):
        return Report(
            name,
            CheckStatus.EVIDENCE_REACHED_ONE,
            witness="; ".join(reached),
            stats=stats,
        )
    if certified:
        return Report(
            name,
            CheckStatus.EVIDENCE_NOT_SIMPLE,
            witness="; ".join(certified),
            stats=stats,
        )
    return Report(name, CheckStatus.INCONCLUSIVE, stats=stats)
