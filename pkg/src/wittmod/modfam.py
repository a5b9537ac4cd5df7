"""Module families over the Witt and Virasoro algebras.

Four families act on the polynomial ring in x_1..x_n, with parameters
lam (an n-tuple of nonzero rationals, or left symbolic as l_1..l_n) and
a (a rational, or the symbol a):

  OMEGA           over W: t^k d_i . f = lam^k (x_i - k_i(a+1)) f(x - k),
                  any k in Z^n,
  GAMMA           rank 1, over W_PLUS:
                  d_{-1} . f = lam^{-1} f(x+1) and for m >= 0
                  d_m . f = lam^m (x - m(a+1)) prod_{p=0}^{m-1}(x+a-p) f(x-m),
  OMEGA_S         over W_PLUS: t^k d_i . f = lam^k phi(k, i) f(x - k) where
                  phi(k, i) = prod_{q in S, q != i} prod_{p=0}^{k_q-1}(x_q+a-p)
                  if k_i = -1 and i in S, and otherwise
                  phi(k, i) = (x_i - k_i(a+1)) prod_{q in S} prod_{p=0}^{k_q-1}(x_q+a-p),
  VIRASORO_OMEGA  rank 1, over VIRASORO: d_m acts as in OMEGA with k = (m)
                  and C acts as zero.

Empty products are 1 throughout.  A module element is any Poly of the
matching rank; the action shifts the x variables and multiplies by the
family's polynomial factor and the lam monomial (or its value).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .polyring import (
    ContextMismatchError,
    ParameterDomainError,
    Poly,
    Scalar,
    VarContext,
    _shift_expand,
    as_scalar,
    falling_product,
)
from .wittalg import Algebra, AlgElement, WittTerm, validate_term


class Family(Enum):
    OMEGA = "omega"
    GAMMA = "gamma"
    OMEGA_S = "omega-s"
    VIRASORO_OMEGA = "virasoro-omega"


_FAMILY_ALGEBRA = {
    Family.OMEGA: Algebra.W,
    Family.GAMMA: Algebra.W_PLUS,
    Family.OMEGA_S: Algebra.W_PLUS,
    Family.VIRASORO_OMEGA: Algebra.VIRASORO,
}


@dataclass(frozen=True)
class ModuleSpec:
    """One concrete member of a module family.

    lam is None for the symbolic parameters l_1..l_n, else an n-tuple of
    nonzero rationals.  a is None for the symbol a, else a rational.
    S is the index set of OMEGA_S and must stay None for other families.
    """

    family: Family
    n: int = 1
    lam: tuple[Scalar, ...] | None = None
    a: Scalar | None = None
    S: frozenset[int] | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n!r}")
        if self.family in (Family.GAMMA, Family.VIRASORO_OMEGA) and self.n != 1:
            raise ValueError(f"{self.family.value} modules have rank 1")
        if self.lam is not None:
            lam = tuple(as_scalar(c) for c in self.lam)
            if len(lam) != self.n:
                raise ValueError(
                    f"lam has {len(lam)} entries, rank is {self.n}"
                )
            if any(c == 0 for c in lam):
                raise ParameterDomainError("lam entries must be nonzero")
            object.__setattr__(self, "lam", lam)
        if self.a is not None:
            object.__setattr__(self, "a", as_scalar(self.a))
        if self.family is Family.OMEGA_S:
            S = frozenset(self.S or ())
            if not S <= set(range(1, self.n + 1)):
                raise ValueError(f"S = {sorted(S)} not a subset of 1..{self.n}")
            object.__setattr__(self, "S", S)
        elif self.S is not None:
            raise ValueError(f"S applies only to {Family.OMEGA_S.value} modules")

    @property
    def algebra(self) -> Algebra:
        return _FAMILY_ALGEBRA[self.family]

    def context(self) -> VarContext:
        return VarContext(self.n)

    def describe(self) -> str:
        bits = [self.family.value, f"n={self.n}"]
        if self.lam is not None:
            bits.append("lam=" + ",".join(str(Fraction(c)) for c in self.lam))
        else:
            bits.append("lam=sym")
        bits.append(f"a={'sym' if self.a is None else Fraction(self.a)}")
        if self.S is not None:
            bits.append("S={" + ",".join(str(q) for q in sorted(self.S)) + "}")
        return " ".join(bits)


def _a_poly(spec: ModuleSpec, ctx: VarContext) -> Poly:
    """The parameter a as a Poly: the variable, or its bound value."""
    if spec.a is None:
        return Poly.var(ctx, "a")
    return Poly.const(ctx, spec.a)


def action_multiplier(spec: ModuleSpec, ctx: VarContext, k: tuple[int, ...], i: int) -> Poly:
    """The polynomial factor of t^k d_i acting on a module element.

    This is the full image of 1 except for the lam part: for every
    family act_basis(t, f) = lam^k * action_multiplier * f(x - k).
    """
    a1 = _a_poly(spec, ctx) + 1
    xi = Poly.var(ctx, f"x{i}")
    if spec.family in (Family.OMEGA, Family.VIRASORO_OMEGA):
        return xi - k[i - 1] * a1
    if spec.family is Family.GAMMA:
        m = k[0]
        if m == -1:
            return Poly.one(ctx)
        return (xi - m * a1) * falling_product(xi + _a_poly(spec, ctx), m)
    if spec.family is Family.OMEGA_S:
        a = _a_poly(spec, ctx)
        if k[i - 1] == -1 and i in spec.S:
            acc = Poly.one(ctx)
            for q in sorted(spec.S):
                if q != i:
                    acc = acc * falling_product(Poly.var(ctx, f"x{q}") + a, k[q - 1])
            return acc
        acc = xi - k[i - 1] * a1
        for q in sorted(spec.S):
            acc = acc * falling_product(Poly.var(ctx, f"x{q}") + a, k[q - 1])
        return acc
    raise AssertionError(spec.family)


def _lam_scalar(spec: ModuleSpec, k: tuple[int, ...]) -> Scalar:
    acc: Scalar = 1
    for c, e in zip(spec.lam, k):
        if e:
            acc = acc * (Fraction(c) ** e if e < 0 else c**e)
    return as_scalar(acc)


def _apply_lam(spec: ModuleSpec, p: Poly, k: tuple[int, ...]) -> Poly:
    if spec.lam is not None:
        return p * _lam_scalar(spec, k)
    if not any(k):
        return p
    n = spec.n
    out = {}
    for m, c in p.terms.items():
        lpart = tuple(m[n + pos] + k[pos] for pos in range(n))
        out[m[:n] + lpart + m[2 * n :]] = c
    return Poly._make(p.ctx, out)


def check_element(spec: ModuleSpec, f: Poly) -> None:
    if f.ctx.n != spec.n:
        raise ContextMismatchError(
            f"module element of rank {f.ctx.n}, module has rank {spec.n}"
        )


def act_basis(spec: ModuleSpec, t: WittTerm, f: Poly) -> Poly:
    """The image of the module element f under one basis term."""
    check_element(spec, f)
    validate_term(spec.algebra, spec.n, t)
    if t.central:
        return Poly.zero(f.ctx)
    mult = action_multiplier(spec, f.ctx, t.k, t.i)
    return _apply_lam(spec, f.shift_sub(t.k) * mult, t.k)


def act(spec: ModuleSpec, el: AlgElement, f: Poly) -> Poly:
    """Linear extension of act_basis to algebra elements."""
    if el.algebra is not spec.algebra or el.n != spec.n:
        raise ContextMismatchError(
            f"element of {el.algebra.value} rank {el.n} cannot act on a "
            f"{spec.family.value} module of rank {spec.n}"
        )
    acc = Poly.zero(f.ctx)
    for t, c in el.terms.items():
        acc = acc + act_basis(spec, t, f) * c
    return acc


def act_on_generator(spec: ModuleSpec, t: WittTerm) -> Poly:
    """The image of the constant 1; the shift law writes every other
    image as a shifted multiple of this one."""
    return act_basis(spec, t, Poly.one(spec.context()))


# -- compiled kernel -------------------------------------------------------
#
# The verification sweeps act millions of times on l-free polynomials.
# Core form strips a Poly down to a dict over short exponent tuples
# (x_1..x_n, a) and carries the lam monomial separately as an exponent
# offset (symbolic lam) or folds its value into the coefficients
# (concrete lam).  The multiplier of each basis term is compiled once.


def core_from_poly(f: Poly) -> dict:
    n = f.ctx.n
    core = {}
    for m, c in f.terms.items():
        if any(m[n : 2 * n]) or m[2 * n + 1]:
            raise ValueError("core form requires an l-free, b-free polynomial")
        core[m[:n] + (m[2 * n],)] = c
    return core


def core_to_poly(ctx: VarContext, core: dict, loffset: tuple[int, ...] | None = None) -> Poly:
    n = ctx.n
    lpart = tuple(loffset) if loffset is not None else (0,) * n
    out = {}
    for m, c in core.items():
        out[m[:n] + lpart + (m[n], 0)] = c
    return Poly._make(ctx, out)


def core_mul(u: dict, v: dict) -> dict:
    out: dict = {}
    get = out.get
    for m1, c1 in u.items():
        for m2, c2 in v.items():
            m = tuple(map(int.__add__, m1, m2))
            acc = get(m)
            out[m] = c1 * c2 if acc is None else acc + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def core_shift(core: dict, k: tuple[int, ...], n: int) -> dict:
    if not any(k):
        return core
    out: dict = {}
    get = out.get
    for m, c in core.items():
        rest = m[n:]
        for xp, w in _shift_expand(m[:n], k):
            m2 = xp + rest
            acc = get(m2)
            out[m2] = c * w if acc is None else acc + c * w
    return {m: c for m, c in out.items() if c != 0}


class CoreAction:
    """Per-spec compiled action on core polynomials.

    act(k, i, core) returns (loffset, core') with the contract
    act_basis == lam^loffset * core' after embedding; for concrete lam
    the offset is always the zero tuple.
    """

    __slots__ = ("spec", "n", "ctx", "concrete_lam", "_zero", "_mults")

    def __init__(self, spec: ModuleSpec):
        self.spec = spec
        self.n = spec.n
        self.ctx = spec.context()
        self.concrete_lam = spec.lam is not None
        self._zero = (0,) * spec.n
        self._mults: dict = {}

    def multiplier(self, k: tuple[int, ...], i: int) -> dict:
        key = (k, i)
        hit = self._mults.get(key)
        if hit is None:
            hit = core_from_poly(action_multiplier(self.spec, self.ctx, k, i))
            if self.concrete_lam:
                w = _lam_scalar(self.spec, k)
                if w != 1:
                    hit = {m: c * w for m, c in hit.items()}
            self._mults[key] = hit
        return hit

    def act(self, k: tuple[int, ...], i: int, core: dict) -> tuple[tuple[int, ...], dict]:
        out = core_mul(core_shift(core, k, self.n), self.multiplier(k, i))
        return (self._zero if self.concrete_lam else k), out

    def act_term(self, t: WittTerm, core: dict) -> tuple[tuple[int, ...], dict]:
        if t.central:
            return self._zero, {}
        return self.act(t.k, t.i, core)
