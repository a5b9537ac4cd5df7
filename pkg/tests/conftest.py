"""Shared generators for the test suite.

Two flavors on purpose: hypothesis strategies for property tests, and a
plain seeded-Random generator for bulk round-trip counts where shrinkage
is not needed and throughput matters.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from wittmod import Poly, VarContext

# exact arithmetic on a shared box: example wall time is noise, not signal
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

_COEFFS = st.fractions(
    min_value=-9, max_value=9, max_denominator=5
).filter(lambda q: q != 0)


def exponents(ctx: VarContext) -> st.SearchStrategy[tuple[int, ...]]:
    parts = []
    for pos in range(2 * ctx.n + 2):
        if ctx.allows_negative(pos):
            parts.append(st.integers(min_value=-3, max_value=3))
        else:
            parts.append(st.integers(min_value=0, max_value=3))
    return st.tuples(*parts)


def _build(ctx: VarContext, pairs) -> Poly:
    out = Poly.zero(ctx)
    for m, c in pairs:
        out = out + Poly.from_monomial(ctx, m, c)
    return out


def polys(ctx: VarContext, max_terms: int = 5) -> st.SearchStrategy[Poly]:
    term = st.tuples(exponents(ctx), _COEFFS)
    return st.lists(term, max_size=max_terms).map(lambda pairs: _build(ctx, pairs))


def random_poly(rng: random.Random, ctx: VarContext, max_terms: int = 6) -> Poly:
    """Uniform junk polynomial for round-trip soak tests."""
    out = Poly.zero(ctx)
    for _ in range(rng.randint(0, max_terms)):
        exps = []
        for pos in range(2 * ctx.n + 2):
            lo = -3 if ctx.allows_negative(pos) else 0
            exps.append(rng.randint(lo, 3))
        num = rng.choice([v for v in range(-9, 10) if v])
        den = rng.randint(1, 5)
        out = out + Poly.from_monomial(ctx, tuple(exps), Fraction(num, den))
    return out
