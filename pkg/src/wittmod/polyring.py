"""Exact sparse polynomial arithmetic over Q with Laurent parameters.

Polynomials live in Q[x_1..x_n, a, b] extended by l_1..l_n and their
inverses.  The module
variables x_i and the parameters a, b carry nonnegative exponents only;
the Laurent parameters l_i may carry negative exponents.  A polynomial is
stored as a dict mapping dense exponent tuples to nonzero exact scalars.
Exponent tuples have length 2n + 2 and follow the canonical variable
order x_1, .., x_n, l_1, .., l_n, a, b.

Scalars are plain int whenever the value is integral and Fraction
otherwise; every operation is exact.  Term order is graded
lexicographic on the exponent tuple, and printing is descending in that
order, which makes the string form canonical: equal polynomials print
identically.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Sequence

Scalar = int | Fraction
Monomial = tuple[int, ...]


class ContextMismatchError(ValueError):
    """Operands belong to different variable contexts."""


class ExponentDomainError(ValueError):
    """Negative exponent on a variable that is not a Laurent parameter."""


class ParameterDomainError(ValueError):
    """Inadmissible parameter binding, e.g. l_i = 0 or a non-parameter name."""


class _MinusInfinity:
    """Degree of the zero polynomial; compares below every number."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


def _norm(c: Scalar) -> Scalar:
    """Collapse integral Fractions to int."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def as_scalar(value) -> Scalar:
    """Coerce an int, Fraction, or rational string like '3/2' to a Scalar."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _norm(value)
    if isinstance(value, str):
        return _norm(Fraction(value))
    raise TypeError(f"not an exact scalar: {value!r}")


def scalar_str(c: Scalar) -> str:
    n = Fraction(c)
    return str(n.numerator) if n.denominator == 1 else f"{n.numerator}/{n.denominator}"


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    """Sort key for the graded lexicographic term order."""
    return (sum(m), m)


class VarContext:
    """The variable system at rank n: x_1..x_n, l_1..l_n, a, b.

    Ranks are small (n >= 1); contexts of equal rank are interchangeable.
    """

    __slots__ = ("n", "nvars", "names", "index")

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"rank must be a positive integer, got {n!r}")
        self.n = n
        self.names = tuple(
            [f"x{i}" for i in range(1, n + 1)]
            + [f"l{i}" for i in range(1, n + 1)]
            + ["a", "b"]
        )
        self.nvars = len(self.names)
        self.index = {name: pos for pos, name in enumerate(self.names)}

    def allows_negative(self, pos: int) -> bool:
        """Laurent parameters l_1..l_n occupy positions n..2n-1."""
        return self.n <= pos < 2 * self.n

    def monomial(self, exps: Mapping[str, int] | None = None, **kw: int) -> Monomial:
        """Build a dense exponent tuple from a name -> exponent mapping."""
        e = [0] * self.nvars
        merged = dict(exps or {})
        merged.update(kw)
        for name, exp in merged.items():
            pos = self.index.get(name)
            if pos is None:
                raise ValueError(f"unknown variable {name!r} at rank {self.n}")
            if exp < 0 and not self.allows_negative(pos):
                raise ExponentDomainError(
                    f"negative exponent {exp} on non-Laurent variable {name!r}"
                )
            e[pos] = exp
        return tuple(e)

    def __eq__(self, other):
        return isinstance(other, VarContext) and other.n == self.n

    def __hash__(self):
        return hash(("VarContext", self.n))

    def __repr__(self):
        return f"VarContext(n={self.n})"


def _collect(ctx: VarContext, raw: dict) -> dict:
    """Drop zero coefficients and normalize scalars in place."""
    return {m: _norm(c) for m, c in raw.items() if c != 0}


# cache for shift expansions: (x-exponents, shift vector) -> ((x-exponents, coeff), ...)
_SHIFT_CACHE: dict = {}


def _shift_expand(xpart: tuple, k: tuple):
    """Expansion of prod_c (x_c - k_c)^{e_c} as ((exponents, int coeff), ...)."""
    hit = _SHIFT_CACHE.get((xpart, k))
    if hit is not None:
        return hit
    out = [((), 1)]
    for e, kc in zip(xpart, k):
        if e == 0 or kc == 0:
            out = [(pt + (e,), c) for pt, c in out]
            continue
        var_terms = [(j, comb(e, j) * (-kc) ** (e - j)) for j in range(e + 1)]
        out = [(pt + (j,), c * cj) for pt, c in out for j, cj in var_terms]
    expansion = tuple(out)
    _SHIFT_CACHE[(xpart, k)] = expansion
    return expansion


class Poly:
    """Immutable sparse polynomial attached to a VarContext."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: VarContext, terms: Mapping[Monomial, Scalar] | None = None):
        self.ctx = ctx
        clean: dict = {}
        for m, c in (terms or {}).items():
            if len(m) != ctx.nvars:
                raise ValueError(
                    f"exponent tuple of width {len(m)}, context expects {ctx.nvars}"
                )
            for pos, e in enumerate(m):
                if e < 0 and not ctx.allows_negative(pos):
                    raise ExponentDomainError(
                        f"negative exponent on {ctx.names[pos]!r} in {m}"
                    )
            if c != 0:
                clean[tuple(m)] = _norm(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, ctx: VarContext, clean: dict) -> "Poly":
        """Trusted constructor: clean must be collected already."""
        p = object.__new__(cls)
        p.ctx = ctx
        p.terms = clean
        p._hash = None
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx: VarContext) -> "Poly":
        return cls._make(ctx, {})

    @classmethod
    def const(cls, ctx: VarContext, c) -> "Poly":
        c = as_scalar(c)
        return cls._make(ctx, {} if c == 0 else {(0,) * ctx.nvars: c})

    @classmethod
    def one(cls, ctx: VarContext) -> "Poly":
        return cls.const(ctx, 1)

    @classmethod
    def var(cls, ctx: VarContext, name: str, e: int = 1) -> "Poly":
        if e == 0:
            return cls.one(ctx)
        return cls._make(ctx, {ctx.monomial({name: e}): 1})

    @classmethod
    def from_monomial(cls, ctx: VarContext, m: Monomial, c=1) -> "Poly":
        return cls(ctx, {m: as_scalar(c)})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ContextMismatchError(
                    f"cannot mix ranks {self.ctx.n} and {other.ctx.n}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.ctx, other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in q.terms.items():
            acc = out.get(m, 0) + c
            if acc == 0:
                out.pop(m, None)
            else:
                out[m] = _norm(acc)
        return Poly._make(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._make(self.ctx, {})
            return Poly._make(
                self.ctx, {m: _norm(c * other) for m, c in self.terms.items()}
            )
        if not isinstance(other, Poly):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ContextMismatchError(f"cannot mix ranks {self.ctx.n} and {other.ctx.n}")
        out: dict = {}
        get = out.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(int.__add__, m1, m2))
                acc = get(m)
                out[m] = c1 * c2 if acc is None else acc + c1 * c2
        return Poly._make(self.ctx, _collect(self.ctx, out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"polynomial power must be a nonnegative int, got {e!r}")
        acc = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base if e > 1 else base
            e >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ctx, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.ctx.n, frozenset((m, _norm(c)) for m, c in self.terms.items()))
            )
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ---------------------------------------------------------

    def coeff_of(self, m: Monomial) -> Scalar:
        return self.terms.get(tuple(m), 0)

    def coeff_in_var(self, name: str, e: int) -> "Poly":
        """The polynomial coefficient of name^e (the variable is removed)."""
        pos = self.ctx.index[name]
        out = {}
        for m, c in self.terms.items():
            if m[pos] == e:
                out[m[:pos] + (0,) + m[pos + 1 :]] = c
        return Poly._make(self.ctx, out)

    def degree(self, name: str | None = None):
        """Total degree, or the degree in one variable; zero gives MINUS_INFINITY."""
        if not self.terms:
            return MINUS_INFINITY
        if name is None:
            return max(sum(m) for m in self.terms)
        pos = self.ctx.index[name]
        return max(m[pos] for m in self.terms)

    def variables(self) -> set[str]:
        return {
            self.ctx.names[pos]
            for m in self.terms
            for pos, e in enumerate(m)
            if e != 0
        }

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def iter_sorted(self) -> Iterator[tuple[Monomial, Scalar]]:
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            yield m, self.terms[m]

    # -- substitutions -----------------------------------------------------

    def shift_sub(self, k: Sequence[int]) -> "Poly":
        """Substitute x_i := x_i - k_i for all module variables at once.

        Parameter variables are untouched.  k must have length n.
        """
        n = self.ctx.n
        kt = tuple(k)
        if len(kt) != n:
            raise ValueError(f"shift vector of length {len(kt)}, rank is {n}")
        if not any(kt) or not self.terms:
            return self
        out: dict = {}
        get = out.get
        for m, c in self.terms.items():
            rest = m[n:]
            for xpart, w in _shift_expand(m[:n], kt):
                m2 = xpart + rest
                acc = get(m2)
                out[m2] = c * w if acc is None else acc + c * w
        return Poly._make(self.ctx, _collect(self.ctx, out))

    def eval_params(self, bindings: Mapping[str, Scalar]) -> "Poly":
        """Substitute exact values for parameter variables l_i, a, b.

        Laurent parameters must be bound to nonzero values.  Module
        variables cannot be bound here.
        """
        ctx = self.ctx
        pairs = []
        for name, value in bindings.items():
            pos = ctx.index.get(name)
            if pos is None or pos < ctx.n:
                raise ParameterDomainError(
                    f"{name!r} is not a parameter variable at rank {ctx.n}"
                )
            val = as_scalar(value)
            if ctx.allows_negative(pos) and val == 0:
                raise ParameterDomainError(f"Laurent parameter {name!r} bound to 0")
            pairs.append((pos, val))
        if not pairs:
            return self
        out: dict = {}
        for m, c in self.terms.items():
            factor: Scalar = 1
            m2 = list(m)
            for pos, val in pairs:
                e = m2[pos]
                if e:
                    factor = factor * (Fraction(val) ** e if e < 0 else val**e)
                    m2[pos] = 0
            key = tuple(m2)
            out[key] = out.get(key, 0) + c * factor
        return Poly._make(self.ctx, _collect(self.ctx, out))

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ctx.names
        chunks: list[str] = []
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            for pos, e in enumerate(m):
                if e == 0:
                    continue
                factors.append(names[pos] if e == 1 else f"{names[pos]}^{e}")
            mag = abs(c)
            if not factors:
                body = scalar_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([scalar_str(mag)] + factors)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(chunks)

    def __repr__(self):
        return f"Poly(n={self.ctx.n}, {str(self)!r})"


def falling_product(base: Poly, count: int) -> Poly:
    """prod_{p=0}^{count-1} (base - p); the empty product (count = 0) is 1."""
    if not isinstance(count, int) or count < 0:
        raise ValueError(f"falling_product needs a nonnegative count, got {count!r}")
    acc = Poly.one(base.ctx)
    for p in range(count):
        acc = acc * (base - p)
    return acc
