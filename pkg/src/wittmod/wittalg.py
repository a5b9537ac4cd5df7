"""Witt algebras of polynomial and Laurent rings, and the Virasoro algebra.

Three algebras over Q share one term language:

  W        derivations of the Laurent ring, basis t^k d_i with k in Z^n,
  W_PLUS   derivations of the polynomial ring, basis t^k d_i with
           k_i >= -1 and k_j >= 0 for j != i,
  VIRASORO rank 1 only: the W basis d_m = t^m d_1 plus a central term C.

Brackets on basis terms:

  [t^r d_i, t^s d_j] = s_i t^{r+s} d_j - r_j t^{r+s} d_i

with, for VIRASORO, the extra central contribution
delta_{r+s,0} (r^3 - r)/12 C, and [C, anything] = 0.  Elements are
finite rational combinations of terms; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .polyring import Scalar, as_scalar, scalar_str


class Algebra(Enum):
    W = "w"
    W_PLUS = "w+"
    VIRASORO = "virasoro"


class InadmissibleTermError(ValueError):
    """A term outside the chosen algebra, e.g. t^{(-2,0)}d_1 in W_PLUS."""


class AlgebraMismatchError(ValueError):
    """Operands from different algebras or ranks."""


@dataclass(frozen=True)
class WittTerm:
    """One basis term: a derivation t^k d_i, or the central term C."""

    k: tuple[int, ...]
    i: int
    central: bool = False

    @staticmethod
    def deriv(k: Iterable[int], i: int) -> "WittTerm":
        return WittTerm(tuple(k), i)

    @property
    def kind(self) -> str:
        return "central" if self.central else "derivation"

    def sort_key(self):
        # derivations ascending by (k, i), the central term last
        return (1, (), 0) if self.central else (0, self.k, self.i)

    def __str__(self):
        if self.central:
            return "C"
        if len(self.k) == 1:
            return f"d{self.k[0]}"
        return "t[" + ",".join(str(c) for c in self.k) + f"]d{self.i}"


CENTRAL = WittTerm((), 0, True)


def in_plus_domain(k: tuple[int, ...], i: int) -> bool:
    """k admissible for W_PLUS in direction i: k_i >= -1, other k_j >= 0."""
    return all(c >= -1 if pos == i - 1 else c >= 0 for pos, c in enumerate(k))


def validate_term(algebra: Algebra, n: int, t: WittTerm) -> None:
    if t.central:
        if algebra is not Algebra.VIRASORO:
            raise InadmissibleTermError(f"central term is not in {algebra.value}")
        return
    if len(t.k) != n:
        raise InadmissibleTermError(f"exponent {t.k} has width {len(t.k)}, rank is {n}")
    if not 1 <= t.i <= n:
        raise InadmissibleTermError(f"direction {t.i} outside 1..{n}")
    if algebra is Algebra.VIRASORO and n != 1:
        raise InadmissibleTermError("the Virasoro algebra has rank 1")
    if algebra is Algebra.W_PLUS and not in_plus_domain(t.k, t.i):
        raise InadmissibleTermError(
            f"t^{t.k}d_{t.i} lies outside the polynomial-ring derivation algebra"
        )


class AlgElement:
    """Finite rational combination of WittTerms in a fixed algebra and rank."""

    __slots__ = ("algebra", "n", "terms")

    def __init__(
        self,
        algebra: Algebra,
        n: int,
        terms: Mapping[WittTerm, Scalar] | None = None,
    ):
        self.algebra = algebra
        self.n = n
        clean: dict[WittTerm, Scalar] = {}
        for t, c in (terms or {}).items():
            validate_term(algebra, n, t)
            c = as_scalar(c)
            if c != 0:
                clean[t] = c
        self.terms = clean

    @classmethod
    def _make(cls, algebra, n, clean) -> "AlgElement":
        el = object.__new__(cls)
        el.algebra = algebra
        el.n = n
        el.terms = clean
        return el

    @classmethod
    def zero(cls, algebra: Algebra, n: int) -> "AlgElement":
        return cls._make(algebra, n, {})

    @classmethod
    def term(cls, algebra: Algebra, n: int, t: WittTerm, c: Scalar = 1) -> "AlgElement":
        return cls(algebra, n, {t: c})

    @classmethod
    def deriv(cls, algebra: Algebra, n: int, k: Iterable[int], i: int) -> "AlgElement":
        return cls.term(algebra, n, WittTerm.deriv(k, i))

    def _check(self, other: "AlgElement"):
        if self.algebra is not other.algebra or self.n != other.n:
            raise AlgebraMismatchError(
                f"cannot mix {self.algebra.value} rank {self.n} "
                f"with {other.algebra.value} rank {other.n}"
            )

    def __add__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            acc = out.get(t, 0) + c
            if acc == 0:
                out.pop(t, None)
            else:
                out[t] = as_scalar(acc)
        return AlgElement._make(self.algebra, self.n, out)

    def __neg__(self):
        return AlgElement._make(
            self.algebra, self.n, {t: -c for t, c in self.terms.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        if c == 0:
            return AlgElement.zero(self.algebra, self.n)
        return AlgElement._make(
            self.algebra, self.n, {t: as_scalar(v * c) for t, v in self.terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, AlgElement)
            and self.algebra is other.algebra
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.algebra, self.n, frozenset((t, as_scalar(c)) for t, c in self.terms.items()))
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff_of(self, t: WittTerm) -> Scalar:
        return self.terms.get(t, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for t in sorted(self.terms, key=WittTerm.sort_key):
            c = self.terms[t]
            mag = abs(c)
            body = str(t) if mag == 1 else f"{scalar_str(mag)}*{t}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(chunks)

    def __repr__(self):
        return f"AlgElement({self.algebra.value}, n={self.n}, {str(self)!r})"


def bracket_basis(algebra: Algebra, n: int, x: WittTerm, y: WittTerm) -> AlgElement:
    """[x, y] for basis terms, expanded over basis terms.

    For W_PLUS the result is checked to stay inside the algebra; terms
    that would fall outside always carry coefficient zero.
    """
    validate_term(algebra, n, x)
    validate_term(algebra, n, y)
    if x.central or y.central:
        return AlgElement.zero(algebra, n)
    r, i = x.k, x.i
    s, j = y.k, y.i
    ks = tuple(rc + sc for rc, sc in zip(r, s))
    out: dict[WittTerm, Scalar] = {}
    for coeff, direction in ((s[i - 1], j), (-r[j - 1], i)):
        if coeff == 0:
            continue
        t = WittTerm(ks, direction)
        acc = out.get(t, 0) + coeff
        if acc == 0:
            out.pop(t, None)
        else:
            out[t] = acc
    if algebra is Algebra.VIRASORO and r[0] + s[0] == 0:
        c = as_scalar(Fraction(r[0] ** 3 - r[0], 12))
        if c != 0:
            out[CENTRAL] = c
    if algebra is Algebra.W_PLUS:
        for t in out:
            if not in_plus_domain(t.k, t.i):
                raise InadmissibleTermError(
                    f"bracket escaped the polynomial-ring algebra at {t}"
                )
    return AlgElement._make(algebra, n, out)


def bracket(x: AlgElement, y: AlgElement) -> AlgElement:
    """Bilinear extension of bracket_basis."""
    x._check(y)
    acc = AlgElement.zero(x.algebra, x.n)
    for tx, cx in x.terms.items():
        for ty, cy in y.terms.items():
            acc = acc + bracket_basis(x.algebra, x.n, tx, ty) * (cx * cy)
    return acc
