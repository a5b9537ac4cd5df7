"""Text form of polynomials, algebra elements, and check reports.

Polynomial grammar (whitespace insignificant):

  expr     ::= ["-"] term {("+" | "-") term}
  term     ::= factor {"*" factor}
  factor   ::= rational | var ["^" int] | "(" expr ")"
  var      ::= "x" idx | "l" idx | "a" | "b"
  rational ::= int ["/" posint]

Algebra element grammar:

  algexpr  ::= ["-"] algterm {("+" | "-") algterm} | "0"
  algterm  ::= [rational ["*"]] ("t[" int {"," int} "]d" idx | "d" int | "C")

Negative exponents are admitted only on the Laurent parameters l_i.
Printing inverts parsing: the printed form of any value parses back to
an equal value, and equal values print identically.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .polyring import Poly, VarContext
from .wittalg import (
    AlgElement,
    Algebra,
    InadmissibleTermError,
    WittTerm,
    validate_term,
)


class ExprParseError(ValueError):
    """Parse failure with a position and a stable error code."""

    def __init__(self, message: str, pos: int, code: str = "SYNTAX"):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos
        self.code = code


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([-+*/^()\[\],]))")


class _Tokens:
    """NUM / WORD / SYM token stream with positions."""

    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == m.start():
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                at = len(text) - len(stripped)
                raise ExprParseError(f"unexpected character {text[at]!r}", at)
            if m.group(1) is not None:
                self.toks.append(("NUM", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.toks.append(("WORD", m.group(2), m.start(2)))
            else:
                self.toks.append(("SYM", m.group(3), m.start(3)))
            pos = m.end()
        self.at = 0

    def peek(self):
        if self.at < len(self.toks):
            return self.toks[self.at]
        return ("EOF", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.at += 1
        return tok

    def take_sym(self, sym: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "SYM" and val == sym:
            self.at += 1
            return True
        return False

    def expect_sym(self, sym: str):
        kind, val, pos = self.next()
        if kind != "SYM" or val != sym:
            raise ExprParseError(f"expected {sym!r}, found {val or 'end of input'!r}", pos)

    def expect_num(self) -> int:
        kind, val, pos = self.next()
        if kind != "NUM":
            raise ExprParseError(f"expected a number, found {val or 'end of input'!r}", pos)
        return int(val)

    def expect_int(self) -> int:
        # optionally signed integer
        if self.take_sym("-"):
            return -self.expect_num()
        return self.expect_num()

    def expect_eof(self):
        kind, val, pos = self.peek()
        if kind != "EOF":
            raise ExprParseError(f"unexpected trailing input {val!r}", pos)


def _rational(toks: _Tokens) -> Fraction:
    pos = toks.peek()[2]
    num = toks.expect_num()
    if toks.take_sym("/"):
        den = toks.expect_num()
        if den == 0:
            raise ExprParseError("zero denominator", pos)
        return Fraction(num, den)
    return Fraction(num)


def _var_factor(toks: _Tokens, ctx: VarContext) -> Poly:
    kind, word, pos = toks.next()
    name = word
    if name not in ctx.index:
        raise ExprParseError(
            f"unknown variable {word!r} at rank {ctx.n}", pos, "UNKNOWN_VARIABLE"
        )
    e = 1
    if toks.take_sym("^"):
        e = toks.expect_int()
    if e < 0 and not ctx.allows_negative(ctx.index[name]):
        raise ExprParseError(
            f"negative exponent on {name!r}", pos, "NEGATIVE_MODULE_EXPONENT"
        )
    return Poly.var(ctx, name, e)


def _factor(toks: _Tokens, ctx: VarContext) -> Poly:
    kind, val, pos = toks.peek()
    if kind == "NUM":
        return Poly.const(ctx, _rational(toks))
    if kind == "WORD":
        return _var_factor(toks, ctx)
    if kind == "SYM" and val == "(":
        toks.next()
        inner = _expr(toks, ctx)
        toks.expect_sym(")")
        return inner
    raise ExprParseError(f"expected a factor, found {val or 'end of input'!r}", pos)


def _term(toks: _Tokens, ctx: VarContext) -> Poly:
    acc = _factor(toks, ctx)
    while toks.take_sym("*"):
        acc = acc * _factor(toks, ctx)
    return acc


def _expr(toks: _Tokens, ctx: VarContext) -> Poly:
    negate = toks.take_sym("-")
    acc = _term(toks, ctx)
    if negate:
        acc = -acc
    while True:
        if toks.take_sym("+"):
            acc = acc + _term(toks, ctx)
        elif toks.take_sym("-"):
            acc = acc - _term(toks, ctx)
        else:
            return acc


def parse_poly(text: str, ctx: VarContext) -> Poly:
    """Parse the polynomial grammar over the given context."""
    toks = _Tokens(text)
    p = _expr(toks, ctx)
    toks.expect_eof()
    return p


def print_poly(p: Poly) -> str:
    """Canonical string form: descending graded lexicographic order."""
    return str(p)


def _alg_body(toks: _Tokens, n: int) -> WittTerm:
    kind, word, pos = toks.next()
    if kind != "WORD":
        raise ExprParseError(
            f"expected a basis term, found {word or 'end of input'!r}", pos
        )
    if word == "C":
        return WittTerm((), 0, True)
    if word == "t":
        toks.expect_sym("[")
        k = [toks.expect_int()]
        while toks.take_sym(","):
            k.append(toks.expect_int())
        toks.expect_sym("]")
        dkind, dword, dpos = toks.next()
        m = re.fullmatch(r"d(\d+)", dword) if dkind == "WORD" else None
        if m is None:
            raise ExprParseError("expected a direction like 'd1' after ']'", dpos)
        return WittTerm.deriv(k, int(m.group(1)))
    m = re.fullmatch(r"d(\d+)?", word)
    if m is None:
        raise ExprParseError(f"unknown basis term {word!r}", pos)
    if m.group(1) is not None:
        return WittTerm.deriv((int(m.group(1)),), 1)
    # bare 'd': a signed index follows
    return WittTerm.deriv((toks.expect_int(),), 1)


def _algterm(toks: _Tokens, n: int) -> tuple[WittTerm, Fraction]:
    coeff = Fraction(1)
    if toks.peek()[0] == "NUM":
        coeff = _rational(toks)
        toks.take_sym("*")
    return _alg_body(toks, n), coeff


def parse_element(text: str, algebra: Algebra, n: int) -> AlgElement:
    """Parse the algebra element grammar; terms are validated against
    the algebra and rank, so e.g. 'C' parses only for VIRASORO."""
    toks = _Tokens(text)
    if toks.peek()[:2] == ("NUM", "0") and len(toks.toks) == 1:
        return AlgElement.zero(algebra, n)
    terms: dict[WittTerm, Fraction] = {}

    def push(t: WittTerm, c: Fraction, pos: int):
        try:
            validate_term(algebra, n, t)
        except InadmissibleTermError as err:
            raise ExprParseError(str(err), pos, "INADMISSIBLE_TERM") from err
        terms[t] = terms.get(t, Fraction(0)) + c

    pos0 = toks.peek()[2]
    sign = -1 if toks.take_sym("-") else 1
    t, c = _algterm(toks, n)
    push(t, sign * c, pos0)
    while True:
        kind, val, pos = toks.peek()
        if kind == "SYM" and val in "+-":
            toks.next()
            t, c = _algterm(toks, n)
            push(t, c if val == "+" else -c, pos)
        else:
            break
    toks.expect_eof()
    return AlgElement(algebra, n, terms)


def print_element(el: AlgElement) -> str:
    """Canonical string form: derivations ascending by (k, i), C last."""
    return str(el)


# -- reports ---------------------------------------------------------------

_DOC_KEYS = ("check_name", "status", "counterexample", "witness", "stats")
_CE_KEYS = ("x", "y", "f", "lhs", "rhs")


def write_report(report) -> dict:
    """Flatten a Report into a plain dict with a fixed key order.

    All mathematical payloads are canonical strings, so equal reports
    serialize byte-identically; only stats.elapsed_ms varies from run
    to run.
    """
    ce = getattr(report, "counterexample", None)
    doc_ce = None
    if ce is not None:
        doc_ce = {key: ce.get(key) for key in _CE_KEYS if ce.get(key) is not None}
    stats = dict(getattr(report, "stats", {}) or {})
    stats.setdefault("pairs_checked", 0)
    stats.setdefault("elapsed_ms", 0)
    doc = {
        "check_name": report.check_name,
        "status": report.status.value,
        "counterexample": doc_ce,
        "witness": getattr(report, "witness", None),
        "stats": stats,
    }
    return {key: doc[key] for key in _DOC_KEYS}


def report_to_json(doc: dict | list) -> str:
    return json.dumps(doc, indent=2)


def report_line(report) -> str:
    """One line of TEXT output per check."""
    doc = write_report(report)
    stats = doc["stats"]
    extras = [f"{key}={stats[key]}" for key in sorted(stats)]
    line = f"{doc['status']:<22} {doc['check_name']} ({', '.join(extras)})"
    if doc["counterexample"]:
        ce = doc["counterexample"]
        parts = [f"{key}: {value}" for key, value in ce.items()]
        line += "\n  counterexample " + "; ".join(parts)
    if doc["witness"]:
        line += f"\n  witness {doc['witness']}"
    return line
