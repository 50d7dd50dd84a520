"""Algebra-file and polynomial-expression syntax.

Line-oriented format, ``#`` starts a comment, blank lines are skipped:

    field Q                 | field GF(7)
    gens a1:2 a2:1 a3:4     # ':weight' on all generators or on none
    order gr(lex(a1>a2>a3))
    rel a3*a1 = a1*a3 + a2^2*a3 + a2^6

Ordering syntax: ``lex(n1>...)``, ``grlex(w1,..,wk; n1>...)``,
``grevlex(w1,..,wk; n1>...)``, ``gr(<base>)`` which reuses the declared
generator weights, and ``rees(<base>)`` whose base ordering spans every
generator but the last (the central one).  Relations must put the later
generator first on the left side; unspecified pairs commute.  ``field``
defaults to Q and ``order`` to grlex with unit weights in declared order.

Polynomial expressions are sums of ``coeff*name^e*...`` terms with
rational (or residue) coefficients; generators inside a term must appear
in declared order so that input is already an ordered monomial.

Every diagnostic carries a 1-based line and column pointing at the
offending token.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .degrees import DegreeFunction
from .errors import AlgebraFileError
from .fields import GF, QQ
from .orderings import (GradedOrder, GrLex, GRevLex, Lex, MonomialOrdering,
                        ReesOrder, sorted_terms)
from .poly import Monomial, Polynomial
from .presentation import AlgebraPresentation

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*~*")
INT_RE = re.compile(r"[0-9]+")


class AlgebraFileData(NamedTuple):
    presentation: AlgebraPresentation
    ordering: MonomialOrdering
    degree: DegreeFunction | None


class _Cursor:
    """Single-line scanner with 1-based column reporting."""

    def __init__(self, text: str, line: int, col_offset: int = 0):
        self.text = text
        self.pos = 0
        self.line = line
        self.col_offset = col_offset

    def col(self, pos=None) -> int:
        return self.col_offset + (self.pos if pos is None else pos) + 1

    def error(self, message: str, pos=None) -> AlgebraFileError:
        return AlgebraFileError(message, self.line, self.col(pos))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str, what: str = None):
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == char:
            self.pos += 1
            return
        raise self.error(f"expected '{char}'" + (f" {what}" if what else ""))

    def try_take(self, char: str) -> bool:
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == char:
            self.pos += 1
            return True
        return False

    def name(self, what: str = "identifier") -> tuple:
        self.skip_ws()
        m = NAME_RE.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        start = self.pos
        self.pos = m.end()
        return m.group(), start

    def integer(self, what: str = "integer") -> tuple:
        self.skip_ws()
        m = INT_RE.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        start = self.pos
        self.pos = m.end()
        return int(m.group()), start


def _parse_coefficient(cur: _Cursor, field):
    num, start = cur.integer("coefficient")
    if cur.try_take("/"):
        den, dpos = cur.integer("denominator")
        if den == 0:
            raise cur.error("malformed rational: denominator is zero", dpos)
        return field.ratio(num, den)
    return field.coerce(num)


def _parse_term(cur: _Cursor, field, name_index: dict, n: int):
    """One product term: optional coefficient, then ordered generators."""
    cur.skip_ws()
    if cur.peek().isdigit():
        coeff = _parse_coefficient(cur, field)
        if not cur.try_take("*"):
            return coeff, (0,) * n
    else:
        coeff = field.one
    exps = [0] * n
    last = -1
    while True:
        nm, start = cur.name("generator name")
        idx = name_index.get(nm)
        if idx is None:
            raise cur.error(f"unknown generator '{nm}'", start)
        if idx < last:
            raise cur.error(
                f"generator '{nm}' out of order in term; write ordered "
                "monomials with generators in declared order", start)
        last = idx
        if cur.try_take("^"):
            e, _ = cur.integer("exponent")
        else:
            e = 1
        exps[idx] += e
        if not cur.try_take("*"):
            break
        cur.skip_ws()
        if cur.peek().isdigit():
            raise cur.error("coefficients are only allowed at the front of a term")
    return coeff, tuple(exps)


def parse_poly_at(cur: _Cursor, field, names) -> Polynomial:
    name_index = {nm: i for i, nm in enumerate(names)}
    n = len(names)
    terms: dict = {}
    negate = cur.try_take("-")
    while True:
        coeff, mono = _parse_term(cur, field, name_index, n)
        if negate:
            coeff = field.neg(coeff)
        cur_val = terms.get(mono)
        new = coeff if cur_val is None else field.add(cur_val, coeff)
        if field.is_zero(new):
            terms.pop(mono, None)
        else:
            terms[mono] = new
        if cur.try_take("+"):
            negate = False
        elif cur.try_take("-"):
            negate = True
        else:
            break
    if not cur.at_end():
        raise cur.error("unexpected trailing input in expression")
    return Polynomial._raw(field, n, terms)


def parse_poly(text: str, pres: AlgebraPresentation, *, line: int = 1,
               col_offset: int = 0) -> Polynomial:
    """Parse an expression into a polynomial over the presentation."""
    cur = _Cursor(text, line, col_offset)
    return parse_poly_at(cur, pres.field, pres.names)


def _parse_ordering(cur: _Cursor, names, weights) -> MonomialOrdering:
    """Recursive ordering expression over the given generator scope."""
    kind, kpos = cur.name("ordering kind")
    cur.take("(", f"after '{kind}'")
    if kind == "lex":
        ordering = Lex(priority=_parse_priority(cur, names))
    elif kind in ("grlex", "grevlex"):
        ws = [cur.integer("weight")[0]]
        while cur.try_take(","):
            ws.append(cur.integer("weight")[0])
        cur.take(";", "between weights and generator order")
        prio = _parse_priority(cur, names)
        if len(ws) != len(names):
            raise cur.error(
                f"{kind}: {len(ws)} weights for {len(names)} generators", kpos)
        if any(w < 1 for w in ws):
            raise cur.error(f"{kind}: weights must be positive", kpos)
        cls = GrLex if kind == "grlex" else GRevLex
        ordering = cls(weights=tuple(ws), priority=prio)
    elif kind == "gr":
        if weights is None:
            raise cur.error(
                "gr(...) needs generator weights declared in 'gens'", kpos)
        base = _parse_ordering(cur, names, weights)
        ordering = GradedOrder(base=base, weights=tuple(weights))
    elif kind == "rees":
        if len(names) < 2:
            raise cur.error("rees(...) needs at least two generators", kpos)
        base = _parse_ordering(
            cur, names[:-1], None if weights is None else weights[:-1])
        ordering = ReesOrder(base=base)
    else:
        raise cur.error(f"unknown ordering '{kind}'", kpos)
    cur.take(")", f"closing '{kind}(...'")
    return ordering


def _parse_priority(cur: _Cursor, names) -> tuple:
    name_index = {nm: i for i, nm in enumerate(names)}
    order = []
    seen = set()
    while True:
        nm, pos = cur.name("generator name")
        idx = name_index.get(nm)
        if idx is None:
            raise cur.error(f"unknown generator '{nm}'", pos)
        if idx in seen:
            raise cur.error(f"generator '{nm}' repeated in ordering", pos)
        seen.add(idx)
        order.append(idx)
        if not cur.try_take(">"):
            break
    if len(order) != len(names):
        raise cur.error(
            f"ordering must mention all {len(names)} generators once")
    return tuple(order)


def parse_algebra_file(text: str) -> AlgebraFileData:
    """Parse and validate a full algebra file."""
    field = None
    names = None
    weights = None
    order_line = None          # (cursor-ready text, line, col_offset)
    relations: dict = {}       # (i, j) -> rhs Polynomial
    saw_relation = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        cur = _Cursor(body, lineno)
        keyword, kpos = cur.name("directive")

        if keyword == "field":
            if field is not None:
                raise cur.error("duplicate 'field' line", kpos)
            if saw_relation:
                raise cur.error("'field' must precede relations", kpos)
            fname, fpos = cur.name("field name")
            if fname == "Q":
                field = QQ
            elif fname == "GF":
                cur.take("(")
                p, ppos = cur.integer("prime modulus")
                cur.take(")")
                try:
                    field = GF(p)
                except ValueError as exc:
                    raise cur.error(str(exc), ppos)
            else:
                raise cur.error(f"unknown field '{fname}'", fpos)
            if not cur.at_end():
                raise cur.error("unexpected trailing input")

        elif keyword == "gens":
            if names is not None:
                raise cur.error("duplicate 'gens' line", kpos)
            gen_names = []
            gen_weights = []
            while not cur.at_end():
                nm, npos = cur.name("generator name")
                if nm in gen_names:
                    raise cur.error(f"duplicate generator '{nm}'", npos)
                w = None
                if cur.try_take(":"):
                    w, wpos = cur.integer("weight")
                    if w < 1:
                        raise cur.error("weights must be positive", wpos)
                gen_names.append(nm)
                gen_weights.append(w)
            if not gen_names:
                raise cur.error("empty generator list", kpos)
            declared = [w for w in gen_weights if w is not None]
            if declared and len(declared) != len(gen_names):
                raise cur.error(
                    "either all generators carry weights or none", kpos)
            names = tuple(gen_names)
            weights = tuple(declared) if declared else None

        elif keyword == "order":
            if order_line is not None:
                raise cur.error("duplicate 'order' line", kpos)
            if names is None:
                raise cur.error("'order' must follow 'gens'", kpos)
            order_line = (body[cur.pos:].rstrip(), lineno, cur.pos)

        elif keyword == "rel":
            if names is None:
                raise cur.error("'rel' must follow 'gens'", kpos)
            if field is None:
                field = QQ
            saw_relation = True
            name_index = {nm: i for i, nm in enumerate(names)}
            left, lpos = cur.name("generator name")
            if left not in name_index:
                raise cur.error(f"unknown generator '{left}'", lpos)
            cur.take("*", "in relation left side")
            right, rpos = cur.name("generator name")
            if right not in name_index:
                raise cur.error(f"unknown generator '{right}'", rpos)
            j = name_index[left]
            i = name_index[right]
            if j <= i:
                raise cur.error(
                    "relation left side must be <later>*<earlier> in the "
                    "declared generator order", lpos)
            if (i, j) in relations:
                raise cur.error(
                    f"duplicate relation for pair {right}, {left}", lpos)
            cur.skip_ws()
            eq_pos = cur.pos
            cur.take("=", "in relation")
            rhs = parse_poly_at(cur, field, names)
            target = tuple(1 if g in (i, j) else 0 for g in range(len(names)))
            if field.is_zero(rhs.coeff(target)):
                raise cur.error(
                    f"relation needs a nonzero {right}*{left} term on the "
                    "right side", eq_pos)
            relations[(i, j)] = rhs

        else:
            raise cur.error(
                f"unknown directive '{keyword}' (expected field, gens, "
                "order or rel)", kpos)

    if names is None:
        raise AlgebraFileError("missing 'gens' declaration", 1, 1)
    if field is None:
        field = QQ

    if order_line is not None:
        otext, oline, ocol = order_line
        ocur = _Cursor(otext, oline, ocol)
        ordering = _parse_ordering(ocur, names, weights)
        if not ocur.at_end():
            raise ocur.error("unexpected trailing input after ordering")
    else:
        ordering = GrLex(weights=(1,) * len(names),
                         priority=tuple(range(len(names))))

    pres = AlgebraPresentation.from_rhs(field, names, relations)
    degree = DegreeFunction(weights) if weights is not None else None
    return AlgebraFileData(pres, ordering, degree)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

def format_monomial(mono: Monomial, names) -> str:
    parts = []
    for nm, e in zip(names, mono):
        if e == 1:
            parts.append(nm)
        elif e > 1:
            parts.append(f"{nm}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(f: Polynomial, names, ordering: MonomialOrdering | None = None) -> str:
    if f.is_zero():
        return "0"
    field = f.field
    pieces = []
    for mono, coeff in sorted_terms(ordering, f):
        neg = field.is_negative(coeff)
        mag = field.neg(coeff) if neg else coeff
        mstr = format_monomial(mono, names)
        if mstr == "1":
            body = field.format(mag)
        elif field.is_zero(field.sub(mag, field.one)):
            body = mstr
        else:
            body = f"{field.format(mag)}*{mstr}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


def format_ordering(ordering: MonomialOrdering, names) -> str:
    if isinstance(ordering, Lex):
        return "lex(" + ">".join(names[i] for i in ordering.priority) + ")"
    if isinstance(ordering, (GrLex, GRevLex)):
        kind = "grlex" if isinstance(ordering, GrLex) else "grevlex"
        ws = ",".join(str(w) for w in ordering.weights)
        prio = ">".join(names[i] for i in ordering.priority)
        return f"{kind}({ws}; {prio})"
    if isinstance(ordering, GradedOrder):
        return f"gr({format_ordering(ordering.base, names)})"
    if isinstance(ordering, ReesOrder):
        return f"rees({format_ordering(ordering.base, names[:-1])})"
    raise TypeError(f"cannot serialize ordering {ordering!r}")


def format_algebra_file(pres: AlgebraPresentation,
                        ordering: MonomialOrdering,
                        degree: DegreeFunction | None = None) -> str:
    lines = [f"field {pres.field.name}"]
    if degree is not None:
        gens = " ".join(f"{nm}:{w}" for nm, w in zip(pres.names, degree.weights))
    else:
        gens = " ".join(pres.names)
    lines.append(f"gens {gens}")
    lines.append(f"order {format_ordering(ordering, pres.names)}")
    for (i, j) in pres.pairs():
        if pres.is_default_pair(i, j):
            continue
        rhs = format_poly(pres.relation_rhs(i, j), pres.names, ordering)
        lines.append(f"rel {pres.names[j]}*{pres.names[i]} = {rhs}")
    return "\n".join(lines) + "\n"
