"""Associated graded and Rees constructions, with their element maps.

Both constructions consume a filtered-type presentation together with a
degree-first ordering and emit an ordinary presentation, so every check
and product in the package applies to the output unchanged:

- the associated graded presentation keeps the generators and truncates
  each relation tail to its top-degree slice;
- the Rees presentation adjoins a central degree-1 generator (named
  ``Z`` in emitted files, always the last generator) and pads each tail
  term with the power of it that restores homogeneity.

Element maps operate on representatives: the principal symbol is the
top-degree slice of an element, homogenization fills each term's degree
gap with central-generator powers, and the two quotient projections are
realized by substituting 1 for the central generator or deleting the
terms it divides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import DegreeFunction, deg_poly, leading_homogeneous
from .errors import (DimensionMismatch, LevelTooLowError, NotFilteredError,
                     ZeroPolynomialError)
from .kernel import check_solvable
from .orderings import (GradedOrder, GrLex, GRevLex, MonomialOrdering,
                        ReesOrder, leading_monomial)
from .poly import Polynomial
from .presentation import AlgebraPresentation
from .verify import TypeVerdict, check_filtered_type, check_graded_type


def is_degree_first(ordering: MonomialOrdering, dfun: DegreeFunction) -> bool:
    """True when the ordering compares by this degree before anything else."""
    return (isinstance(ordering, (GradedOrder, GrLex, GRevLex))
            and ordering.weights == dfun.weights)


@dataclass(frozen=True)
class GradedTransformResult:
    presentation: AlgebraPresentation
    ordering: MonomialOrdering
    degree: DegreeFunction


@dataclass(frozen=True)
class ReesTransformResult:
    presentation: AlgebraPresentation
    ordering: ReesOrder
    degree: DegreeFunction


def _require_transform_inputs(pres, dfun, ordering):
    if dfun.n != pres.n:
        raise DimensionMismatch(
            f"{dfun.n} weights for {pres.n} generators")
    if not is_degree_first(ordering, dfun):
        raise ValueError(
            "the ordering must compare by the given weights first "
            "(compose it with make_graded)")
    report = check_filtered_type(pres, dfun)
    if report.verdict is TypeVerdict.NEITHER:
        raise NotFilteredError(
            "presentation is not filtered for these weights: "
            + str(report))


def _validate_output(pres, ordering, dfun, what):
    if not check_solvable(pres, ordering).ok:
        raise ValueError(
            f"{what} fails the solvability check; the source presentation "
            "is not solvable under the given ordering")
    if check_graded_type(pres, dfun).verdict is not TypeVerdict.GRADED:
        raise ValueError(f"{what} is not graded, which should be impossible "
                         "for a filtered source")


def build_associated_graded(pres: AlgebraPresentation, dfun: DegreeFunction,
                            ordering: MonomialOrdering) -> GradedTransformResult:
    """Presentation with each relation tail cut to degree m_i + m_j.

    The generators and the ordering carry over unchanged; the result is
    graded by construction and solvable whenever the source is.
    """
    _require_transform_inputs(pres, dfun, ordering)
    field = pres.field
    relations = {}
    for (i, j) in pres.pairs():
        lam, tail = pres.relation(i, j)
        required = dfun.weights[i] + dfun.weights[j]
        top = Polynomial._raw(
            field, pres.n,
            {m: c for m, c in tail.items() if dfun.of_monomial(m) == required})
        relations[(i, j)] = (lam, top)
    graded = AlgebraPresentation(field, pres.names, relations)
    _validate_output(graded, ordering, dfun, "associated graded presentation")
    return GradedTransformResult(graded, ordering, dfun)


def build_rees(pres: AlgebraPresentation, dfun: DegreeFunction,
               ordering: MonomialOrdering) -> ReesTransformResult:
    """Presentation on n+1 generators with a central homogenizing generator.

    Tail terms acquire the central power that lifts them to degree
    m_i + m_j; the new generator commutes with everything and weighs 1.
    The extension ordering compares the original exponents first and the
    central exponent only on ties, so it is admissible but in general not
    degree-first.
    """
    _require_transform_inputs(pres, dfun, ordering)
    field = pres.field
    n = pres.n
    relations = {}
    for (i, j) in pres.pairs():
        lam, tail = pres.relation(i, j)
        required = dfun.weights[i] + dfun.weights[j]
        lifted = {
            m + (required - dfun.of_monomial(m),): c for m, c in tail.items()}
        relations[(i, j)] = (lam, Polynomial(field, n + 1, lifted))
    names = tuple(f"{nm}~" for nm in pres.names) + ("Z",)
    rees = AlgebraPresentation(field, names, relations)
    rees_ordering = ReesOrder(base=ordering)
    rees_degree = DegreeFunction(dfun.weights + (1,))
    _validate_output(rees, rees_ordering, rees_degree, "Rees presentation")
    return ReesTransformResult(rees, rees_ordering, rees_degree)


def principal_symbol(f: Polynomial, dfun: DegreeFunction) -> Polynomial:
    """Image of f in the associated graded algebra: its top-degree slice.

    Exponents are unchanged because the graded presentation keeps the
    generator set; degree is preserved.
    """
    return leading_homogeneous(dfun, f)


def homogenize(f: Polynomial, dfun: DegreeFunction) -> Polynomial:
    """Lift f to a homogeneous element over the Rees generators.

    Each term gains the central-generator power filling its gap below
    deg(f); the result is homogeneous of degree deg(f) for the extended
    weights.
    """
    if f.is_zero():
        raise ZeroPolynomialError("cannot homogenize the zero polynomial")
    top = deg_poly(dfun, f)
    return Polynomial._raw(
        f.field, f.nvars + 1,
        {m + (top - dfun.of_monomial(m),): c for m, c in f.items()})


def homogenize_at(f: Polynomial, dfun: DegreeFunction, level: int) -> Polynomial:
    """Homogeneous representative of f at a chosen level >= deg(f)."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot homogenize the zero polynomial")
    top = deg_poly(dfun, f)
    if level < top:
        raise LevelTooLowError(
            f"level {level} below the element degree {top}")
    return Polynomial._raw(
        f.field, f.nvars + 1,
        {m + (level - dfun.of_monomial(m),): c for m, c in f.items()})


def dehomogenize(h: Polynomial) -> Polynomial:
    """Substitute 1 for the central (last) generator.

    A ring map on elements; distinct terms may collapse and cancel.
    """
    if h.nvars < 2:
        raise DimensionMismatch(
            "dehomogenization needs at least one non-central generator")
    field = h.field
    out: dict = {}
    for m, c in h.items():
        base = m[:-1]
        cur = out.get(base)
        if cur is None:
            out[base] = c
        else:
            s = field.add(cur, c)
            if field.is_zero(s):
                del out[base]
            else:
                out[base] = s
    return Polynomial._raw(field, h.nvars - 1, out)


def project_mod_z(h: Polynomial) -> Polynomial:
    """Delete every term the central (last) generator divides.

    Realizes the projection from the Rees presentation onto the
    associated graded one.
    """
    if h.nvars < 2:
        raise DimensionMismatch(
            "projection needs at least one non-central generator")
    return Polynomial._raw(
        h.field, h.nvars - 1,
        {m[:-1]: c for m, c in h.items() if m[-1] == 0})


@dataclass(frozen=True)
class TransportReport:
    """Five laws relating degree and leading monomial across the maps."""

    ok: bool
    failures: tuple = ()  # (law, detail) pairs

    LAWS = ("degrees", "symbol-formula", "symbol-lm",
            "homog-formula", "homog-lm")

    def __str__(self):
        if self.ok:
            return "PASS: " + ", ".join(self.LAWS)
        return "\n".join(f"FAIL [{law}]: {detail}"
                         for law, detail in self.failures)


def check_lm_transport(pres: AlgebraPresentation, dfun: DegreeFunction,
                       ordering: MonomialOrdering,
                       f: Polynomial) -> TransportReport:
    """Degree and leading-monomial commutation under both element maps.

    For nonzero f with top degree p and leading monomial u (taken under
    the degree-first ordering):

    - degrees: p equals the degree of the symbol and of the lift;
    - symbol-formula: the symbol is the sub-sum of degree-p terms;
    - symbol-lm: the symbol's leading monomial is u;
    - homog-formula: each lifted term carries the central power p - deg;
    - homog-lm: the lift's leading monomial is u with central power 0.
    """
    if f.is_zero():
        raise ZeroPolynomialError("transport laws need a nonzero element")
    _require_transform_inputs(pres, dfun, ordering)
    failures = []
    p = deg_poly(dfun, f)
    sym = principal_symbol(f, dfun)
    lift = homogenize(f, dfun)
    rees_dfun = DegreeFunction(dfun.weights + (1,))
    rees_ordering = ReesOrder(base=ordering)

    if not (deg_poly(dfun, sym) == p == deg_poly(rees_dfun, lift)):
        failures.append((
            "degrees",
            f"deg(f)={p}, deg(symbol)={deg_poly(dfun, sym)}, "
            f"deg(lift)={deg_poly(rees_dfun, lift)}"))

    expected_sym = Polynomial._raw(
        f.field, f.nvars,
        {m: c for m, c in f.items() if dfun.of_monomial(m) == p})
    if sym != expected_sym:
        failures.append(("symbol-formula", "top-degree slice mismatch"))

    lm = leading_monomial(ordering, f)
    if leading_monomial(ordering, sym) != lm:
        failures.append((
            "symbol-lm",
            f"{leading_monomial(ordering, sym)} != {lm}"))

    expected_lift = Polynomial._raw(
        f.field, f.nvars + 1,
        {m + (p - dfun.of_monomial(m),): c for m, c in f.items()})
    if lift != expected_lift:
        failures.append(("homog-formula", "central padding mismatch"))

    if leading_monomial(rees_ordering, lift) != lm + (0,):
        failures.append((
            "homog-lm",
            f"{leading_monomial(rees_ordering, lift)} != {lm + (0,)}"))

    return TransportReport(ok=not failures, failures=tuple(failures))
