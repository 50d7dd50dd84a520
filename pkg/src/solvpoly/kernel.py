"""PBW normal-form multiplication and the solvability/confluence checks.

The hot rewriting loop lives in a backend engine: a compiled Cython
extension when available, with a pure-Python twin as fallback.  The
backend is picked once at import; set ``SOLVPOLY_PURE_PYTHON=1`` to force
the fallback, or pass ``backend=`` explicitly when constructing a
:class:`Multiplier`.
"""

from __future__ import annotations

from dataclasses import dataclass
import os

from . import _kernel_py
from .errors import BudgetExceededError, DimensionMismatch
from .orderings import LESS, MonomialOrdering, leading_monomial
from .poly import Monomial, Polynomial, mono_mul, unit_monomial
from .presentation import AlgebraPresentation

DEFAULT_STEP_BUDGET = 10 ** 6

try:
    from . import _kernel_cy
except ImportError:
    _kernel_cy = None

_BACKENDS = {"python": _kernel_py}
if _kernel_cy is not None:
    _BACKENDS["cython"] = _kernel_cy

if os.environ.get("SOLVPOLY_PURE_PYTHON") == "1" or _kernel_cy is None:
    _DEFAULT_BACKEND = "python"
else:
    _DEFAULT_BACKEND = "cython"


def available_backends() -> tuple:
    return tuple(sorted(_BACKENDS))


def default_backend() -> str:
    return _DEFAULT_BACKEND


class Multiplier:
    """Product engine bound to one presentation and one monomial ordering.

    Monomial products are memoized, so exhaustive sweeps and repeated
    polynomial products stay cheap.  Instances are immutable apart from
    the internal cache and are safe to share across threads.
    """

    def __init__(self, pres: AlgebraPresentation, ordering: MonomialOrdering,
                 *, budget: int | None = None, backend: str | None = None):
        if ordering.n != pres.n:
            raise DimensionMismatch(
                f"ordering over {ordering.n} generators, presentation has {pres.n}")
        self.presentation = pres
        self.ordering = ordering
        self.budget = budget or DEFAULT_STEP_BUDGET
        self.backend = backend or _DEFAULT_BACKEND
        if self.backend not in _BACKENDS:
            raise ValueError(
                f"unknown backend {self.backend!r}; have {available_backends()}")

        n = pres.n
        field = pres.field
        lam = [None] * (n * n)
        tails = [()] * (n * n)
        for (i, j) in pres.pairs():
            lam_ji, tail = pres.relation(i, j)
            lam[j * n + i] = lam_ji
            tails[j * n + i] = tuple(
                (self._letters(m), c) for m, c in tail.items())
        # rank pair monomials a_i*a_j in the ordering; the rewrite strategy
        # always picks the largest out-of-order pair, leftmost on ties
        pair_monos = sorted(
            ((i, j) for (i, j) in pres.pairs()),
            key=lambda ij: ordering.key(
                mono_mul(unit_monomial(n, ij[0]), unit_monomial(n, ij[1]))))
        rank = [0] * (n * n)
        for pos, (i, j) in enumerate(pair_monos):
            rank[j * n + i] = pos
        self._engine = _BACKENDS[self.backend].Engine(
            n, lam, tails, rank, field.add, field.mul, field.one, self.budget)

    @staticmethod
    def _letters(mono: Monomial) -> tuple:
        out = []
        for g, e in enumerate(mono):
            out.extend((g,) * e)
        return tuple(out)

    def product(self, alpha: Monomial, beta: Monomial) -> dict:
        """Raw normal form of a^alpha * a^beta; the shared cached dict.

        Bulk sweeps use this to skip Polynomial wrapping.  Treat the
        result as read-only.
        """
        return self._engine.product(alpha, beta)

    def mul_monomials(self, alpha: Monomial, beta: Monomial) -> Polynomial:
        n = self.presentation.n
        if len(alpha) != n or len(beta) != n:
            raise DimensionMismatch(
                f"exponent vectors of length {len(alpha)}, {len(beta)}; "
                f"presentation has {n} generators")
        return Polynomial._raw(self.presentation.field, n,
                               dict(self._engine.product(tuple(alpha), tuple(beta))))

    def check_associativity(self, bounds) -> tuple | None:
        """Exhaustive (a*b)*c == a*(b*c) over a per-generator exponent box.

        ``bounds`` gives the inclusive exponent cap for each generator.
        Returns the first failing exponent triple, or None when the sweep
        is clean.
        """
        from itertools import product as iproduct

        n = self.presentation.n
        if len(bounds) != n:
            raise DimensionMismatch(f"{len(bounds)} bounds for {n} generators")
        monos = [tuple(m) for m in iproduct(*[range(b + 1) for b in bounds])]
        return self._engine.associativity_counterexample(monos)

    def mul(self, f: Polynomial, g: Polynomial) -> Polynomial:
        field = self.presentation.field
        n = self.presentation.n
        if f.nvars != n or g.nvars != n:
            raise DimensionMismatch(
                f"polynomials over {f.nvars}, {g.nvars} generators; "
                f"presentation has {n}")
        cadd = field.add
        cmul = field.mul
        engine = self._engine
        out: dict = {}
        for ma, ca in f.items():
            for mb, cb in g.items():
                c = cmul(ca, cb)
                for m, pc in engine.product(ma, mb).items():
                    v = cmul(c, pc)
                    cur = out.get(m)
                    if cur is None:
                        out[m] = v
                    else:
                        s = cadd(cur, v)
                        if s:
                            out[m] = s
                        else:
                            del out[m]
        return Polynomial._raw(field, n, out)


def mul_monomials(pres: AlgebraPresentation, ordering: MonomialOrdering,
                  alpha: Monomial, beta: Monomial) -> Polynomial:
    """PBW normal form of a^alpha * a^beta."""
    return pres.multiplier(ordering).mul_monomials(alpha, beta)


def mul(pres: AlgebraPresentation, ordering: MonomialOrdering,
        f: Polynomial, g: Polynomial) -> Polynomial:
    """Bilinear extension of mul_monomials; exact."""
    return pres.multiplier(ordering).mul(f, g)


@dataclass(frozen=True)
class SolvabilityFailure:
    i: int
    j: int
    reason: str  # "zero-scalar" or "leading-monomial"
    lm: Monomial | None = None


@dataclass(frozen=True)
class SolvabilityReport:
    ok: bool
    failures: tuple = ()

    def __str__(self):
        if self.ok:
            return "PASS: presentation is solvable under the given ordering"
        parts = []
        for f in self.failures:
            if f.reason == "zero-scalar":
                parts.append(f"pair ({f.i}, {f.j}): swap scalar is zero")
            else:
                parts.append(
                    f"pair ({f.i}, {f.j}): tail leading monomial {f.lm} "
                    f"is not below the pair monomial")
        return "FAIL: " + "; ".join(parts)


def check_solvable(pres: AlgebraPresentation,
                   ordering: MonomialOrdering) -> SolvabilityReport:
    """Pairwise solvability: every tail leads strictly below a_i * a_j.

    Total: never raises on well-formed presentations, and reports every
    offending pair rather than just the first.
    """
    failures = []
    n = pres.n
    for (i, j) in pres.pairs():
        lam, tail = pres.relation(i, j)
        if pres.field.is_zero(lam):
            failures.append(SolvabilityFailure(i, j, "zero-scalar"))
            continue
        if tail.is_zero():
            continue
        lm = leading_monomial(ordering, tail)
        target = mono_mul(unit_monomial(n, i), unit_monomial(n, j))
        if ordering.compare(lm, target) != LESS:
            failures.append(SolvabilityFailure(i, j, "leading-monomial", lm))
    return SolvabilityReport(ok=not failures, failures=tuple(failures))


@dataclass(frozen=True)
class ConfluenceReport:
    ok: bool
    divergent: tuple | None = None       # (i, j, k, nf_left, nf_right)
    budget_exceeded: tuple | None = None  # (i, j, k, steps)

    def __str__(self):
        if self.ok:
            return "PASS: all generator triples reduce confluently"
        if self.budget_exceeded is not None:
            i, j, k, steps = self.budget_exceeded
            return (f"BUDGET EXCEEDED: triple ({i}, {j}, {k}) "
                    f"aborted after {steps} rewrite steps")
        i, j, k, left, right = self.divergent
        return (f"FAIL: triple ({i}, {j}, {k}) diverges: "
                f"{left!r} vs {right!r}")


def check_pbw_confluence(pres: AlgebraPresentation, ordering: MonomialOrdering,
                         *, budget: int = DEFAULT_STEP_BUDGET) -> ConfluenceReport:
    """Overlap check: reduce a_k a_j a_i both ways for every i < j < k.

    The two reduction orders are the two bracketings of the triple
    product; equality for all triples makes the rewriting system
    confluent on the ordered-monomial basis.
    """
    n = pres.n
    mult = pres.multiplier(ordering, budget=budget)
    field = pres.field
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei = unit_monomial(n, i)
                ej = unit_monomial(n, j)
                ek = unit_monomial(n, k)
                try:
                    left = mult.mul(mult.mul_monomials(ek, ej),
                                    Polynomial.monomial(field, ei))
                    right = mult.mul(Polynomial.monomial(field, ek),
                                     mult.mul_monomials(ej, ei))
                except BudgetExceededError as exc:
                    return ConfluenceReport(
                        ok=False, budget_exceeded=(i, j, k, exc.steps))
                if left != right:
                    return ConfluenceReport(
                        ok=False, divergent=(i, j, k, left, right))
    return ConfluenceReport(ok=True)
