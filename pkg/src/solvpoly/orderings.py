"""Monomial-order oracles: lex, weighted graded, degree-first composites,
and the central-extension order used by the Rees construction.

Every ordering exposes an injective sort key on exponent tuples; two
monomials compare the way their keys compare.  Keys make leading-monomial
extraction, canonical printing and bulk comparisons cheap, and they are
what the rewriting kernel consumes.

Generator indices are 0-based.  Lex-type orders take a ``priority`` tuple
listing generator indices from most to least significant, so declaring
priority (0, 1, 2) realizes a_1 > a_2 > a_3 without renaming generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degrees import DegreeFunction
from .errors import DimensionMismatch, InvalidDegreeFunction, ZeroPolynomialError
from .poly import Monomial, Polynomial

LESS = -1
EQUAL = 0
GREATER = 1


class MonomialOrdering:
    """Total, multiplication-compatible well-order on exponent vectors."""

    @property
    def n(self) -> int:
        raise NotImplementedError

    def key(self, mono: Monomial) -> tuple:
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise DimensionMismatch(f"monomial lengths {len(a)} != {len(b)}")
        if len(a) != self.n:
            raise DimensionMismatch(
                f"ordering is over {self.n} generators, got length {len(a)}")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LESS
        if ka > kb:
            return GREATER
        return EQUAL


def _validated_priority(priority, n=None) -> tuple:
    p = tuple(priority)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"priority must be a permutation of 0..n-1, got {p}")
    if n is not None and len(p) != n:
        raise ValueError(f"priority length {len(p)} != {n}")
    return p


def _validated_weights(weights) -> tuple:
    w = tuple(weights)
    for x in w:
        if not isinstance(x, int) or x < 1:
            raise InvalidDegreeFunction(f"ordering weight {x!r} not positive")
    return w


@dataclass(frozen=True)
class Lex(MonomialOrdering):
    priority: tuple

    def __post_init__(self):
        object.__setattr__(self, "priority", _validated_priority(self.priority))

    @property
    def n(self) -> int:
        return len(self.priority)

    def key(self, mono: Monomial) -> tuple:
        return tuple(mono[i] for i in self.priority)


@dataclass(frozen=True)
class GrLex(MonomialOrdering):
    """Weighted total degree first, lex tie-break."""

    weights: tuple
    priority: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", _validated_weights(self.weights))
        object.__setattr__(
            self, "priority", _validated_priority(self.priority, len(self.weights)))

    @property
    def n(self) -> int:
        return len(self.weights)

    def key(self, mono: Monomial) -> tuple:
        deg = sum(e * w for e, w in zip(mono, self.weights))
        return (deg,) + tuple(mono[i] for i in self.priority)


@dataclass(frozen=True)
class GRevLex(MonomialOrdering):
    """Weighted total degree first, reverse-lex tie-break.

    On a degree tie the monomial whose exponent is smaller in the least
    significant differing position wins.
    """

    weights: tuple
    priority: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", _validated_weights(self.weights))
        object.__setattr__(
            self, "priority", _validated_priority(self.priority, len(self.weights)))

    @property
    def n(self) -> int:
        return len(self.weights)

    def key(self, mono: Monomial) -> tuple:
        deg = sum(e * w for e, w in zip(mono, self.weights))
        return (deg,) + tuple(-mono[i] for i in reversed(self.priority))


@dataclass(frozen=True)
class GradedOrder(MonomialOrdering):
    """Degree comparison first, an arbitrary base ordering on ties."""

    base: MonomialOrdering
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", _validated_weights(self.weights))
        if self.base.n != len(self.weights):
            raise DimensionMismatch(
                f"base ordering over {self.base.n} generators, "
                f"{len(self.weights)} weights")

    @property
    def n(self) -> int:
        return len(self.weights)

    def key(self, mono: Monomial) -> tuple:
        deg = sum(e * w for e, w in zip(mono, self.weights))
        return (deg,) + self.base.key(mono)


@dataclass(frozen=True)
class ReesOrder(MonomialOrdering):
    """Order on (alpha, z) pairs: base order on alpha, z-exponent on ties.

    The last exponent belongs to the adjoined central generator.  This is
    a monomial ordering but in general not a graded one.
    """

    base: MonomialOrdering

    @property
    def n(self) -> int:
        return self.base.n + 1

    def key(self, mono: Monomial) -> tuple:
        return self.base.key(mono[:-1]) + (mono[-1],)


def compare(ordering: MonomialOrdering, a: Monomial, b: Monomial) -> int:
    """Total-order verdict: LESS, EQUAL or GREATER."""
    return ordering.compare(a, b)


def make_graded(base: MonomialOrdering, dfun: DegreeFunction) -> GradedOrder:
    """Compose degree-first comparison over ``base``.

    The result is a well-ordering whenever the weights are positive, and
    multiplication-compatible whenever the base is, since weighted degree
    is additive.
    """
    if not isinstance(dfun, DegreeFunction):
        dfun = DegreeFunction(tuple(dfun))
    return GradedOrder(base=base, weights=dfun.weights)


@dataclass(frozen=True)
class GradednessReport:
    """Outcome of the degree-compatibility check over a finite box."""

    ok: bool
    witness: tuple | None = None  # (alpha, beta, deg_alpha, deg_beta)

    def __str__(self):
        if self.ok:
            return "PASS: ordering is degree-compatible on the box"
        a, b, da, db = self.witness
        return (f"FAIL: {a} precedes {b} in the ordering "
                f"but has degree {da} > {db}")


def is_graded_wrt(ordering: MonomialOrdering, dfun: DegreeFunction,
                  box: int) -> GradednessReport:
    """Exhaustive degree-compatibility test inside a bounded exponent box.

    Checks the two-sided property: a < b implies deg(a) <= deg(b), and
    deg(a) < deg(b) implies a < b.  The two directions fail on the same
    pairs up to swapping, so a single scan of ordered pairs covers both.
    Monomials are scanned upward in the ordering itself with candidate
    partners scanned downward from just below, so the reported witness is
    the largest offender under the smallest refuted monomial.
    """
    from itertools import product

    n = ordering.n
    monos = sorted(product(range(box + 1), repeat=n), key=ordering.key)
    degs = [dfun.of_monomial(m) for m in monos]
    for bi in range(len(monos)):
        db = degs[bi]
        for ai in range(bi - 1, -1, -1):
            if degs[ai] > db:
                return GradednessReport(
                    ok=False, witness=(monos[ai], monos[bi], degs[ai], db))
    return GradednessReport(ok=True)


def leading_monomial(ordering: MonomialOrdering, f: Polynomial) -> Monomial:
    """The ordering-maximal support monomial of a nonzero polynomial."""
    if f.is_zero():
        raise ZeroPolynomialError(
            "leading monomial of the zero polynomial is undefined")
    return max(f.support(), key=ordering.key)


def sorted_terms(ordering: MonomialOrdering | None, f: Polynomial) -> list:
    """Terms in descending order, for canonical printing."""
    if ordering is None:
        ordering = GrLex(weights=(1,) * f.nvars, priority=tuple(range(f.nvars)))
    return sorted(f.items(), key=lambda mc: ordering.key(mc[0]), reverse=True)
