"""Positive-degree functions, polynomial degree and leading homogeneous parts.

A degree function is induced by a strictly positive weight vector
(m_1, ..., m_n): the degree of an exponent vector is the weighted sum of
its entries, so only the identity monomial has degree 0.  The degree of
the zero polynomial is deliberately undefined and raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidDegreeFunction, ZeroPolynomialError
from .poly import Monomial, Polynomial


@dataclass(frozen=True)
class DegreeFunction:
    """Weight vector inducing deg(a^alpha) = sum(alpha_i * m_i)."""

    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights:
            raise InvalidDegreeFunction("empty weight vector")
        for w in self.weights:
            if not isinstance(w, int) or w < 1:
                raise InvalidDegreeFunction(
                    f"weights must be positive integers, got {w!r}")

    @property
    def n(self) -> int:
        return len(self.weights)

    def of_monomial(self, mono: Monomial) -> int:
        if len(mono) != self.n:
            raise DimensionMismatch(
                f"monomial length {len(mono)} != {self.n} weights")
        return sum(e * w for e, w in zip(mono, self.weights))


def deg_monomial(dfun: DegreeFunction, mono: Monomial) -> int:
    return dfun.of_monomial(mono)


def deg_poly(dfun: DegreeFunction, f: Polynomial) -> int:
    if f.is_zero():
        raise ZeroPolynomialError("degree of the zero polynomial is undefined")
    return max(dfun.of_monomial(m) for m in f.support())


def leading_homogeneous(dfun: DegreeFunction, f: Polynomial) -> Polynomial:
    """The sub-sum of f's terms of maximal degree; nonzero, same degree as f."""
    top = deg_poly(dfun, f)
    return Polynomial._raw(
        f.field, f.nvars,
        {m: c for m, c in f.items() if dfun.of_monomial(m) == top})


def in_filtration_level(dfun: DegreeFunction, f: Polynomial, level: int) -> bool:
    """True iff every support monomial has degree <= level (0 is everywhere)."""
    return all(dfun.of_monomial(m) <= level for m in f.support())
