"""Finite presentations of solvable-type algebras.

A presentation fixes n generators and, for every pair i < j, a relation

    a_j * a_i = lam_ji * a_i * a_j + f_ji

with lam_ji a nonzero scalar and f_ji a polynomial in the ordered
monomials.  Pairs not mentioned default to commuting (lam = 1, f = 0).
The presentation itself is pure data; whether it actually defines a
solvable polynomial algebra is decided against a monomial ordering by
the checks in :mod:`solvpoly.kernel`.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .poly import Polynomial, mono_mul, unit_monomial


class AlgebraPresentation:
    __slots__ = ("field", "names", "_table", "_multipliers")

    def __init__(self, field, names, relations=None):
        names = tuple(names)
        if not names:
            raise ValueError("a presentation needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.field = field
        self.names = names
        n = len(names)

        table = {}
        for i in range(n):
            for j in range(i + 1, n):
                table[(i, j)] = (field.one, Polynomial.zero(field, n))
        for (i, j), (lam, tail) in dict(relations or {}).items():
            if not (0 <= i < j < n):
                raise ValueError(f"relation pair {(i, j)} out of range (need i < j)")
            lam = field.coerce(lam)
            if field.is_zero(lam):
                raise ValueError(
                    f"relation {names[j]}*{names[i]}: scalar on "
                    f"{names[i]}*{names[j]} must be nonzero")
            if tail is None:
                tail = Polynomial.zero(field, n)
            if not isinstance(tail, Polynomial):
                tail = Polynomial(field, n, tail)
            if tail.nvars != n:
                raise DimensionMismatch(
                    f"relation {(i, j)}: tail over {tail.nvars} generators, "
                    f"presentation has {n}")
            if tail.field != field:
                raise ValueError(f"relation {(i, j)}: tail over a different field")
            table[(i, j)] = (lam, tail)
        self._table = table
        self._multipliers = {}

    @classmethod
    def commutative(cls, field, names) -> "AlgebraPresentation":
        return cls(field, names)

    @classmethod
    def from_rhs(cls, field, names, rhs_map) -> "AlgebraPresentation":
        """Build from full right-hand sides lam*a_i*a_j + tail.

        Raises if a right-hand side has no a_i*a_j term, since the leading
        scalar must be a unit.
        """
        names = tuple(names)
        n = len(names)
        relations = {}
        for (i, j), rhs in dict(rhs_map).items():
            target = mono_mul(unit_monomial(n, i), unit_monomial(n, j))
            lam = rhs.coeff(target)
            if field.is_zero(lam):
                raise ValueError(
                    f"relation {names[j]}*{names[i]}: coefficient of "
                    f"{names[i]}*{names[j]} is zero")
            tail = rhs.combine(Polynomial.monomial(field, target), field.neg(lam))
            relations[(i, j)] = (lam, tail)
        return cls(field, names, relations)

    @property
    def n(self) -> int:
        return len(self.names)

    def pairs(self):
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                yield (i, j)

    def relation(self, i: int, j: int):
        """(lam, tail) for the pair i < j."""
        return self._table[(i, j)]

    def relation_rhs(self, i: int, j: int) -> Polynomial:
        lam, tail = self._table[(i, j)]
        target = mono_mul(unit_monomial(self.n, i), unit_monomial(self.n, j))
        return tail.combine(Polynomial.monomial(self.field, target), lam)

    def is_default_pair(self, i: int, j: int) -> bool:
        lam, tail = self._table[(i, j)]
        return tail.is_zero() and lam == self.field.one

    def multiplier(self, ordering, *, budget=None, backend=None):
        """Cached product engine bound to this presentation and ordering."""
        from .kernel import DEFAULT_STEP_BUDGET, Multiplier

        key = (ordering, budget or DEFAULT_STEP_BUDGET, backend)
        engine = self._multipliers.get(key)
        if engine is None:
            engine = Multiplier(self, ordering, budget=budget, backend=backend)
            self._multipliers[key] = engine
        return engine

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraPresentation):
            return NotImplemented
        return (self.field == other.field and self.names == other.names
                and self._table == other._table)

    def __repr__(self) -> str:
        nontrivial = sum(1 for p in self.pairs() if not self.is_default_pair(*p))
        return (f"AlgebraPresentation({self.field.name}, {list(self.names)}, "
                f"{nontrivial} nontrivial pairs)")
