"""Sparse polynomials over an exact field, indexed by exponent vectors.

A monomial is a tuple of n natural numbers; the all-zero tuple is the
identity monomial 1.  A polynomial is a finite map from monomials to
nonzero scalars; the zero polynomial is the empty map.  Values are
immutable by convention: no operation mutates its inputs.
"""

from __future__ import annotations

from typing import Iterator

from .errors import DimensionMismatch

Monomial = tuple  # tuple[int, ...], length = generator count


def zero_monomial(n: int) -> Monomial:
    return (0,) * n


def unit_monomial(n: int, i: int) -> Monomial:
    return tuple(1 if g == i else 0 for g in range(n))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Exponent-vector sum, the commutative shadow of a monomial product."""
    if len(a) != len(b):
        raise DimensionMismatch(f"monomial lengths {len(a)} != {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def _validated_monomial(mono, nvars: int) -> Monomial:
    m = tuple(mono)
    if len(m) != nvars:
        raise DimensionMismatch(f"monomial length {len(m)} != {nvars}")
    if any(not isinstance(e, int) or e < 0 for e in m):
        raise ValueError(f"exponents must be natural numbers: {m}")
    return m


class Polynomial:
    """Finite scalar-weighted set of monomials over a fixed field.

    ``terms`` maps exponent tuples to nonzero coefficients.  Use the
    ``zero``/``one``/``monomial`` constructors rather than building term
    dicts by hand.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars: int, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, coeff in dict(terms).items():
                c = field.coerce(coeff)
                if not field.is_zero(c):
                    clean[_validated_monomial(mono, nvars)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field, nvars: int, terms: dict) -> "Polynomial":
        # trusted fast path: terms already canonical, ownership transferred
        p = object.__new__(cls)
        p.field = field
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, field, nvars: int) -> "Polynomial":
        return cls._raw(field, nvars, {})

    @classmethod
    def one(cls, field, nvars: int) -> "Polynomial":
        return cls._raw(field, nvars, {zero_monomial(nvars): field.one})

    @classmethod
    def monomial(cls, field, mono, coeff=None) -> "Polynomial":
        mono = tuple(mono)
        c = field.one if coeff is None else field.coerce(coeff)
        if field.is_zero(c):
            return cls.zero(field, len(mono))
        return cls._raw(field, len(mono), {_validated_monomial(mono, len(mono)): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator:
        return iter(self.terms.items())

    def support(self):
        return self.terms.keys()

    def coeff(self, mono):
        return self.terms.get(tuple(mono), self.field.zero)

    def is_constant(self) -> bool:
        """True for 0 and for scalar multiples of the identity monomial."""
        return not self.terms or self.terms.keys() == {zero_monomial(self.nvars)}

    def _check_compatible(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise DimensionMismatch(
                f"polynomials over {self.nvars} and {other.nvars} generators")
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def combine(self, other: "Polynomial", scalar=None) -> "Polynomial":
        """self + scalar * other (scalar defaults to 1), zeros pruned."""
        self._check_compatible(other)
        field = self.field
        c = field.one if scalar is None else field.coerce(scalar)
        out = dict(self.terms)
        if not field.is_zero(c):
            for mono, coeff in other.terms.items():
                add = field.mul(c, coeff)
                cur = out.get(mono)
                if cur is None:
                    out[mono] = add
                else:
                    s = field.add(cur, add)
                    if field.is_zero(s):
                        del out[mono]
                    else:
                        out[mono] = s
        return Polynomial._raw(field, self.nvars, out)

    def scale(self, scalar) -> "Polynomial":
        field = self.field
        c = field.coerce(scalar)
        if field.is_zero(c):
            return Polynomial.zero(field, self.nvars)
        return Polynomial._raw(
            field, self.nvars,
            {m: field.mul(c, v) for m, v in self.terms.items()})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self.combine(other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self.combine(other, self.field.neg(self.field.one))

    def __neg__(self) -> "Polynomial":
        return self.scale(self.field.neg(self.field.one))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.nvars == other.nvars and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{m}: {self.field.format(c)}"
                         for m, c in sorted(self.terms.items()))
        return f"Polynomial<{self.nvars}>({{{body}}})"


def poly_combine(f: Polynomial, g: Polynomial, scalar) -> Polynomial:
    """f + scalar * g over the same generator set and field."""
    return f.combine(g, scalar)


def random_polynomial(rng, field, nvars: int, *, max_terms: int = 4,
                      max_exp: int = 3, nonzero: bool = True) -> Polynomial:
    """Small random polynomial for property testing (seeded, deterministic)."""
    terms = {}
    for _ in range(rng.randint(1 if nonzero else 0, max_terms)):
        mono = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        if field.name == "Q":
            coeff = 0
            while coeff == 0:
                coeff = rng.randint(-9, 9)
            if rng.random() < 0.25:
                coeff = field.ratio(coeff, rng.randint(2, 5))
        else:
            coeff = rng.randint(1, field.p - 1)
        terms[mono] = coeff
    poly = Polynomial(field, nvars, terms)
    if nonzero and poly.is_zero():
        return Polynomial.one(field, nvars)
    return poly
