"""Shared builders for the test suite."""

from __future__ import annotations

from solvpoly import (QQ, AlgebraPresentation, DegreeFunction, Lex, Polynomial,
                      make_graded)


def weighted3(lam=1, mu=1, f_terms=None, field=QQ):
    """3-generator presentation with one noncommuting pair:

        a3*a1 = lam*a1*a3 + mu*a2^2*a3 + f(a2)

    where f(a2) is a polynomial in a2 given as {exponent: coeff}, default
    a2^6.  Graded for weights (2, 1, 4) when mu != 0 and f = a2^6.
    """
    if f_terms is None:
        f_terms = {6: 1}
    tail = {}
    mu = field.coerce(mu)
    if not field.is_zero(mu):
        tail[(0, 2, 1)] = mu
    for e, c in f_terms.items():
        c = field.coerce(c)
        if not field.is_zero(c):
            tail[(0, e, 0)] = c
    return AlgebraPresentation(
        field, ("a1", "a2", "a3"),
        {(0, 2): (lam, Polynomial(field, 3, tail))})


W3_DEGREE = DegreeFunction((2, 1, 4))
W3_LEX = Lex((0, 1, 2))  # a1 > a2 > a3
W3_ORDER = make_graded(W3_LEX, W3_DEGREE)


def commutative3(field=QQ):
    return AlgebraPresentation.commutative(field, ("x", "y", "z"))


def weyl2(field=QQ):
    """a2*a1 = a1*a2 + 1 on two generators."""
    return AlgebraPresentation(
        field, ("a1", "a2"), {(0, 1): (1, Polynomial.one(field, 2))})


def quantum_plane(q, field=QQ):
    """a2*a1 = q*a1*a2."""
    return AlgebraPresentation(
        field, ("a1", "a2"), {(0, 1): (q, Polynomial.zero(field, 2))})
