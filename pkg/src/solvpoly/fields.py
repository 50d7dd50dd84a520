"""Exact ground fields: the rationals and prime fields GF(p).

Scalars are plain Python values (``int``/``Fraction`` for the rationals,
``int`` residues in ``[0, p)`` for GF(p)); the field object supplies the
arithmetic.  Nothing here ever rounds: a + (-a) == 0 and a * inv(a) == 1
hold exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _as_canonical_rational(value) -> int | Fraction:
    # keep integers as int so the hot kernel multiplies machine ints
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise TypeError(f"not a rational scalar: {value!r}")


class RationalField:
    """The field of rationals with reduced, positive-denominator storage."""

    name = "Q"

    zero = 0
    one = 1

    def coerce(self, value) -> int | Fraction:
        return _as_canonical_rational(value)

    def add(self, a, b):
        return _as_canonical_rational(a + b)

    def sub(self, a, b):
        return _as_canonical_rational(a - b)

    def mul(self, a, b):
        return _as_canonical_rational(a * b)

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0")
        return _as_canonical_rational(Fraction(1) / Fraction(a))

    def is_zero(self, a) -> bool:
        return not a

    def ratio(self, num: int, den: int):
        if den == 0:
            raise ZeroDivisionError("denominator 0")
        return _as_canonical_rational(Fraction(num, den))

    def is_negative(self, a) -> bool:
        return a < 0

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """GF(p) with residues stored in [0, p)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus is not prime")

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, value):
        if isinstance(value, Fraction):
            return self.ratio(value.numerator, value.denominator)
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"not a GF({self.p}) scalar: {value!r}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def ratio(self, num: int, den: int):
        return self.mul(num % self.p, self.inv(den % self.p))

    def is_negative(self, a) -> bool:
        return False  # residues are canonical representatives

    def format(self, a) -> str:
        return str(a % self.p)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
