"""Scalar arithmetic backends: exact rationals, prime fields Z_d, floats.

Every container in the package (vectors, matrices, subspaces) carries a
field object; elements of different fields never mix silently.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(TypeError):
    """Raised when values from different scalar backends are combined."""


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    if d % 2 == 0:
        return d == 2
    f = 3
    while f * f <= d:
        if d % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """Exact rational arithmetic on ``fractions.Fraction`` values."""

    name = "QQ"
    exact = True
    char = 0

    def of(self, x) -> Fraction:
        return Fraction(x)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Z_d for odd prime d; elements are plain ints reduced mod d."""

    exact = True

    def __init__(self, d: int):
        if not _is_prime(d) or d == 2:
            raise ValueError(f"modulus must be an odd prime, got {d}")
        self.d = d
        self.name = f"GF({d})"
        self.char = d

    def of(self, x) -> int:
        return int(x) % self.d

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.d

    def sub(self, a, b):
        return (a - b) % self.d

    def mul(self, a, b):
        return (a * b) % self.d

    def neg(self, a):
        return (-a) % self.d

    def inv(self, a):
        if a % self.d == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.d - 2, self.d)

    def eq(self, a, b) -> bool:
        return (a - b) % self.d == 0

    def is_zero(self, a) -> bool:
        return a % self.d == 0

    def elements(self):
        return range(self.d)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.d == self.d

    def __hash__(self):
        return hash(("GF", self.d))

    def __repr__(self):
        return self.name


class FloatField:
    """float64 arithmetic with a tolerance-based equality."""

    name = "RR"
    exact = False
    char = 0

    def __init__(self, tol: float = 1e-12):
        self.tol = tol

    def of(self, x) -> float:
        return float(x)

    @property
    def zero(self) -> float:
        return 0.0

    @property
    def one(self) -> float:
        return 1.0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1.0 / a

    def eq(self, a, b) -> bool:
        return abs(a - b) <= self.tol

    def is_zero(self, a) -> bool:
        return abs(a) <= self.tol

    def __eq__(self, other):
        return isinstance(other, FloatField)

    def __hash__(self):
        return hash("RR")

    def __repr__(self):
        return "RR"


QQ = RationalField()
RR = FloatField()


def GF(d: int) -> PrimeField:
    return PrimeField(d)


def check_same_field(a, b):
    if a != b:
        raise FieldMismatchError(f"mixed scalar kinds: {a} vs {b}")
