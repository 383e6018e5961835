"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields GF(p).

Rational scalars are `fractions.Fraction` values (always stored reduced with a
positive denominator); prime-field scalars are plain ints in [0, p).  Text
form: rationals as "a/b" (or "a" when b = 1), prime-field elements as decimal
integers.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInput


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The field of rationals (p is None) or GF(p) for a prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise InvalidInput(f"modulus {p} is not prime")
        self.p = p

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    # -- scalar construction -------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def of(self, value):
        """Coerce an int (or Fraction, over the rationals) to a canonical scalar."""
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise InvalidInput(f"{value} is not an element of GF({self.p})")
            value = value.numerator
        return value % self.p

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.p is None else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def reduce(self, raw):
        """Canonicalize a raw int accumulated with lazy reduction (no-op over Q)."""
        return raw if self.p is None else raw % self.p

    # -- text form ------------------------------------------------------------

    def format(self, a) -> str:
        return str(a)

    def parse(self, text) -> object:
        """Parse the scalar text form ("a/b" or "a" over Q; an integer over GF(p))."""
        try:
            if self.p is None:
                return Fraction(str(text))
            return int(text) % self.p
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad scalar {text!r} for {self!r}: {exc}") from exc


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)
