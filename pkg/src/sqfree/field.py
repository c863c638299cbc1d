"""Exact scalar arithmetic: the rationals or a prime field GF(p).

Scalars are plain Python objects: ``Fraction`` over the rationals,
``int`` in ``[0, p)`` over GF(p).  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError, ParseError

_MAX_PRIME = 1 << 31


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


@dataclass(frozen=True)
class Field:
    """The rationals (``p == 0``) or GF(p) for a prime ``p < 2**31``."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0:
            if self.p >= _MAX_PRIME:
                raise InvalidInputError(f"prime {self.p} too large (need p < 2**31)")
            if not _is_prime(self.p):
                raise InvalidInputError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    # -- scalar ops -----------------------------------------------------
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def coerce(self, x):
        """Normalize an int / Fraction / "a/b" string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise InvalidInputError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- text -----------------------------------------------------------
    def format(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                val = Fraction(int(num), int(den))
            else:
                val = Fraction(int(s))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad scalar {s!r}: {e}") from None
        return self.coerce(val)

    def name(self) -> str:
        return "q" if self.p == 0 else f"fp:{self.p}"

    @staticmethod
    def from_name(name: str) -> "Field":
        name = name.strip().lower()
        if name in ("q", "qq", "rational", "rationals"):
            return Field(0)
        if name.startswith("fp:"):
            try:
                p = int(name[3:])
            except ValueError:
                raise ParseError(f"bad field name {name!r}") from None
            return Field(p)
        raise ParseError(f"bad field name {name!r} (expected 'q' or 'fp:<p>')")


QQ = Field(0)
