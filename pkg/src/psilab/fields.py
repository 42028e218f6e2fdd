"""Exact coefficient fields.

Two field modes are supported: arbitrary-precision rationals (the default,
elements are `fractions.Fraction`) and a prime field F_p (elements are plain
ints in 0..p-1).  Every container in the library carries a field object and
all arithmetic goes through it, so there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class ConfigError(ValueError):
    """Raised on mismatched field/variable-count configuration."""


class RationalField:
    """The field of rational numbers, elements are Fraction."""

    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, a):
        return Fraction(a)

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
        return 1 / a

    def div(self, a, b):
        return a / b

    def parse(self, s):
        return Fraction(s)

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


def is_prime(p: int) -> bool:
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


class PrimeField:
    """The field F_p for a prime p, elements are ints reduced mod p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ConfigError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, a):
        return a % self.p

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
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def parse(self, s):
        f = Fraction(s)
        return self.div(self.from_int(f.numerator), self.from_int(f.denominator))

    def to_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def check_prime_field_bound(field, n: int, d: int) -> None:
    """Guard against small characteristic colliding with n, d.

    Prime-field instances require p > n*d so that scalars like n - #q and
    the 1/2 used in orbit manipulations are invertible and rank counts are
    meaningful lower bounds for the rational ones.
    """
    if isinstance(field, PrimeField) and field.p <= n * d:
        raise ConfigError(
            f"prime field modulus {field.p} too small for n={n}, d={d}: need p > n*d"
        )


def field_from_spec(flag: str):
    """Parse a field flag: 'q' (rationals) or 'fp:<prime>'."""
    s = flag.strip().lower()
    if s in ("q", "qq", "rational", "rationals"):
        return QQ
    if s.startswith("fp:"):
        return PrimeField(int(s[3:]))
    raise ConfigError(f"unknown field flag {flag!r} (use 'q' or 'fp:<p>')")
