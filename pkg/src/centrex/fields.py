"""Exact scalar fields: the rationals and prime fields F_p.

Scalars are plain Python values — ``Fraction`` over Q, ``int`` in [0, p) over
F_p — and every arithmetic operation goes through the owning field object, so
matrix code stays field-agnostic.  Rationals are kept reduced with positive
denominator by ``Fraction`` itself; residues are normalised on the way in.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


class Field:
    """Common interface; concrete fields are RationalField and PrimeField."""

    char: int
    name: str

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x):
        """Accept ints, strings and already-normalised scalars."""
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def fmt(self, x) -> str:
        return str(x)

    def __repr__(self):
        return self.name


class RationalField(Field):
    char = 0
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

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
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise InputError(f"cannot coerce {x!r} into Q")

    def parse(self, s):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad rational literal {s!r}: {e}") from None

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise InputError(f"modulus {p} is not prime")
        self.p = p
        self.char = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

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
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise InputError(f"cannot coerce {x!r} into {self.name}")

    def parse(self, s):
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/", 1)
                return self.div(int(num) % self.p, int(den) % self.p)
            return int(s) % self.p
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"bad {self.name} literal {s!r}: {e}") from None

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()

_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]
