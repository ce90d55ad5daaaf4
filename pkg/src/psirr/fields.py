"""Coefficient fields: the rationals and prime fields F_p.

Rational elements are ``fractions.Fraction``; prime-field elements are
``ModInt``. Both support the usual arithmetic operators, so polynomial code
is written once over either field.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError

RATIONALS = "Q"
PRIME_FIELD = "Fp"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for s in small:
        if n % s == 0:
            return n == s
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic Miller-Rabin for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ModInt:
    """Element of Z/pZ, stored as its least nonnegative residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise ValueError("mixing elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModInt(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModInt(o * pow(self.v, -1, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            return ModInt(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModInt(pow(self.v, e, self.p), self.p)

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModInt({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class FieldCtx:
    """A coefficient field. ``kind`` is ``"Q"`` or ``"Fp"``; ``p`` is set iff ``"Fp"``."""

    kind: str = RATIONALS
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise InputError("the rational field takes no modulus")
        elif self.kind == PRIME_FIELD:
            if self.p is None or not is_prime(self.p):
                raise InputError(f"modulus {self.p} is not prime")
        else:
            raise InputError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldCtx:
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> FieldCtx:
        return cls(PRIME_FIELD, p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else self.p

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME_FIELD

    def __call__(self, value):
        """Convert an int, Fraction or field element into this field."""
        if self.kind == RATIONALS:
            if isinstance(value, ModInt):
                raise TypeError("cannot lift a prime-field element to Q")
            return Fraction(value)
        if isinstance(value, ModInt):
            if value.p != self.p:
                raise ValueError("mixing elements of different prime fields")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
            return ModInt(value.numerator * pow(value.denominator, -1, self.p), self.p)
        return ModInt(int(value), self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def random_element(self, rng: random.Random, nonzero: bool = False, height: int = 5):
        """Uniform over F_p, or a small-height rational over Q."""
        while True:
            if self.kind == PRIME_FIELD:
                c = self(rng.randrange(self.p))
            else:
                c = Fraction(rng.randint(-height, height), rng.randint(1, height))
            if c or not nonzero:
                return c

    def elements(self):
        if self.kind != PRIME_FIELD:
            raise ValueError("Q is infinite")
        return [ModInt(i, self.p) for i in range(self.p)]

    def sqrt(self, a):
        """A square root of ``a`` in the field, or None.

        Over Q the nonnegative root is returned; over F_p the smaller
        representative of the two roots.
        """
        a = self(a)
        if not a:
            return a
        if self.kind == RATIONALS:
            if a < 0:
                return None
            n, d = a.numerator, a.denominator
            rn, rd = math.isqrt(n), math.isqrt(d)
            if rn * rn == n and rd * rd == d:
                return Fraction(rn, rd)
            return None
        r = _sqrt_mod(a.v, self.p)
        if r is None:
            return None
        return ModInt(min(r, self.p - r), self.p)

    def format(self, c) -> str:
        return str(c)

    def to_json(self) -> dict:
        if self.kind == RATIONALS:
            return {"kind": "Q"}
        return {"kind": "Fp", "p": self.p}

    def __str__(self):
        return "QQ" if self.kind == RATIONALS else f"GF({self.p})"


def _sqrt_mod(a: int, p: int) -> int | None:
    """Tonelli-Shanks."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


QQ = FieldCtx.rationals()


def GF(p: int) -> FieldCtx:
    return FieldCtx.prime(p)
