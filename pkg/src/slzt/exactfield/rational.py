from __future__ import annotations

from fractions import Fraction
from math import gcd

Q = Fraction


def qnorm(c):
    """Return ``c`` as an int when it is integral, else as a reduced Fraction.

    Keeping Z[t] data in plain ints makes the integer paths several times
    faster than going through Fraction for every coefficient.
    """
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def qdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return qnorm(Fraction(a) / Fraction(b))


def denominator(c) -> int:
    return 1 if isinstance(c, int) else c.denominator


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
