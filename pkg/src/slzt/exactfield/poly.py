"""Dense univariate polynomials in ``t`` over Z or Q."""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest

from .rational import denominator, lcm, qdiv, qnorm

_SCALARS = (int, Fraction)


class Poly:
    """Polynomial in ``t`` with rational coefficients, stored low degree first.

    Coefficients are kept as ints whenever they are integral, so ``ring``
    reports ``"Z"`` exactly when the polynomial lies in Z[t].
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [qnorm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs: list) -> Poly:
        while cs and cs[-1] == 0:
            cs.pop()
        p = cls.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponent in a polynomial")
        return cls([0] * e + [c])

    @classmethod
    def t(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def from_dict(cls, terms: dict) -> Poly:
        if not terms:
            return cls()
        cs = [0] * (max(terms) + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError("negative exponent in a polynomial")
            cs[e] = c
        return cls(cs)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def ring(self) -> str:
        return "Z" if all(isinstance(c, int) for c in self.coeffs) else "Q"

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, e: int):
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def terms(self) -> dict:
        return {e: c for e, c in enumerate(self.coeffs) if c != 0}

    def const_value(self):
        if len(self.coeffs) > 1:
            raise ValueError(f"{self!r} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def denominator_lcm(self) -> int:
        d = 1
        for c in self.coeffs:
            d = lcm(d, denominator(c))
        return d

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return Poly._raw([qnorm(a + b) for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly.const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return Poly._raw([qnorm(a - b) for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return Poly()
            return Poly._raw([qnorm(c * other) for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return Poly._raw([qnorm(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Poly:
        return self * c

    def __divmod__(self, other: Poly):
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lc()
        if len(rem) - 1 < db:
            return Poly(), self
        quo = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = qdiv(c, lead)
            quo[i - db] = q
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] = qnorm(rem[i - db + j] - q * bc)
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * qdiv(1, self.lc())

    def shift(self, k: int) -> Poly:
        """Multiply by t**k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly._raw([0] * k + list(self.coeffs))

    def derivative(self) -> Poly:
        return Poly([e * c for e, c in enumerate(self.coeffs)][1:])

    # -- comparisons ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            return self.coeffs == ((qnorm(other),) if other != 0 else ())
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return (g, s, u) with s*a + u*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Poly.one(), Poly()
    u0, u1 = Poly(), Poly.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    if r0.is_zero():
        return r0, s0, u0
    inv = qdiv(1, r0.lc())
    return r0 * inv, s0 * inv, u0 * inv
