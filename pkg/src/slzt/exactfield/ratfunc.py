from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentSeries
from .poly import Poly, poly_gcd
from .rational import qdiv

_SCALARS = (int, Fraction)


class RatFunc:
    """Element of Q(t) as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.const(num)
        if den is None:
            self.num, self.den = num, Poly.one()
            return
        den = den if isinstance(den, Poly) else Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.one()
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lc = den.lc()
        if lc != 1:
            inv = qdiv(1, lc)
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RatFunc:
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def coerce(cls, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return cls._raw(x, Poly.one())
        if isinstance(x, _SCALARS):
            return cls._raw(Poly.const(x), Poly.one())
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    @classmethod
    def zero(cls) -> RatFunc:
        return cls._raw(Poly(), Poly.one())

    @classmethod
    def one(cls) -> RatFunc:
        return cls._raw(Poly.one(), Poly.one())

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        if self.is_poly() and other.is_poly():
            return RatFunc._raw(self.num + other.num, Poly.one())
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        if self.is_poly() and other.is_poly():
            return RatFunc._raw(self.num * other.num, Poly.one())
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(t)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inv()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inv()

    def __pow__(self, k: int) -> RatFunc:
        if k < 0:
            return self.inv() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_laurent(self, floor: int) -> LaurentSeries:
        """Expansion in Q((1/t)), known down to ``floor``."""
        num = LaurentSeries.from_poly(self.num)
        if self.is_poly():
            return num
        den_inv = LaurentSeries.from_poly(self.den).inv(floor=floor - self.num.degree)
        return (num * den_inv).truncate(floor)

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"
