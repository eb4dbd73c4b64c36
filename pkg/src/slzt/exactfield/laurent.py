"""Truncated Laurent series in 1/t with an explicit precision floor.

A value is a finite map ``exponent -> coefficient`` together with ``floor``:
every coefficient at an exponent ``>= floor`` is known (absent means zero),
and nothing is known below ``floor``.  ``floor is None`` marks an exact
value (a Laurent polynomial with no unknown tail).

Valuation follows ``val(t**-1) = 1``, so Q[[1/t]] is ``{val >= 0}``.
"""
from __future__ import annotations

import math
from fractions import Fraction

from ..errors import PrecisionError
from .poly import Poly
from .rational import qdiv, qnorm

_SCALARS = (int, Fraction)
INF = math.inf


def _max_floor(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


class LaurentSeries:
    __slots__ = ("terms", "floor")

    def __init__(self, terms=None, floor: int | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = qnorm(c)
                if c != 0 and (floor is None or e >= floor):
                    clean[int(e)] = c
        self.terms = clean
        self.floor = floor

    @classmethod
    def _raw(cls, terms: dict, floor):
        s = cls.__new__(cls)
        s.terms = terms
        s.floor = floor
        return s

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls) -> LaurentSeries:
        return cls._raw({}, None)

    @classmethod
    def one(cls) -> LaurentSeries:
        return cls._raw({0: 1}, None)

    @classmethod
    def const(cls, c) -> LaurentSeries:
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e: int) -> LaurentSeries:
        return cls({e: c})

    @classmethod
    def t(cls) -> LaurentSeries:
        return cls._raw({1: 1}, None)

    @classmethod
    def from_poly(cls, p: Poly) -> LaurentSeries:
        return cls(p.terms())

    @classmethod
    def coerce(cls, x) -> LaurentSeries:
        if isinstance(x, LaurentSeries):
            return x
        if isinstance(x, _SCALARS):
            return cls.const(x)
        if isinstance(x, Poly):
            return cls.from_poly(x)
        to_laurent = getattr(x, "to_laurent", None)
        if to_laurent is not None:
            raise TypeError("rational functions need an explicit floor: use .to_laurent(floor)")
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentSeries")

    # -- queries -------------------------------------------------------
    def is_exact(self) -> bool:
        return self.floor is None

    def is_exact_zero(self) -> bool:
        return self.floor is None and not self.terms

    def top(self) -> int | None:
        """Largest stored exponent; ``None`` when nothing is stored."""
        return max(self.terms) if self.terms else None

    def _top_bound(self) -> int:
        # upper bound on the true top exponent of a nonzero-or-unknown value
        if self.terms:
            return max(self.terms)
        return self.floor - 1

    def leading_term(self):
        """Return ``(coefficient, exponent)`` of the stored leading term."""
        if not self.terms:
            if self.floor is None:
                raise ValueError("exact zero has no leading term")
            raise PrecisionError(f"no known nonzero term above floor {self.floor}")
        e = max(self.terms)
        return self.terms[e], e

    def coeff(self, e: int):
        if self.floor is not None and e < self.floor:
            raise PrecisionError(f"coefficient of t^{e} lies below floor {self.floor}")
        return self.terms.get(e, 0)

    def valuation(self):
        """``-(largest exponent)``; ``INF`` for exact zero."""
        if self.terms:
            return -max(self.terms)
        if self.floor is None:
            return INF
        raise PrecisionError(f"valuation undecidable: no stored terms above floor {self.floor}")

    def valuation_lower_bound(self):
        """Certified lower bound on the valuation (exact when a term is stored)."""
        if self.terms:
            return -max(self.terms)
        if self.floor is None:
            return INF
        return 1 - self.floor

    def known_zero(self) -> bool:
        """True when every coefficient above the floor vanishes."""
        return not self.terms

    def is_integral(self) -> bool:
        """Decide ``val >= 0``, refusing when a positive exponent is unknown."""
        if any(e > 0 for e in self.terms):
            return False
        if self.floor is not None and self.floor > 1:
            raise PrecisionError(f"integrality undecidable at floor {self.floor}")
        return True

    # -- truncation / splitting ---------------------------------------
    def truncate(self, floor: int) -> LaurentSeries:
        if self.floor is not None and self.floor >= floor:
            return self
        return LaurentSeries._raw({e: c for e, c in self.terms.items() if e >= floor}, floor)

    def polynomial_part(self) -> Poly:
        """Terms with exponent >= 0, as an exact polynomial in t."""
        if self.floor is not None and self.floor > 0:
            raise PrecisionError(f"polynomial part needs floor <= 0, have {self.floor}")
        return Poly.from_dict({e: c for e, c in self.terms.items() if e >= 0})

    def principal_part(self) -> LaurentSeries:
        """Terms with exponent < 0 (keeps the floor)."""
        return LaurentSeries._raw({e: c for e, c in self.terms.items() if e < 0}, self.floor)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = LaurentSeries.const(other)
        elif isinstance(other, Poly):
            other = LaurentSeries.from_poly(other)
        elif not isinstance(other, LaurentSeries):
            return NotImplemented
        if other.is_exact_zero():
            return self
        if self.is_exact_zero():
            return other
        floor = _max_floor(self.floor, other.floor)
        out = {}
        for src in (self.terms, other.terms):
            for e, c in src.items():
                if floor is None or e >= floor:
                    out[e] = out.get(e, 0) + c
        return LaurentSeries._raw({e: qnorm(c) for e, c in out.items() if c != 0}, floor)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries._raw({e: -c for e, c in self.terms.items()}, self.floor)

    def __sub__(self, other):
        if isinstance(other, (LaurentSeries, Poly) + _SCALARS):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if other == 0:
                return LaurentSeries.zero()
            return LaurentSeries._raw({e: qnorm(c * other) for e, c in self.terms.items()}, self.floor)
        if isinstance(other, Poly):
            other = LaurentSeries.from_poly(other)
        elif not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.is_exact_zero() or other.is_exact_zero():
            return LaurentSeries.zero()
        if other.floor is None and len(other.terms) == 1:
            return self._times_monomial(*next(iter(other.terms.items())))
        if self.floor is None and len(self.terms) == 1:
            return other._times_monomial(*next(iter(self.terms.items())))
        fa, fb = self.floor, other.floor
        if fa is None and fb is None:
            floor = None
        else:
            cands = []
            if fa is not None:
                cands.append(fa + other._top_bound())
            if fb is not None:
                cands.append(fb + self._top_bound())
            floor = max(cands)
        a = sorted(self.terms.items(), reverse=True)
        b = sorted(other.terms.items(), reverse=True)
        out: dict = {}
        for ea, ca in a:
            for eb, cb in b:
                e = ea + eb
                if floor is not None and e < floor:
                    break
                out[e] = out.get(e, 0) + ca * cb
        return LaurentSeries._raw({e: qnorm(c) for e, c in out.items() if c != 0}, floor)

    __rmul__ = __mul__

    def _times_monomial(self, e: int, c) -> LaurentSeries:
        """self * c t^e for an exact monomial (shifts the floor by e)."""
        floor = None if self.floor is None else self.floor + e
        if c == 1:
            return LaurentSeries._raw({x + e: v for x, v in self.terms.items()}, floor)
        return LaurentSeries._raw({x + e: qnorm(v * c) for x, v in self.terms.items()}, floor)

    def inv(self, floor: int | None = None) -> LaurentSeries:
        """Multiplicative inverse by leading-term division and recursion.

        For an exact non-monomial input a target ``floor`` is required.
        """
        if not self.terms:
            if self.floor is None:
                raise ZeroDivisionError("inverse of exact zero")
            raise PrecisionError(f"inverse undecidable: nothing stored above floor {self.floor}")
        top = max(self.terms)
        lead = self.terms[top]
        if self.floor is None and len(self.terms) == 1:
            return LaurentSeries._raw({-top: qdiv(1, lead)}, None)
        target = None if self.floor is None else self.floor - 2 * top
        if floor is not None:
            target = floor if target is None else max(target, floor)
        if target is None:
            raise ValueError("inverting an exact series needs an explicit floor")
        depth = -top - target  # number of coefficient steps below the leading one
        rest = [(top - e, c) for e, c in self.terms.items() if e != top]  # (gap, coeff)
        inv_lead = qdiv(1, lead)
        b = [inv_lead]
        for k in range(1, depth + 1):
            s = 0
            for gap, c in rest:
                if gap <= k:
                    s += c * b[k - gap]
            b.append(qnorm(-s * inv_lead))
        return LaurentSeries._raw({-top - k: c for k, c in enumerate(b) if c != 0}, target)

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return self * qdiv(1, other)
        if isinstance(other, Poly):
            other = LaurentSeries.from_poly(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if other.is_exact() and self.is_exact() and len(other.terms) > 1:
            raise ValueError("exact division by a non-monomial needs an explicit floor")
        return self * other.inv()

    def __pow__(self, k: int) -> LaurentSeries:
        if k < 0:
            return self.inv() ** (-k)
        result, base = LaurentSeries.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison ----------------------------------------------------
    def __eq__(self, other):
        """Structural equality: same stored terms and same floor."""
        if isinstance(other, _SCALARS):
            other = LaurentSeries.const(other)
        elif isinstance(other, Poly):
            other = LaurentSeries.from_poly(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.floor == other.floor and self.terms == other.terms

    def __hash__(self):
        return hash((self.floor, tuple(sorted(self.terms.items()))))

    def agrees(self, other) -> bool:
        """Equal on every exponent known for both operands."""
        return (self - LaurentSeries.coerce(other)).known_zero()

    def __repr__(self):
        if not self.terms:
            body = "0"
        else:
            parts = []
            for e in sorted(self.terms, reverse=True):
                c = self.terms[e]
                mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
                parts.append(f"{c}*{mono}" if mono else f"{c}")
            body = " + ".join(parts).replace("+ -", "- ")
        if self.floor is None:
            return body
        return f"{body} + O(t^{self.floor - 1})"


def laurent_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def laurent_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def laurent_inv(a: LaurentSeries, floor: int | None = None) -> LaurentSeries:
    return a.inv(floor)


def valuation(a: LaurentSeries):
    return a.valuation()
