"""Last-column unipotents I + u e_n^T and their polynomial / small splitting."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactfield import LaurentSeries, Matrix, Poly, RatFunc
from ..exactfield.rational import lcm

_SCALARS = (int, Fraction)


@dataclass(frozen=True)
class UnipotentVector:
    """Coordinates u_1..u_{n-1} of I + sum_j u_j E_{j,n}; the group law is addition."""

    coords: tuple

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def __add__(self, other: UnipotentVector) -> UnipotentVector:
        return UnipotentVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> UnipotentVector:
        return UnipotentVector(tuple(-a for a in self.coords))

    def __sub__(self, other: UnipotentVector) -> UnipotentVector:
        return self + (-other)

    def scale(self, k: int) -> UnipotentVector:
        return UnipotentVector(tuple(a * k for a in self.coords))

    @classmethod
    def zero(cls, n: int) -> UnipotentVector:
        return cls(tuple(Poly() for _ in range(n - 1)))

    def matrix(self, one=None) -> Matrix:
        n = self.n
        if one is None:
            one = LaurentSeries.one() if any(isinstance(c, LaurentSeries) for c in self.coords) else Poly.one()
        zero = one - one
        entries = [one if i == j else zero for i in range(n) for j in range(n)]
        for j, c in enumerate(self.coords):
            entries[j * n + n - 1] = _coerce_like(c, one)
        return Matrix(n, n, entries)

    @classmethod
    def from_matrix(cls, m: Matrix) -> UnipotentVector:
        n = m.rows
        return cls(tuple(m[j, n - 1] for j in range(n - 1)))

    def conjugate(self, a_block_inv: Matrix) -> UnipotentVector:
        """Coordinates of a^{-1} u a for a = diag(a_L, 1), given a_L^{-1}."""
        out = []
        for i in range(a_block_inv.rows):
            acc = None
            for j, c in enumerate(self.coords):
                term = _mul(a_block_inv[i, j], c)
                acc = term if acc is None else acc + term
            out.append(acc)
        return UnipotentVector(tuple(out))

    def is_polynomial_over_z(self) -> bool:
        return all(isinstance(c, Poly) and c.ring == "Z" for c in self.coords)

    def min_valuation_bound(self):
        return min(LaurentSeries.coerce(c).valuation_lower_bound() if not isinstance(c, RatFunc)
                   else _ratfunc_valuation(c) for c in self.coords)


def _ratfunc_valuation(r: RatFunc):
    if r.is_zero():
        return float("inf")
    return r.den.degree - r.num.degree


def _mul(a, b):
    if isinstance(b, LaurentSeries) and isinstance(a, Poly):
        return LaurentSeries.from_poly(a) * b
    return a * b


def _coerce_like(c, one):
    if isinstance(one, LaurentSeries):
        if isinstance(c, RatFunc):
            raise TypeError("rational function coordinates need an explicit floor")
        return LaurentSeries.coerce(c)
    if isinstance(one, RatFunc):
        return RatFunc.coerce(c)
    if isinstance(c, _SCALARS):
        return Poly.const(c)
    return c


def _split_one(c):
    if isinstance(c, Poly):
        return c, Poly()
    if isinstance(c, _SCALARS):
        return Poly.const(c), Poly()
    if isinstance(c, RatFunc):
        q, r = divmod(c.num, c.den)
        return q, RatFunc(r, c.den)
    if isinstance(c, LaurentSeries):
        return c.polynomial_part(), c.principal_part()
    raise TypeError(f"cannot split {type(c).__name__}")


def split_unipotent(u: UnipotentVector) -> tuple[UnipotentVector, UnipotentVector]:
    """u = u' u'' with u' over Q[t] and u'' of valuation >= 1 (constants go to u')."""
    parts = [_split_one(c) for c in u.coords]
    return UnipotentVector(tuple(p for p, _ in parts)), UnipotentVector(tuple(s for _, s in parts))


def denominator_lcm(u: UnipotentVector) -> int:
    d = 1
    for c in u.coords:
        d = lcm(d, c.denominator_lcm())
    return d


def ell_of(a_block_inv: Matrix, u: UnipotentVector) -> int:
    """Least l >= 1 with l * (a^{-1} u a)' over Z[t]."""
    poly_part, _ = split_unipotent(u.conjugate(a_block_inv))
    return denominator_lcm(poly_part)


def rescaling_identity(a: Matrix, a_inv: Matrix, u: UnipotentVector, ell: int) -> bool:
    """(a^{-1} u^l a)' == ((a^{-1} u a)')^l, both sides by matrix arithmetic.

    ``a`` and ``a_inv`` are full n x n matrices over Z[t] in the Levi block.
    The left side raises the unipotent matrix to the power l before
    conjugating; the right side conjugates, splits, and then powers the
    polynomial part.  Neither side uses the additive group law.

    Coordinates of u below t^{-deg(a^{-1}) - 1} cannot reach the polynomial
    part, so they are truncated first; floor tracking still certifies it.
    """
    a_l = a.map(LaurentSeries.coerce)
    a_inv_l = a_inv.map(LaurentSeries.coerce)
    reach = max(x.degree for x in a_inv.entries if isinstance(x, Poly) and not x.is_zero())
    u = UnipotentVector(tuple(LaurentSeries.coerce(c).truncate(-reach - 1) for c in u.coords))
    um = u.matrix(LaurentSeries.one())
    lhs, _ = split_unipotent(UnipotentVector.from_matrix(a_inv_l * um ** ell * a_l))
    base, _ = split_unipotent(UnipotentVector.from_matrix(a_inv_l * um * a_l))
    rhs = base.matrix(Poly.one()) ** ell
    return lhs.matrix(Poly.one()) == rhs
