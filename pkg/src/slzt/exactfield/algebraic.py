"""The quotient ring R[x]/(f) for a monic f with coefficients in Z[t] or Q(t)."""
from __future__ import annotations

from fractions import Fraction

from ..errors import ZeroDivisorError
from .matrix import Matrix
from .poly import Poly
from .ratfunc import RatFunc

_SCALARS = (int, Fraction)


class Modulus:
    """Monic polynomial f(x) = x^n + c_{n-1} x^{n-1} + ... + c_0.

    ``coeffs`` holds c_0..c_{n-1},c_n=1 (low first); coefficients are
    :class:`Poly` (Z[t]/Q[t]) or :class:`RatFunc`.
    """

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, (Poly, RatFunc)) else Poly.const(c) for c in coeffs]
        if coeffs[-1] != 1:
            raise ValueError("modulus must be monic in x")
        self.coeffs = tuple(coeffs)
        self.n = len(coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, Modulus) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def reduce(self, vec: list) -> list:
        """Reduce a coefficient vector (low first, any length) modulo f."""
        vec = list(vec)
        n = self.n
        for i in range(len(vec) - 1, n - 1, -1):
            c = vec[i]
            if c == 0:
                continue
            # x^i = x^{i-n} * x^n and x^n = -sum c_j x^j
            for j in range(n):
                fj = self.coeffs[j]
                if fj != 0:
                    vec[i - n + j] = vec[i - n + j] - c * fj
        return vec[:n] + [Poly()] * max(0, n - len(vec))

    def companion(self) -> Matrix:
        """Matrix of multiplication by x on the basis 1, x, ..., x^{n-1}."""
        n = self.n
        zero, one = Poly(), Poly.one()
        rows = [[zero] * n for _ in range(n)]
        for j in range(n - 1):
            rows[j + 1][j] = one
        for i in range(n):
            rows[i][n - 1] = -self.coeffs[i]
        return Matrix(rows)


class AlgebraicElem:
    """Residue class c_0 + c_1 x + ... + c_{n-1} x^{n-1} in R[x]/(f)."""

    __slots__ = ("coords", "modulus")

    def __init__(self, coords, modulus: Modulus):
        coords = [c if isinstance(c, (Poly, RatFunc)) else Poly.const(c) for c in coords]
        if len(coords) > modulus.n:
            coords = modulus.reduce(coords)
        coords = coords + [Poly()] * (modulus.n - len(coords))
        self.coords = tuple(coords)
        self.modulus = modulus

    @classmethod
    def const(cls, c, modulus: Modulus) -> AlgebraicElem:
        return cls([c], modulus)

    @classmethod
    def x(cls, modulus: Modulus) -> AlgebraicElem:
        return cls([0, 1], modulus)

    def one_like(self) -> AlgebraicElem:
        return AlgebraicElem([1], self.modulus)

    def _check(self, other):
        if isinstance(other, (Poly, RatFunc) + _SCALARS):
            return AlgebraicElem([other], self.modulus)
        if not isinstance(other, AlgebraicElem):
            return None
        if other.modulus != self.modulus:
            raise ValueError("elements of different quotient rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return AlgebraicElem([a + b for a, b in zip(self.coords, other.coords)], self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicElem([-a for a in self.coords], self.modulus)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return AlgebraicElem([a - b for a, b in zip(self.coords, other.coords)], self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        n = self.modulus.n
        prod = [Poly() for _ in range(2 * n - 1)]
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b != 0:
                    prod[i + j] = prod[i + j] + a * b
        return AlgebraicElem(self.modulus.reduce(prod), self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> AlgebraicElem:
        if k < 0:
            return self.inv() ** (-k)
        result, base = self.one_like(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inv(self) -> AlgebraicElem:
        return alg_inv(self)

    def __eq__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash((self.coords, self.modulus))

    def is_one(self) -> bool:
        return self.coords[0] == 1 and all(c == 0 for c in self.coords[1:])

    def matrix(self) -> Matrix:
        """Regular representation on the basis 1, x, ..., x^{n-1} (column j = self * x^j)."""
        n = self.modulus.n
        cols = []
        cur = self
        x = AlgebraicElem.x(self.modulus)
        for j in range(n):
            cols.append(cur.coords)
            if j < n - 1:
                cur = cur * x
        return Matrix([[cols[j][i] for j in range(n)] for i in range(n)])

    def __repr__(self):
        parts = []
        for i, c in enumerate(self.coords):
            if c != 0:
                parts.append(f"({c!r})" + ("" if i == 0 else ("*x" if i == 1 else f"*x^{i}")))
        return " + ".join(parts) if parts else "0"


def alg_mul(a: AlgebraicElem, b: AlgebraicElem) -> AlgebraicElem:
    return a * b


# polynomials in x over Q(t), as lists of RatFunc (low degree first)
def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _xdivmod(a, b):
    a = _trim(a)
    b = _trim(b)
    lead_inv = b[-1].inv()
    quo = [RatFunc.zero()] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] * lead_inv
        quo[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - c * bc
        a = _trim(a)
    return quo, a


def _xmul(a, b):
    if not a or not b:
        return []
    out = [RatFunc.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _xsub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [RatFunc.zero()] * (n - len(a))
    b = list(b) + [RatFunc.zero()] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def alg_inv(a: AlgebraicElem) -> AlgebraicElem:
    """Inverse via the extended Euclidean algorithm in Q(t)[x]."""
    mod = a.modulus
    f = [RatFunc.coerce(c) for c in mod.coeffs]
    g = _trim([RatFunc.coerce(c) for c in a.coords])
    if not g:
        raise ZeroDivisorError("zero is not invertible")
    r0, r1 = f, g
    s0, s1 = [], [RatFunc.one()]  # coefficients of a
    while r1:
        q, r = _xdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _xsub(s0, _xmul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisorError(f"{a!r} is a zero divisor modulo f")
    c = r0[0].inv()
    coords = [x * c for x in s0]
    coords = [x.as_poly() if x.is_poly() else x for x in coords]
    return AlgebraicElem(coords, mod)
