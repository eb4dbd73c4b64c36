"""Dense matrices over any commutative ring implementing + - * and ==.

Entries may be ints/Fractions, :class:`Poly`, :class:`RatFunc`,
:class:`LaurentSeries` or :class:`AlgebraicElem`.  Determinants and
characteristic polynomials are division-free (Bird, Berkowitz) so they are
exact over Z[t]; inverses use the adjugate and one ring inversion of the
determinant.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from ..errors import ZeroDivisorError
from .laurent import LaurentSeries
from .poly import Poly
from .ratfunc import RatFunc
from .rational import qdiv


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols=None, entries=None):
        if cols is None:
            data = [list(r) for r in rows]
            self.rows = len(data)
            self.cols = len(data[0]) if data else 0
            if any(len(r) != self.cols for r in data):
                raise ValueError("ragged matrix rows")
            self.entries = tuple(x for r in data for x in r)
        else:
            if len(entries) != rows * cols:
                raise ValueError("entry count does not match shape")
            self.rows, self.cols, self.entries = rows, cols, tuple(entries)
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")

    @classmethod
    def identity(cls, n: int, one=1) -> Matrix:
        zero = one - one
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=0) -> Matrix:
        return cls(rows, cols, [zero] * (rows * cols))

    @classmethod
    def diag(cls, values, zero=None) -> Matrix:
        values = list(values)
        n = len(values)
        if zero is None:
            zero = values[0] - values[0]
        return cls(n, n, [values[i] if i == j else zero for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def map(self, fn) -> Matrix:
        return Matrix(self.rows, self.cols, [fn(x) for x in self.entries])

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def submatrix(self, rows, cols) -> Matrix:
        rows, cols = list(rows), list(cols)
        return Matrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def minor(self, i: int, j: int) -> Matrix:
        return self.submatrix([r for r in range(self.rows) if r != i], [c for c in range(self.cols) if c != j])

    def block(self, size: int, one=1) -> Matrix:
        """Embed into the upper-left corner of a ``size`` identity matrix."""
        zero = one - one
        out = []
        for i in range(size):
            for j in range(size):
                if i < self.rows and j < self.cols:
                    out.append(self[i, j])
                else:
                    out.append(one if i == j else zero)
        return Matrix(size, size, out)

    # -- arithmetic ----------------------------------------------------
    def _check_same(self, other: Matrix):
        if self.shape != other.shape:
            raise ValueError(f"dimension mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> Matrix:
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.map(lambda x: x * other)
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch {self.shape} @ {other.shape}")
        out = []
        oc = other.cols
        for i in range(self.rows):
            r = self.entries[i * self.cols:(i + 1) * self.cols]
            for j in range(oc):
                acc = None
                for k, a in enumerate(r):
                    term = a * other.entries[k * oc + j]
                    acc = term if acc is None else acc + term
                out.append(acc)
        return Matrix(self.rows, oc, out)

    __matmul__ = __mul__

    def __rmul__(self, scalar):
        return self.map(lambda x: scalar * x)

    def __pow__(self, k: int) -> Matrix:
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inv() ** (-k)
        one = _one_like(self.entries[0])
        result, base = Matrix.identity(self.rows, one), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        n = self.rows
        return all((self[i, j] == 1) if i == j else (self[i, j] == 0) for i in range(n) for j in range(n))

    # -- determinants and friends --------------------------------------
    def det(self):
        return mat_det(self)

    def inv(self) -> Matrix:
        return mat_inv(self)

    def adjugate(self) -> Matrix:
        return adjugate(self)

    def char_poly(self) -> list:
        return char_poly(self)

    def __repr__(self):
        rows = ["[" + ", ".join(repr(x) for x in self.row(i)) + "]" for i in range(self.rows)]
        return "Matrix([" + ", ".join(rows) + "])"


def _one_like(x):
    if isinstance(x, (int, Fraction)):
        return 1
    if isinstance(x, (Poly, RatFunc, LaurentSeries)):
        return type(x).one()
    one = getattr(x, "one_like", None)
    if one is not None:
        return one()
    raise TypeError(f"no unit element known for {type(x).__name__}")


def _zero_like(x):
    one = _one_like(x)
    return one - one


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a * b


def mat_det(m: Matrix):
    """Bird's division-free determinant."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 1:
        return m.entries[0]
    zero = _zero_like(m.entries[0])
    x = m
    for _ in range(n - 1):
        diag_tail = [zero] * n
        acc = zero
        for i in range(n - 1, -1, -1):
            diag_tail[i] = -acc
            acc = acc + x[i, i]
        mu = []
        for i in range(n):
            for j in range(n):
                if i < j:
                    mu.append(x[i, j])
                elif i == j:
                    mu.append(diag_tail[i])
                else:
                    mu.append(zero)
        x = Matrix(n, n, mu) * m
    d = x[0, 0]
    return d if n % 2 == 1 else -d


def det_leibniz(m: Matrix):
    """Permutation-expansion determinant; slow, used as an independent check."""
    n = m.rows
    total = None
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = m[0, perm[0]]
        for i in range(1, n):
            term = term * m[i, perm[i]]
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


def char_poly(m: Matrix) -> list:
    """Coefficients of det(x*I - m), lowest degree first (Berkowitz).

    The result is monic of degree ``n``; entries lie in the entry ring.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    one = _one_like(m.entries[0])
    zero = one - one
    # high-degree-first coefficient vector of the trailing principal block
    p = [one]
    for k in range(n - 1, -1, -1):
        size = n - k
        a11 = m[k, k]
        r = [m[k, j] for j in range(k + 1, n)]
        c = [m[i, k] for i in range(k + 1, n)]
        sub = [[m[i, j] for j in range(k + 1, n)] for i in range(k + 1, n)]
        v = [one, -a11]
        w = c
        for _ in range(size - 1):
            s = zero
            for ri, wi in zip(r, w):
                s = s + ri * wi
            v.append(-s)
            w = [_dot(row, w, zero) for row in sub]
        # Toeplitz (size+1) x size lower-triangular times p (length size)
        newp = []
        for i in range(size + 1):
            s = zero
            for j in range(min(i + 1, size)):
                s = s + v[i - j] * p[j]
            newp.append(s)
        p = newp
    return list(reversed(p))


def _dot(a, b, zero):
    s = zero
    for x, y in zip(a, b):
        s = s + x * y
    return s


def adjugate(m: Matrix) -> Matrix:
    n = m.rows
    if n == 1:
        return Matrix(1, 1, [_one_like(m.entries[0])])
    out = []
    for i in range(n):
        for j in range(n):
            c = mat_det(m.minor(j, i))
            out.append(c if (i + j) % 2 == 0 else -c)
    return Matrix(n, n, out)


def ring_inverse(x):
    """Inverse of a ring element, raising when it is not a unit."""
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise ZeroDivisorError("singular matrix: determinant is zero")
        return qdiv(1, x)
    if isinstance(x, Poly):
        if x.degree != 0:
            raise ZeroDivisorError(f"determinant {x!r} is not a unit of Q[t]")
        return Poly.const(qdiv(1, x.const_value()))
    if isinstance(x, (RatFunc, LaurentSeries)):
        try:
            return x.inv()
        except ZeroDivisionError as exc:
            raise ZeroDivisorError("singular matrix") from exc
    return x.inv()


def mat_inv(m: Matrix) -> Matrix:
    """Adjugate over the determinant; exact over Z[t] when det is +-1."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    d_inv = ring_inverse(mat_det(m))
    return adjugate(m).map(lambda x: x * d_inv)
