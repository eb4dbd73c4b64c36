"""The free abelian group A generated by a_i = (C_f + q_{i+1} t I)^2.

C_f is multiplication by x on Z[t][x]/(f).  Because prod_i (x + q_i t) = 1 in
that ring, every factor x + q_i t is a unit, so words with negative
exponents stay inside Z[t] without ever dividing.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import product

from .errors import CertificateError, ConstructionError, PrecisionError
from .exactfield import AlgebraicElem, LaurentSeries, Matrix, Modulus, Poly, mat_det, mat_inv
from .exactfield.rational import qnorm
from .rootlift import build_f, default_floor, f_modulus, lift_root, primes, q_sequence


@dataclass(frozen=True)
class TorusGenerators:
    n: int
    modulus: Modulus
    companion: Matrix
    factors: tuple  # x + q_i t for i = 1..n, as ring elements
    elements: tuple  # a_1..a_{n-1} as ring elements
    generators: tuple  # a_1..a_{n-1} as matrices over Z[t]

    @property
    def rank(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class EigenData:
    branch: int
    eigenvalue: LaurentSeries
    eigenvector: tuple  # row vector (1, alpha, ..., alpha^{n-1}); v C = alpha v


def companion_matrix(n: int) -> Matrix:
    return f_modulus(n).companion()


def _factor_elements(n: int, modulus: Modulus) -> tuple:
    t = Poly.t()
    return tuple(AlgebraicElem([t * qi, 1], modulus) for qi in q_sequence(n))


@lru_cache(maxsize=None)
def make_generators(n: int) -> TorusGenerators:
    if n < 2:
        raise ValueError("n must be at least 2")
    mod = f_modulus(n)
    comp = mod.companion()
    factors = _factor_elements(n, mod)
    elems = tuple(factors[i] * factors[i] for i in range(1, n))
    mats = tuple(e.matrix() for e in elems)
    for i, a in enumerate(mats, start=1):
        d = mat_det(a)
        if d != 1:
            raise ConstructionError(f"det(a_{i}) = {d!r}, expected 1")
    return TorusGenerators(n, mod, comp, factors, elems, mats)


def shifted_matrix(n: int, i: int) -> Matrix:
    """C_f + q_i t I (1-based i), before squaring."""
    comp = companion_matrix(n)
    qt = Poly.t() * q_sequence(n)[i - 1]
    return comp + Matrix.identity(n, Poly.one()) * qt


def factor_exponents(m) -> list[int]:
    """Nonnegative exponents e with prod_i a_i^{m_i} = prod_j (x + q_j t)^{e_j}."""
    raw = [0] + [2 * mi for mi in m]
    low = min(raw)
    return [e - low for e in raw]


def word_element(gens: TorusGenerators, m) -> AlgebraicElem:
    m = list(m)
    if len(m) != gens.rank:
        raise ValueError(f"word needs {gens.rank} exponents, got {len(m)}")
    acc = AlgebraicElem([1], gens.modulus)
    for fac, e in zip(gens.factors, factor_exponents(m)):
        if e:
            acc = acc * fac ** e
    return acc


def word_matrix(gens: TorusGenerators, m) -> Matrix:
    """prod a_i^{m_i} as an exact matrix over Z[t]."""
    return word_element(gens, m).matrix()


def word_matrix_direct(gens: TorusGenerators, m) -> Matrix:
    """Same product by matrix powers and adjugate inverses (independent route)."""
    acc = Matrix.identity(gens.n, Poly.one())
    for a, mi in zip(gens.generators, m):
        if mi > 0:
            acc = acc * a ** mi
        elif mi < 0:
            acc = acc * mat_inv(a) ** (-mi)
    return acc


def words(rank: int, bound: int, include_zero: bool = False):
    for m in product(range(-bound, bound + 1), repeat=rank):
        if include_zero or any(m):
            yield m


# -- eigenvalues ------------------------------------------------------------

@lru_cache(maxsize=None)
def _factor_series(n: int, branch: int, i: int, floor: int) -> LaurentSeries:
    return lift_root(n, branch, floor) + LaurentSeries.t() * q_sequence(n)[i - 1]


@lru_cache(maxsize=4096)
def _factor_power(n: int, branch: int, i: int, e: int, floor: int) -> LaurentSeries:
    base = _factor_series(n, branch, i, floor)
    if e >= 0:
        return base ** e
    return _factor_power(n, branch, i, -1, floor) ** (-e) if e != -1 else base.inv()


def eigenvalue_of_word(m, branch: int, floor: int | None = None, n: int | None = None) -> LaurentSeries:
    """prod_i (alpha_branch + q_{i+1} t)^{2 m_i}: the branch eigenvalue of the word."""
    m = list(m)
    if n is None:
        n = len(m) + 1
    if floor is None:
        floor = default_floor(n)
    acc = LaurentSeries.one()
    for i, mi in enumerate(m, start=2):
        if mi:
            acc = acc * _factor_power(n, branch, i, 2 * mi, floor)
    return acc


def eigen_data(n: int, branch: int, floor: int | None = None) -> EigenData:
    alpha = lift_root(n, branch, floor)
    vec = [LaurentSeries.one()]
    for _ in range(n - 1):
        vec.append(vec[-1] * alpha)
    return EigenData(branch, alpha, tuple(vec))


def eigenvector_residual(n: int, data: EigenData) -> list:
    """Entries of v C - alpha v; all should vanish above their floors."""
    comp = companion_matrix(n)
    out = []
    for j in range(n):
        s = LaurentSeries.zero()
        for i in range(n):
            s = s + data.eigenvector[i] * comp[i, j]
        out.append(s - data.eigenvalue * data.eigenvector[j])
    return out


def valuation_vector(m, floor: int | None = None, n: int | None = None) -> list[int]:
    m = list(m)
    if n is None:
        n = len(m) + 1
    return [eigenvalue_of_word(m, j, floor, n).valuation() for j in range(1, n + 1)]


# -- certificates -----------------------------------------------------------

@dataclass(frozen=True)
class LeadingTermCertificate:
    word: tuple
    coefficient: object
    exponent: int
    expected_coefficient: object
    expected_exponent: int

    @property
    def matches(self) -> bool:
        return self.coefficient == self.expected_coefficient and self.exponent == self.expected_exponent

    @property
    def nontrivial(self) -> bool:
        return (self.coefficient, self.exponent) != (1, 0)


def expected_leading_term(m) -> tuple:
    coef = Fraction(1)
    for p, mi in zip(primes(len(m)), m):
        coef *= Fraction(p) ** (2 * mi)
    return qnorm(coef), 2 * sum(m)


def leading_term_certificate(gens: TorusGenerators, m, floor: int | None = None) -> LeadingTermCertificate:
    """Leading term of the branch-1 eigenvalue against prod p_i^{2 m_i} t^{2 sum m_i}."""
    m = tuple(m)
    if not any(m):
        raise ValueError("leading-term certificate needs a nonzero word")
    n = gens.n
    if floor is None:
        floor = 1 - 5 * n
    mu = eigenvalue_of_word(m, 1, floor, n)
    coef, exp = mu.leading_term()
    exp_coef, exp_exp = expected_leading_term(m)
    cert = LeadingTermCertificate(m, coef, exp, exp_coef, exp_exp)
    if not cert.matches:
        raise CertificateError(f"leading term {coef} t^{exp} differs from {exp_coef} t^{exp_exp} for m={m}")
    return cert


@dataclass(frozen=True)
class FixedPointCertificate:
    word: tuple
    status: str  # "certified", "inconclusive" or "trivial"
    branch: int | None = None
    valuation: int | None = None
    witness_exponent: int | None = None  # nonconstant coefficient when valuation is 0

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def fixes_no_point_certificate(m, floor: int | None = None, n: int | None = None) -> FixedPointCertificate:
    """Evidence that some eigenvalue of the word is not a rational constant.

    A word fixing a point of the building has all eigenvalues in Qbar, and
    Qbar meets Q((1/t)) only in the constants Q.  So a branch eigenvalue with
    nonzero valuation, or with a nonzero coefficient at a negative exponent,
    rules out any fixed point.
    """
    m = tuple(m)
    if n is None:
        n = len(m) + 1
    if not any(m):
        return FixedPointCertificate(m, "trivial")
    fallback = None
    for branch in range(1, n + 1):
        try:
            mu = eigenvalue_of_word(m, branch, floor, n)
            v = mu.valuation()
        except PrecisionError:
            continue
        if v != 0:
            return FixedPointCertificate(m, "certified", branch, v)
        tail = [e for e in mu.terms if e < 0]
        if tail and fallback is None:
            fallback = FixedPointCertificate(m, "certified", branch, 0, max(tail))
    if fallback is not None:
        return fallback
    return FixedPointCertificate(m, "inconclusive")


# -- diagonalizer -----------------------------------------------------------

@dataclass(frozen=True)
class Diagonalizer:
    n: int
    floor: int
    g: Matrix  # rows (1, alpha_j, ..., alpha_j^{n-1})
    g_inv: Matrix
    roots: tuple

    def conjugate(self, m: Matrix) -> Matrix:
        """g m g^{-1}."""
        return self.g * _as_laurent(m) * self.g_inv


def _as_laurent(m: Matrix) -> Matrix:
    return m.map(LaurentSeries.coerce)


@lru_cache(maxsize=None)
def diagonalizer(n: int, floor: int | None = None) -> Diagonalizer:
    """g with g C_f g^{-1} = diag(alpha_1, ..., alpha_n) within the floor.

    g is not rescaled to determinant 1; conjugation ignores scalars.
    """
    if floor is None:
        floor = default_floor(n)
    roots = tuple(lift_root(n, j, floor) for j in range(1, n + 1))
    rows = []
    for a in roots:
        r = [LaurentSeries.one()]
        for _ in range(n - 1):
            r.append(r[-1] * a)
        rows.append(r)
    g = Matrix(rows)
    try:
        g_inv = mat_inv(g)
    except PrecisionError as exc:
        raise PrecisionError(f"Vandermonde of the roots is singular at floor {floor}") from exc
    return Diagonalizer(n, floor, g, g_inv, roots)


def offdiag_valuation_bound(m: Matrix):
    """Smallest certified valuation lower bound over off-diagonal entries."""
    best = None
    for i in range(m.rows):
        for j in range(m.cols):
            if i != j:
                v = m[i, j].valuation_lower_bound()
                best = v if best is None or v < best else best
    return best


# -- exact identities -------------------------------------------------------

def evaluate_at_companion(n: int) -> Matrix:
    """f(C_f) by Horner's rule over Z[t]."""
    coeffs = build_f(n)
    comp = companion_matrix(n)
    ident = Matrix.identity(n, Poly.one())
    acc = ident * coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * comp + ident * c
    return acc


def exact_identities(n: int) -> dict:
    """Named exact checks on the torus generators; every value should be True."""
    gens = make_generators(n)
    ident = Matrix.identity(n, Poly.one())
    prod_shift = ident
    for i in range(1, n + 1):
        prod_shift = prod_shift * shifted_matrix(n, i)
    out = {
        "f_of_companion_vanishes": evaluate_at_companion(n) == Matrix.zeros(n, n, Poly()),
        "shift_product_is_identity": prod_shift == ident,
        "generator_determinants_one": all(mat_det(a) == 1 for a in gens.generators),
        "generators_commute": all(
            gens.generators[i] * gens.generators[j] == gens.generators[j] * gens.generators[i]
            for i in range(gens.rank) for j in range(i + 1, gens.rank)
        ),
        "squares_match_shifts": all(
            gens.generators[i - 2] == shifted_matrix(n, i) * shifted_matrix(n, i) for i in range(2, n + 1)
        ),
    }
    return out
