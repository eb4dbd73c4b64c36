"""Roots of f(x) = prod_i (x + q_i t) - 1 as Laurent series in 1/t.

Each root has the shape ``alpha = sum_{i>=0} c_i t^(1 - i n)`` with leading
coefficient ``c_0 = -q_k``.  Writing ``alpha + q_j t = sum_i c_{i,j} t^(1-in)``
the condition ``prod_j (alpha + q_j t) = 1`` compares coefficients of
``t^(n(1-m))``: for m >= 1 this is linear in ``c_m`` with coefficient
``prod_{j != k} (q_j - q_k)``, which is nonzero because the q's are distinct.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateRecursionError, PrecisionError
from .exactfield import INF, LaurentSeries, Modulus, Poly
from .exactfield.rational import qdiv, qnorm


def default_floor(n: int) -> int:
    return 1 - n - 40 * n


@lru_cache(maxsize=None)
def primes(count: int) -> tuple:
    found = []
    cand = 2
    while len(found) < count:
        if all(cand % p for p in found if p * p <= cand):
            found.append(cand)
        cand += 1
    return tuple(found)


def q_sequence(n: int) -> list[int]:
    """[1, p_1 + 1, ..., p_{n-1} + 1] with p_j the j-th prime."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return [1] + [p + 1 for p in primes(n - 1)]


@lru_cache(maxsize=None)
def _build_f(n: int) -> tuple:
    q = q_sequence(n)
    t = Poly.t()
    coeffs = [Poly.one()]  # product, low degree in x first
    for qi in q:
        # multiply by (x + qi t)
        shifted = [Poly()] + coeffs
        scaled = [c * (t * qi) for c in coeffs] + [Poly()]
        coeffs = [a + b for a, b in zip(shifted, scaled)]
    coeffs[0] = coeffs[0] - 1
    return tuple(coeffs)


def build_f(n: int) -> list[Poly]:
    """Coefficients of f in x (lowest first), each a polynomial in Z[t]."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return list(_build_f(n))


def f_modulus(n: int) -> Modulus:
    return Modulus(build_f(n))


@dataclass(frozen=True)
class RootLiftState:
    n: int
    branch: int
    q: tuple  # q-sequence with q_branch moved to the front
    coeffs: tuple  # c_0, c_1, ..., c_m
    floor: int

    def series(self) -> LaurentSeries:
        return LaurentSeries({1 - i * self.n: c for i, c in enumerate(self.coeffs)}, self.floor)


def _step_count(n: int, floor: int) -> int:
    # largest m with 1 - m n >= floor
    return (1 - floor) // n


@lru_cache(maxsize=None)
def _lift_coeffs(n: int, branch: int, steps: int) -> tuple:
    q = q_sequence(n)
    qk = q[branch - 1]
    others = [qj for j, qj in enumerate(q) if j != branch - 1]
    lin = 1
    for qj in others:
        lin *= qj - qk
    if lin == 0:
        raise DegenerateRecursionError(f"zero linear coefficient for n={n}, branch={branch}")
    if steps > 0:
        prev = _lift_coeffs(n, branch, steps - 1)
    else:
        prev = ()
    if steps == 0:
        return (-qk,)
    m = steps
    cs = list(prev) + [0]  # c_m provisionally zero
    # factor j sequences: index 0 is c_0 + q_j; first factor (branch) has 0
    seqs = [[0] + cs[1:]] + [[qnorm(-qk + qj)] + cs[1:] for qj in others]
    # coefficient of total index m in the product of all factors
    prod = seqs[0][: m + 1]
    for s in seqs[1:]:
        nxt = [0] * (m + 1)
        for i, a in enumerate(prod):
            if a == 0:
                continue
            for j in range(m + 1 - i):
                b = s[j]
                if b:
                    nxt[i + j] += a * b
        prod = nxt
    target = 1 if m == 1 else 0
    cm = qdiv(qnorm(target - prod[m]), lin)
    return tuple(prev) + (qnorm(cm),)


def lift_coefficients(n: int, branch: int, steps: int) -> list:
    """c_0..c_steps for the root with leading term -q_branch * t."""
    if not 1 <= branch <= n:
        raise ValueError(f"branch must lie in [1, {n}]")
    out = ()
    # build iteratively so deep precision never recurses past the stack limit
    for s in range(steps + 1):
        out = _lift_coeffs(n, branch, s)
    return list(out)


def lift_root(n: int, branch: int = 1, floor: int | None = None) -> LaurentSeries:
    """The root of f with leading term ``-q_branch t``, known down to ``floor``."""
    if floor is None:
        floor = default_floor(n)
    if floor > 1 - n:
        raise ValueError(f"floor must be <= {1 - n}")
    return lift_state(n, branch, floor).series()


def lift_state(n: int, branch: int, floor: int) -> RootLiftState:
    q = q_sequence(n)
    if not 1 <= branch <= n:
        raise ValueError(f"branch must lie in [1, {n}]")
    permuted = (q[branch - 1],) + tuple(x for j, x in enumerate(q) if j != branch - 1)
    cs = lift_coefficients(n, branch, _step_count(n, floor))
    return RootLiftState(n, branch, permuted, tuple(cs), floor)


def all_roots(n: int, floor: int | None = None) -> list[LaurentSeries]:
    return [lift_root(n, k, floor) for k in range(1, n + 1)]


def eval_f(alpha, n: int):
    """f(alpha) = prod (alpha + q_i t) - 1 in Laurent arithmetic."""
    t = LaurentSeries.t()
    alpha = LaurentSeries.coerce(alpha)
    acc = None
    for qi in q_sequence(n):
        factor = alpha + t * qi
        acc = factor if acc is None else acc * factor
    return acc - 1


def residual_valuation(alpha, n: int):
    """Valuation of f(alpha); ``INF`` when every computable term vanishes."""
    r = eval_f(alpha, n)
    if r.known_zero():
        return INF
    return r.valuation()


def residual_bound(alpha, n: int):
    """Certified lower bound on val f(alpha) (exact when a term survives)."""
    return eval_f(alpha, n).valuation_lower_bound()


def vieta_checks(n: int, floor: int | None = None) -> dict:
    """Elementary symmetric functions of the lifted roots against f's coefficients.

    Returns a map ``k -> bool`` that e_k(roots) == (-1)^k * coeff of x^{n-k},
    each agreement judged above the propagated floor.
    """
    roots = all_roots(n, floor)
    f = build_f(n)
    # e_k via running product prod (1 + r_i z)
    e = [LaurentSeries.one()]
    for r in roots:
        nxt = list(e) + [LaurentSeries.zero()]
        for k in range(len(e), 0, -1):
            nxt[k] = nxt[k] + e[k - 1] * r
        e = nxt
    out = {}
    for k in range(1, n + 1):
        expected = LaurentSeries.from_poly(f[n - k]) * (-1) ** k
        diff = e[k] - expected
        out[k] = diff.known_zero()
        if diff.floor is not None and diff.floor > 0 and k < n:
            raise PrecisionError("Vieta check floor above the constant term")
    return out
