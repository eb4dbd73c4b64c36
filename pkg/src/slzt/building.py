"""Vertices of the Euclidean building of SL_n(Q((1/t))) and decision procedures.

A vertex is the homothety class of a Q[[1/t]]-lattice ``B * O^n``; the
standard vertex x0 is ``O^n`` itself, whose stabilizer is SL_n(Q[[1/t]]).
Apartment vertices of the diagonal apartment are ``D(t^m1, ..., t^mn) x0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import PrecisionError
from .exactfield import LaurentSeries, Matrix, Poly, mat_det, mat_inv
from .homology import SimplicialComplex

# zero-forcing entry of a stabilizer shape
ZERO = None


@dataclass(frozen=True)
class ApartmentVertex:
    """Exponent vector modulo (1, ..., 1), stored with minimum entry 0."""

    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        low = min(exps)
        object.__setattr__(self, "exponents", tuple(e - low for e in exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def translate(self, shift) -> ApartmentVertex:
        return ApartmentVertex(tuple(a + b for a, b in zip(self.exponents, shift)))


@dataclass(frozen=True)
class LatticeVertex:
    """Lattice spanned by the columns of ``basis``; ``basis_inv`` is cached."""

    basis: Matrix
    basis_inv: Matrix

    @classmethod
    def from_basis(cls, basis: Matrix) -> LatticeVertex:
        basis = basis.map(LaurentSeries.coerce)
        return cls(basis, mat_inv(basis))

    @classmethod
    def standard(cls, n: int) -> LatticeVertex:
        one = LaurentSeries.one()
        return cls(Matrix.identity(n, one), Matrix.identity(n, one))

    @classmethod
    def from_apartment(cls, v: ApartmentVertex, g: Matrix | None = None, g_inv: Matrix | None = None) -> LatticeVertex:
        """The vertex g^{-1} D(t^m) x0 (g = identity when omitted)."""
        d = diag_power(v.exponents)
        d_inv = diag_power([-e for e in v.exponents])
        if g is None:
            return cls(d, d_inv)
        return cls(g_inv * d, d_inv * g)

    @property
    def n(self) -> int:
        return self.basis.rows


@dataclass(frozen=True)
class StabilizerShape:
    """Degree bounds: entry (i, j) has degree <= table[i][j], or is 0 when ZERO."""

    table: tuple

    @property
    def n(self) -> int:
        return len(self.table)

    def contains(self, g: Matrix, check_det: bool = True) -> bool:
        for i in range(self.n):
            for j in range(self.n):
                p = _as_poly(g[i, j])
                bound = self.table[i][j]
                if bound is ZERO:
                    if not p.is_zero():
                        return False
                elif p.degree > bound:
                    return False
        if check_det and mat_det(g.map(_as_poly)) != 1:
            return False
        return True


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, LaurentSeries):
        if not x.is_exact() or any(e < 0 for e in x.terms):
            raise ValueError("entry is not a polynomial in t")
        return x.polynomial_part()
    return Poly.const(x)


def diag_power(exps) -> Matrix:
    return Matrix.diag([LaurentSeries.monomial(1, e) for e in exps], LaurentSeries.zero())


def b_matrix(n: int, k: int = 1) -> Matrix:
    """b^k with b = D(t, ..., t, t^{-(n-1)})."""
    return diag_power(b_shift(n, k))


def b_shift(n: int, k: int = 1) -> tuple:
    return tuple([k] * (n - 1) + [-k * (n - 1)])


def to_laurent_matrix(g: Matrix) -> Matrix:
    return g.map(LaurentSeries.coerce)


def conjugate_into(g: Matrix, v: LatticeVertex) -> Matrix:
    """basis^{-1} g basis."""
    return v.basis_inv * to_laurent_matrix(g) * v.basis


def fixes_vertex(g: Matrix, v: LatticeVertex, check_det: bool = False) -> bool:
    """Whether the det-1 matrix g stabilizes the lattice class v.

    True iff every entry of basis^{-1} g basis lies in Q[[1/t]]; raises
    :class:`PrecisionError` when an entry is undecidable at its floor.
    """
    if check_det:
        d = mat_det(to_laurent_matrix(g))
        if not (d - 1).known_zero():
            raise ValueError("fixes_vertex expects a determinant-1 matrix")
    conj = conjugate_into(g, v)
    return all(x.is_integral() for x in conj.entries)


def stabilizer_degree_bounds(v: ApartmentVertex) -> StabilizerShape:
    m = v.exponents
    n = len(m)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            d = m[i] - m[j]
            row.append(d if d >= 0 else ZERO)
        rows.append(tuple(row))
    return StabilizerShape(tuple(rows))


def sector_contains(v) -> bool:
    exps = tuple(v)
    return all(a >= b for a, b in zip(exps, exps[1:]))


def b_translate(v: ApartmentVertex, k: int) -> ApartmentVertex:
    return v.translate(b_shift(v.n, k))


def contraction_profile(j: int, k: int, n: int) -> int:
    """Valuation gained by the (j, n) entry under u -> b^{-k} u b^k."""
    if not 1 <= j <= n - 1:
        raise ValueError("root index must lie in [1, n-1]")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k * n


def root_element(n: int, j: int, s) -> Matrix:
    """I + s E_{j,n} (1-based j)."""
    s = LaurentSeries.coerce(s)
    one, zero = LaurentSeries.one(), LaurentSeries.zero()
    entries = [one if r == c else zero for r in range(n) for c in range(n)]
    entries[(j - 1) * n + (n - 1)] = s
    return Matrix(n, n, entries)


def conjugated_root_valuation(n: int, j: int, k: int, s=1) -> int:
    """val of the (j, n) entry of b^{-k} (I + s E_jn) b^k minus val(s), by matrices."""
    s = LaurentSeries.coerce(s)
    u = root_element(n, j, s)
    conj = b_matrix(n, -k) * u * b_matrix(n, k)
    return conj[j - 1, n - 1].valuation() - s.valuation()


# -- boundary combinatorics ------------------------------------------------

def boundary_action(i: int, I, n: int) -> bool:
    """R_i stabilizes V_I exactly when n in I implies i in I."""
    I = frozenset(I)
    _check_parabolic(I, n)
    return (n not in I) or (i in I)


def subspace_stable(i: int, I, n: int) -> bool:
    """Linear-algebra check that I + E_{i,n} maps span{e_k : k in I} into itself."""
    I = frozenset(I)
    u = [[1 if r == c else 0 for c in range(1, n + 1)] for r in range(1, n + 1)]
    u[i - 1][n - 1] += 1
    for k in I:
        image = [u[r][k - 1] for r in range(n)]
        if any(image[r] and (r + 1) not in I for r in range(n)):
            return False
    return True


def _check_parabolic(I: frozenset, n: int):
    if not I or len(I) >= n or not I <= frozenset(range(1, n + 1)):
        raise ValueError(f"{sorted(I)} is not a nonempty proper subset of 1..{n}")


def proper_subsets(n: int) -> list[frozenset]:
    full = range(1, n + 1)
    return [frozenset(c) for k in range(1, n) for c in combinations(full, k)]


def chambers_at_infinity(n: int) -> list[tuple]:
    """Complete flags of proper nonempty subsets of 1..n (chambers of the Coxeter complex)."""
    out = []
    for perm in permutations(range(1, n + 1)):
        out.append(tuple(frozenset(perm[:k]) for k in range(1, n)))
    return out


@dataclass
class MCombinatoricsReport:
    n: int
    vertices_of_M: list
    fixed_set: list
    is_subdivided_simplex: bool
    fixed_set_matches: bool
    oracle_agrees: bool
    facets_ok: bool
    homology_ok: bool
    details: dict

    @property
    def passed(self) -> bool:
        return all([self.is_subdivided_simplex, self.fixed_set_matches, self.oracle_agrees,
                    self.facets_ok, self.homology_ok])


def _label(I) -> str:
    return "P{" + ",".join(str(i) for i in sorted(I)) + "}"


def verify_M_combinatorics(n: int) -> MCombinatoricsReport:
    """Check the chambers at infinity around P = P_{1..n-1} against the root groups R_i."""
    if not 2 <= n <= 6:
        raise ValueError("n must lie in 2..6")
    P = frozenset(range(1, n))
    vertices = proper_subsets(n)
    chambers = chambers_at_infinity(n)
    star = [c for c in chambers if P in c]
    # simplices of M': all faces of chambers containing P
    m_faces = set()
    for c in star:
        for k in range(0, len(c) + 1):
            for sub in combinations(c, k):
                m_faces.add(frozenset(sub))
    m_vertices = sorted({v for f in m_faces for v in f}, key=lambda s: (len(s), sorted(s)))
    # barycentric subdivision of the simplex on 1..n-1: chains of nonempty subsets
    nonempty = [frozenset(c) for k in range(1, n) for c in combinations(range(1, n), k)]
    bary = {frozenset(ch) for k in range(0, n) for ch in combinations(nonempty, k) if _is_chain(ch)}
    is_subdiv = (m_faces == bary and set(m_vertices) == set(nonempty)
                 and len(star) == _factorial(n - 1))

    fixed = [I for I in vertices if all(boundary_action(i, I, n) for i in range(1, n))]
    fixed_matches = set(fixed) == set(nonempty) and len(fixed) == 2 ** (n - 1) - 1
    oracle = all(boundary_action(i, I, n) == subspace_stable(i, I, n)
                 for I in vertices for i in range(1, n))

    facet_detail = {}
    facets_ok = True
    for i in range(1, n):
        rest = [s for s in nonempty if i not in s]
        # maximal simplices of F_i: complete chains in (1..n-1) - {i}
        tops = [frozenset(ch) for ch in combinations(rest, n - 2) if _is_chain(ch)] if n > 2 else [frozenset()]
        j_prime = frozenset(range(1, n + 1)) - {i}
        ok = True
        for sigma in tops:
            cont = [c for c in chambers if sigma <= frozenset(c)]
            extra = {frozenset(c) - sigma for c in cont}
            ok &= len(cont) == 2 and extra == {frozenset([P]), frozenset([j_prime])}
            ok &= all(boundary_action(j, I, n) for I in sigma for j in range(1, n))
        ok &= not boundary_action(i, j_prime, n)
        ok &= all(boundary_action(j, j_prime, n) for j in range(1, n) if j != i)
        facet_detail[i] = {"simplices": len(tops), "wall_vertex": _label(j_prime), "ok": ok}
        facets_ok &= ok

    # M' is a ball; for n >= 3 its boundary (chains avoiding P) is a sphere S^{n-3}
    vid = {v: idx for idx, v in enumerate(m_vertices)}
    ball = SimplicialComplex([tuple(sorted(vid[v] for v in f)) for f in m_faces if f])
    homology_ok = ball.euler_characteristic() == 1 and all(
        ball.homology(d).is_zero() for d in range(1, n - 1)) and ball.homology(0).rank == 1
    if n >= 3:
        bdry = SimplicialComplex([tuple(sorted(vid[v] for v in f)) for f in m_faces
                                  if f and _on_boundary(f, n)])
        hs = [bdry.homology(d, reduced=True) for d in range(0, n - 2)]
        homology_ok &= hs[-1].rank == 1 and not hs[-1].torsion and all(h.is_zero() for h in hs[:-1])

    return MCombinatoricsReport(
        n=n,
        vertices_of_M=[_label(v) for v in m_vertices],
        fixed_set=[_label(v) for v in fixed],
        is_subdivided_simplex=is_subdiv,
        fixed_set_matches=fixed_matches,
        oracle_agrees=oracle,
        facets_ok=facets_ok,
        homology_ok=homology_ok,
        details={"chambers_at_P": len(star), "facets": facet_detail},
    )


def _on_boundary(chain, n: int) -> bool:
    # a chain lies on the boundary of the subdivided simplex iff its largest set is proper
    return max(len(s) for s in chain) < n - 1


def _is_chain(sets) -> bool:
    ss = sorted(sets, key=len)
    return all(a < b for a, b in zip(ss, ss[1:]))


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# -- random sampling for oracle suites -------------------------------------

def random_sl_poly(rng, n: int, steps: int = 6, max_deg: int = 2, coeff: int = 3,
                   shape: StabilizerShape | None = None) -> Matrix:
    """Product of random elementary matrices E_ij(c t^d) (inside ``shape`` if given)."""
    one = Poly.one()
    g = Matrix.identity(n, one)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        if shape is not None:
            bound = shape.table[i][j]
            if bound is ZERO:
                continue
            deg = rng.randint(0, bound)
        else:
            deg = rng.randint(0, max_deg)
        c = rng.choice([x for x in range(-coeff, coeff + 1) if x])
        e = [[one if r == s else Poly() for s in range(n)] for r in range(n)]
        e[i][j] = Poly.monomial(c, deg)
        g = g * Matrix(e)
    return g


def random_sector_vertex(rng, n: int, spread: int = 3) -> ApartmentVertex:
    steps = [rng.randint(0, spread) for _ in range(n - 1)]
    exps = [0] * n
    for k in range(n - 2, -1, -1):
        exps[k] = exps[k + 1] + steps[k]
    return ApartmentVertex(tuple(exps))


def shape_matches_oracle(g: Matrix, v: ApartmentVertex) -> tuple[bool, bool]:
    """(shape membership, fixes_vertex) for one sample."""
    shape = stabilizer_degree_bounds(v)
    lv = LatticeVertex.from_apartment(v)
    return shape.contains(g, check_det=False), fixes_vertex(g, lv)


@dataclass(frozen=True)
class OracleSuiteResult:
    n: int
    samples: int
    agreements: int
    members: int  # samples inside the stabilizer shape
    undecidable: int
    disagreements: tuple  # (matrix index, vertex exponents)

    @property
    def passed(self) -> bool:
        return self.agreements == self.samples and self.undecidable == 0


def oracle_suite(rng, n: int, matrices: int = 100, vertices: int = 10, spread: int = 3) -> OracleSuiteResult:
    """Shape membership against the valuation oracle on matrices x sector vertices.

    Every other matrix is drawn inside the stabilizer shape of a random
    sector vertex so that both outcomes occur often.
    """
    verts = [random_sector_vertex(rng, n, spread) for _ in range(vertices)]
    agree = members = undecidable = 0
    bad = []
    for idx in range(matrices):
        if idx % 2:
            target = stabilizer_degree_bounds(rng.choice(verts))
            g = random_sl_poly(rng, n, shape=target)
        else:
            g = random_sl_poly(rng, n)
        for v in verts:
            try:
                in_shape, fixed = shape_matches_oracle(g, v)
            except PrecisionError:
                undecidable += 1
                continue
            members += in_shape
            if in_shape == fixed:
                agree += 1
            else:
                bad.append((idx, v.exponents))
    return OracleSuiteResult(n, matrices * vertices, agree, members, undecidable, tuple(bad))
