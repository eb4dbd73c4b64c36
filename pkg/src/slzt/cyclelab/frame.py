"""Apartment bookkeeping for the cycle: the frame g, the points y and e, walls.

The Levi block L = SL_{n-1} carries the free abelian group A from
:mod:`slzt.toruslab` applied at rank n - 1.  Its diagonalizer g_L, embedded as
g = diag(g_L, 1), fixes the apartment g^{-1}A whose vertices are
x(m) = g^{-1} D(t^m) x0.  Exponent vectors here are raw integer tuples; only
differences m_j - m_n carry meaning.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from ..building import ApartmentVertex, LatticeVertex, b_shift, fixes_vertex
from ..errors import ConstructionError
from ..exactfield import LaurentSeries, Matrix, Poly, mat_inv
from ..homology import smith_invariants
from ..rootlift import default_floor
from ..toruslab import diagonalizer, make_generators, valuation_vector, word_matrix
from .unipotent import UnipotentVector


@dataclass(frozen=True)
class TranslationVector:
    """Eigenvalue valuations of a word of A, one per branch, last entry 0."""

    valuations: tuple

    def __post_init__(self):
        if sum(self.valuations) != 0:
            raise ConstructionError(f"translation vector {self.valuations} does not sum to 0")

    @property
    def displacement(self) -> tuple:
        """The word moves x(m) to x(m - nu)."""
        return tuple(-v for v in self.valuations)


def translation_vector(m, floor: int | None = None, n: int | None = None) -> TranslationVector:
    """Valuations of the word m of A inside SL_{n-1}, embedded with a trailing 0."""
    m = tuple(m)
    if n is None:
        n = len(m) + 2
    if len(m) != n - 2:
        raise ValueError(f"a word for n={n} has {n - 2} exponents")
    if n == 2:
        return TranslationVector((0, 0))
    return TranslationVector(tuple(valuation_vector(m, floor, n - 1)) + (0,))


def lattice_rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    if not rows or not any(any(r) for r in rows):
        return 0
    return len(smith_invariants(rows))


def cycle_floor(n: int, k: int, k0: int, margin: int = 12) -> int:
    """Working floor for the Levi diagonalizer.

    Polynomial parts of a^{-1} r_j a need the coordinates of r_j down to
    exponent -(degree of a^{-1}), and r_j carries the factor t^{c_j}, so the
    floor must reach below -(c_j + word degree).  A probe frame at the default
    floor supplies c_j and the words involved.
    """
    if n == 2:
        return -1
    probe = make_frame(n, k, default_floor(n - 1), k0)
    c_max = max(a - probe.apex[-1] for a in probe.apex[:-1])
    deg = 0
    for m in translate_domain(probe):
        for word in (m, tuple(-x for x in m)):
            deg = max(deg, max(p.degree for p in probe.word_block(word).entries))
    return min(1 - (n - 1), -(c_max + deg + 2 * n + margin))


@dataclass(frozen=True)
class CycleFrame:
    n: int
    k: int
    k0: int
    floor: int
    g_block: Matrix
    g_block_inv: Matrix
    g: Matrix
    g_inv: Matrix
    gamma: tuple  # cone thresholds: m_j - m_n >= gamma_j
    y: tuple
    e: tuple
    apex: tuple  # b^k e
    _vertices: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    @property
    def rank(self) -> int:
        return self.n - 2

    def vertex(self, exps) -> LatticeVertex:
        key = ApartmentVertex(tuple(exps))
        v = self._vertices.get(key)
        if v is None:
            v = self._vertices[key] = LatticeVertex.from_apartment(key, self.g, self.g_inv)
        return v

    def in_cone(self, exps) -> bool:
        return all(exps[j] - exps[-1] >= self.gamma[j] for j in range(self.n - 1))

    def word_block(self, m) -> Matrix:
        if self.n == 2:
            return Matrix.identity(1, Poly.one())
        return word_matrix(make_generators(self.n - 1), m)

    def word_full(self, m) -> Matrix:
        return self.word_block(m).block(self.n, Poly.one())

    def unit_words(self) -> list[tuple]:
        r = self.rank
        return [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]

    def translation(self, m) -> TranslationVector:
        return translation_vector(m, self.floor if self.n > 2 else None, self.n)


def _block_frame(n: int, floor: int):
    if n == 2:
        one = LaurentSeries.one()
        return Matrix([[one]]), Matrix([[one]])
    d = diagonalizer(n - 1, floor)
    return d.g, d.g_inv


def cone_thresholds(g_block: Matrix) -> tuple:
    """gamma_j = -min_i val((g_L)_{ji}): the cone fixed by all integral R_u(P) points."""
    out = []
    for j in range(g_block.rows):
        out.append(-min(g_block[j, i].valuation() for i in range(g_block.cols)))
    return tuple(out)


@lru_cache(maxsize=None)
def make_frame(n: int, k: int, floor: int | None = None, k0: int | None = None) -> CycleFrame:
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    if k0 is None:
        k0 = k + 2
    if floor is None:
        floor = cycle_floor(n, k, k0)
    g_block, g_block_inv = _block_frame(n, floor)
    one = LaurentSeries.one()
    g = g_block.block(n, one)
    g_inv = g_block_inv.block(n, one)
    gamma = cone_thresholds(g_block)
    y = tuple(gamma) + (0,)
    e = tuple(a + b for a, b in zip(y, b_shift(n, k0)))
    apex = tuple(a + b for a, b in zip(e, b_shift(n, k)))
    return CycleFrame(n, k, k0, floor, g_block, g_block_inv, g, g_inv, gamma, y, e, apex)


def shift(exps, delta) -> tuple:
    return tuple(a + b for a, b in zip(exps, delta))


# -- the fundamental domain D_e and the finite set of translates -------------

def parallelotope_steps(frame: CycleFrame) -> list[tuple]:
    """Displacements of the generators of A: the edges of D_e."""
    return [frame.translation(m).displacement for m in frame.unit_words()]


def fundamental_domain_sample(frame: CycleFrame) -> list[tuple]:
    """Corners of the parallelotope D_e plus the vertex nearest its barycenter."""
    steps = parallelotope_steps(frame)
    out = []
    for choice in product((0, 1), repeat=len(steps)):
        v = frame.e
        for c, s in zip(choice, steps):
            if c:
                v = shift(v, s)
        out.append(v)
    total = [sum(col) for col in zip(*steps)] if steps else [0] * frame.n
    bary = tuple(a + b // 2 for a, b in zip(frame.e, total))
    if bary not in out:
        out.append(bary)
    return out


def sigma_box(frame: CycleFrame) -> list[tuple]:
    """Per coordinate j < n, the range of v_j = (x - e)_j over the boundary piece sigma.

    sigma is the simplex in V_e cut out by v_j <= k n, sum_j v_j = 0, with
    last coordinate 0.
    """
    n, kn = frame.n, frame.k * frame.n
    return [(-(n - 2) * kn, kn) for _ in range(n - 1)]


def sigma_corners(frame: CycleFrame) -> list[tuple]:
    """Vertices of sigma; corner i sits on every wall except wall i."""
    n, kn = frame.n, frame.k * frame.n
    out = []
    for i in range(n - 1):
        rel = [kn] * (n - 1) + [0]
        rel[i] = -(n - 2) * kn
        out.append(shift(frame.e, rel))
    return out


def _coordinate_bounds(steps: list[tuple], radius: int) -> list[int]:
    """Bounds |m_i| <= B_i for words whose displacement has sup-norm <= radius.

    With T the matrix of generator displacements, m = d T^T (T T^T)^{-1}.
    """
    r = len(steps)
    t_rows = [list(s) for s in steps]
    gram = Matrix([[sum(a * b for a, b in zip(t_rows[i], t_rows[j])) for j in range(r)] for i in range(r)])
    gram_inv = mat_inv(gram)
    bounds = []
    for i in range(r):
        # column i of T^T gram^{-1}, evaluated coordinate by coordinate
        col = [sum(Fraction(t_rows[p][c]) * gram_inv[p, i] for p in range(r)) for c in range(len(t_rows[0]))]
        total = sum(abs(x) for x in col) * radius
        bounds.append(int(total) + 1)
    return bounds


def translate_domain(frame: CycleFrame) -> list[tuple]:
    """Words a whose translate a D_e can meet sigma (a finite superset).

    A word qualifies when its displacement lies in the bounding box of sigma
    inflated by one lattice step along every generator.
    """
    if frame.n == 2:
        return [()]
    steps = parallelotope_steps(frame)
    box = sigma_box(frame)
    slack = [sum(abs(s[j]) for s in steps) for j in range(frame.n - 1)]
    lo = [b[0] - s for b, s in zip(box, slack)]
    hi = [b[1] + s for b, s in zip(box, slack)]
    radius = max(max(abs(x) for x in lo), max(abs(x) for x in hi))
    bounds = _coordinate_bounds(steps, radius)
    out = []
    for m in product(*[range(-b, b + 1) for b in bounds]):
        disp = [sum(mi * s[j] for mi, s in zip(m, steps)) for j in range(frame.n)]
        if all(lo[j] <= disp[j] <= hi[j] for j in range(frame.n - 1)):
            out.append(tuple(m))
    return out


# -- wall elements -----------------------------------------------------------

@dataclass(frozen=True)
class WallElement:
    index: int  # j, 1-based
    exponent: int  # c_j: the wall is m_j - m_n = c_j
    unipotent: UnipotentVector

    def matrix(self) -> Matrix:
        return self.unipotent.matrix(LaurentSeries.one())


def choose_wall_elements(n: int, k: int, floor: int | None = None, k0: int | None = None) -> list[WallElement]:
    """r_j = g^{-1}(I + t^{c_j} E_{jn}) g with the wall m_j - m_n = c_j through b^k e."""
    frame = make_frame(n, k, floor, k0)
    out = []
    for j in range(n - 1):
        c = frame.apex[j] - frame.apex[-1]
        mono = LaurentSeries.monomial(1, c)
        coords = tuple(mono * frame.g_block_inv[i, j] for i in range(n - 1))
        out.append(WallElement(j + 1, c, UnipotentVector(coords)))
    return out


@dataclass(frozen=True)
class WallReport:
    index: int
    fixes_apex: bool
    fixes_next: bool  # b^{k+1} e
    fixes_previous: bool  # b^{k-1} e
    fixes_y: bool
    scaled_fixes_apex: bool  # r_j^ell
    scaled_fixes_previous: bool

    @property
    def wall_through_apex(self) -> bool:
        """The fixed half-apartment of r_j has b^k e on its boundary wall."""
        return self.fixes_apex and not self.fixes_previous and not self.fixes_y

    @property
    def literal_next_moved(self) -> bool:
        return not self.fixes_next


def wall_reports(frame: CycleFrame, walls: list[WallElement], ell: int = 1) -> list[WallReport]:
    n = frame.n
    apex_v = frame.vertex(frame.apex)
    next_v = frame.vertex(shift(frame.apex, b_shift(n, 1)))
    prev_v = frame.vertex(shift(frame.apex, b_shift(n, -1)))
    y_v = frame.vertex(frame.y)
    out = []
    for w in walls:
        m = w.matrix()
        scaled = w.unipotent.scale(ell).matrix(LaurentSeries.one())
        out.append(WallReport(
            w.index,
            fixes_vertex(m, apex_v),
            fixes_vertex(m, next_v),
            fixes_vertex(m, prev_v),
            fixes_vertex(m, y_v),
            fixes_vertex(scaled, apex_v),
            fixes_vertex(scaled, prev_v),
        ))
    return out


def sigma_corner_pattern(frame: CycleFrame, walls: list[WallElement]) -> list[list[bool]]:
    """pattern[i][j]: whether r_{j+1} fixes corner i of sigma."""
    return [[fixes_vertex(w.matrix(), frame.vertex(c)) for w in walls] for c in sigma_corners(frame)]


def integral_cone_sample(frame: CycleFrame, rng, count: int = 10, degree: int = 3) -> list[UnipotentVector]:
    """Random R_u(P) points with coordinates in Z[1/t]."""
    out = []
    for _ in range(count):
        coords = []
        for _ in range(frame.n - 1):
            terms = {-e: rng.randint(-5, 5) for e in range(degree + 1)}
            coords.append(LaurentSeries({e: c for e, c in terms.items() if c}))
        out.append(UnipotentVector(tuple(coords)))
    return out


def cone_threshold_sharp(frame: CycleFrame) -> bool:
    """Stepping off the cone by one unit in coordinate j is seen by a constant unipotent."""
    n = frame.n
    for j in range(n - 1):
        exps = list(frame.y)
        exps[j] -= 1
        v = frame.vertex(exps)
        moved = False
        for i in range(n - 1):
            coords = tuple(LaurentSeries.one() if p == i else LaurentSeries.zero() for p in range(n - 1))
            if not fixes_vertex(UnipotentVector(coords).matrix(LaurentSeries.one()), v):
                moved = True
                break
        if not moved:
            return False
    return True
