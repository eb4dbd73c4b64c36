"""The ball Y and its boundary sphere as a finite simplicial complex.

Y is modelled by the unit ball of R^{n-1} cut by the coordinate hyperplanes:
the cone from an apex (the point b^k e) over the boundary of the
cross-polytope.  The top simplex labelled by a subset S of {1..n-1} is the
orthant piece reached by applying the wall elements r_j, j in S; its outer
face is the boundary piece sigma_S.

Vertex ids: 0 is the apex, ``2j - 1`` is the vertex +e_j and ``2j`` is -e_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..homology import HomologyGroup, SimplicialComplex, mat_mul_int

APEX = 0


def _pos(j: int) -> int:
    return 2 * j - 1


def _neg(j: int) -> int:
    return 2 * j


def subsets(m: int) -> list[tuple]:
    """All subsets of {1..m}, by size then lexicographically."""
    out = []
    for size in range(m + 1):
        out.extend(combinations(range(1, m + 1), size))
    return out


def top_simplex(S, n: int) -> tuple:
    S = set(S)
    return (APEX,) + tuple(_neg(j) if j in S else _pos(j) for j in range(1, n))


def cell_label(simplex) -> tuple:
    """Signed coordinate directions spanned by a simplex, apex excluded."""
    out = []
    for v in simplex:
        if v == APEX:
            continue
        j = (v + 1) // 2
        out.append(j if v % 2 else -j)
    return tuple(out)


@dataclass(frozen=True)
class SphereCell:
    dim: int
    label: tuple
    cell_id: int
    vertices: tuple
    on_sphere: bool


@dataclass(frozen=True)
class SphereComplex:
    n: int
    ell: int
    k: int
    cells: tuple
    ball: SimplicialComplex
    sphere: SimplicialComplex
    marked: int  # cell id of the apex vertex

    @property
    def boundary_matrices(self) -> dict:
        return {d: self.ball.boundary_matrix(d) for d in range(1, self.ball.dimension + 1)}

    def top_cells(self) -> list[SphereCell]:
        return [c for c in self.cells if c.dim == self.n - 1]

    def cell(self, cell_id: int) -> SphereCell:
        return self.cells[cell_id]

    def fundamental_chain(self) -> dict:
        """sum over S of (-1)^|S| Y_S, keyed by simplex."""
        return {top_simplex(S, self.n): (-1) ** len(S) for S in subsets(self.n - 1)}

    def sphere_chain(self) -> dict:
        """sum over S of (-1)^|S| sigma_S."""
        return {top_simplex(S, self.n)[1:]: (-1) ** len(S) for S in subsets(self.n - 1)}


def build_sphere(n: int, ell: int = 1, k: int = 1) -> SphereComplex:
    if n < 2 or ell < 1 or k < 1:
        raise ValueError("build_sphere needs n >= 2, ell >= 1, k >= 1")
    tops = [top_simplex(S, n) for S in subsets(n - 1)]
    ball = SimplicialComplex(tops)
    sphere = SimplicialComplex([s[1:] for s in tops])
    cells = []
    marked = None
    for d in range(ball.dimension + 1):
        for simplex in ball.cells(d):
            cid = len(cells)
            if simplex == (APEX,):
                marked = cid
            cells.append(SphereCell(d, cell_label(simplex), cid, simplex, APEX not in simplex))
    return SphereComplex(n, ell, k, tuple(cells), ball, sphere, marked)


def homology(complex_: SphereComplex, dimension: int, part: str = "sphere",
             reduced: bool = False) -> HomologyGroup:
    """Integer homology of the sphere (``part="sphere"``) or the ball."""
    if part == "sphere":
        return complex_.sphere.homology(dimension, reduced)
    if part == "ball":
        return complex_.ball.homology(dimension, reduced)
    raise ValueError("part must be 'sphere' or 'ball'")


def boundary_squares_vanish(sc: SimplicialComplex) -> bool:
    for d in range(2, sc.dimension + 1):
        prod = mat_mul_int(sc.boundary_matrix(d - 1), sc.boundary_matrix(d))
        if any(x for row in prod for x in row):
            return False
    return True


def chain_boundary(sc: SimplicialComplex, chain: dict) -> dict:
    out: dict = {}
    for simplex, coef in chain.items():
        if len(simplex) == 1:
            continue
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            out[face] = out.get(face, 0) + (-1) ** i * coef
    return {f: c for f, c in out.items() if c}


def boundary_is_sphere(complex_: SphereComplex) -> bool:
    """The boundary of the fundamental ball chain is the fundamental sphere chain."""
    return chain_boundary(complex_.ball, complex_.fundamental_chain()) == complex_.sphere_chain()


def sphere_class_generates(complex_: SphereComplex) -> bool:
    """The sphere chain is a primitive cycle, hence generates the top homology.

    The sphere has no cells above dimension n - 2, so its top homology is the
    kernel of the boundary map; a cycle with a coefficient of absolute value
    1 is primitive in that rank-1 kernel.
    """
    chain = complex_.sphere_chain()
    if complex_.n == 2:
        if sum(chain.values()) != 0:
            return False
    elif chain_boundary(complex_.sphere, chain):
        return False
    top = complex_.n - 2
    if homology(complex_, top, "sphere", reduced=True).rank != 1:
        return False
    return any(abs(c) == 1 for c in chain.values())


def apex_is_interior(complex_: SphereComplex) -> bool:
    return all(APEX not in c.vertices for c in complex_.cells if c.on_sphere) and \
        complex_.cell(complex_.marked).vertices == (APEX,)
