"""Integer homology of finite simplicial complexes via Smith normal form."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


def smith_invariants(rows: list[list[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        # bring some nonzero entry of the remaining block to (r, c)
        while True:
            piv = None
            for i in range(r, m):
                for j in range(c, n):
                    if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return _divisibility_chain(diag)
            i, j = piv
            a[r], a[i] = a[i], a[r]
            for row in a:
                row[c], row[j] = row[j], row[c]
            p = a[r][c]
            done = True
            for i in range(r + 1, m):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                if a[i][c]:
                    done = False
            for j in range(c + 1, n):
                q = a[r][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[c]
                if a[r][j]:
                    done = False
            if done:
                break
        diag.append(abs(a[r][c]))
        r += 1
    return _divisibility_chain(diag)


def _divisibility_chain(diag: list[int]) -> list[int]:
    from math import gcd

    d = list(diag)
    # enforce d_i | d_{i+1} (diagonal form -> Smith form)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = gcd(d[i], d[j])
                if g != d[i]:
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
    return sorted(d)


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple = ()

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z" if self.rank == 1 else f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


class SimplicialComplex:
    """Closure of a list of simplices (vertex tuples), vertices totally ordered."""

    def __init__(self, simplices):
        faces = set()
        for s in simplices:
            s = tuple(sorted(s))
            for k in range(1, len(s) + 1):
                faces.update(combinations(s, k))
        self.by_dim: dict[int, list[tuple]] = {}
        for f in sorted(faces):
            self.by_dim.setdefault(len(f) - 1, []).append(f)
        self.index = {d: {f: i for i, f in enumerate(fs)} for d, fs in self.by_dim.items()}

    @property
    def dimension(self) -> int:
        return max(self.by_dim) if self.by_dim else -1

    def cells(self, d: int) -> list[tuple]:
        return self.by_dim.get(d, [])

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(fs) for d, fs in self.by_dim.items())

    def boundary_matrix(self, d: int) -> list[list[int]]:
        """Matrix of C_d -> C_{d-1} (rows index (d-1)-faces); d = 0 gives the augmentation."""
        src = self.cells(d)
        if d == 0:
            return [[1] * len(src)]
        tgt = self.index.get(d - 1, {})
        mat = [[0] * len(src) for _ in range(len(tgt))]
        for j, s in enumerate(src):
            for k in range(len(s)):
                face = s[:k] + s[k + 1:]
                mat[tgt[face]][j] += (-1) ** k
        return mat

    def homology(self, d: int, reduced: bool = False) -> HomologyGroup:
        n_d = len(self.cells(d))
        if d < 0 or n_d == 0:
            if reduced and d == -1 and not self.by_dim:
                return HomologyGroup(1)
            return HomologyGroup(0)
        if d == 0 and not reduced:
            rank_out = 0
        else:
            rank_out = len(smith_invariants(self.boundary_matrix(d))) if n_d else 0
        up = self.cells(d + 1)
        inv_in = smith_invariants(self.boundary_matrix(d + 1)) if up else []
        return HomologyGroup(n_d - rank_out - len(inv_in), tuple(x for x in inv_in if x > 1))


def mat_mul_int(a, b):
    if not a or not b or not b[0]:
        return []
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]
