"""Certificates that (prod_{j in S} r_j^l) a D_e lies in SL_n(Z[t]) D_e.

For a word a of A and a subset S, write w = a^{-1} (prod r_j^l) a and split
w = w' w'' into its polynomial part and its t^{-1}-small part.  Then
(prod r_j^l) a x = a w' w'' x = gamma x for every x in D_e, where
gamma = a w' has entries in Z[t] once l clears the denominators of w', and
w'' fixes D_e because D_e lies in the cone fixed by integral unipotents.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from ..building import fixes_vertex
from ..errors import CertificateError
from ..exactfield import LaurentSeries, Matrix, Poly, mat_det
from .frame import CycleFrame, WallElement
from .sphere import subsets
from .unipotent import UnipotentVector, ell_of, rescaling_identity, split_unipotent


@dataclass(frozen=True)
class MembershipCertificate:
    subset: tuple
    word: tuple
    gamma: Matrix
    residual: UnipotentVector
    checked: tuple  # ((exponents, residual fixes vertex), ...)
    chain_checked: tuple  # ((exponents, gamma^{-1} (prod r^l) a fixes vertex), ...)

    @property
    def gamma_integral(self) -> bool:
        return all(isinstance(x, Poly) and x.ring == "Z" for x in self.gamma.entries)

    @property
    def gamma_det_one(self) -> bool:
        return mat_det(self.gamma) == 1

    @property
    def residual_small(self) -> bool:
        return all(_strictly_small(c) for c in self.residual.coords)

    @property
    def valid(self) -> bool:
        return (self.gamma_integral and self.gamma_det_one and self.residual_small
                and all(ok for _, ok in self.checked) and all(ok for _, ok in self.chain_checked))


def _strictly_small(c) -> bool:
    if isinstance(c, Poly):
        return c.is_zero()
    return all(e < 0 for e in c.terms)


def conjugated_walls(frame: CycleFrame, walls: list[WallElement], word) -> list[UnipotentVector]:
    """a^{-1} r_j a for each wall element (coordinates a_L^{-1} u)."""
    a_inv = frame.word_block(tuple(-x for x in word))
    return [w.unipotent.conjugate(a_inv) for w in walls]


def ell_table(frame: CycleFrame, walls: list[WallElement], domain) -> dict:
    """ell(a, r_i) for every word a in the domain and every wall element."""
    out = {}
    for m in domain:
        a_inv = frame.word_block(tuple(-x for x in m))
        out[tuple(m)] = tuple(ell_of(a_inv, w.unipotent) for w in walls)
    return out


def common_ell(table: dict) -> int:
    """The product over the domain and the walls of ell(a, r_i)."""
    return reduce(lambda acc, row: acc * reduce(lambda x, y: x * y, row, 1), table.values(), 1)


def _sum(vectors: list[UnipotentVector], n: int) -> UnipotentVector:
    acc = UnipotentVector.zero(n)
    for v in vectors:
        acc = acc + v
    return acc


def certify(frame: CycleFrame, walls: list[WallElement], ell: int, word, subset, sample) -> MembershipCertificate:
    n = frame.n
    word = tuple(word)
    conj = conjugated_walls(frame, walls, word)
    w = _sum([conj[j - 1] for j in subset], n).scale(ell)
    w_poly, w_small = split_unipotent(w)
    a = frame.word_full(word)
    a_inv = frame.word_full(tuple(-x for x in word))
    gamma = a * w_poly.matrix(Poly.one())
    residual = w_small.matrix(LaurentSeries.one())
    checked = tuple((tuple(x), fixes_vertex(residual, frame.vertex(x))) for x in sample)
    # independent route: gamma^{-1} (prod r_j^l) a should fix D_e
    prod_r = Matrix.identity(n, LaurentSeries.one())
    for j in subset:
        prod_r = prod_r * walls[j - 1].unipotent.scale(ell).matrix(LaurentSeries.one())
    gamma_inv = (-w_poly).matrix(Poly.one()) * a_inv
    chain = gamma_inv.map(LaurentSeries.coerce) * prod_r * a.map(LaurentSeries.coerce)
    chain_checked = tuple((tuple(x), fixes_vertex(chain, frame.vertex(x))) for x in sample)
    return MembershipCertificate(tuple(subset), word, gamma, w_small, checked, chain_checked)


def membership_certificates(frame: CycleFrame, walls: list[WallElement], ell: int, domain, sample,
                            strict: bool = True) -> list[MembershipCertificate]:
    """One certificate per (subset, word), in a fixed order.

    With ``strict`` a failing certificate raises :class:`CertificateError`
    naming the subset and word.
    """
    out = []
    for S in subsets(frame.n - 1):
        for m in domain:
            cert = certify(frame, walls, ell, m, S, sample)
            if strict and not cert.valid:
                raise CertificateError(f"certificate failed for subset {S} and word {m}")
            out.append(cert)
    return out


def rescaling_checks(frame: CycleFrame, walls: list[WallElement], ell: int, domain) -> list[tuple]:
    """(word, subset, holds) for the power identity with u = prod_{j in S} r_j."""
    out = []
    for m in domain:
        a = frame.word_full(m)
        a_inv = frame.word_full(tuple(-x for x in m))
        for S in subsets(frame.n - 1):
            prod_r = Matrix.identity(frame.n, LaurentSeries.one())
            for j in S:
                prod_r = prod_r * walls[j - 1].matrix()
            u = UnipotentVector.from_matrix(prod_r)
            out.append((tuple(m), S, rescaling_identity(a, a_inv, u, ell)))
    return out
