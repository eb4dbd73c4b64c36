import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slzt.building import b_shift, fixes_vertex
from slzt.errors import CertificateError, ConstructionError
from slzt.exactfield import LaurentSeries, Matrix, Poly, RatFunc
from slzt.cyclelab import (
    UnipotentVector, build_sphere, certify, choose_wall_elements, common_ell, cone_facts, contraction_facts,
    corner_facts, ell_of, fundamental_domain_sample, homology, lattice_rank, make_frame,
    membership_certificates, rescaling_identity, sigma_corners, sphere_facts, sphere_ok, split_unipotent,
    translation_facts, translation_vector, TranslationVector,
)
from slzt.cyclelab.sphere import subsets
from slzt.toruslab import make_generators, word_matrix

T = Poly.t()


@st.composite
def exact_series(draw):
    exps = draw(st.lists(st.integers(-4, 3), max_size=4, unique=True))
    return LaurentSeries({e: draw(st.fractions(-5, 5, max_denominator=4)) for e in exps})


def vectors(size=2):
    return st.lists(exact_series(), min_size=size, max_size=size).map(lambda cs: UnipotentVector(tuple(cs)))


# -- split -------------------------------------------------------------------------

def test_split_examples():
    u = UnipotentVector((LaurentSeries({2: 1, 0: 3, -1: 1}),))
    up, us = split_unipotent(u)
    assert up.coords == (Poly([3, 0, 1]),)
    assert us.coords[0].terms == {-1: 1}
    poly = UnipotentVector((T * 2 + 1, Poly()))
    up, us = split_unipotent(poly)
    assert up == poly and all(c.is_zero() for c in us.coords)
    # rational function: (t^2 + 1) / t = t + 1/t
    up, us = split_unipotent(UnipotentVector((RatFunc(T * T + 1, T),)))
    assert up.coords == (T,) and us.coords == (RatFunc(Poly.one(), T),)


@settings(max_examples=60, deadline=None)
@given(vectors(), vectors())
def test_split_is_additive_section(u, v):
    up, us = split_unipotent(u)
    assert tuple(LaurentSeries.from_poly(a) + b for a, b in zip(up.coords, us.coords)) == u.coords
    assert all(all(e < 0 for e in c.terms) for c in us.coords)
    sp, ss = split_unipotent(u + v)
    vp, vs = split_unipotent(v)
    assert sp == up + vp and ss == us + vs


@settings(max_examples=40, deadline=None)
@given(vectors(3))
def test_split_factors_the_matrix(u):
    up, us = split_unipotent(u)
    one = LaurentSeries.one()
    a, b = up.matrix(Poly.one()).map(LaurentSeries.coerce), us.matrix(one)
    assert a * b == b * a == u.matrix(one)


# -- ell ---------------------------------------------------------------------------

def test_ell_examples():
    ident = Matrix.identity(2, Poly.one())
    assert ell_of(ident, UnipotentVector((T + 2, T * T))) == 1
    u = UnipotentVector((Poly([Fraction(1, 6)]), Poly([0, Fraction(1, 4)])))
    assert ell_of(ident, u) == 12
    # the small part does not count
    assert ell_of(ident, UnipotentVector((LaurentSeries({-1: Fraction(1, 7), 0: 1}), Poly()))) == 1


@settings(max_examples=30, deadline=None)
@given(vectors(), st.lists(st.integers(-2, 2), min_size=1, max_size=1))
def test_ell_is_minimal(u, m):
    a_inv = word_matrix(make_generators(2), tuple(-x for x in m))
    ell = ell_of(a_inv, u)
    part, _ = split_unipotent(u.conjugate(a_inv))
    assert part.scale(ell).is_polynomial_over_z()
    for d in range(1, ell):
        assert not part.scale(d).is_polynomial_over_z()


@settings(max_examples=15, deadline=None)
@given(vectors(), st.lists(st.integers(-2, 2), min_size=1, max_size=1))
def test_rescaling_identity_random(u, m):
    gens = make_generators(2)
    a = word_matrix(gens, m).block(3, Poly.one())
    a_inv = word_matrix(gens, tuple(-x for x in m)).block(3, Poly.one())
    ell = ell_of(word_matrix(gens, tuple(-x for x in m)), u)
    assert rescaling_identity(a, a_inv, u, ell)
    assert rescaling_identity(a, a_inv, u, ell + 1)


# -- translation vectors ------------------------------------------------------------

def test_translation_examples():
    assert translation_vector((0,)).valuations == (0, 0, 0)
    assert translation_vector((1,)).valuations == (-2, 2, 0)
    assert translation_vector(()).valuations == (0, 0)
    with pytest.raises(ValueError):
        translation_vector((1, 2), n=3)
    with pytest.raises(ConstructionError):
        TranslationVector((1, 0, 0))


@pytest.mark.parametrize("n", [3, 4])
def test_translation_lattice_rank(n):
    vecs = [translation_vector(m, n=n).valuations for m in
            [tuple(1 if i == j else 0 for i in range(n - 2)) for j in range(n - 2)]]
    assert lattice_rank(vecs) == n - 2
    assert lattice_rank([(0, 0, 0)]) == 0


@settings(max_examples=20, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_translation_additive(p, q):
    nu = lambda m: translation_vector(m, n=4).valuations
    assert nu((p, q)) == tuple(a + b for a, b in zip(nu((p, 0)), nu((0, q))))


def test_word_moves_vertex_by_displacement():
    frame = make_frame(3, 4)
    a = frame.word_full((1,)).map(LaurentSeries.coerce)
    disp = frame.translation((1,)).displacement
    x = frame.vertex(frame.e)
    moved = frame.vertex(tuple(p + q for p, q in zip(frame.e, disp)))
    image_basis = a * x.basis
    ratio = moved.basis_inv * image_basis
    assert all(c.is_integral() for c in ratio.entries)
    back = x.basis_inv * frame.word_full((-1,)).map(LaurentSeries.coerce) * moved.basis
    assert all(c.is_integral() for c in back.entries)


# -- frame, walls, cone ----------------------------------------------------------------

def test_frame_n3():
    frame = make_frame(3, 4)
    assert frame.gamma == (1, 1)
    assert frame.y == (1, 1, 0)
    assert frame.e == tuple(a + b for a, b in zip(frame.y, b_shift(3, 6)))
    assert frame.apex == tuple(a + b for a, b in zip(frame.e, b_shift(3, 4)))
    with pytest.raises(ValueError):
        make_frame(1, 1)
    with pytest.raises(ValueError):
        make_frame(3, 0)


def test_walls_pass_through_apex(run_n3):
    for w, rep in zip(run_n3.walls, run_n3.wall_reports):
        assert w.exponent == run_n3.frame.apex[w.index - 1] - run_n3.frame.apex[-1]
        assert rep.fixes_apex and not rep.fixes_previous and not rep.fixes_y
        assert rep.wall_through_apex
        # the fixed half-apartment contains everything beyond b^k e
        assert rep.fixes_next
        # scaling by l preserves the wall
        assert rep.scaled_fixes_apex and not rep.scaled_fixes_previous


@pytest.mark.parametrize("scale", [2, 5, 12])
def test_wall_invariant_under_powers(run_n3, scale):
    frame = run_n3.frame
    vertices = [frame.apex, frame.y] + sigma_corners(frame)
    for w in run_n3.walls:
        powered = w.unipotent.scale(scale).matrix(LaurentSeries.one())
        for v in vertices:
            assert fixes_vertex(powered, frame.vertex(v)) == fixes_vertex(w.matrix(), frame.vertex(v))


def test_sigma_corners(run_n3):
    assert corner_facts(run_n3)["ok"]


def test_cone(run_n3):
    facts = cone_facts(run_n3, seed=3, count=4)
    assert facts["sample_in_cone"] and facts["integral_unipotents_fix_sample"] and facts["threshold_sharp"]
    assert facts["sample_size"] == 2 ** (3 - 2) + 1


def test_translation_facts(run_n3):
    facts = translation_facts(run_n3)
    assert facts["generators"] == [[-2, 2, 0]]
    assert facts["rank"] == facts["expected_rank"] == 1


def test_contraction_facts():
    facts = contraction_facts(3)
    assert facts["ok"] and facts["checked"] == 22


# -- certificates ---------------------------------------------------------------------

def test_n2_degenerate(run_n2):
    assert run_n2.domain == [()]
    assert run_n2.ell == 1
    assert len(run_n2.certificates) == 2
    assert all(c.valid for c in run_n2.certificates)
    assert sphere_ok(sphere_facts(run_n2), 2)


def test_n3_certificates(run_n3):
    assert run_n3.ell == run_n3.ell_auto == common_ell(run_n3.ell_table)
    assert len(run_n3.certificates) == 4 * len(run_n3.domain)
    assert all(c.valid for c in run_n3.certificates)
    assert all(ok for _, _, ok in run_n3.rescaling)
    assert (0,) in run_n3.domain


def test_empty_subset_gives_the_word(run_n3):
    for cert in run_n3.certificates:
        if cert.subset == ():
            assert cert.gamma == run_n3.frame.word_full(cert.word)


def test_certificates_are_not_vacuous(run_n3):
    # without clearing denominators gamma leaves Z[t]
    frame, walls = run_n3.frame, run_n3.walls
    cert = certify(frame, walls, 1, (0,), (1,), run_n3.sample)
    assert not cert.gamma_integral and not cert.valid
    with pytest.raises(CertificateError):
        membership_certificates(frame, walls, 1, [(0,)], run_n3.sample)


def test_domain_sample_shape():
    frame = make_frame(3, 4)
    sample = fundamental_domain_sample(frame)
    assert sample[0] == frame.e and len(sample) == 3


# -- sphere ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sphere_complex(n):
    sc = build_sphere(n, 1, 1)
    assert len(sc.top_cells()) == 2 ** (n - 1)
    assert homology(sc, n - 2, "sphere", reduced=True).rank == 1
    assert all(homology(sc, d, "ball").is_zero() for d in range(1, n))
    assert sc.ball.euler_characteristic() == 1
    assert sc.sphere.euler_characteristic() == 1 + (-1) ** (n - 2)


def test_circle_homology():
    sc = build_sphere(3, 7, 2)
    assert str(homology(sc, 0, "sphere")) == "Z"
    assert str(homology(sc, 1, "sphere")) == "Z"
    assert sc.ell == 7 and sc.k == 2


def test_sphere_facts(run_n3):
    assert sphere_ok(sphere_facts(run_n3), 3)


def test_subset_labels():
    assert subsets(2) == [(), (1,), (2,), (1, 2)]
    assert len(subsets(4)) == 16
