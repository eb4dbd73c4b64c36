import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slzt.building import (
    ZERO, ApartmentVertex, LatticeVertex, b_matrix, b_shift, b_translate, boundary_action,
    conjugated_root_valuation, contraction_profile, fixes_vertex, oracle_suite, proper_subsets,
    random_sector_vertex, random_sl_poly, root_element, sector_contains, shape_matches_oracle,
    stabilizer_degree_bounds, subspace_stable, verify_M_combinatorics,
)
from slzt.exactfield import LaurentSeries, Matrix, Poly, mat_det, mat_inv

T = Poly.t()


def elementary(n, i, j, p):
    rows = [[Poly.one() if r == c else Poly() for c in range(n)] for r in range(n)]
    rows[i][j] = p if isinstance(p, Poly) else Poly.const(p)
    return Matrix(rows)


# -- vertices and fixes_vertex -----------------------------------------------

def test_apartment_vertex_canonical_form():
    assert ApartmentVertex((1, 1, -2)).exponents == (3, 3, 0)
    assert ApartmentVertex((5, 5)).exponents == (0, 0)


def test_fixes_vertex_examples():
    x0 = LatticeVertex.standard(2)
    assert fixes_vertex(Matrix.identity(2, Poly.one()), x0)
    assert not fixes_vertex(elementary(2, 0, 1, T), x0)
    assert fixes_vertex(elementary(2, 0, 1, 1), x0)
    assert not fixes_vertex(b_matrix(2), x0)
    assert fixes_vertex(Matrix.identity(3, Poly.one()), LatticeVertex.from_apartment(ApartmentVertex((4, 1, 0))))


def test_fixes_vertex_rejects_wrong_determinant():
    with pytest.raises(ValueError):
        fixes_vertex(Matrix([[2, 0], [0, 1]]), LatticeVertex.standard(2), check_det=True)


# -- stabilizer shapes ---------------------------------------------------------

def test_shape_examples():
    assert stabilizer_degree_bounds(ApartmentVertex((0, 0, 0))).table == ((0, 0, 0),) * 3
    assert stabilizer_degree_bounds(ApartmentVertex((1, 0))).table == ((0, 1), (ZERO, 0))
    shape = stabilizer_degree_bounds(ApartmentVertex((1, 0)))
    assert shape.contains(elementary(2, 0, 1, T * 5 - 2))
    assert not shape.contains(elementary(2, 0, 1, T * T))
    assert not shape.contains(elementary(2, 1, 0, 1))


@pytest.mark.parametrize("n", [2, 3])
def test_oracle_equivalence_suite(n):
    res = oracle_suite(random.Random(7), n, matrices=100, vertices=10)
    assert res.passed, res.disagreements
    # both outcomes are exercised
    assert 0 < res.members < res.samples


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_shape_closed_under_products(seed):
    rng = random.Random(seed)
    v = random_sector_vertex(rng, 3)
    shape = stabilizer_degree_bounds(v)
    g = random_sl_poly(rng, 3, shape=shape)
    h = random_sl_poly(rng, 3, shape=shape)
    assert shape.contains(g) and shape.contains(h)
    assert shape.contains(g * h)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_fixes_vertex_conjugation_equivariant(seed):
    rng = random.Random(seed)
    v = random_sector_vertex(rng, 3)
    g = random_sl_poly(rng, 3, steps=4)
    h = random_sl_poly(rng, 3, steps=3, max_deg=1).map(LaurentSeries.coerce)
    h_inv = mat_inv(h)
    lv = LatticeVertex.from_apartment(v)
    moved = LatticeVertex(h * lv.basis, lv.basis_inv * h_inv)
    assert fixes_vertex(g, lv) == fixes_vertex(h * g.map(LaurentSeries.coerce) * h_inv, moved)


def test_shape_matches_oracle_on_b_conjugates():
    v = ApartmentVertex((2, 1, 0))
    g = elementary(3, 0, 2, T * T)
    assert shape_matches_oracle(g, v) == (True, True)
    g = elementary(3, 0, 2, T ** 3)
    assert shape_matches_oracle(g, v) == (False, False)


# -- sector and translations ----------------------------------------------------

def test_sector_examples():
    assert sector_contains((2, 1, 0))
    assert not sector_contains((0, 1, 0))
    assert not sector_contains(b_translate(ApartmentVertex((0, 0, 0)), -1))


def test_b_translate_examples():
    v = ApartmentVertex((0, 0, 0))
    assert b_translate(v, 1).exponents == (3, 3, 0)
    assert b_translate(v, 0) == v
    assert b_shift(3, 2) == (2, 2, -4)
    assert mat_det(b_matrix(4, 3)) == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=5), st.integers(-4, 4), st.integers(-4, 4))
def test_b_translate_additive(exps, k1, k2):
    v = ApartmentVertex(tuple(exps))
    assert b_translate(b_translate(v, k1), k2) == b_translate(v, k1 + k2)


def test_b_translate_matches_matrix_action():
    v = ApartmentVertex((2, 1, 0))
    moved = b_translate(v, 2)
    lv = LatticeVertex.from_apartment(v)
    image = LatticeVertex(b_matrix(3, 2) * lv.basis, lv.basis_inv * b_matrix(3, -2))
    target = LatticeVertex.from_apartment(moved)
    # same homothety class: the change of basis is a scalar monomial
    ratio = image.basis_inv * target.basis
    scalar = ratio[0, 0]
    assert scalar.is_exact() and len(scalar.terms) == 1
    assert ratio == Matrix.identity(3, LaurentSeries.one()) * scalar


# -- contraction -----------------------------------------------------------------

def test_contraction_examples():
    assert contraction_profile(1, 1, 3) == 3
    assert contraction_profile(2, 0, 3) == 0
    with pytest.raises(ValueError):
        contraction_profile(3, 1, 3)
    with pytest.raises(ValueError):
        contraction_profile(1, -1, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_contraction_matches_matrices(n):
    for k in range(11):
        for j in range(1, n):
            assert conjugated_root_valuation(n, j, k) == contraction_profile(j, k, n) == k * n


def test_contraction_radius_grows():
    # b^{-k} (I + t^5 E_13) b^k fixes x0 once the contraction beats the degree
    u = root_element(3, 1, LaurentSeries.monomial(1, 5))
    x0 = LatticeVertex.standard(3)
    fixed = [fixes_vertex(b_matrix(3, -k) * u * b_matrix(3, k), x0) for k in range(4)]
    assert fixed == [False, False, True, True]


# -- boundary combinatorics ------------------------------------------------------

def test_boundary_action_examples():
    assert boundary_action(1, {2}, 3)
    assert not boundary_action(1, {2, 3}, 3)
    for i in range(1, 5):
        assert boundary_action(i, {1, 2, 3}, 4)
    with pytest.raises(ValueError):
        boundary_action(1, set(), 3)
    with pytest.raises(ValueError):
        boundary_action(1, {1, 2, 3}, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_boundary_action_matches_linear_algebra(n):
    for I in proper_subsets(n):
        for i in range(1, n):
            assert boundary_action(i, I, n) == subspace_stable(i, I, n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_M_combinatorics(n):
    rep = verify_M_combinatorics(n)
    assert rep.passed, rep.details
    assert len(rep.fixed_set) == 2 ** (n - 1) - 1


def test_M_combinatorics_small_cases():
    assert set(verify_M_combinatorics(2).fixed_set) == {"P{1}"}
    assert set(verify_M_combinatorics(3).fixed_set) == {"P{1}", "P{2}", "P{1,2}"}
    with pytest.raises(ValueError):
        verify_M_combinatorics(7)
