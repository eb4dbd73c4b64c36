import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slzt.building import ApartmentVertex, LatticeVertex, fixes_vertex
from slzt.exactfield import LaurentSeries, Matrix, Poly, char_poly, mat_det
from slzt.rootlift import build_f, default_floor
from slzt.toruslab import (
    companion_matrix, diagonalizer, eigen_data, eigenvalue_of_word, eigenvector_residual, exact_identities,
    expected_leading_term, fixes_no_point_certificate, leading_term_certificate, make_generators,
    offdiag_valuation_bound, shifted_matrix, valuation_vector, word_matrix, word_matrix_direct, words,
)

T = Poly.t()


def test_companion_n2():
    c = companion_matrix(2)
    assert c == Matrix([[Poly(), 1 - T * T * 3], [Poly.one(), -T * 4]])
    assert char_poly(c) == build_f(2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_exact_identities(n):
    res = exact_identities(n)
    assert all(res.values()), res


@pytest.mark.parametrize("n", [2, 3, 4])
def test_unsquared_determinants(n):
    for i in range(2, n + 1):
        assert mat_det(shifted_matrix(n, i)) in (1, -1)


def test_word_matrix_examples():
    gens = make_generators(2)
    assert word_matrix(gens, (0,)) == Matrix.identity(2, Poly.one())
    assert word_matrix(gens, (1,)) == shifted_matrix(2, 2) ** 2


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=2, max_size=2))
def test_word_routes_agree(m):
    gens = make_generators(3)
    assert word_matrix(gens, m) == word_matrix_direct(gens, m)


@pytest.mark.parametrize("n", [2, 3])
def test_nonzero_words_are_nontrivial(n):
    gens = make_generators(n)
    ident = Matrix.identity(n, Poly.one())
    for m in words(n - 1, 3):
        assert word_matrix(gens, m) != ident


def test_leading_term_examples():
    gens = make_generators(3)
    assert leading_term_certificate(gens, (1, 0)).coefficient == 4
    assert leading_term_certificate(gens, (1, 0)).exponent == 2
    assert leading_term_certificate(gens, (0, 1)).coefficient == 9
    cert = leading_term_certificate(gens, (1, -1))
    assert (cert.coefficient, cert.exponent) == (pytest.approx(4 / 9), 0)
    assert cert.nontrivial
    with pytest.raises(ValueError):
        leading_term_certificate(gens, (0, 0))


def test_eigenvalue_examples():
    assert eigenvalue_of_word((0,), 1) == 1
    b1 = eigenvalue_of_word((1,), 1)
    b2 = eigenvalue_of_word((1,), 2)
    assert b1.leading_term() == (4, 2)
    assert b2.leading_term()[1] == -2 and b2.leading_term()[0] * 4 == 1
    assert (b1 * b2).agrees(1)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_valuation_vector_sums_to_zero(m):
    assert sum(valuation_vector(m, n=3)) == 0


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3).filter(any))
def test_leading_term_is_prime_power_product(m):
    n = len(m) + 1
    cert = leading_term_certificate(make_generators(n), m)
    assert (cert.coefficient, cert.exponent) == expected_leading_term(m)
    assert cert.nontrivial


def test_fixed_point_examples():
    c = fixes_no_point_certificate((1,))
    assert c.certified and c.branch == 1 and c.valuation == -2
    c = fixes_no_point_certificate((1, -1))
    assert c.certified and c.valuation != 0
    assert fixes_no_point_certificate((0, 0)).status == "trivial"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_small_word_has_nonconstant_eigenvalue(n):
    for m in words(n - 1, 2):
        assert fixes_no_point_certificate(m, n=n).certified


def test_words_move_sampled_vertices():
    rng = random.Random(3)
    gens = make_generators(3)
    for _ in range(5):
        m = (rng.randint(-2, 2), rng.randint(1, 2))
        v = ApartmentVertex((rng.randint(0, 3), rng.randint(0, 3), 0))
        assert not fixes_vertex(word_matrix(gens, m), LatticeVertex.from_apartment(v))


@pytest.mark.parametrize("n", [2, 3])
def test_eigenvectors(n):
    for j in range(1, n + 1):
        data = eigen_data(n, j, -40)
        assert all(r.known_zero() for r in eigenvector_residual(n, data))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_diagonalizer(n):
    d = diagonalizer(n)
    diag = d.conjugate(companion_matrix(n))
    for j in range(n):
        assert (diag[j, j] - d.roots[j]).known_zero()
    assert offdiag_valuation_bound(diag) >= 20
    for a in make_generators(n).generators:
        assert offdiag_valuation_bound(d.conjugate(a)) >= 20
    ident = d.conjugate(Matrix.identity(n, Poly.one()))
    assert all((ident[i, j] - (1 if i == j else 0)).known_zero() for i in range(n) for j in range(n))


def test_default_floor():
    assert default_floor(3) == 1 - 3 - 120
    assert isinstance(diagonalizer(2).g[0, 0], LaurentSeries)
