import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix as SymMatrix
from sympy import ZZ
from sympy.matrices.normalforms import smith_normal_form

from slzt.homology import HomologyGroup, SimplicialComplex, mat_mul_int, smith_invariants

int_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(int_matrices)
def test_smith_invariants_match_sympy(rows):
    snf = smith_normal_form(SymMatrix(rows), domain=ZZ)
    expected = sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0)
    assert smith_invariants(rows) == expected


def test_smith_examples():
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariants([[0, 0], [0, 0]]) == []
    assert smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def boundary_of_simplex(d):
    return SimplicialComplex([tuple(range(d + 1))])


def test_point_and_simplex():
    s = boundary_of_simplex(3)
    assert [str(s.homology(d)) for d in range(4)] == ["Z", "0", "0", "0"]
    assert s.euler_characteristic() == 1


@pytest.mark.parametrize("d", [1, 2, 3])
def test_sphere_as_simplex_boundary(d):
    faces = [f for f in SimplicialComplex([tuple(range(d + 2))]).cells(d)]
    sphere = SimplicialComplex(faces)
    assert sphere.homology(d) == HomologyGroup(1)
    assert sphere.homology(0, reduced=True).is_zero()
    assert all(sphere.homology(k).is_zero() for k in range(1, d))
    assert sphere.euler_characteristic() == 1 + (-1) ** d


def test_zero_sphere_reduced():
    pts = SimplicialComplex([(0,), (1,)])
    assert pts.homology(0) == HomologyGroup(2)
    assert pts.homology(0, reduced=True) == HomologyGroup(1)


def test_projective_plane_torsion():
    # six-vertex triangulation of RP^2 (the hemi-icosahedron)
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
            (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    rp2 = SimplicialComplex(tris)
    assert rp2.homology(1) == HomologyGroup(0, (2,))
    assert rp2.homology(2).is_zero()
    assert str(rp2.homology(1)) == "Z/2"


def test_boundary_squares_vanish():
    c = SimplicialComplex([(0, 1, 2, 3), (1, 2, 3, 4)])
    for d in range(1, 4):
        prod = mat_mul_int(c.boundary_matrix(d), c.boundary_matrix(d + 1))
        assert all(x == 0 for row in prod for x in row)


def test_group_strings():
    assert str(HomologyGroup(0)) == "0"
    assert str(HomologyGroup(3, (2,))) == "Z^3 + Z/2"
