from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slzt.errors import PrecisionError
from slzt.exactfield import INF, LaurentSeries, Poly
from slzt.rootlift import (
    all_roots, build_f, default_floor, eval_f, lift_coefficients, lift_root, lift_state, q_sequence,
    residual_bound, residual_valuation, vieta_checks,
)


def test_q_sequence_values():
    assert q_sequence(2) == [1, 3]
    assert q_sequence(4) == [1, 3, 4, 6]
    for n in range(2, 11):
        q = q_sequence(n)
        assert len(set(q)) == n and min(q) > 0
    with pytest.raises(ValueError):
        q_sequence(1)


def test_build_f_for_n2():
    t = Poly.t()
    assert build_f(2) == [t * t * 3 - 1, t * 4, Poly.one()]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_build_f_shape(n):
    f = build_f(n)
    prod_q = 1
    for q in q_sequence(n):
        prod_q *= q
    assert f[-1] == 1
    assert f[0] == Poly.monomial(prod_q, n) - 1
    # f(-q_1 t) = -1: one factor vanishes
    assert eval_f(LaurentSeries({1: -1}), n) == -1


def test_residual_examples():
    assert residual_valuation(LaurentSeries({1: -1}), 2) == 0
    assert residual_valuation(LaurentSeries.zero(), 3) == -3


def test_n2_branch1_coefficients():
    c = lift_coefficients(2, 1, 2)
    assert c == [-1, Fraction(1, 2), Fraction(-1, 8)]


def test_truncated_series_matches_oracle():
    # oracle: substitute the truncated series and look at the residual
    # the dropped tail is O(t^(1-(s+1)n)) and f' has size t^(n-1), so the residual has valuation s*n
    for n in (2, 3, 4):
        for steps in range(1, 6):
            cs = lift_coefficients(n, 1, steps)
            alpha = LaurentSeries({1 - i * n: c for i, c in enumerate(cs)})
            assert eval_f(alpha, n).valuation() == n * steps


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lift_residuals_and_leading_terms(n):
    floor = default_floor(n)
    for k, alpha in enumerate(all_roots(n, floor), start=1):
        assert alpha.leading_term() == (-q_sequence(n)[k - 1], 1)
        assert residual_bound(alpha, n) >= 40 * n - n
        assert residual_valuation(alpha, n) in (INF,) or residual_valuation(alpha, n) >= 40 * n - n


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_product_of_shifts_is_one(n):
    alpha = lift_root(n, 1)
    acc = LaurentSeries.one()
    for q in q_sequence(n):
        acc = acc * (alpha + LaurentSeries.t() * q)
    assert acc.agrees(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_vieta(n):
    assert all(vieta_checks(n).values())


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 5), st.data())
def test_deeper_precision_keeps_coefficients(n, data):
    branch = data.draw(st.integers(1, n))
    shallow = lift_coefficients(n, branch, 4)
    deep = lift_coefficients(n, branch, 9)
    assert deep[:5] == shallow


def test_branches_distinct():
    roots = all_roots(4, -30)
    leads = {r.leading_term() for r in roots}
    assert len(leads) == 4


def test_state_records_permuted_sequence():
    st_ = lift_state(4, 3, -20)
    assert st_.q == (4, 1, 3, 6)
    assert st_.coeffs[0] == -4
    assert st_.series().floor == -20


def test_bad_arguments():
    with pytest.raises(ValueError):
        lift_root(3, 4)
    with pytest.raises(ValueError):
        lift_root(3, 1, floor=0)
    with pytest.raises(PrecisionError):
        LaurentSeries({}, -2).valuation()
