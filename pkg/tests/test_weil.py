import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galrep.weil import (
    BudgetExceeded,
    candidate_count,
    coefficient_bounds,
    enumerate_weil,
    is_weil_poly,
    reciprocal_twist,
    weil_count,
)

from weil_oracle import certify, oracle_weil

GRID = list(itertools.product((2, 3, 4), (0, 1, 2), (1, 2, 3, 4)))


def test_is_weil_examples():
    assert is_weil_poly([1, 0, 2], 2, 1)
    assert not is_weil_poly([1, -3, 2], 2, 1)
    assert is_weil_poly([1, -1], 7, 0)
    # roots +-sqrt(2) lie on the circle of radius sqrt(2)
    assert is_weil_poly([1, 0, -2], 2, 1)


def test_is_weil_rejects_non_monic():
    with pytest.raises(ValueError):
        is_weil_poly([2, 0, 2], 2, 1)


def test_is_weil_edge_cases():
    # double roots on the circle and at the real points +-sqrt(Q)
    assert is_weil_poly([1, 0, 4, 0, 4], 2, 1)  # (x^2 + 2)^2
    assert is_weil_poly([1, -4, 4], 2, 2)  # (x - 2)^2
    assert is_weil_poly([1, 4, 6, 4, 1], 5, 0)  # (x + 1)^4
    # right modulus at the constant term, wrong roots
    assert not is_weil_poly([1, 3, 2], 2, 1)
    assert is_weil_poly([1, 0, 0, 0, 4], 2, 1)  # x^4 = -4 gives |x| = sqrt(2)
    assert not is_weil_poly([1, 0, 0, 0, -4], 3, 1)


def test_enumerate_examples():
    got = [p.coeffs for p in enumerate_weil(2, 1, 2)]
    assert got == [(1, -2, 2), (1, -1, 2), (1, 0, -2), (1, 0, 2), (1, 1, 2), (1, 2, 2)]
    assert enumerate_weil(3, 1, 1) == []
    assert [p.coeffs for p in enumerate_weil(2, 0, 1)] == [(1, -1), (1, 1)]
    assert [p.coeffs for p in enumerate_weil(4, 1, 1)] == [(1, -2), (1, 2)]


def test_counts():
    assert weil_count(2, 1, 2) == 6
    assert weil_count(3, 1, 2) == 8
    assert weil_count(2, 0, 1) == 2
    assert weil_count(3, 1, 1) == 0


def test_enumerate_validation():
    with pytest.raises(ValueError):
        enumerate_weil(2, 1, 0)
    with pytest.raises(ValueError):
        enumerate_weil(6, 1, 2)
    with pytest.raises(ValueError):
        enumerate_weil(2, -1, 2)


def test_budget_refusal(monkeypatch):
    n = candidate_count(4, 2, 4)
    with pytest.raises(BudgetExceeded) as info:
        enumerate_weil(4, 2, 4, budget=n - 1)
    assert info.value.budget == n - 1 and info.value.candidates == n
    monkeypatch.setenv("GALREP_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        enumerate_weil(2, 1, 4)
    assert enumerate_weil(2, 1, 4, budget=10**6)


@pytest.mark.parametrize("q,w,d", GRID)
def test_enumeration_matches_oracle(q, w, d):
    assert tuple(p.coeffs for p in enumerate_weil(q, w, d)) == oracle_weil(q, w, d)


@pytest.mark.parametrize("q,w,d", GRID)
def test_outputs_certified_and_bounded(q, w, d):
    bounds = coefficient_bounds(q, w, d)
    for p in enumerate_weil(q, w, d):
        assert is_weil_poly(p.coeffs, q, w)
        assert all(abs(p.coeffs[i]) <= bounds[i] for i in range(d + 1))


@pytest.mark.parametrize("q,w,d", GRID)
def test_closed_under_reciprocal_twist(q, w, d):
    out = {p.coeffs for p in enumerate_weil(q, w, d)}
    for c in out:
        twisted = reciprocal_twist(c, q, w)
        assert twisted is not None and tuple(twisted) in out


@pytest.mark.parametrize("w,d", list(itertools.product((0, 1, 2), (1, 2, 3, 4))))
def test_counts_monotone_in_q(w, d):
    counts = [weil_count(q, w, d) for q in (2, 3, 4)]
    assert counts == sorted(counts)


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 0), (4, 1)]),
    st.lists(st.integers(-6, 6), min_size=1, max_size=4),
    st.sampled_from([1, -1]),
)
def test_is_weil_matches_numeric_certificate(qw, middle, sign):
    q, w = qw
    Q = q**w
    d = len(middle) + 1
    # a constant term of the right size, so the test is not trivially false
    const = sign * Q ** (d // 2) if d % 2 == 0 else sign * middle[0]
    coeffs = [1] + middle + [const]
    assert is_weil_poly(coeffs, q, w) == certify(coeffs, Q)
