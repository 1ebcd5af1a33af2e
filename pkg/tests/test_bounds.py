import math
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from robustconn.bounds import (
    bound_curve,
    component_bound,
    curve_check,
    epsilon,
    epsilon_floor,
    epsilon_table,
    kappa_genus_bound,
    leaf_fraction_floor,
)


@pytest.mark.parametrize("r, d, want", [
    (3, 2, Fraction(1, 3)),
    (3, 6, Fraction(21, 128)),
    (4, 4, Fraction(10, 27)),
    (5, Fraction(10, 3), Fraction(49, 96)),
    (6, 3, Fraction(3, 5)),
    (3, 3, Fraction(1, 4)),
])
def test_epsilon_exact_values(r, d, want):
    assert epsilon(r, d) == want
    assert isinstance(epsilon(r, d), Fraction)


def test_epsilon_halves():
    assert epsilon(3, 6) / 2 == Fraction(21, 256)
    assert epsilon(4, 4) / 2 == Fraction(5, 27)
    assert epsilon(5, Fraction(10, 3)) / 2 == Fraction(49, 192)
    assert epsilon(6, 3) / 2 == Fraction(3, 10)


def test_epsilon_small_d_is_linear():
    assert epsilon(3, Fraction(1, 2)) == Fraction(5, 6)
    assert epsilon(4, 1) == Fraction(3, 4)


@pytest.mark.parametrize("r, d", [(2, 3), (3, 0), (3, -1)])
def test_epsilon_rejects_bad_input(r, d):
    with pytest.raises(ValueError):
        epsilon(r, d)


def test_epsilon_monotone():
    for r in range(3, 9):
        prev = None
        for d in range(2, 201):
            e = epsilon(r, d)
            assert e > 0
            if prev is not None:
                assert e < prev
            prev = e
    for d in range(2, 201):
        for r in range(3, 8):
            assert epsilon(r, d) < epsilon(r + 1, d)


def test_epsilon_floor_examples():
    assert epsilon_floor(3, 3) == pytest.approx(1 / (3 * math.sqrt(math.e)))
    assert epsilon_floor(3, 3) == pytest.approx(0.2022, abs=1e-4)
    assert epsilon_floor(4, 4) == pytest.approx(0.2406, abs=2e-4)
    assert epsilon_floor(3, 1000) == pytest.approx(0.00640, abs=1e-5)
    assert float(epsilon(3, 1000)) >= epsilon_floor(3, 1000)
    assert epsilon_floor(3, 2) == pytest.approx(1 / (3 * math.sqrt(math.e)))


def test_epsilon_dominates_closed_form():
    for r in range(3, 9):
        for d in range(3, 1001):
            assert float(epsilon(r, d)) >= epsilon_floor(r, d) + 1e-12


def test_single_piece_curve():
    c = bound_curve(3, 2, 12)
    assert c.slopes == (-1,)
    assert c.breakpoints == (0, 12)
    assert c(0) == 8 and c(5) == 3
    assert c.t1() == 7
    assert curve_check(c)


def test_curve_r3_d6():
    c = bound_curve(3, 6, 128)
    assert c(0) == 256
    assert c.breakpoints == (0, Fraction(64, 5), Fraction(136, 5), 44, 65, 128)
    assert c.slopes == (-5, -4, -3, -2, -1)
    assert 128 - c.t1() > 21
    assert curve_check(c, samples=10)


def test_curve_r4_d4():
    c = bound_curve(4, 4, 27)
    assert 27 - c.t1() > 10
    assert curve_check(c)


def test_curve_t1_hits_one():
    for r, d, R0 in [(3, 6, 128), (4, 4, 27), (5, 17, 1000), (3, Fraction(7, 2), 40)]:
        c = bound_curve(r, d, R0)
        assert c(c.t1()) == 1


def test_curve_check_negative_control():
    c = bound_curve(3, 6, 128)
    bad = list(c.slopes)
    bad[1] += 1
    mutated = replace(c, slopes=tuple(bad), values=())
    assert not curve_check(mutated)


def test_curve_is_continuous_and_decreasing():
    c = bound_curve(5, 9, 100)
    vals = c.values_at_breakpoints()
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    for i in range(1, len(c.breakpoints) - 1):
        x = c.breakpoints[i]
        if x < c.R0:
            left = vals[i - 1] + c.slopes[i - 1] * (x - c.breakpoints[i - 1])
            assert left == c(x)


@settings(max_examples=80, deadline=None)
@given(
    st.integers(3, 6),
    st.fractions(min_value=Fraction(1, 4), max_value=40, max_denominator=12),
    st.integers(5, 500),
)
def test_curve_properties_random(r, d, R0):
    assume(d * R0 >= r)  # at least one blue component at the start
    c = bound_curve(r, d, R0)
    assert curve_check(c, samples=5)
    assert R0 - c.t1() > epsilon(r, d) * R0


def test_curve_sweep():
    for r in range(3, 7):
        for d in range(2, 51):
            for R0 in (10, 100, 1000):
                c = bound_curve(r, d, R0)
                assert curve_check(c, 10)
                assert R0 - c.t1() > epsilon(r, d) * R0


def test_kappa_genus_bound_examples():
    assert kappa_genus_bound(3, 0) == pytest.approx(1 / 27)
    assert kappa_genus_bound(3, 7) == pytest.approx(1 / 54)
    assert kappa_genus_bound(4, 0) == pytest.approx(1 / 27)
    assert kappa_genus_bound(3, 8, use_gamma_form=True) == pytest.approx(1 / 54)
    with pytest.raises(ValueError):
        kappa_genus_bound(3, 0, use_gamma_form=True)


def test_component_bound_examples():
    assert component_bound(3, 0, 5) == 6
    assert component_bound(4, 2, 2) == 2
    assert component_bound(5, 0, 2) == 0


def test_leaf_fraction_floor():
    assert leaf_fraction_floor(3, 10) == Fraction(1, 5)
    assert leaf_fraction_floor(4, 2) == 1


def test_epsilon_table_rows():
    rows = epsilon_table([3], [6])
    assert rows == [{"r": 3, "d": "6/1", "eps": "21/128", "half_eps": "21/256", "eps_decimal": 21 / 128}]
