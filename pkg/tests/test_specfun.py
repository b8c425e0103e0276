import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.strategies import floats, integers
from scipy import special

from openspectral.specfun import (
    Order, bessel_j, bessel_j_array, bessel_j_series, spherical_closed_form,
    ZeroTable, bessel_zeros, zero_count, first_zero, mcmahon_zero,
)
from openspectral.specfun import zeros as zeros_module
from openspectral.utils import ConvergenceError, growth_metrics, slope_stability
from .conftest import J1_ZEROS, J32_ZERO

HALF = Order(1)
ONE = Order(2)
THREE_HALVES = Order(3)


def bisect_zero(order, a, b, iterations=60):
    """Independent oracle: plain bisection on the power series."""
    fa = bessel_j_series(order, a)
    for _ in range(iterations):
        m = (a + b) / 2
        fm = bessel_j_series(order, m)
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return (a + b) / 2


def test_order_representation():
    assert Order.from_dimension(3).nu == 1.5
    assert Order.from_dimension(4).nu == 2
    assert Order(3).is_half_integer and not Order(2).is_half_integer
    assert str(Order(3)) == "3/2" and str(Order(2)) == "1"
    assert Order(1).shifted() == Order(3)


@pytest.mark.parametrize("twice_nu", [0, -2, 1.5, True])
def test_order_rejects_invalid(twice_nu):
    with pytest.raises(ValueError):
        Order(twice_nu)


def test_bessel_j_examples():
    assert abs(bessel_j(HALF, math.pi)) <= 1e-12
    assert bessel_j(ONE, 0.0) == 0.0
    assert abs(bessel_j(THREE_HALVES, J32_ZERO)) <= 1e-9


@pytest.mark.parametrize("x", [-1.0, math.inf, math.nan])
def test_bessel_j_rejects_bad_arguments(x):
    with pytest.raises(ValueError):
        bessel_j(ONE, x)


@pytest.mark.parametrize("order", [HALF, THREE_HALVES])
def test_half_integer_closed_form_agreement(order):
    xs = np.linspace(0.5, 100.0, 10000)
    values = bessel_j_array(order, xs)
    closed = np.array([spherical_closed_form(order, x) for x in xs])
    assert np.max(np.abs(values - closed)) <= 1e-12


def test_closed_form_only_for_half_integers():
    with pytest.raises(ValueError):
        spherical_closed_form(ONE, 1.0)


@settings(max_examples=60, deadline=None)
@given(integers(min_value=1, max_value=8), floats(min_value=0.0, max_value=12.0))
def test_series_matches_scipy(twice_nu, x):
    order = Order(twice_nu)
    assert abs(bessel_j_series(order, x) - special.jv(order.nu, x)) <= 1e-12


def test_subnormal_arguments_underflow_to_zero():
    assert bessel_j(HALF, 5e-324) == 0.0
    assert bessel_j_series(THREE_HALVES, 5e-324) == 0.0
    assert 0.0 < bessel_j(HALF, 1e-300) < 1e-149


def test_array_matches_scalar():
    xs = np.array([0.0, 0.3, 5.0, 11.9, 12.1, 40.0, 1e4])
    expected = [bessel_j(ONE, x) for x in xs]
    np.testing.assert_array_equal(bessel_j_array(ONE, xs), expected)


def test_zeros_of_half_order_are_multiples_of_pi():
    table = bessel_zeros(HALF, 10)
    assert len(table) == 3
    np.testing.assert_allclose(table.zeros, [math.pi, 2 * math.pi, 3 * math.pi], atol=1e-12, rtol=0)


def test_zeros_of_order_one_and_three_halves():
    np.testing.assert_allclose(bessel_zeros(ONE, 8).zeros[:2], J1_ZEROS, atol=1e-9, rtol=0)
    assert abs(bessel_zeros(THREE_HALVES, 8).zeros[0] - J32_ZERO) <= 1e-9



@pytest.mark.parametrize("order", [HALF, ONE, THREE_HALVES])
def test_zeros_do_not_depend_on_the_horizon(order):
    wide = bessel_zeros(order, 30).zeros
    first, second = wide[0], wide[1]
    for limit in (first, first + 1e-12, first * (1 + 1e-9), float(np.nextafter(second, 0.0)), second, 9.5, 20.0):
        zeros = bessel_zeros(order, limit).zeros
        assert zeros == tuple(z for z in wide if z <= limit)
    assert first_zero(order) == first

@pytest.mark.parametrize("order", [ONE, THREE_HALVES])
def test_first_ten_zeros_match_bisection_oracle(order):
    table = bessel_zeros(order, 36)
    assert len(table) >= 10
    for z in table.zeros[:10]:
        assert abs(bisect_zero(order, z - 0.5, z + 0.5) - z) <= 1e-9


def test_zero_count_examples():
    assert zero_count(HALF, 10) == 3
    assert zero_count(ONE, 20) == 6
    assert 0.9 <= zero_count(ONE, 1000) * math.pi / 1000 <= 1.1
    assert 0.95 <= zero_count(ONE, 2000) * math.pi / 2000 <= 1.05


def test_zero_count_grows_linearly():
    limits = np.linspace(500, 2000, 7)
    counts = [zero_count(ONE, L) for L in limits]
    assert slope_stability(limits, counts) < 0.05
    assert growth_metrics(limits, counts, "slope") == pytest.approx(1 / math.pi, rel=0.01)


@pytest.mark.parametrize("twice_nu", [1, 2, 3, 4])
def test_interlacing(twice_nu):
    order = Order(twice_nu)
    lower = bessel_zeros(order, 170).zeros[:51]
    upper = bessel_zeros(order.shifted(), 170).zeros
    for a, b in zip(lower, lower[1:]):
        assert sum(1 for z in upper if a < z < b) == 1


def test_spacing_approaches_pi():
    gaps = bessel_zeros(ONE, 170).gaps()
    assert np.all(np.abs(gaps[39:49] - math.pi) <= 1e-2)
    assert np.all(np.diff(np.abs(gaps - math.pi)) < 0)


@pytest.mark.parametrize("order", [HALF, ONE, THREE_HALVES])
def test_rescan_finds_no_missing_zero(order):
    limit = 60.0
    table = bessel_zeros(order, limit)
    xs = np.arange(0.05, limit, 0.05)
    values = bessel_j_array(order, xs)
    for i in np.nonzero(values[:-1] * values[1:] < 0)[0]:
        assert any(xs[i] <= z <= xs[i + 1] for z in table.zeros)


def test_mcmahon_expansion_is_close_for_large_index():
    table = bessel_zeros(ONE, 80)
    assert abs(mcmahon_zero(ONE, 20) - table.zeros[19]) <= 1e-6
    with pytest.raises(ValueError):
        mcmahon_zero(ONE, 0)


def test_first_zero():
    assert abs(first_zero(ONE) - J1_ZEROS[0]) <= 1e-9
    assert abs(first_zero(Order(20)) - bessel_zeros(Order(20), 40).zeros[0]) <= 1e-12


def test_zero_table_csv():
    text = bessel_zeros(ONE, 8).to_csv()
    lines = text.splitlines()
    assert lines[0] == "index,zero"
    index, zero = lines[1].split(",")
    assert index == "1" and abs(float(zero) - 3.8317059702075123) <= 1e-12
    assert len(lines) == 3


def test_zero_table_invariants():
    with pytest.raises(ValueError):
        ZeroTable(order=ONE, zeros=(2.0, 1.0), upper_limit=3.0)
    with pytest.raises(ValueError):
        ZeroTable(order=ONE, zeros=(1.0, 4.0), upper_limit=3.0)


@pytest.mark.parametrize("kwargs", [{"upper_limit": 0}, {"upper_limit": -1}, {"upper_limit": 5, "scan_step": 4.0}])
def test_bessel_zeros_rejects_bad_parameters(kwargs):
    with pytest.raises(ValueError):
        bessel_zeros(ONE, **kwargs)


def test_refinement_failure_raises(monkeypatch):
    def failing_brentq(*args, **kwargs):
        raise RuntimeError("no convergence")
    monkeypatch.setattr(zeros_module, "brentq", failing_brentq)
    zeros_module._zero_tuple.cache_clear()
    with pytest.raises(ConvergenceError):
        bessel_zeros(ONE, 9.123456)
    zeros_module._zero_tuple.cache_clear()
