"""
Bigraded Series Tests
"""

import pytest

from ribbon_invariants.exactalg import ONE, ZERO, BiGradedSeries, q_power
from ribbon_invariants.exactalg.series import polynomial_series, series_from_rational


def test_geometric_expansion():
    """Test 1/(1 - q t) = sum q^k t^k"""
    series = series_from_rational({0: ONE}, {0: ONE, 1: q_power(1, -1)}, 6)

    assert series.t_min == 0
    assert [series.coefficient(k) for k in range(7)] == [q_power(k) for k in range(7)]


def test_read_past_truncation_raises():
    """Test coefficients above t_max are unknown"""
    series = polynomial_series({0: ONE}, 3)
    with pytest.raises(ValueError):
        series.coefficient(4)


def test_non_unit_lowest_denominator_rejected():
    """Test the lowest denominator coefficient must be invertible"""
    with pytest.raises(ValueError):
        series_from_rational({0: ONE}, {0: ONE + q_power(1)}, 3)
    with pytest.raises(ZeroDivisionError):
        series_from_rational({0: ONE}, {}, 3)


def test_sum_truncates_to_lower_order():
    """Test adding series keeps the smaller truncation"""
    a = polynomial_series({-2: ONE, 1: q_power(1)}, 5)
    b = polynomial_series({1: q_power(1, -1)}, 3)
    total = a + b

    assert total.t_max == 3
    assert total.t_min == -2
    assert total.coefficient(1) == ZERO


def test_times_polynomial_inverts_expansion():
    """Test (1 - q^2 t^2) * 1/(1 - q^2 t^2) = 1 through the truncation"""
    den = {0: ONE, 2: q_power(2, -1)}
    product = series_from_rational({0: ONE}, den, 8).times_polynomial(den)

    assert product.coefficient(0) == ONE
    assert all(product.coefficient(k) == ZERO for k in range(1, 9))


def test_text_and_json():
    """Test rendering of a short series"""
    series = BiGradedSeries(-1, 2, {-1: q_power(2), 2: q_power(-1, -1)})

    assert series.to_text() == "t^-1: q^2\nt^2: -q^-1\n+ O(t^3)"
    assert series.to_json() == {
        "t_min": -1,
        "t_max": 2,
        "coeffs": {"-1": [[2, 1, 1]], "2": [[-1, 1, -1]]},
    }


def test_truncation_order():
    """Test the truncation order is the last known t-exponent"""
    series = BiGradedSeries(0, 4, {0: ONE})

    assert series.truncation_order == 4
    assert series.coefficient(4) == ZERO
