"""
Colour-2 Unknot Homology Tests

The assembled Poincare series is compared with the closed form
q^2 t^-2 + 1 + q^-2 t^2 + (q^-2 - q^-2 t) / (1 - q^-4 t^2).
"""

import pytest

from ribbon_invariants.exactalg import ONE, ZERO, q_power, quantum_integer
from ribbon_invariants.homology.unknot import (
    closed_form_mismatches,
    closed_form_parts,
    closed_form_series,
    euler_specialization,
    unknot_series,
)


def test_series_matches_closed_form_through_twenty():
    """Test every coefficient through t^20"""
    assembled = unknot_series(20)
    expected = closed_form_series(20)

    for k in range(-2, 21):
        assert assembled.coefficient(k) == expected.coefficient(k)
    assert closed_form_mismatches(20, assembled) == []


def test_low_coefficients():
    """Test the first few coefficients by hand"""
    series = closed_form_series(4)

    assert series.t_min == -2
    assert series.coefficient(-2) == q_power(2)
    assert series.coefficient(-1) == ZERO
    assert series.coefficient(0) == ONE + q_power(-2)
    assert series.coefficient(1) == q_power(-2, -1)
    assert series.coefficient(2) == q_power(-2) + q_power(-6)
    assert series.coefficient(3) == q_power(-6, -1)


def test_t_max_too_small():
    """Test the series needs at least t^4"""
    with pytest.raises(ValueError):
        unknot_series(3)


def test_euler_characteristic_is_quantum_dimension():
    """Test t = 1 recovers [3]"""
    assert euler_specialization(*closed_form_parts()).to_laurent() == quantum_integer(3)


def test_mismatch_detection():
    """Test a doubled series is caught at every nonzero coefficient"""
    expected = closed_form_series(6)
    doubled = expected + expected

    assert closed_form_mismatches(6, expected) == []
    assert closed_form_mismatches(6, doubled) == sorted(expected.coeffs)
