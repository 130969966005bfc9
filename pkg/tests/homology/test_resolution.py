"""
Resolution and Tor Tests

Graded local algebras over Q, minimal free resolutions and bigraded Tor.
"""

import pytest
from sympy import Rational

from ribbon_invariants.homology import (
    GradedAlgebra,
    free_module,
    minimal_resolution,
    quotient_module,
    residue_field,
    tor_bigraded,
    truncated_polynomial_algebra,
)
from ribbon_invariants.homology.unknot import middle_module


# ==========================================
# ALGEBRAS AND MODULES
# ==========================================


def test_truncated_polynomial_algebra():
    """Test K[y1,y2]/(y1^2, y2^2) has the expected basis and grading"""
    algebra = truncated_polynomial_algebra(2)

    assert algebra.labels == ("1", "y1", "y2", "y1*y2")
    assert algebra.degrees == (0, 2, 2, 4)
    assert algebra.is_local()
    assert algebra.check_axioms() == []
    assert algebra.product(1, 1) == {}


def test_truncated_algebra_rejects_negative():
    """Test the variable count must be nonnegative"""
    with pytest.raises(ValueError):
        truncated_polynomial_algebra(-1)


def test_middle_module():
    """Test A/(y1 + y2) is two-dimensional in degrees 0 and 2"""
    module = middle_module()

    assert module.graded_dimension() == {0: 1, 2: 1}
    assert module.check_axioms() == []


def test_residue_field_and_free_module():
    """Test the residue field and a shifted free module"""
    algebra = truncated_polynomial_algebra(2)

    assert residue_field(algebra).graded_dimension() == {0: 1}
    free = free_module(algebra, [0, 3])
    assert free.dim == 8
    assert free.graded_dimension() == {0: 1, 2: 2, 3: 1, 4: 1, 5: 2, 7: 1}
    assert free.check_axioms() == []


def test_quotient_by_everything():
    """Test quotienting by the unit leaves the zero module"""
    algebra = truncated_polynomial_algebra(1)
    assert quotient_module(algebra, [{"1": 1}]).dim == 0


# ==========================================
# RESOLUTIONS
# ==========================================


def test_resolution_of_middle_module():
    """Test the periodic resolution of A/(y1 + y2)"""
    resolution = minimal_resolution(middle_module(), 5)

    assert resolution.ranks == [1] * 6
    assert [step.generator_degrees for step in resolution.steps] == [
        (0,),
        (2,),
        (4,),
        (6,),
        (8,),
        (10,),
    ]
    assert resolution.steps[2].shifts == (-4,)
    assert resolution.compositions_vanish()
    assert resolution.is_minimal()
    assert not resolution.complete


def test_resolution_of_residue_field():
    """Test the ranks of the Koszul-type resolution grow by one"""
    resolution = minimal_resolution(residue_field(truncated_polynomial_algebra(2)), 4)

    assert resolution.ranks == [1, 2, 3, 4, 5]
    assert resolution.compositions_vanish()
    assert resolution.is_minimal()


def test_resolution_over_a_field_ends():
    """Test K over K resolves in one step"""
    ground = residue_field(truncated_polynomial_algebra(0))
    resolution = minimal_resolution(ground, 3)

    assert resolution.ranks == [1]
    assert resolution.complete


def test_non_local_algebra_rejected():
    """Test resolutions need a local algebra"""
    one = Rational(1)
    algebra = GradedAlgebra(
        ("1", "e"),
        (0, 0),
        {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}, (1, 1): {1: one}},
    )
    with pytest.raises(ValueError):
        minimal_resolution(free_module(algebra, [0]), 1)


# ==========================================
# TOR
# ==========================================


def test_tor_of_middle_module():
    """Test Tor(M, M) alternates between degrees 2i and 2i + 2"""
    module = middle_module()
    table = tor_bigraded(module, module, 7)

    assert table.degree(0) == {0: 1, 2: 1}
    for i in range(1, 8):
        expected = 2 * i if i % 2 else 2 * i + 2
        assert table.degree(i) == {expected: 1}
    assert table[(1, 2)] == 1
    assert table[(1, 4)] == 0


def test_tor_of_residue_field():
    """Test Tor_i(K, K) has dimension i + 1 in degree 2i"""
    ground = residue_field(truncated_polynomial_algebra(2))
    table = tor_bigraded(ground, ground, 4)

    for i in range(5):
        assert table.degree(i) == {2 * i: i + 1}


def test_tor_beyond_range_raises():
    """Test reads past i_max are refused"""
    module = middle_module()
    table = tor_bigraded(module, module, 2)

    with pytest.raises(ValueError):
        table.degree(3)
    with pytest.raises(ValueError):
        table[(3, 6)]
    assert table.to_json()["entries"][0] == [0, 0, 1]
