"""
Cartan Data Tests

Cartan matrices, symmetrizers, root systems and Weyl group data in
Bourbaki numbering.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from ribbon_invariants.domain.models import LieType
from ribbon_invariants.quantum.cartan import cartan_data, parse_algebra
from tests.conftest import A1, A2, B2, G2


# ==========================================
# MATRICES AND ROOTS
# ==========================================


def test_a2_cartan(a2):
    """Test A2 rows are simple roots in fundamental coordinates"""
    assert a2.cartan == ((2, -1), (-1, 2))
    assert a2.symmetrizers == (1, 1)
    assert a2.det == 3
    assert a2.inverse_cartan == (
        (Fraction(2, 3), Fraction(1, 3)),
        (Fraction(1, 3), Fraction(2, 3)),
    )


def test_b2_long_root_first(b2):
    """Test B2 numbering puts the long root first"""
    assert b2.cartan == ((2, -2), (-1, 2))
    assert b2.symmetrizers == (2, 1)


@pytest.mark.parametrize(
    ("lie_type", "count"),
    [(A1, 1), (A2, 3), (B2, 4), (G2, 6), (LieType(series="A", rank=3), 6)],
)
def test_positive_root_count(lie_type, count):
    """Test the number of positive roots and the longest word length"""
    cd = cartan_data(lie_type)
    assert len(cd.positive_roots) == count
    assert len(cd.longest_word) == count
    assert cd.is_reduced_longest_word(cd.longest_word)


def test_non_reduced_word_rejected(a2):
    """Test a word of the wrong length is not a longest word"""
    assert not a2.is_reduced_longest_word((0, 1))
    assert not a2.is_reduced_longest_word((0, 0, 0))


def test_pairing_normalization(a1, b2):
    """Test short roots have squared length 2"""
    assert a1.pairing((1,), (1,)) == Fraction(1, 2)
    assert a1.pairing(a1.simple_root(0), a1.simple_root(0)) == 2
    assert b2.pairing(b2.simple_root(1), b2.simple_root(1)) == 2
    assert b2.pairing(b2.simple_root(0), b2.simple_root(0)) == 4


def test_cartan_data_is_memoized():
    """Test one CartanData per Lie type"""
    assert cartan_data(A2) is cartan_data(LieType(series="A", rank=2))
    assert parse_algebra(" b2 ") is cartan_data(B2)


# ==========================================
# WEIGHTS
# ==========================================


@pytest.mark.parametrize(
    ("lie_type", "weight", "dim"),
    [
        (A1, (4,), 5),
        (A2, (1, 0), 3),
        (A2, (1, 1), 8),
        (A2, (2, 0), 6),
        (B2, (1, 0), 5),
        (B2, (0, 1), 4),
        (B2, (1, 1), 16),
        (LieType(series="A", rank=3), (0, 1, 0), 6),
    ],
)
def test_weyl_dimension(lie_type, weight, dim):
    """Test the Weyl dimension formula against known dimensions"""
    cd = cartan_data(lie_type)
    assert cd.weyl_dimension(weight) == dim
    assert len(cd.weight_system(weight)) <= dim


def test_g2_fundamental_dimensions():
    """Test G2 has fundamental modules of dimension 7 and 14"""
    cd = cartan_data(G2)
    assert sorted(cd.weyl_dimension(w) for w in ((1, 0), (0, 1))) == [7, 14]


def test_weight_system_order(a2):
    """Test weights come ordered by depth below the highest weight"""
    assert a2.weight_system((1, 0)) == [(1, 0), (-1, 1), (0, -1)]


def test_weight_system_rejects_non_dominant(a2):
    """Test only dominant highest weights have a weight system"""
    with pytest.raises(ValueError):
        a2.weight_system((1, -1))


def test_minuscule(a2, b2):
    """Test minuscule detection"""
    assert a2.is_minuscule((1, 0))
    assert not a2.is_minuscule((1, 1))
    assert b2.is_minuscule((0, 1))
    assert not b2.is_minuscule((1, 0))


def test_dual_weight(a1, a2, b2):
    """Test lambda* = -w0(lambda)"""
    assert a1.dual_weight((3,)) == (3,)
    assert a2.dual_weight((1, 0)) == (0, 1)
    assert a2.dual_weight((2, 1)) == (1, 2)
    assert b2.dual_weight((1, 1)) == (1, 1)


def test_dominant_conjugate(a2):
    """Test reflection back into the dominant chamber"""
    assert a2.dominant_conjugate((0, -1)) == (1, 0)
    assert a2.dominant_conjugate((-1, 1)) == (1, 0)


def test_two_rho_check(a1, a2, b2):
    """Test 2 rho^vee(lambda) on fundamental weights"""
    assert a1.two_rho_check((1,)) == 1
    assert a2.two_rho_check((1, 0)) == 2
    assert b2.two_rho_check((1, 0)) == 4
    assert b2.two_rho_check((0, 1)) == 3


def test_two_rho_pairing(a2):
    """Test <2 rho, mu> on the weights of the standard A2 module"""
    assert [a2.two_rho_pairing(w) for w in a2.weight_system((1, 0))] == [2, 0, -2]


# ==========================================
# LIE TYPE VALIDATION
# ==========================================


@pytest.mark.parametrize("text", ["D2", "E5", "G3", "B1", "A0"])
def test_invalid_lie_types(text):
    """Test series/rank combinations that are not simple algebras"""
    with pytest.raises(ValidationError):
        LieType.parse(text)


def test_unparseable_algebra():
    """Test garbage algebra names"""
    with pytest.raises(ValueError):
        LieType.parse("Q7")


@pytest.mark.parametrize(("lie_type", "det"), [(B2, 2), (G2, 1), (LieType(series="D", rank=4), 4)])
def test_inverse_cartan_is_exact(lie_type, det):
    """Test the stored inverse multiplies back to the identity with the right determinant"""
    cd = cartan_data(lie_type)
    n = lie_type.rank
    product = [
        [sum(cd.cartan[i][k] * cd.inverse_cartan[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]

    assert cd.det == det
    assert product == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
