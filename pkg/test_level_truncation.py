#!/usr/bin/env python3
"""Tests for level-k data: P_k, the torus points Σ_k and the group T_k."""

from fractions import Fraction

import pytest

from level import RationalPhase, TorusPoint, level_data, torus_eval
from level.level_data import (
    dual_bijection,
    dual_level_coweights,
    enumerate_T_k,
    fundamental_set_check,
    is_regular,
)
from utils.errors import GroupTooLarge, InvalidAffineType, InvalidWeight, WrongTypeClass


def test_rational_phase_normalization():
    print("Testing exact phases...")
    assert str(RationalPhase(Fraction(7, 6))) == "1/6"
    assert str(RationalPhase(Fraction(-1, 3))) == "2/3"
    assert str(RationalPhase(Fraction(0))) == "0/1"
    assert RationalPhase(Fraction(1, 2)) + RationalPhase(Fraction(1, 2)) == RationalPhase(Fraction(0))
    assert RationalPhase(Fraction(1, 3)) * 3 == RationalPhase(Fraction(0))
    assert RationalPhase.parse("5/6") == -RationalPhase(Fraction(1, 6))
    print("✓ Phases are reduced modulo 1")


def test_torus_point_reduction():
    t = TorusPoint((7, -1), 6)
    assert t.numerators == (1, 5)
    assert t.rescaled(12) == (2, 10)
    with pytest.raises(ValueError):
        t.rescaled(8)


def test_a1_level_one():
    """A_1 at k = 1: P_1 = {0, ω}, phases 1/6 and 1/3, |T_1| = 6."""
    print("\nTesting A1 k=1...")
    ld = level_data("A1~1", 1)
    assert ld.P_k == [(0,), (1,)]
    assert ld.shifted_level == 3
    assert ld.norm_const == 6
    assert ld.point_for((0,)).phase_covector == (RationalPhase(Fraction(1, 6)),)
    assert ld.point_for((1,)).phase_covector == (RationalPhase(Fraction(1, 3)),)
    assert torus_eval(ld.point_for((1,)), (2,)) == RationalPhase(Fraction(2, 3))
    print("✓ A1 k=1 level data")


def test_a1_torus_group():
    ld = level_data("A1~1", 1)
    points = list(enumerate_T_k(ld))
    assert len(points) == 6
    assert sum(is_regular(ld, t) for t in points) == 4
    report = fundamental_set_check(ld)
    assert report.ok
    assert report.regular_count == 4


@pytest.mark.parametrize("label,k", [("A2~1", 2), ("C2~1", 1), ("G2~1", 1), ("A4~2", 3), ("D4~2", 1), ("D4~3", 1)])
def test_fundamental_set(label, k):
    ld = level_data(label, k)
    report = fundamental_set_check(ld)
    assert report.ok
    assert report.regular_count == ld.rs.weyl_order * len(ld.P_k)


def test_torus_group_cap():
    with pytest.raises(GroupTooLarge):
        list(enumerate_T_k(level_data("A2~1", 2), cap=10))


def test_level_weights():
    print("\nTesting P_k...")
    assert level_data("C2~1", 1).P_k == [(0, 0), (0, 1), (1, 0)]
    assert level_data("A4~2", 3).P_k == [(0, 0), (0, 1), (1, 0)]
    assert level_data("A4~2", 1).P_k == [(0, 0)]
    assert len(level_data("A2~1", 2).P_k) == 6
    assert len(level_data("G2~1", 1).P_k) == 2
    print("✓ P_k enumerations")


def test_weights_are_in_alcove():
    ld = level_data("G2~1", 3)
    for w in ld.P_k:
        assert ld.level_of(w) <= ld.k
        assert min(w) >= 0


def test_lattice_index():
    """|P/M| = 4 for C_2^(1), 2 for D_5^(2)."""
    c2 = level_data("C2~1", 1)
    assert c2.norm_const == 4 ** 2 * 4
    d5 = level_data("D5~2", 1)
    assert d5.shifted_level == 9
    assert d5.norm_const == 9 ** 4 * 2


def test_dual_weights_for_coweight_class():
    print("\nTesting P̌_k...")
    ld = level_data("D5~2", 1)
    assert ld.P_k == [(0, 0, 0, 0), (0, 0, 0, 1)]
    assert dual_level_coweights(ld) == [(0, 0, 0, 0), (1, 0, 0, 0)]
    assert dual_bijection(ld) == {(0, 0, 0, 0): (0, 0, 0, 0), (0, 0, 0, 1): (1, 0, 0, 0)}
    assert ld.point_for((1, 0, 0, 0)).label == (1, 0, 0, 0)
    print("✓ Coweight labels")


def test_dual_weights_need_coweight_class():
    with pytest.raises(WrongTypeClass):
        dual_level_coweights(level_data("A1~1", 1))
    with pytest.raises(WrongTypeClass):
        dual_level_coweights(level_data("A4~2", 1))


def test_star():
    ld = level_data("A2~1", 1)
    assert ld.star((1, 0)) == (0, 1)
    assert [ld.P_k[i] for i in ld.star_indices()] == [(0, 0), (1, 0), (0, 1)]


def test_sigma_points_distinct_and_regular():
    ld = level_data("E6~2", 1)
    assert len(ld.sigma_k) == len(ld.P_k)
    assert len({t.numerators for t in ld.sigma_k}) == len(ld.P_k)
    assert all(is_regular(ld, t) for t in ld.sigma_k)


FAMILY_SAMPLES = [
    "A1~1", "A3~1", "B3~1", "B4~1", "C2~1", "C3~1", "D4~1", "D5~1", "E6~1", "E7~1", "E8~1", "F4~1", "G2~1",
    "A4~2", "A6~2", "A5~2", "A7~2", "D4~2", "D5~2", "E6~2", "D4~3",
]


@pytest.mark.parametrize("label", FAMILY_SAMPLES)
def test_dual_coxeter_from_theta(label):
    """ȟ = <ρ, θ̌> + 1."""
    ld = level_data(label, 0)
    assert sum(ld.theta_check) + 1 == ld.affine.dual_coxeter
    assert ld.P_k == [(0,) * ld.rank]


def test_invalid_inputs():
    with pytest.raises(InvalidWeight):
        level_data("A1~1", -1)
    with pytest.raises(InvalidAffineType):
        level_data("B2~1", 1)
    with pytest.raises(InvalidWeight):
        level_data("A1~1", 1).index((2,))


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
