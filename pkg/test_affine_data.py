#!/usr/bin/env python3
"""Tests for affine Cartan labels and their static tables."""

import numpy as np
import pytest

from affine import AffineType, affine_data, parse_affine_type
from affine.types import orbit_dual_coxeter_consistent
from config.constants import TWISTED_FAMILIES
from utils.errors import InvalidAffineType

ALL_TWISTED = ["A4~2", "A6~2", "A5~2", "A7~2", "D4~2", "D5~2", "E6~2", "D4~3"]


def test_parse_labels():
    """Both label notations parse to the same AffineType."""
    print("Testing label parsing...")
    assert parse_affine_type("C2~1") == AffineType("C", 2, 1)
    assert parse_affine_type("A_4^(2)") == AffineType("A", 4, 2)
    assert parse_affine_type("d4~3") == AffineType("D", 4, 3)
    assert str(parse_affine_type("A_4^(2)")) == "A4~2"
    print("✓ Labels parse")


@pytest.mark.parametrize("label", ["B2~1", "D3~1", "A2~2", "A3~2", "D3~2", "E9~1", "F5~1", "A3~3", "E7~2", "G2~2", "C2~2", "nonsense", ""])
def test_invalid_labels_rejected(label):
    with pytest.raises(InvalidAffineType):
        parse_affine_type(label)


def test_invalid_label_is_value_error():
    with pytest.raises(ValueError):
        parse_affine_type("B2~1")


@pytest.mark.parametrize(
    "label,h_dual",
    [
        ("A1~1", 2), ("A2~1", 3), ("C2~1", 3), ("B3~1", 5), ("D4~1", 6), ("G2~1", 4),
        ("F4~1", 9), ("E6~1", 12), ("E8~1", 30),
        ("A4~2", 5), ("A6~2", 7), ("A5~2", 6), ("D4~2", 6), ("E6~2", 12), ("D4~3", 6),
    ],
)
def test_dual_coxeter_numbers(label, h_dual):
    data = affine_data(parse_affine_type(label))
    assert data.dual_coxeter == h_dual
    assert sum(data.comarks) == h_dual


def test_ranks_of_twisted_types():
    """Horizontal rank of each twisted family."""
    print("\nTesting twisted ranks...")
    assert affine_data(parse_affine_type("A4~2")).rank == 2
    assert affine_data(parse_affine_type("A5~2")).rank == 3
    assert affine_data(parse_affine_type("D5~2")).rank == 4
    assert affine_data(parse_affine_type("E6~2")).rank == 4
    assert affine_data(parse_affine_type("D4~3")).rank == 2
    assert str(affine_data(parse_affine_type("D4~3")).finite_type) == "G2"
    print("✓ Ranks match the horizontal subalgebras")


def test_c2_cartan_matrix():
    """A[i][j] = <α_j, α̌_i> with α_2 long."""
    data = affine_data(parse_affine_type("C2~1"))
    assert np.array_equal(data.cartan, np.array([[2, -2], [-1, 2]]))


def test_adjacency():
    print("\nTesting adjacency...")
    assert affine_data(parse_affine_type("A5~2")).adjacent_type == AffineType("D", 4, 2)
    assert affine_data(parse_affine_type("D4~2")).adjacent_type == AffineType("A", 5, 2)
    assert affine_data(parse_affine_type("E6~2")).adjacent_type == AffineType("E", 6, 2)
    assert affine_data(parse_affine_type("A4~2")).adjacent_type == AffineType("A", 4, 2)
    assert affine_data(parse_affine_type("G2~1")).adjacent_type == AffineType("G", 2, 1)
    print("✓ Adjacent types")


@pytest.mark.parametrize("label", ALL_TWISTED + ["C3~1", "E7~1"])
def test_adjacency_is_involutive(label):
    t = parse_affine_type(label)
    adjacent = affine_data(t).adjacent_type
    assert affine_data(adjacent).adjacent_type == t


@pytest.mark.parametrize("label", ALL_TWISTED)
def test_orbit_source_dual_coxeter(label):
    assert orbit_dual_coxeter_consistent(affine_data(parse_affine_type(label)))


def test_twisted_families_listed():
    assert ("A", 2) in TWISTED_FAMILIES
    assert ("D", 3) in TWISTED_FAMILIES


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
