#!/usr/bin/env python3
"""Tests for finite root systems, Weyl group actions and representations."""

import itertools
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from affine import affine_data, parse_affine_type
from roots.representations import (
    freudenthal_weight_multiplicities,
    tensor_decompose,
    weyl_dimension,
)
from roots.root_system import (
    build_root_system,
    dual_involution,
    reflect,
    reflect_coweight,
    weight_orbit,
    weyl_fold_dominant,
    weyl_group_elements,
)
from utils.errors import GroupTooLarge, InvalidWeight


def rs_of(label):
    return build_root_system(affine_data(parse_affine_type(label)))


def test_c2_highest_root_and_reflection():
    """θ = 2ω_1 for C_2; s_2(ω_2) = 2ω_1 - ω_2."""
    print("Testing C2 root system...")
    rs = rs_of("C2~1")
    assert rs.highest_root == (2, 0)
    assert rs.num_positive_roots == 4
    assert reflect(rs, (0, 1), 2) == (2, -1)
    assert reflect(rs, (1, 0), 1) == (-1, 1)
    print("✓ C2 highest root and reflections")


def test_reflection_index_checked():
    rs = rs_of("C2~1")
    with pytest.raises(InvalidWeight):
        reflect(rs, (0, 1), 3)


def test_coweight_reflection():
    """s_2 on coweights subtracts x̌_2 α̌_2."""
    assert reflect_coweight(rs_of("C2~1"), (0, 1), 2) == (1, -1)


@pytest.mark.parametrize("label,order,positive", [
    ("A1~1", 2, 1), ("C2~1", 8, 4), ("G2~1", 12, 6), ("A3~1", 24, 6), ("F4~1", 1152, 24),
])
def test_weyl_orders_and_root_counts(label, order, positive):
    rs = rs_of(label)
    assert rs.weyl_order == order
    assert rs.num_positive_roots == positive


def test_weyl_group_enumeration():
    print("\nTesting Weyl group enumeration...")
    rs = rs_of("G2~1")
    elements = list(weyl_group_elements(rs))
    assert len(elements) == 12
    assert sum(parity for _, parity in elements) == 0
    print("✓ G2 has 12 elements, half of them even")


def test_weyl_group_cap():
    with pytest.raises(GroupTooLarge):
        list(weyl_group_elements(rs_of("C2~1"), cap=4))


def test_form_is_normalized():
    """Long roots have squared length 2."""
    rs = rs_of("C2~1")
    assert rs.form(rs.highest_root, rs.highest_root) == Fraction(2)
    assert rs.form(rs.simple_root(1), rs.simple_root(1)) == Fraction(1)


def test_fold_into_dominant_chamber():
    rs = rs_of("C2~1")
    dominant, parity, on_wall = weyl_fold_dominant(rs, (0, -1))
    assert dominant == (0, 1)
    assert parity == -1
    assert on_wall


def test_dual_involution():
    print("\nTesting λ -> λ*...")
    assert dual_involution(rs_of("A2~1"), (1, 0)) == (0, 1)
    assert dual_involution(rs_of("C2~1"), (1, 0)) == (1, 0)
    assert dual_involution(rs_of("A3~1"), (1, 0, 0)) == (0, 0, 1)
    print("✓ Dual involution")


def test_weight_orbit_sizes():
    assert len(weight_orbit(rs_of("A2~1"), (1, 0))) == 3
    assert len(weight_orbit(rs_of("C2~1"), (1, 0))) == 4
    assert len(weight_orbit(rs_of("G2~1"), (1, 1))) == 12


@pytest.mark.parametrize("label,weight,dim", [
    ("A2~1", (1, 0), 3), ("A2~1", (1, 1), 8), ("C2~1", (1, 0), 4), ("C2~1", (0, 1), 5),
    ("G2~1", (0, 1), 7), ("G2~1", (1, 0), 14),
])
def test_weyl_dimension(label, weight, dim):
    assert weyl_dimension(rs_of(label), weight) == dim


def test_adjoint_multiplicities():
    """Zero weight of the A_2 adjoint has multiplicity 2."""
    mults = freudenthal_weight_multiplicities(rs_of("A2~1"), (1, 1))
    assert mults[(0, 0)] == 2
    assert sum(mults.values()) == 8


def test_tensor_products():
    print("\nTesting tensor product decompositions...")
    assert tensor_decompose(rs_of("C2~1"), (1, 0), (1, 0)) == {(0, 0): 1, (0, 1): 1, (2, 0): 1}
    assert tensor_decompose(rs_of("A2~1"), (1, 0), (0, 1)) == {(0, 0): 1, (1, 1): 1}
    assert tensor_decompose(rs_of("A1~1"), (2,), (1,)) == {(1,): 1, (3,): 1}
    print("✓ Tensor products")


def test_orbits_are_memoized():
    rs = rs_of("A3~1")
    weight_orbit(rs, (0, 1, 0))
    weight_orbit(rs, (0, 1, 0))
    assert weight_orbit.cache.get_stats()["hits"] >= 1


def test_tensor_product_dimensions():
    rs = rs_of("G2~1")
    product = tensor_decompose(rs, (1, 0), (0, 1))
    assert sum(weyl_dimension(rs, w) * m for w, m in product.items()) == 14 * 7


PROPERTY_TYPES = ["A2~1", "A3~1", "C2~1", "C3~1", "G2~1", "B3~1"]


def small_dominant_weights(rank, top=2):
    return list(itertools.product(range(top + 1), repeat=rank))


@pytest.mark.parametrize("label", PROPERTY_TYPES)
def test_form_is_symmetric(label):
    """(α_i|α_j) = d_j A_ji = d_i A_ij."""
    rs = rs_of(label)
    for i in range(rs.rank):
        for j in range(rs.rank):
            expected = rs.form_factors[j] * int(rs.cartan[j, i])
            assert expected == rs.form_factors[i] * int(rs.cartan[i, j])
            assert rs.form(rs.simple_root(i + 1), rs.simple_root(j + 1)) == expected


@pytest.mark.parametrize("label", PROPERTY_TYPES)
def test_multiplicities_add_up_to_dimension(label):
    rs = rs_of(label)
    for weight in small_dominant_weights(rs.rank):
        mults = freudenthal_weight_multiplicities(rs, weight)
        assert sum(mults.values()) == weyl_dimension(rs, weight)
        assert mults[weight] == 1


@pytest.mark.parametrize("label", PROPERTY_TYPES)
def test_fold_recovers_every_weyl_image(label):
    """w(λ) folds back to λ with sign (-1)^ℓ(w) for regular dominant λ."""
    rs = rs_of(label)
    lam = np.arange(1, rs.rank + 1, dtype=np.int64)
    images = set()
    for matrix, parity in weyl_group_elements(rs):
        image = tuple(int(v) for v in matrix @ lam)
        images.add(image)
        assert weyl_fold_dominant(rs, image) == (tuple(int(v) for v in lam), parity, False)
    assert len(images) == rs.weyl_order


@pytest.mark.parametrize("label", PROPERTY_TYPES)
def test_tensor_product_commutes(label):
    rs = rs_of(label)
    weights = small_dominant_weights(rs.rank, top=1)
    for lam, mu in itertools.combinations(weights, 2):
        assert tensor_decompose(rs, lam, mu) == tensor_decompose(rs, mu, lam)


def _triple_product(rs, first, second, third):
    result = Counter()
    for xi, m in tensor_decompose(rs, first, second).items():
        for nu, n in tensor_decompose(rs, xi, third).items():
            result[nu] += m * n
    return dict(result)


@pytest.mark.parametrize("label", PROPERTY_TYPES)
def test_tensor_product_associates(label):
    rs = rs_of(label)
    fundamentals = [tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)]
    for lam, mu, nu in itertools.product(fundamentals[:2], repeat=3):
        left = _triple_product(rs, lam, mu, nu)
        right = Counter()
        for xi, m in tensor_decompose(rs, mu, nu).items():
            for eta, n in tensor_decompose(rs, lam, xi).items():
                right[eta] += m * n
        assert left == dict(right)
        dim = weyl_dimension(rs, lam) * weyl_dimension(rs, mu) * weyl_dimension(rs, nu)
        assert sum(weyl_dimension(rs, w) * c for w, c in left.items()) == dim


def test_non_dominant_rejected():
    with pytest.raises(InvalidWeight):
        weyl_dimension(rs_of("A2~1"), (-1, 0))


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
