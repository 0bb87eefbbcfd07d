"""Alcove folding of classical constituents and the Kac-Walton formula."""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np

from characters.weyl_characters import numerator_matrix, numerator_vector
from config.settings import TOL_INTEGRALITY
from level.level_data import LevelData
from roots.representations import tensor_decompose
from roots.root_system import Weight
from utils.cache import memoized
from utils.errors import InvalidWeight, NumericalFailure, TableInconsistency

FOLD_METHODS = ("projection", "reflection")

# Upper bound on reflections applied by the exact fold before giving up
_MAX_REFLECTIONS = 100000


@dataclass(frozen=True)
class FoldResult:
    """Either a wall (sign 0, no weight) or ν in P_k with sign ±1."""
    weight: Optional[Weight]
    sign: int

    @property
    def is_wall(self) -> bool:
        return self.weight is None


WALL = FoldResult(None, 0)


@memoized()
def affine_reflection_vector(ld: LevelData) -> Weight:
    """β̃ = 2κ(θ̌)/<κ(θ̌), θ̌> in ω-coordinates.

    The affine wall reflection is x -> x - (<x, θ̌> - (k+ȟ)) β̃.
    """
    rs = ld.rs
    n = rs.rank
    kappa = [
        sum((Fraction(ld.theta_check[j]) * int(rs.cartan[i, j]) / rs.form_factors[j] for j in range(n)), Fraction(0))
        for i in range(n)
    ]
    pairing = sum((kappa[i] * ld.theta_check[i] for i in range(n)), Fraction(0))
    beta = [2 * v / pairing for v in kappa]
    if any(v.denominator != 1 for v in beta):
        raise TableInconsistency(f"{ld.affine_type}: affine reflection vector {beta} is not integral")
    return tuple(int(v) for v in beta)


def _fold_by_reflection(ld: LevelData, xi: Weight) -> FoldResult:
    rs = ld.rs
    beta = affine_reflection_vector(ld)
    bound = ld.shifted_level
    x = [v + 1 for v in xi]
    sign = 1
    for _ in range(_MAX_REFLECTIONS):
        negative = next((i for i, v in enumerate(x) if v < 0), None)
        if negative is not None:
            coeff = x[negative]
            for j in range(rs.rank):
                x[j] -= coeff * int(rs.cartan[j, negative])
            sign = -sign
            continue
        excess = ld.level_of(x) - bound
        if excess > 0:
            x = [a - excess * b for a, b in zip(x, beta)]
            sign = -sign
            continue
        break
    else:
        raise TableInconsistency(f"{ld.affine_type}: alcove fold of {xi} did not terminate")

    if any(v == 0 for v in x) or ld.level_of(x) == bound:
        return WALL
    return FoldResult(tuple(v - 1 for v in x), sign)


def _fold_by_projection(ld: LevelData, xi: Weight, tolerance: float) -> FoldResult:
    projections = numerator_matrix(ld).conj() @ numerator_vector(ld, xi) / ld.norm_const
    rounded = np.rint(projections.real)
    residual = np.max(np.abs(projections - rounded)) if len(projections) else 0.0
    if residual > tolerance or np.any(np.abs(rounded) > 1):
        raise NumericalFailure(
            f"fold projections of {xi} are not in {{0, ±1}} (residual {residual:.3g})"
        )
    nonzero = np.flatnonzero(rounded)
    if len(nonzero) == 0:
        return WALL
    if len(nonzero) > 1:
        raise NumericalFailure(f"fold of {xi} projects onto {len(nonzero)} weights of P_k")
    idx = int(nonzero[0])
    return FoldResult(ld.P_k[idx], int(rounded[idx]))


@memoized()
def _alcove_fold(ld: LevelData, xi: Weight, method: str, tolerance: float) -> FoldResult:
    if xi in ld._index:
        return FoldResult(xi, 1)
    if method == "reflection":
        return _fold_by_reflection(ld, xi)
    return _fold_by_projection(ld, xi, tolerance)


def alcove_fold(ld: LevelData, xi, method: str = "projection", tolerance: Optional[float] = None) -> FoldResult:
    """Fold a dominant weight ξ into P_k under the dotted action of W_k.

    Args:
        ld: level data
        xi: dominant integral weight (a classical constituent)
        method: "projection" (character-vector projection on Σ_k) or
            "reflection" (exact simple and affine reflections)
        tolerance: projection tolerance, defaults to TOL_INTEGRALITY

    Returns:
        FoldResult with J_ξ = sign * J_ν on Σ_k, or WALL if J_ξ vanishes there.

    Raises:
        NumericalFailure: projections not within tolerance of {0, ±1}
    """
    if method not in FOLD_METHODS:
        raise ValueError(f"unknown fold method '{method}', expected one of {FOLD_METHODS}")
    xi = tuple(int(v) for v in xi)
    if len(xi) != ld.rank or any(v < 0 for v in xi):
        raise InvalidWeight(f"alcove_fold needs a dominant weight of rank {ld.rank}, got {xi}")
    return _alcove_fold(ld, xi, method, TOL_INTEGRALITY if tolerance is None else float(tolerance))


@memoized()
def _fused_product(ld: LevelData, lam: Weight, mu: Weight, method: str) -> Tuple[Tuple[Weight, int], ...]:
    product: Dict[Weight, int] = defaultdict(int)
    for xi, mult in tensor_decompose(ld.rs, lam, mu).items():
        fold = alcove_fold(ld, xi, method=method)
        if not fold.is_wall:
            product[fold.weight] += fold.sign * mult
    return tuple(sorted((nu, c) for nu, c in product.items() if c != 0))


def kac_walton_product(ld: LevelData, lam, mu, method: str = "projection") -> Dict[Weight, int]:
    """Level-k product of λ and μ by folding the classical constituents of V_λ ⊗ V_μ."""
    lam = tuple(int(v) for v in lam)
    mu = tuple(int(v) for v in mu)
    ld.index(lam)
    ld.index(mu)
    return dict(_fused_product(ld, lam, mu, method))


def kac_walton(ld: LevelData, lam, mu, nu, method: str = "projection") -> int:
    """c_λμ^ν as the signed count of classical constituents folding onto ν."""
    nu = tuple(int(v) for v in nu)
    ld.index(nu)
    return kac_walton_product(ld, lam, mu, method).get(nu, 0)


def kac_walton_table(ld: LevelData, method: str = "projection") -> np.ndarray:
    """All c_λμ^ν by Kac-Walton, indexed like a FusionTable."""
    size = len(ld.P_k)
    coeffs = np.zeros((size, size, size), dtype=np.int64)
    for a, lam in enumerate(ld.P_k):
        for b, mu in enumerate(ld.P_k):
            for nu, c in kac_walton_product(ld, lam, mu, method).items():
                coeffs[a, b, ld.index(nu)] = c
    return coeffs
