"""Weyl numerators, characters and the density Δ on the torus points Σ_k.

Phases are exact integers modulo the common denominator D of the level data;
complex numbers only appear through a table of D-th roots of unity.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from config.settings import (
    COMPENSATED_SUM_THRESHOLD,
    DEFAULT_THREADS,
    TOL_PATH_AGREEMENT,
    WEYL_ORDER_CAP,
)
from level.level_data import LevelData
from level.torus import TorusPoint
from roots.representations import weight_system
from roots.root_system import Weight, signed_orbit
from utils.cache import memoized
from utils.errors import GroupTooLarge, InvalidWeight, NumericalFailure

# Orbit rows processed per block when summing over the Weyl group
_CHUNK_ROWS = 20000


@dataclass
class CharacterVector:
    """Values of a class function on Σ_k (Σ_k order) with its label."""
    values: np.ndarray
    label: Optional[Weight] = None

    def __len__(self) -> int:
        return len(self.values)

    def conjugate(self) -> "CharacterVector":
        return CharacterVector(np.conj(self.values), self.label)


@memoized()
def roots_of_unity(denominator: int) -> np.ndarray:
    """exp(2πi m / D) for m = 0..D-1."""
    return np.exp(2j * np.pi * np.arange(denominator) / denominator)


def _weight_tuple(weight, rank: int) -> Weight:
    weight = tuple(int(v) for v in weight)
    if len(weight) != rank:
        raise InvalidWeight(f"weight {weight} has length {len(weight)}, expected {rank}")
    return weight


def _signed_sum(parities: np.ndarray, points: np.ndarray, numerators: np.ndarray, denominator: int) -> np.ndarray:
    """Σ_rows parity * exp(2πi <row, q_t>) for every torus point t (columns).

    Sums with more rows than the compensated threshold are accumulated block
    by block and the block totals combined with math.fsum.
    """
    unity = roots_of_unity(denominator)
    columns = numerators.shape[0]
    if len(points) <= COMPENSATED_SUM_THRESHOLD:
        exponents = (points @ numerators.T) % denominator
        return parities @ unity[exponents]

    real_parts: List[np.ndarray] = []
    imag_parts: List[np.ndarray] = []
    for start in range(0, len(points), _CHUNK_ROWS):
        block = points[start:start + _CHUNK_ROWS]
        exponents = (block @ numerators.T) % denominator
        partial = parities[start:start + _CHUNK_ROWS] @ unity[exponents]
        real_parts.append(partial.real)
        imag_parts.append(partial.imag)
    real = np.array([math.fsum(part[c] for part in real_parts) for c in range(columns)])
    imag = np.array([math.fsum(part[c] for part in imag_parts) for c in range(columns)])
    return real + 1j * imag


def _orbit_of_shifted(ld: LevelData, weight: Weight):
    if ld.rs.weyl_order > WEYL_ORDER_CAP:
        raise GroupTooLarge(f"Weyl group of {ld.rs.finite_type}", ld.rs.weyl_order, WEYL_ORDER_CAP)
    shifted = tuple(v + 1 for v in weight)
    return signed_orbit(shifted, ld.rs.weight_reflectors)


def _weyl_denominator(ld: LevelData, numerators: np.ndarray, denominator: int) -> np.ndarray:
    """J_0 through the product Π_{α>0} 2i sin(π α(q))."""
    values = (ld.rs.positive_roots @ numerators.T) % (2 * denominator)
    return np.prod(2j * np.sin(np.pi * values / denominator), axis=0)


@memoized()
def numerator_vector(ld: LevelData, weight: Weight) -> np.ndarray:
    """J_λ on every point of Σ_k.

    Uses the alternating Weyl sum when |W| is within the cap and otherwise
    the weight-multiplicity character times the product form of J_0.
    """
    weight = _weight_tuple(weight, ld.rank)
    numerators = ld.phase_numerators
    if ld.rs.weyl_order <= WEYL_ORDER_CAP:
        points, parities = _orbit_of_shifted(ld, weight)
        return _signed_sum(parities, points, numerators, ld.phase_denominator)
    return _weight_sum(ld, weight, numerators, ld.phase_denominator) * _weyl_denominator(
        ld, numerators, ld.phase_denominator
    )


def _weight_sum(ld: LevelData, weight: Weight, numerators: np.ndarray, denominator: int) -> np.ndarray:
    points, mults = weight_system(ld.rs, weight)
    return _signed_sum(mults, points, numerators, denominator)


def _single(t: TorusPoint) -> np.ndarray:
    return np.array([t.numerators], dtype=np.int64)


def j_function(ld: LevelData, weight, t: TorusPoint) -> complex:
    """J_λ(t) = Σ_w (-1)^ℓ(w) e^{2πi <w(λ+ρ), q_t>}.

    Raises:
        GroupTooLarge: |W| above the cap (use chi_via_weights instead)
    """
    weight = _weight_tuple(weight, ld.rank)
    points, parities = _orbit_of_shifted(ld, weight)
    return complex(_signed_sum(parities, points, _single(t), t.denominator)[0])


def chi(ld: LevelData, weight, t: TorusPoint) -> complex:
    """χ_λ(t) = J_λ(t) / J_0(t); falls back to chi_via_weights above the Weyl cap."""
    if ld.rs.weyl_order > WEYL_ORDER_CAP:
        return chi_via_weights(ld, weight, t)
    return j_function(ld, weight, t) / j_function(ld, (0,) * ld.rank, t)


def chi_via_weights(ld: LevelData, weight, t: TorusPoint) -> complex:
    """Trace of t on V_λ from the Freudenthal weight multiplicities."""
    weight = _weight_tuple(weight, ld.rank)
    if any(v < 0 for v in weight):
        raise InvalidWeight(f"weight {weight} is not dominant")
    return complex(_weight_sum(ld, weight, _single(t), t.denominator)[0])


def delta(ld: LevelData, t: TorusPoint) -> float:
    """Δ(t) = Π_{α in Φ} (1 - α(t)), checked against |J_0(t)|^2.

    Raises:
        NumericalFailure: the two evaluations disagree or Δ is not positive
    """
    values = ld.rs.positive_roots @ np.array(t.numerators, dtype=np.int64)
    unity = roots_of_unity(t.denominator)
    product = float(np.prod(np.abs(1 - unity[values % t.denominator]) ** 2))
    if ld.rs.weyl_order <= WEYL_ORDER_CAP:
        j0 = j_function(ld, (0,) * ld.rank, t)
        if abs(abs(j0) ** 2 - product) > TOL_PATH_AGREEMENT * max(1.0, product):
            raise NumericalFailure(f"Δ(t) paths disagree: |J_0|^2={abs(j0) ** 2}, product={product}")
    if product <= 0:
        raise NumericalFailure(f"Δ(t) = {product} is not positive at {t.label}")
    return product


@memoized()
def delta_vector(ld: LevelData) -> np.ndarray:
    """Δ on every point of Σ_k."""
    return np.array([delta(ld, t) for t in ld.sigma_k])


def character_vector(ld: LevelData, weight) -> CharacterVector:
    """χ_λ on Σ_k."""
    weight = _weight_tuple(weight, ld.rank)
    values = numerator_vector(ld, weight) / numerator_vector(ld, (0,) * ld.rank)
    return CharacterVector(values, weight)


@memoized()
def _character_matrix(ld: LevelData, threads: int) -> np.ndarray:
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        rows = list(pool.map(lambda w: character_vector(ld, w).values, ld.P_k))
    return np.vstack(rows)


def character_matrix(ld: LevelData, threads: Optional[int] = None) -> np.ndarray:
    """|P_k| x |Σ_k| matrix of χ_λ(t), rows in P_k order."""
    return _character_matrix(ld, DEFAULT_THREADS if threads is None else int(threads))


def numerator_matrix(ld: LevelData) -> np.ndarray:
    """|P_k| x |Σ_k| matrix of J_λ(t)."""
    return np.vstack([numerator_vector(ld, w) for w in ld.P_k])


def inner_product(ld: LevelData, f: CharacterVector, g: CharacterVector) -> complex:
    """(f, g) = (1/|T_k|) Σ_t f(t) conj(g(t)) Δ(t).

    Raises:
        InvalidWeight: vectors not indexed by Σ_k
    """
    if len(f) != len(ld.sigma_k) or len(g) != len(ld.sigma_k):
        raise InvalidWeight(
            f"character vectors of length {len(f)}, {len(g)} do not match |Σ_k| = {len(ld.sigma_k)}"
        )
    return complex(np.sum(f.values * np.conj(g.values) * delta_vector(ld)) / ld.norm_const)


def gram_matrix(ld: LevelData, threads: Optional[int] = None) -> np.ndarray:
    """G_λμ = (χ_λ, χ_μ); the identity matrix by orthonormality."""
    X = character_matrix(ld, threads)
    weights = delta_vector(ld) / ld.norm_const
    return (X * weights) @ X.conj().T
