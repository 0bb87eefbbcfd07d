"""Fusion coefficients, fusion tables and higher-genus Verlinde traces."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from affine.types import AffineType
from characters.weyl_characters import character_matrix, delta_vector
from config.settings import DEFAULT_THREADS, TOL_INTEGRALITY
from level.level_data import LevelData
from roots.representations import tensor_decompose
from roots.root_system import Weight
from utils.decorators import timer
from utils.errors import IntegralityViolation, InvariantFailure, InvalidWeight
from utils.logger import log


@dataclass
class FusionTable:
    """Structure constants c_λμ^ν of R_k(A), indexed by P_k^3 in P_k order.

    Attributes:
        affine_type: Cartan label
        k: level
        weights: P_k
        coeffs: integer array, coeffs[λ, μ, ν] = c_λμ^ν
        residual: largest |raw - rounded| seen while rounding
        warnings: non-fatal observations (negative twisted coefficients)
    """
    affine_type: AffineType
    k: int
    weights: List[Weight]
    coeffs: np.ndarray
    residual: float = 0.0
    warnings: List[str] = field(default_factory=list)

    def coefficient(self, lam, mu, nu) -> int:
        idx = {w: i for i, w in enumerate(self.weights)}
        return int(self.coeffs[idx[tuple(lam)], idx[tuple(mu)], idx[tuple(nu)]])

    def nonzero_entries(self) -> List[Tuple[int, int, int, int]]:
        """(λ-idx, μ-idx, ν-idx, c) for every nonzero coefficient."""
        return [(int(a), int(b), int(c), int(self.coeffs[a, b, c])) for a, b, c in zip(*np.nonzero(self.coeffs))]

    def product(self, lam, mu) -> dict:
        """Expansion of χ_λ χ_μ as {ν: c}."""
        idx = {w: i for i, w in enumerate(self.weights)}
        row = self.coeffs[idx[tuple(lam)], idx[tuple(mu)]]
        return {self.weights[c]: int(row[c]) for c in np.flatnonzero(row)}


def _check_weights(ld: LevelData, *weights) -> List[int]:
    return [ld.index(tuple(int(v) for v in w)) for w in weights]


def _weighted_characters(ld: LevelData, threads: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    X = character_matrix(ld, threads)
    return X, delta_vector(ld) / ld.norm_const


def fusion_coefficient(ld: LevelData, lam, mu, nu, tolerance: Optional[float] = None) -> int:
    """c_λμ^ν = (1/|T_k|) Σ_t χ_λ(t) χ_μ(t) χ_ν*(t) Δ(t), rounded.

    Raises:
        InvalidWeight: a weight is not in P_k
        IntegralityViolation: the raw value is not within tolerance of an integer
    """
    tolerance = TOL_INTEGRALITY if tolerance is None else tolerance
    a, b, c = _check_weights(ld, lam, mu, nu)
    X, w = _weighted_characters(ld)
    raw = complex(np.sum(X[a] * X[b] * np.conj(X[c]) * w))
    value = int(round(raw.real))
    if abs(raw - value) >= tolerance:
        raise IntegralityViolation((ld.P_k[a], ld.P_k[b], ld.P_k[c]), raw, tolerance)
    return value


@timer
def fusion_table(ld: LevelData, threads: Optional[int] = None, tolerance: Optional[float] = None) -> FusionTable:
    """All |P_k|^3 fusion coefficients with the ring axioms verified on integers.

    Raises:
        IntegralityViolation: first triple whose raw value is not near an integer
        InvariantFailure: unit, commutativity, S_3 symmetry, associativity or
            (untwisted) non-negativity fails
    """
    tolerance = TOL_INTEGRALITY if tolerance is None else tolerance
    threads = DEFAULT_THREADS if threads is None else threads
    X, w = _weighted_characters(ld, threads)
    XH = np.conj(X).T

    def row(a: int) -> np.ndarray:
        return (X[a] * X * w) @ XH

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        raw = np.stack(list(pool.map(row, range(len(ld.P_k)))))

    rounded = np.rint(raw.real).astype(np.int64)
    deviation = np.abs(raw - rounded)
    residual = float(deviation.max()) if deviation.size else 0.0
    if residual >= tolerance:
        a, b, c = np.unravel_index(int(np.argmax(deviation)), deviation.shape)
        raise IntegralityViolation((ld.P_k[a], ld.P_k[b], ld.P_k[c]), complex(raw[a, b, c]), tolerance)

    table = FusionTable(ld.affine_type, ld.k, list(ld.P_k), rounded, residual)
    verify_ring_axioms(ld, table)
    log.info(f"Fusion table {ld.affine_type} k={ld.k}: {len(ld.P_k)} weights, max residual {residual:.2e}")
    return table


def verify_ring_axioms(ld: LevelData, table: FusionTable) -> None:
    """Unit, commutativity, S_3 symmetry of N_λμν = c_λμ^ν*, associativity, non-negativity."""
    c = table.coeffs
    size = len(table.weights)
    zero = ld.index((0,) * ld.rank)

    if not np.array_equal(c[zero], np.eye(size, dtype=np.int64)):
        raise InvariantFailure("unit", "c_0λ^ν != δ_λν")
    if not np.array_equal(c, c.transpose(1, 0, 2)):
        raise InvariantFailure("commutativity")

    N = c[:, :, ld.star_indices()]
    for perm in ((1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)):
        if not np.array_equal(N, N.transpose(perm)):
            raise InvariantFailure("S3 symmetry", f"N_λμν not invariant under {perm}")

    left = np.einsum("abs,sdt->abdt", c, c)
    right = np.einsum("bds,ast->abdt", c, c)
    if not np.array_equal(left, right):
        raise InvariantFailure("associativity")

    negative = np.argwhere(c < 0)
    if len(negative):
        a, b, d = negative[0]
        message = (
            f"{len(negative)} negative coefficients, e.g. c_{table.weights[a]},{table.weights[b]}"
            f"^{table.weights[d]} = {c[a, b, d]}"
        )
        if ld.affine_type.is_untwisted:
            raise InvariantFailure("non-negativity", message)
        log.warning(f"{ld.affine_type} k={ld.k}: {message}")
        table.warnings.append(message)


def fusion_matrices(table: FusionTable) -> np.ndarray:
    """Stack of integer matrices N_λ with (N_λ)_μν = c_λμ^ν."""
    return table.coeffs.copy()


def fusion_matrix_residual(ld: LevelData, table: FusionTable) -> float:
    """max |N_λ X - X diag-row χ_λ|: the character table diagonalizes every N_λ."""
    X = character_matrix(ld)
    worst = 0.0
    for a, N in enumerate(fusion_matrices(table)):
        worst = max(worst, float(np.max(np.abs(N @ X - X * X[a]))))
    return worst


@dataclass
class VerlindeResult:
    """Reported value of a Verlinde trace."""
    value: int
    raw: complex
    residual: float
    integral: bool


def verlinde_trace(ld: LevelData, genus: int, weights: Sequence = (), tolerance: Optional[float] = None) -> VerlindeResult:
    """|T_k|^{g-1} Σ_t Π_i χ_λi(t) Δ(t)^{1-g}.

    Raises:
        InvalidWeight: a weight outside P_k or negative genus
        IntegralityViolation: non-integral result, except for twisted types at
            genus >= 1 where the miss is only logged
    """
    tolerance = TOL_INTEGRALITY if tolerance is None else tolerance
    if genus < 0:
        raise InvalidWeight(f"genus must be non-negative, got {genus}")
    indices = _check_weights(ld, *weights)
    X = character_matrix(ld)
    product = np.ones(len(ld.sigma_k), dtype=complex)
    for a in indices:
        product = product * X[a]
    raw = complex(np.sum(product * delta_vector(ld) ** (1 - genus)) * float(ld.norm_const) ** (genus - 1))
    value = int(round(raw.real))
    residual = abs(raw - value)
    integral = residual < tolerance
    if not integral:
        if not ld.affine_type.is_untwisted and genus >= 1:
            log.warning(f"{ld.affine_type} k={ld.k} genus {genus}: trace {raw} is {residual:.2e} from an integer")
        else:
            raise IntegralityViolation(("genus", genus, tuple(tuple(w) for w in weights)), raw, tolerance)
    return VerlindeResult(value, raw, residual, integral)


@dataclass
class StabilizationResult:
    applies: bool
    classical: int
    fusion: int


def stabilization_check(ld: LevelData, lam, mu, nu) -> StabilizationResult:
    """Compare c_λμ^ν with the classical multiplicity when <λ+μ+ν, θ̌> <= 2k.

    Raises:
        InvariantFailure: the bound holds but the two numbers differ
    """
    lam, mu, nu = (tuple(int(v) for v in w) for w in (lam, mu, nu))
    applies = ld.level_of(lam) + ld.level_of(mu) + ld.level_of(nu) <= 2 * ld.k
    classical = tensor_decompose(ld.rs, lam, mu).get(nu, 0)
    fusion = fusion_coefficient(ld, lam, mu, nu)
    if applies and classical != fusion:
        raise InvariantFailure(
            "stabilization",
            f"{ld.affine_type} k={ld.k} ({lam},{mu},{nu}): classical {classical} != fusion {fusion}",
        )
    return StabilizationResult(applies, classical, fusion)
