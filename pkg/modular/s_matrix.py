"""Modular S-matrix from an affine type to its adjacent type."""
import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np

from affine.types import AffineData, AffineType, affine_data
from characters.weyl_characters import numerator_matrix
from config.settings import TOL_UNITARITY
from level.level_data import LevelData, level_data
from roots.root_system import Coweight, Weight, build_root_system
from utils.decorators import timer
from utils.errors import TableInconsistency, WrongTypeClass
from utils.logger import log

_I_POWERS = (1, 1j, -1, -1j)


def adjacent_type(t: AffineType) -> AffineType:
    """A' of an affine type; A' = A for r = 1 and A_2n^(2)."""
    return affine_data(t).adjacent_type


@dataclass(frozen=True)
class EpsilonMap:
    """Node map ε with ε(ω'_i) = ω̌_σ(i), σ stored 0-based."""
    source: AffineType
    target: AffineType
    sigma: Tuple[int, ...]

    def apply(self, weight: Weight) -> Coweight:
        """Coweight of A with coordinates x̌_σ(i) = μ'_i."""
        coweight = [0] * len(self.sigma)
        for i, j in enumerate(self.sigma):
            coweight[j] = int(weight[i])
        return tuple(coweight)


def _as_data(t: Union[AffineType, AffineData]) -> AffineData:
    return t if isinstance(t, AffineData) else affine_data(t)


def epsilon_map(source: Union[AffineType, AffineData], target: Union[AffineType, AffineData]) -> EpsilonMap:
    """Find the node bijection σ making the root system of A' dual to that of A.

    σ must satisfy A'_ij = A_σ(j)σ(i) on the finite Cartan matrices and
    <ω'_i, θ̌'> = <θ, ω̌_σ(i)>, so that ε restricts to P'_k -> P̌_k.

    Raises:
        WrongTypeClass: A is untwisted or A_2n^(2)
        TableInconsistency: no or several permutations qualify
    """
    d = _as_data(source)
    d_adj = _as_data(target)
    if d.affine_type.uses_weight_torus:
        raise WrongTypeClass(f"ε is only defined for twisted types other than A_2n^(2), not {d.affine_type}")
    if d_adj.affine_type != d.adjacent_type:
        raise TableInconsistency(f"{d_adj.affine_type} is not adjacent to {d.affine_type}")

    rs = build_root_system(d)
    n = rs.rank
    A = d.cartan
    A_adj = d_adj.cartan
    theta = rs.positive_roots_simple[int(np.argmax(rs.positive_roots_simple.sum(axis=1)))]
    comarks_adj = d_adj.finite_comarks

    found = [
        sigma for sigma in itertools.permutations(range(n))
        if all(A_adj[i, j] == A[sigma[j], sigma[i]] for i in range(n) for j in range(n))
        and all(comarks_adj[i] == int(theta[sigma[i]]) for i in range(n))
    ]
    if len(found) != 1:
        raise TableInconsistency(f"{d.affine_type} -> {d_adj.affine_type}: {len(found)} candidate node maps")
    sigma = tuple(found[0])
    log.info(f"ε node map {d.affine_type} -> {d_adj.affine_type}: " + ", ".join(
        f"ω'_{i + 1}->ω̌_{j + 1}" for i, j in enumerate(sigma)
    ))
    return EpsilonMap(d.affine_type, d_adj.affine_type, sigma)


@dataclass
class SMatrix:
    """S_λ,μ' with rows P_k(A) and columns P_k(A')."""
    source: AffineType
    target: AffineType
    k: int
    rows: List[Weight]
    cols: List[Weight]
    entries: np.ndarray

    def unitarity_residual(self) -> float:
        """max |S S̄^t - I|."""
        product = self.entries @ self.entries.conj().T
        return float(np.max(np.abs(product - np.eye(len(self.rows)))))


def _column_points(ld: LevelData, ld_adj: LevelData) -> List[int]:
    """Σ_k index of t_μ' for each μ' in P_k(A')."""
    if ld.uses_weight_torus:
        return [ld.index(w) for w in ld_adj.P_k]
    eps = epsilon_map(ld.affine, ld_adj.affine)
    images = [eps.apply(w) for w in ld_adj.P_k]
    if sorted(images) != sorted(ld.P_k_dual):
        raise TableInconsistency(f"{ld.affine_type}: ε does not restrict to a bijection P'_k -> P̌_k")
    return [ld._label_index[x] for x in images]


@timer
def s_matrix(source: Union[str, AffineType], k: int) -> SMatrix:
    """S_λ,μ' = i^{|Φ+|} |P/(k+ȟ)M|^{-1/2} J_λ(t_μ').

    Raises:
        TableInconsistency: |P_k| != |P'_k|, positive root counts give different
            phases, or ε fails to be a bijection
    """
    ld = level_data(source, k)
    ld_adj = level_data(ld.affine.adjacent_type, k)
    if len(ld.P_k) != len(ld_adj.P_k):
        raise TableInconsistency(f"|P_k| = {len(ld.P_k)} but |P'_k| = {len(ld_adj.P_k)}")
    if ld.rs.num_positive_roots % 4 != ld_adj.rs.num_positive_roots % 4:
        raise TableInconsistency("i^|Φ+| differs between A and A'")

    phase = _I_POWERS[ld.rs.num_positive_roots % 4]
    J = numerator_matrix(ld)
    entries = phase / np.sqrt(ld.norm_const) * J[:, _column_points(ld, ld_adj)]
    S = SMatrix(ld.affine_type, ld_adj.affine_type, ld.k, list(ld.P_k), list(ld_adj.P_k), entries)
    log.debug(f"S-matrix {S.source}->{S.target} k={k}: unitarity residual {S.unitarity_residual():.2e}")
    return S


@dataclass
class TransposeReport:
    ok: bool
    max_deviation: float
    first_offending: Optional[Tuple[Weight, Weight]] = None


def check_transpose(source: Union[str, AffineType], k: int, tolerance: Optional[float] = None) -> TransposeReport:
    """Compare S^t (A -> A') with S' (A' -> A) entrywise."""
    tolerance = TOL_UNITARITY if tolerance is None else tolerance
    S = s_matrix(source, k)
    S_adj = s_matrix(S.target, k)
    deviation = np.abs(S.entries.T - S_adj.entries)
    worst = float(deviation.max())
    first = None
    if worst >= tolerance:
        r, c = np.argwhere(deviation >= tolerance)[0]
        first = (S_adj.rows[r], S_adj.cols[c])
    return TransposeReport(worst < tolerance, worst, first)


def verlinde_diagonalization(S: SMatrix) -> np.ndarray:
    """c_λμ^ν = Σ_τ S_λτ S_μτ conj(S_ντ) / S_0τ as a complex array.

    Raises:
        WrongTypeClass: A' != A or A uses the coweight torus
    """
    if S.source != S.target or not S.source.uses_weight_torus:
        raise WrongTypeClass(f"Verlinde diagonalization needs a self-adjacent weight-class type, not {S.source}")
    E = S.entries
    zero = S.rows.index((0,) * len(S.rows[0]))
    return np.einsum("at,bt,ct->abc", E / E[zero], E, E.conj())


def quantum_dimensions(S: SMatrix) -> List[float]:
    """d_λ = S_λ0 / S_00 for each row λ (self-adjacent types)."""
    if S.source != S.target or not S.source.uses_weight_torus:
        raise WrongTypeClass(f"quantum dimensions need a self-adjacent weight-class type, not {S.source}")
    zero = S.rows.index((0,) * len(S.rows[0]))
    return [float((S.entries[a, zero] / S.entries[zero, zero]).real) for a in range(len(S.rows))]
