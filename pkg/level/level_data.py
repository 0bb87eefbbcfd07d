"""Level-k truncation: θ̌, the lattice M, P_k, P̌_k, the torus points Σ_k and
the finite group T_k."""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, Iterator, List, Optional, Sequence, Union

import numpy as np
import sympy

from affine.types import AffineData, AffineType, affine_data, parse_affine_type
from config.settings import FUNDAMENTAL_SET_CAP, TORUS_GROUP_CAP
from level.torus import TorusPoint
from roots.root_system import (
    Coweight,
    RootSystem,
    Weight,
    build_root_system,
    common_denominator,
    dual_involution,
    orbit_levels,
    theta_check_cases,
)
from utils.cache import memoized
from utils.errors import GroupTooLarge, InvalidWeight, TableInconsistency, WrongTypeClass
from utils.logger import log


@dataclass(eq=False)
class LevelData:
    """Everything that depends on the level k.

    Σ_k is index-aligned with P_k. For the coweight class (r > 1, not A_2n^(2))
    the point at index i is built from the coweight dual_bijection(P_k[i]).
    """
    affine: AffineData
    rs: RootSystem
    k: int
    theta_check: Weight = ()
    M_basis: np.ndarray = field(default=None, repr=False)
    P_k: List[Weight] = field(default_factory=list)
    P_k_dual: Optional[List[Coweight]] = None
    sigma_k: List[TorusPoint] = field(default_factory=list, repr=False)
    norm_const: int = 0
    phase_matrix: np.ndarray = field(default=None, repr=False)
    phase_denominator: int = 1
    _index: Dict[Weight, int] = field(default_factory=dict, repr=False)
    _label_index: Dict[tuple, int] = field(default_factory=dict, repr=False)

    @property
    def affine_type(self) -> AffineType:
        return self.affine.affine_type

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def shifted_level(self) -> int:
        """k + ȟ."""
        return self.k + self.affine.dual_coxeter

    @property
    def uses_weight_torus(self) -> bool:
        return self.affine_type.uses_weight_torus

    @property
    def phase_numerators(self) -> np.ndarray:
        """|Σ_k| x n integer numerators of the torus points."""
        return np.array([t.numerators for t in self.sigma_k], dtype=np.int64).reshape(-1, self.rank)

    def level_of(self, weight: Weight) -> int:
        """<λ, θ̌>."""
        return int(sum(int(a) * int(b) for a, b in zip(weight, self.theta_check)))

    def index(self, weight) -> int:
        """Position of λ in P_k.

        Raises:
            InvalidWeight: λ not in P_k
        """
        key = tuple(int(v) for v in weight)
        if key not in self._index:
            raise InvalidWeight(f"{key} is not in P_{self.k} of {self.affine_type}")
        return self._index[key]

    def point_for(self, label) -> TorusPoint:
        """Σ_k point built from a given weight (weight class) or coweight."""
        key = tuple(int(v) for v in label)
        if key not in self._label_index:
            raise InvalidWeight(f"no torus point labelled {key} at level {self.k}")
        return self.sigma_k[self._label_index[key]]

    def star(self, weight: Weight) -> Weight:
        return dual_involution(self.rs, weight)

    def star_indices(self) -> List[int]:
        """Index of λ* for each λ in P_k."""
        return [self.index(self.star(w)) for w in self.P_k]


def theta_check(d: AffineData, rs: RootSystem) -> Weight:
    """Values <ω_j, θ̌> for j = 1..n.

    θ̌ equals Σ ǎ_i α̌_i over the finite nodes; the case-wise definition from the
    root system must coincide with it.

    Raises:
        TableInconsistency: the two constructions disagree or ȟ != <ρ, θ̌> + 1
    """
    from_comarks = tuple(d.finite_comarks)
    from_roots = theta_check_cases(rs, d)
    if from_roots != from_comarks:
        raise TableInconsistency(
            f"{d.affine_type}: θ̌ from root system {from_roots} disagrees with comarks {from_comarks}"
        )
    if sum(from_comarks) + 1 != d.dual_coxeter:
        raise TableInconsistency(f"{d.affine_type}: ȟ != <ρ, θ̌> + 1")
    return from_comarks


def lattice_M(d: AffineData, rs: RootSystem) -> np.ndarray:
    """Basis of M in ω-coordinates, one basis vector per column.

    κ(α̌_i) = α_i / d_i for r = 1 and A_2n^(2), the simple roots α_i otherwise.

    Raises:
        TableInconsistency: a basis vector is not integral
    """
    n = rs.rank
    basis = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        scale = Fraction(1) / rs.form_factors[i] if d.affine_type.uses_weight_torus else Fraction(1)
        for j in range(n):
            value = scale * int(rs.cartan[j, i])
            if value.denominator != 1:
                raise TableInconsistency(f"{d.affine_type}: M basis vector {i + 1} is not integral")
            basis[j, i] = int(value)
    return basis


def _bounded_dominant(coefficients: Sequence[int], k: int) -> List[tuple]:
    """All non-negative integer vectors x with Σ c_j x_j <= k, lexicographic."""
    ranges = [range(k // int(c) + 1) for c in coefficients]
    found = [
        vec for vec in itertools.product(*ranges)
        if sum(int(c) * v for c, v in zip(coefficients, vec)) <= k
    ]
    return sorted(found)


def level_weights(theta: Sequence[int], k: int) -> List[Weight]:
    """P_k: dominant λ with <λ, θ̌> <= k, sorted lexicographically."""
    if k < 0:
        raise InvalidWeight(f"level must be non-negative, got {k}")
    return _bounded_dominant(theta, k)


def _dual_coweights(rs: RootSystem, k: int) -> List[Coweight]:
    theta_root = [int(v) for v in rs.positive_roots_simple[int(np.argmax(rs.positive_roots_simple.sum(axis=1)))]]
    return _bounded_dominant(theta_root, k)


def dual_level_coweights(ld: LevelData) -> List[Coweight]:
    """P̌_k: dominant coweights λ̌ with <θ, λ̌> <= k.

    Raises:
        WrongTypeClass: r = 1 or A_2n^(2)
    """
    if ld.uses_weight_torus:
        raise WrongTypeClass(f"P̌_k is only defined for twisted types other than A_2n^(2), not {ld.affine_type}")
    return _dual_coweights(ld.rs, ld.k)


def dual_bijection(ld: LevelData) -> Dict[Weight, Coweight]:
    """Bijection P_k -> P̌_k, ω_i -> ω̌_{n+1-i}.

    Raises:
        WrongTypeClass: r = 1 or A_2n^(2)
        TableInconsistency: the node reversal does not restrict to a bijection
    """
    dual = set(dual_level_coweights(ld))
    mapping = {w: tuple(reversed(w)) for w in ld.P_k}
    if set(mapping.values()) != dual or len(dual) != len(ld.P_k):
        raise TableInconsistency(f"{ld.affine_type}: |P_k| and |P̌_k| do not match under node reversal")
    return mapping


def _phase_coefficients(ld: LevelData) -> List[List[Fraction]]:
    """C with q_j = Σ_i v_i C[i][j] / (k+ȟ) for the shifted source vector v."""
    if ld.uses_weight_torus:
        return ld.rs.gram
    return ld.rs.cartan_inverse


def sigma_k(ld: LevelData) -> List[TorusPoint]:
    """Torus points of Σ_k, index-aligned with P_k.

    Weight class: q_j = (ρ+λ | ω_j)/(k+ȟ). Coweight class: q_j = <ω_j, ρ̌+λ̌>/(k+ȟ)
    with λ̌ = dual_bijection(λ).

    Raises:
        TableInconsistency: a point is not regular or two points coincide
    """
    coeffs = _phase_coefficients(ld)
    scale = common_denominator(v for row in coeffs for v in row)
    matrix = np.array([[int(v * scale) for v in row] for row in coeffs], dtype=np.int64)
    denominator = scale * ld.shifted_level
    ld.phase_matrix = matrix
    ld.phase_denominator = denominator

    if ld.uses_weight_torus:
        sources = ld.P_k
    else:
        bijection = dual_bijection(ld)
        sources = [bijection[w] for w in ld.P_k]
    points = []
    for label in sources:
        shifted = np.array(label, dtype=np.int64) + 1
        points.append(TorusPoint(tuple(int(v) for v in shifted @ matrix), denominator, tuple(label)))

    for t in points:
        if not is_regular(ld, t):
            raise TableInconsistency(f"{ld.affine_type} k={ld.k}: Σ_k point {t.label} is not regular")
    if len({t.numerators for t in points}) != len(points):
        raise TableInconsistency(f"{ld.affine_type} k={ld.k}: λ -> t_λ is not injective")
    return points


def is_regular(ld: LevelData, t: TorusPoint) -> bool:
    """True iff α(t) != 1 for every positive root α."""
    values = ld.rs.positive_roots @ np.array(t.numerators, dtype=np.int64)
    return bool(np.all(values % t.denominator != 0))


def _norm_const(ld: LevelData) -> int:
    det = sympy.Matrix(ld.M_basis.tolist()).det(method="bareiss")
    return int(ld.shifted_level ** ld.rank * abs(int(det)))


def enumerate_T_k(ld: LevelData, cap: Optional[int] = None) -> Iterator[TorusPoint]:
    """Every element of T_k = {t : α(t) = 1 for α in (k+ȟ)M}.

    T_k is the dual lattice of (k+ȟ)M modulo the integers; it is enumerated as
    the closure of the rows of ((k+ȟ)B)^-1 under addition mod 1.

    Raises:
        GroupTooLarge: |T_k| above the cap
    """
    cap = TORUS_GROUP_CAP if cap is None else cap
    if ld.norm_const > cap:
        raise GroupTooLarge(f"T_k of {ld.affine_type} at level {ld.k}", ld.norm_const, cap)

    inverse = (sympy.Matrix(ld.M_basis.tolist()) * ld.shifted_level).inv()
    entries = [Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in inverse]
    denominator = common_denominator(entries)
    gens = [
        tuple(int(inverse[i, j] * denominator) % denominator for j in range(ld.rank))
        for i in range(ld.rank)
    ]

    zero = (0,) * ld.rank
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for q in frontier:
            for g in gens:
                image = tuple((a + b) % denominator for a, b in zip(q, g))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt

    if len(seen) != ld.norm_const:
        raise TableInconsistency(
            f"{ld.affine_type} k={ld.k}: |T_k| = {len(seen)} but |P/(k+ȟ)M| = {ld.norm_const}"
        )
    for q in sorted(seen):
        yield TorusPoint(q, denominator)


@dataclass
class FundamentalSetReport:
    """Outcome of the W x Σ_k -> T_k^reg comparison."""
    regular_count: int
    orbit_count: int
    distinct_images: int
    ok: bool


def fundamental_set_check(ld: LevelData, cap: Optional[int] = None) -> FundamentalSetReport:
    """Check that every regular element of T_k is w(t) for exactly one (w, t) in W x Σ_k."""
    cap = FUNDAMENTAL_SET_CAP if cap is None else cap
    points = list(enumerate_T_k(ld, cap=cap))
    common = lcm(points[0].denominator, ld.phase_denominator)
    regular = {
        p.rescaled(common) for p in points if is_regular(ld, p)
    }

    reflectors = ld.rs.weight_reflectors if ld.uses_weight_torus else ld.rs.coweight_reflectors
    factor = common // ld.phase_denominator
    images = []
    for t in ld.sigma_k:
        shifted = np.array(t.label, dtype=np.int64) + 1
        orbit = np.vstack(orbit_levels(shifted, reflectors))
        nums = (orbit @ ld.phase_matrix * factor) % common
        images.extend(tuple(int(v) for v in row) for row in nums)

    distinct = set(images)
    ok = (
        len(images) == ld.rs.weyl_order * len(ld.sigma_k)
        and len(distinct) == len(images)
        and distinct == regular
    )
    return FundamentalSetReport(len(regular), len(images), len(distinct), ok)


@memoized()
def build_level_data(affine: AffineData, k: int) -> LevelData:
    """Construct and verify all level-k data of an affine type."""
    if k < 0:
        raise InvalidWeight(f"level must be non-negative, got {k}")
    rs = build_root_system(affine)
    ld = LevelData(affine=affine, rs=rs, k=int(k))
    ld.theta_check = theta_check(affine, rs)
    ld.M_basis = lattice_M(affine, rs)
    ld.P_k = level_weights(ld.theta_check, ld.k)
    ld._index = {w: i for i, w in enumerate(ld.P_k)}
    if not ld.uses_weight_torus:
        ld.P_k_dual = dual_level_coweights(ld)
    ld.norm_const = _norm_const(ld)
    ld.sigma_k = sigma_k(ld)
    ld._label_index = {t.label: i for i, t in enumerate(ld.sigma_k)}

    for w in ld.P_k:
        if ld.level_of(ld.star(w)) != ld.level_of(w):
            raise TableInconsistency(f"{affine.affine_type}: θ̌ is not fixed by *")

    log.debug(
        f"Level data {affine.affine_type} k={k}: |P_k|={len(ld.P_k)}, "
        f"norm_const={ld.norm_const}, D={ld.phase_denominator}"
    )
    return ld


def level_data(affine_type: Union[str, AffineType, AffineData], k: int) -> LevelData:
    """Level data from a type label, an AffineType or AffineData."""
    if isinstance(affine_type, str):
        affine_type = parse_affine_type(affine_type)
    if isinstance(affine_type, AffineType):
        affine_type = affine_data(affine_type)
    return build_level_data(affine_type, int(k))
