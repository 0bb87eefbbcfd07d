"""Finite root system engine for the horizontal subalgebra of an affine type.

Weights are integer tuples in the fundamental-weight basis, coweights integer
tuples in the fundamental-coweight basis. The Cartan matrix convention is
A[i][j] = <α_j, α̌_i>, so column j of A is the simple root α_j in ω-coordinates
and row i of A is the simple coroot α̌_i in ω̌-coordinates.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm
from typing import Iterator, List, Optional, Tuple

import numpy as np
import sympy

from affine.types import AffineData, FiniteType
from config.constants import POSITIVE_ROOT_COUNTS, WEYL_GROUP_ORDERS
from config.settings import WEYL_ORDER_CAP
from utils.cache import memoized
from utils.errors import GroupTooLarge, InvalidWeight, TableInconsistency
from utils.logger import log

Weight = Tuple[int, ...]
Coweight = Tuple[int, ...]


def expected_positive_root_count(finite: FiniteType) -> int:
    """Number of positive roots of a finite type."""
    n = finite.rank
    if finite.letter == "A":
        return n * (n + 1) // 2
    if finite.letter in ("B", "C"):
        return n * n
    if finite.letter == "D":
        return n * (n - 1)
    return POSITIVE_ROOT_COUNTS[str(finite)]


def weyl_group_order(finite: FiniteType) -> int:
    """Order of the Weyl group of a finite type."""
    n = finite.rank
    if finite.letter == "A":
        return factorial(n + 1)
    if finite.letter in ("B", "C"):
        return 2 ** n * factorial(n)
    if finite.letter == "D":
        return 2 ** (n - 1) * factorial(n)
    return WEYL_GROUP_ORDERS[str(finite)]


@dataclass(eq=False)
class RootSystem:
    """Finite root system with its normalized invariant form.

    Attributes:
        finite_type: Cartan type of the finite algebra
        rank: n
        cartan: n x n integer matrix, A[i][j] = <α_j, α̌_i>
        form_factors: d_i with (α_i|α_i) = 2 d_i and (α_i|α_j) = d_j A[j][i]
        positive_roots: m x n array, ω-coordinates
        positive_roots_simple: m x n array, simple-root coordinates
        positive_coroots: m x n array, ω̌-coordinates
        positive_coroots_simple: m x n array, simple-coroot coordinates
        highest_root: θ in ω-coordinates
        highest_short_root: θ_s in ω-coordinates
        highest_short_coroot: coroot of θ, ω̌-coordinates
        highest_coroot: coroot of θ_s, ω̌-coordinates
        weyl_order: |W|
        w0_perm: p with -w0(ω_i) = ω_p(i) (0-based)
    """
    finite_type: FiniteType
    rank: int
    cartan: np.ndarray
    form_factors: Tuple[Fraction, ...]
    positive_roots: np.ndarray
    positive_roots_simple: np.ndarray
    positive_coroots: np.ndarray
    positive_coroots_simple: np.ndarray
    highest_root: Weight
    highest_short_root: Weight
    highest_short_coroot: Coweight
    highest_coroot: Coweight
    weyl_order: int
    w0_perm: Tuple[int, ...] = ()
    cartan_inverse: List[List[Fraction]] = field(default_factory=list, repr=False)
    gram: List[List[Fraction]] = field(default_factory=list, repr=False)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def rho_check(self) -> Coweight:
        return (1,) * self.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def weight_reflectors(self) -> np.ndarray:
        """Row i is α_i in ω-coordinates (s_i x = x - x_i α_i)."""
        return self.cartan.T

    @property
    def coweight_reflectors(self) -> np.ndarray:
        """Row i is α̌_i in ω̌-coordinates (s_i x̌ = x̌ - x̌_i α̌_i)."""
        return self.cartan

    def simple_root(self, i: int) -> Weight:
        """α_i in ω-coordinates (1-based index)."""
        return tuple(int(v) for v in self.cartan[:, i - 1])

    def form(self, x, y) -> Fraction:
        """Invariant form (x|y) of two weights in ω-coordinates."""
        return sum(
            (Fraction(int(x[i])) * self.gram[i][j] * int(y[j])
             for i in range(self.rank) for j in range(self.rank) if x[i] and y[j]),
            Fraction(0),
        )

    def root_norm(self, root_simple) -> Fraction:
        """(α|α) of a root given in simple-root coordinates."""
        total = Fraction(0)
        for i in range(self.rank):
            for j in range(self.rank):
                if root_simple[i] and root_simple[j]:
                    total += int(root_simple[i]) * int(root_simple[j]) * self.form_factors[j] * int(self.cartan[j, i])
        return total

    def coroot_simple(self, root_simple) -> Tuple[int, ...]:
        """Coroot of a root, in simple-coroot coordinates."""
        norm = self.root_norm(root_simple)
        coeffs = [Fraction(2 * int(root_simple[j])) * self.form_factors[j] / norm for j in range(self.rank)]
        if any(c.denominator != 1 for c in coeffs):
            raise TableInconsistency(f"{self.finite_type}: non-integral coroot of {tuple(root_simple)}")
        return tuple(int(c) for c in coeffs)

    def pairing(self, weight, coweight) -> Fraction:
        """<λ, x̌> for a weight and a coweight in their fundamental bases."""
        total = Fraction(0)
        for i in range(self.rank):
            for j in range(self.rank):
                if weight[i] and coweight[j]:
                    total += int(weight[i]) * self.cartan_inverse[j][i] * int(coweight[j])
        return total


def _to_fractions(matrix: sympy.Matrix) -> List[List[Fraction]]:
    return [
        [Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in matrix.row(i)]
        for i in range(matrix.rows)
    ]


def _root_closure(cartan: np.ndarray) -> np.ndarray:
    """Positive roots in simple-root coordinates by closure under simple reflections."""
    n = cartan.shape[0]
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(int(cartan[i, j]) * beta[j] for j in range(n))
                image = tuple(beta[j] - (pairing if j == i else 0) for j in range(n))
                if image not in seen and all(c >= 0 for c in image) and any(image):
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    roots = sorted(seen, key=lambda b: (sum(b), b))
    return np.array(roots, dtype=np.int64)


def _rows_excluding(candidates: np.ndarray, *excluded: np.ndarray) -> np.ndarray:
    """Distinct rows of candidates that appear in none of the excluded arrays."""
    if len(candidates) == 0:
        return candidates
    blocks = [b for b in excluded if len(b)]
    stacked = np.vstack(blocks + [candidates]) if blocks else candidates
    offset = sum(len(b) for b in blocks)
    uniq, inverse = np.unique(stacked, axis=0, return_inverse=True)
    inverse = np.asarray(inverse).ravel()
    taken = np.zeros(len(uniq), dtype=bool)
    taken[inverse[:offset]] = True
    cand_ids = np.unique(inverse[offset:])
    return uniq[cand_ids[~taken[cand_ids]]]


def orbit_levels(vector, reflectors: np.ndarray) -> List[np.ndarray]:
    """W-orbit of a vector, grouped by distance from the starting point.

    Args:
        vector: starting point (weight or coweight coordinates)
        reflectors: row i is the vector subtracted by s_i, scaled by coordinate i

    Returns:
        List of arrays; level d holds the orbit points reached by d reflections
        and not fewer. For a regular dominant start level d is exactly the set
        of w(v) with length ℓ(w) = d.
    """
    start = np.array([vector], dtype=np.int64)
    levels = [start]
    prev = np.empty((0, start.shape[1]), dtype=np.int64)
    current = start
    n = reflectors.shape[0]
    while len(current):
        images = [current - current[:, i:i + 1] * reflectors[i][None, :] for i in range(n)]
        nxt = _rows_excluding(np.vstack(images), prev, current)
        if len(nxt):
            levels.append(nxt)
        prev, current = current, nxt
    return levels


def signed_orbit(vector, reflectors: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Orbit of a regular vector with the length parity of each element."""
    levels = orbit_levels(vector, reflectors)
    points = np.vstack(levels)
    parities = np.concatenate(
        [np.full(len(lvl), 1 if d % 2 == 0 else -1, dtype=np.int64) for d, lvl in enumerate(levels)]
    )
    return points, parities


@memoized()
def weight_orbit(rs: RootSystem, weight: Weight) -> np.ndarray:
    """All W-conjugates of a weight."""
    return np.vstack(orbit_levels(weight, rs.weight_reflectors))


@memoized()
def build_root_system(data: AffineData) -> RootSystem:
    """Root system of the horizontal subalgebra of an affine type.

    Form factors are d_i = ǎ_i / a_i for i = 1..n so that κ(α̌_i) = (a_i/ǎ_i)α_i
    holds with (α_i|α_i) = 2 d_i.

    Raises:
        TableInconsistency: root count or symmetry of the form disagrees with the tables.
    """
    A = data.cartan
    n = data.rank
    finite = data.finite_type
    form_factors = tuple(
        Fraction(data.comarks[i], data.marks[i]) for i in range(1, n + 1)
    )

    for i in range(n):
        for j in range(n):
            if form_factors[j] * int(A[j, i]) != form_factors[i] * int(A[i, j]):
                raise TableInconsistency(
                    f"{data.affine_type}: normalized form is not symmetric at ({i + 1},{j + 1})"
                )

    roots_simple = _root_closure(A)
    if len(roots_simple) != expected_positive_root_count(finite):
        raise TableInconsistency(
            f"{finite}: closure produced {len(roots_simple)} positive roots, "
            f"expected {expected_positive_root_count(finite)}"
        )
    roots_omega = roots_simple @ A.T

    inverse = _to_fractions(sympy.Matrix(A.tolist()).inv())
    gram = [[form_factors[i] * inverse[i][j] for j in range(n)] for i in range(n)]

    rs = RootSystem(
        finite_type=finite,
        rank=n,
        cartan=A,
        form_factors=form_factors,
        positive_roots=roots_omega,
        positive_roots_simple=roots_simple,
        positive_coroots=np.empty((0, n), dtype=np.int64),
        positive_coroots_simple=np.empty((0, n), dtype=np.int64),
        highest_root=(),
        highest_short_root=(),
        highest_short_coroot=(),
        highest_coroot=(),
        weyl_order=weyl_group_order(finite),
        cartan_inverse=inverse,
        gram=gram,
    )

    coroots_simple = np.array([rs.coroot_simple(beta) for beta in roots_simple], dtype=np.int64)
    rs.positive_coroots_simple = coroots_simple
    rs.positive_coroots = coroots_simple @ A

    heights = roots_simple.sum(axis=1)
    top = int(np.argmax(heights))
    rs.highest_root = tuple(int(v) for v in roots_omega[top])
    if min(rs.highest_root) < 0:
        raise TableInconsistency(f"{finite}: highest root is not dominant")

    norms = [rs.root_norm(beta) for beta in roots_simple]
    shortest = min(norms)
    short_ids = [idx for idx, nm in enumerate(norms) if nm == shortest]
    top_short = max(short_ids, key=lambda idx: heights[idx])
    rs.highest_short_root = tuple(int(v) for v in roots_omega[top_short])
    rs.highest_short_coroot = tuple(int(v) for v in rs.positive_coroots[top])
    rs.highest_coroot = tuple(int(v) for v in rs.positive_coroots[top_short])

    rs.w0_perm = tuple(
        dual_involution(rs, tuple(int(i == j) for j in range(n))).index(1) for i in range(n)
    )
    log.debug(f"Built root system {finite} for {data.affine_type}: {len(roots_simple)} positive roots")
    return rs


def reflect(rs: RootSystem, weight: Weight, i: int) -> Weight:
    """Simple reflection s_i(λ) = λ - <λ, α̌_i> α_i.

    Raises:
        InvalidWeight: index outside 1..n
    """
    if not 1 <= i <= rs.rank:
        raise InvalidWeight(f"reflection index {i} outside 1..{rs.rank}")
    coeff = weight[i - 1]
    return tuple(int(weight[j] - coeff * rs.cartan[j, i - 1]) for j in range(rs.rank))


def reflect_coweight(rs: RootSystem, coweight: Coweight, i: int) -> Coweight:
    """Simple reflection on coweights, s_i(x̌) = x̌ - <α_i, x̌> α̌_i."""
    if not 1 <= i <= rs.rank:
        raise InvalidWeight(f"reflection index {i} outside 1..{rs.rank}")
    coeff = coweight[i - 1]
    return tuple(int(coweight[j] - coeff * rs.cartan[i - 1, j]) for j in range(rs.rank))


def weyl_fold_dominant(rs: RootSystem, weight: Weight) -> Tuple[Weight, int, bool]:
    """Fold a weight into the dominant chamber.

    Returns:
        (dominant conjugate, (-1)^ℓ of the folding word, whether the dominant
        conjugate lies on a wall, i.e. has nontrivial stabilizer)
    """
    x = list(int(v) for v in weight)
    parity = 1
    while True:
        negative = next((i for i, v in enumerate(x) if v < 0), None)
        if negative is None:
            break
        coeff = x[negative]
        for j in range(rs.rank):
            x[j] -= coeff * int(rs.cartan[j, negative])
        parity = -parity
    dominant = tuple(x)
    return dominant, parity, any(v == 0 for v in dominant)


def weyl_group_elements(rs: RootSystem, cap: Optional[int] = None) -> Iterator[Tuple[np.ndarray, int]]:
    """Yield every Weyl group element once as (matrix on ω-coordinates, parity).

    Elements are discovered breadth first over reduced words acting on ρ and
    deduplicated by their image of ρ.

    Raises:
        GroupTooLarge: |W| above the cap
    """
    cap = WEYL_ORDER_CAP if cap is None else cap
    if rs.weyl_order > cap:
        raise GroupTooLarge(f"Weyl group of {rs.finite_type}", rs.weyl_order, cap)

    n = rs.rank
    rho = np.ones(n, dtype=np.int64)
    generators = []
    for i in range(n):
        S = np.eye(n, dtype=np.int64)
        S[:, i] -= rs.cartan[:, i]
        generators.append(S)

    seen = {tuple(rho)}
    frontier = [np.eye(n, dtype=np.int64)]
    parity = 1
    while frontier:
        nxt = []
        for M in frontier:
            yield M, parity
            for S in generators:
                W = S @ M
                key = tuple(W @ rho)
                if key not in seen:
                    seen.add(key)
                    nxt.append(W)
        frontier = nxt
        parity = -parity


def dual_involution(rs: RootSystem, weight: Weight) -> Weight:
    """λ* = -w0 λ, computed as the dominant conjugate of -λ.

    Raises:
        InvalidWeight: λ not dominant
    """
    if any(v < 0 for v in weight):
        raise InvalidWeight(f"dual_involution needs a dominant weight, got {tuple(weight)}")
    dominant, _, _ = weyl_fold_dominant(rs, tuple(-int(v) for v in weight))
    return dominant


def theta_check_cases(rs: RootSystem, affine: AffineData) -> Coweight:
    """θ̌ from the root system: highest short coroot (r = 1), twice it (A_2n^(2)),
    highest coroot otherwise. Returned in simple-coroot coordinates, which are
    the values <ω_j, θ̌>.
    """
    t = affine.affine_type
    if t.is_untwisted:
        return tuple(int(v) for v in rs.positive_coroots_simple[_root_index(rs, rs.highest_root)])
    if t.is_a_even_twisted:
        base = rs.positive_coroots_simple[_root_index(rs, rs.highest_root)]
        return tuple(2 * int(v) for v in base)
    return tuple(int(v) for v in rs.positive_coroots_simple[_root_index(rs, rs.highest_short_root)])


def _root_index(rs: RootSystem, root: Weight) -> int:
    matches = np.where((rs.positive_roots == np.array(root)).all(axis=1))[0]
    return int(matches[0])


def common_denominator(values) -> int:
    """Least common denominator of an iterable of Fractions."""
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d

