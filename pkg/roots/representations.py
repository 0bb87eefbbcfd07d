"""Classical representation data: Freudenthal multiplicities, Weyl dimensions
and Racah-Speiser tensor product decomposition. Exact arithmetic only."""
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from roots.root_system import RootSystem, Weight, weight_orbit, weyl_fold_dominant
from utils.cache import memoized
from utils.errors import InvalidWeight, TableInconsistency


def _require_dominant(weight: Weight, rank: int) -> Weight:
    weight = tuple(int(v) for v in weight)
    if len(weight) != rank:
        raise InvalidWeight(f"weight {weight} has length {len(weight)}, expected {rank}")
    if any(v < 0 for v in weight):
        raise InvalidWeight(f"weight {weight} is not dominant")
    return weight


def weyl_dimension(rs: RootSystem, weight: Weight) -> int:
    """dim V_λ = Π_{α>0} <λ+ρ, α̌> / <ρ, α̌>."""
    weight = _require_dominant(weight, rs.rank)
    shifted = np.array(weight, dtype=np.int64) + 1
    numerator = 1
    denominator = 1
    for coroot in rs.positive_coroots_simple:
        numerator *= int(coroot @ shifted)
        denominator *= int(coroot.sum())
    if numerator % denominator:
        raise TableInconsistency(f"{rs.finite_type}: Weyl dimension of {weight} is not an integer")
    return numerator // denominator


def dominant_weights_below(rs: RootSystem, weight: Weight) -> List[Tuple[Weight, int]]:
    """Dominant weights of V_λ with their depth (height of λ - μ), sorted by depth."""
    roots = [tuple(int(v) for v in r) for r in rs.positive_roots]
    heights = [int(h) for h in rs.positive_roots_simple.sum(axis=1)]
    depth = {weight: 0}
    frontier = [weight]
    while frontier:
        nxt = []
        for mu in frontier:
            for root, h in zip(roots, heights):
                nu = tuple(m - a for m, a in zip(mu, root))
                if min(nu) >= 0 and nu not in depth:
                    depth[nu] = depth[mu] + h
                    nxt.append(nu)
        frontier = nxt
    return sorted(depth.items(), key=lambda item: (item[1], tuple(-v for v in item[0])))


@memoized()
def dominant_multiplicities(rs: RootSystem, weight: Weight) -> Dict[Weight, int]:
    """Freudenthal recursion on the dominant weights of V_λ."""
    weight = _require_dominant(weight, rs.rank)
    n = rs.rank
    roots = [tuple(int(v) for v in r) for r in rs.positive_roots]
    gram_roots = [
        [sum((rs.gram[i][j] * r[j] for j in range(n)), Fraction(0)) for i in range(n)]
        for r in roots
    ]

    def form_with_root(x, idx) -> Fraction:
        g = gram_roots[idx]
        return sum((g[i] * x[i] for i in range(n) if x[i]), Fraction(0))

    rho = rs.rho
    top = tuple(a + b for a, b in zip(weight, rho))
    top_norm = rs.form(top, top)

    mults: Dict[Weight, int] = {}
    for mu, _ in dominant_weights_below(rs, weight):
        if mu == weight:
            mults[mu] = 1
            continue
        total = Fraction(0)
        for idx, root in enumerate(roots):
            j = 1
            while True:
                shifted = tuple(m + j * a for m, a in zip(mu, root))
                dominant, _, _ = weyl_fold_dominant(rs, shifted)
                m = mults.get(dominant)
                if m is None:
                    break
                total += m * form_with_root(shifted, idx)
                j += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        gap = top_norm - rs.form(mu_rho, mu_rho)
        value = 2 * total / gap
        if value.denominator != 1:
            raise TableInconsistency(f"{rs.finite_type}: non-integral multiplicity {value} at {mu}")
        if value > 0:
            mults[mu] = int(value)
    return mults


@memoized()
def weight_system(rs: RootSystem, weight: Weight) -> Tuple[np.ndarray, np.ndarray]:
    """All weights of V_λ (rows) with their multiplicities."""
    points = []
    mults = []
    for mu, m in dominant_multiplicities(rs, weight).items():
        orbit = weight_orbit(rs, mu)
        points.append(orbit)
        mults.append(np.full(len(orbit), m, dtype=np.int64))
    return np.vstack(points), np.concatenate(mults)


def freudenthal_weight_multiplicities(rs: RootSystem, weight: Weight) -> Dict[Weight, int]:
    """Multiplicity of every weight of the irreducible module V_λ.

    Args:
        rs: root system
        weight: dominant highest weight λ

    Returns:
        Map weight -> multiplicity over the full weight system.
    """
    points, mults = weight_system(rs, tuple(int(v) for v in weight))
    result = {tuple(int(v) for v in p): int(m) for p, m in zip(points, mults)}
    if sum(result.values()) != weyl_dimension(rs, weight):
        raise TableInconsistency(
            f"{rs.finite_type}: multiplicities of {tuple(weight)} do not add up to the Weyl dimension"
        )
    return result


def tensor_decompose(rs: RootSystem, lam: Weight, mu: Weight) -> Dict[Weight, int]:
    """Racah-Speiser decomposition of V_λ ⊗ V_μ.

    The weights of the smaller factor are added to ρ plus the highest weight of
    the larger one and folded into the dominant chamber; wall hits drop out.

    Returns:
        Map ν -> dim Hom(V_ν, V_λ ⊗ V_μ), positive entries only.
    """
    lam = _require_dominant(lam, rs.rank)
    mu = _require_dominant(mu, rs.rank)
    if weyl_dimension(rs, lam) < weyl_dimension(rs, mu):
        lam, mu = mu, lam

    points, mults = weight_system(rs, mu)
    base = np.array(lam, dtype=np.int64) + 1
    result: Dict[Weight, int] = defaultdict(int)
    for tau, m in zip(points, mults):
        dominant, parity, on_wall = weyl_fold_dominant(rs, tuple(int(v) for v in base + tau))
        if on_wall:
            continue
        nu = tuple(v - 1 for v in dominant)
        result[nu] += parity * int(m)

    decomposition = {nu: c for nu, c in result.items() if c != 0}
    negative = {nu: c for nu, c in decomposition.items() if c < 0}
    if negative:
        raise TableInconsistency(f"{rs.finite_type}: negative Racah-Speiser multiplicities {negative}")
    return dict(sorted(decomposition.items()))
