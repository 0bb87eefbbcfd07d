"""Affine Cartan types X_N^(r) and their static data."""
import re
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from affine.tables import FAMILIES, Bond, adjacent_label, family_key
from config.constants import TWISTED_FAMILIES, UNTWISTED_FAMILIES
from utils.cache import memoized
from utils.errors import InvalidAffineType

# Accepts "A4~2", "A_4^(2)", "A4^2", "a_{4}~(2)".
_TYPE_PATTERN = re.compile(
    r"^\s*([A-Ga-g])\s*_?\s*\{?\s*(\d+)\s*\}?\s*(?:~|\^)\s*\(?\s*(\d+)\s*\)?\s*$"
)


@dataclass(frozen=True)
class FiniteType:
    """A finite Cartan type such as C_2 or D_4."""
    letter: str
    rank: int

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"


@dataclass(frozen=True)
class AffineType:
    """Cartan label X_N^(r) of an affine Kac-Moody algebra."""
    family: str
    N: int
    r: int

    def __str__(self) -> str:
        return f"{self.family}{self.N}~{self.r}"

    @property
    def is_untwisted(self) -> bool:
        return self.r == 1

    @property
    def is_a_even_twisted(self) -> bool:
        """True for A_2n^(2), the twisted family handled like the untwisted ones."""
        return self.family == "A" and self.r == 2 and self.N % 2 == 0

    @property
    def uses_weight_torus(self) -> bool:
        """Weight-lattice torus (r = 1 or A_2n^(2)); otherwise coweights are used."""
        return self.is_untwisted or self.is_a_even_twisted


def _validate(family: str, N: int, r: int) -> None:
    if (family, r) not in UNTWISTED_FAMILIES + TWISTED_FAMILIES:
        raise InvalidAffineType(f"{family}{N}~{r}: no affine algebra with this label")

    entry = FAMILIES[family_key(family, N, r)]
    if "allowed" in entry and N not in entry["allowed"]:
        raise InvalidAffineType(f"{family}{N}~{r}: rank must be one of {entry['allowed']}")
    if "allowed_N" in entry and N not in entry["allowed_N"]:
        raise InvalidAffineType(f"{family}{N}~{r}: only {family}{entry['allowed_N'][0]}~{r} exists")
    if "min_rank" in entry:
        n = entry["rank"](N)
        if n < entry["min_rank"]:
            raise InvalidAffineType(
                f"{family}{N}~{r}: rank {n} below minimum {entry['min_rank']} for this family"
            )


def parse_affine_type(text: str) -> AffineType:
    """Parse a Cartan label.

    Args:
        text: e.g. "C2~1", "A_4^(2)", "D4~3"

    Returns:
        The validated AffineType.

    Raises:
        InvalidAffineType: malformed label or non-existent algebra.
    """
    match = _TYPE_PATTERN.match(text or "")
    if not match:
        raise InvalidAffineType(f"cannot parse affine type '{text}' (expected e.g. C2~1)")
    family = match.group(1).upper()
    N = int(match.group(2))
    r = int(match.group(3))
    if r not in (1, 2, 3):
        raise InvalidAffineType(f"{text}: twist order must be 1, 2 or 3")
    _validate(family, N, r)
    return AffineType(family, N, r)


@dataclass(frozen=True)
class AffineData:
    """Static data of an affine type.

    Attributes:
        affine_type: the Cartan label
        rank: n, number of finite nodes
        marks: a_0..a_n
        comarks: ǎ_0..ǎ_n
        dual_coxeter: ȟ = sum of comarks
        finite_type: type of the horizontal subalgebra (nodes 1..n)
        bonds: finite diagram bonds (i, j, m), node i longer
        orbit_source_type: simply-laced algebra the twisted type is attached to
        adjacent_type: A' used by the modular S-matrix
    """
    affine_type: AffineType
    rank: int
    marks: Tuple[int, ...]
    comarks: Tuple[int, ...]
    dual_coxeter: int
    finite_type: FiniteType
    bonds: Tuple[Bond, ...]
    orbit_source_type: FiniteType
    adjacent_type: AffineType
    cartan: np.ndarray = field(repr=False, compare=False, hash=False)

    @property
    def finite_marks(self) -> Tuple[int, ...]:
        return self.marks[1:]

    @property
    def finite_comarks(self) -> Tuple[int, ...]:
        return self.comarks[1:]


def cartan_from_bonds(n: int, bonds: Tuple[Bond, ...]) -> np.ndarray:
    """Finite Cartan matrix with A[i][j] = <α_j, α̌_i>.

    For a bond (i, j, m) with node i longer: A[j][i] = -m and A[i][j] = -1.
    """
    A = 2 * np.eye(n, dtype=np.int64)
    for i, j, m in bonds:
        A[j - 1, i - 1] = -m
        A[i - 1, j - 1] = -1
    return A


@memoized()
def affine_data(affine_type: AffineType) -> AffineData:
    """Static data (marks, comarks, ȟ, finite diagram) of an affine type."""
    _validate(affine_type.family, affine_type.N, affine_type.r)
    entry = FAMILIES[family_key(affine_type.family, affine_type.N, affine_type.r)]
    n = entry["rank"](affine_type.N)
    marks = tuple(entry["marks"](n))
    comarks = tuple(entry["comarks"](n))
    bonds = tuple(entry["bonds"](n))
    if len(marks) != n + 1 or len(comarks) != n + 1:
        raise InvalidAffineType(f"{affine_type}: inconsistent mark table")
    dual_coxeter = sum(comarks)
    if dual_coxeter != entry["dual_coxeter"](n):
        raise InvalidAffineType(f"{affine_type}: comarks do not sum to the dual Coxeter number")

    adj_family, adj_N, adj_r = adjacent_label(affine_type.family, affine_type.N, affine_type.r)
    return AffineData(
        affine_type=affine_type,
        rank=n,
        marks=marks,
        comarks=comarks,
        dual_coxeter=dual_coxeter,
        finite_type=FiniteType(*entry["finite"](n)),
        bonds=bonds,
        orbit_source_type=FiniteType(*entry["orbit_source"](n)),
        adjacent_type=AffineType(adj_family, adj_N, adj_r),
        cartan=cartan_from_bonds(n, bonds),
    )


def untwisted_of(finite: FiniteType) -> AffineType:
    """Untwisted affinization X^(1) of a finite type."""
    return AffineType(finite.letter, finite.rank, 1)


def orbit_dual_coxeter_consistent(data: AffineData) -> bool:
    """ȟ of the affine type equals ȟ of the untwisted algebra over its orbit source."""
    source = affine_data(untwisted_of(data.orbit_source_type))
    return source.dual_coxeter == data.dual_coxeter
