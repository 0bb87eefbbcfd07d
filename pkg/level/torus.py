"""Exact torus phases: points of the maximal torus stored as rational covectors."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class RationalPhase:
    """A rational q normalized to 0 <= q < 1, standing for e^{2πiq}."""
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    def __add__(self, other: "RationalPhase") -> "RationalPhase":
        return RationalPhase(self.value + other.value)

    def __sub__(self, other: "RationalPhase") -> "RationalPhase":
        return RationalPhase(self.value - other.value)

    def __neg__(self) -> "RationalPhase":
        return RationalPhase(-self.value)

    def __mul__(self, factor: int) -> "RationalPhase":
        return RationalPhase(self.value * int(factor))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"

    @classmethod
    def parse(cls, text: str) -> "RationalPhase":
        """Inverse of str(): reads "p/q"."""
        return cls(Fraction(text.strip()))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def to_complex(self) -> complex:
        return complex(np.exp(2j * np.pi * float(self.value)))


@dataclass(frozen=True)
class TorusPoint:
    """A torus point t with μ(t) = exp(2πi Σ μ_i numerators_i / denominator).

    Attributes:
        numerators: integer phase numerators, reduced mod denominator
        denominator: common denominator D of the phases
        label: weight (or coweight) the point was built from, if any
    """
    numerators: Tuple[int, ...]
    denominator: int
    label: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(
            self, "numerators", tuple(int(v) % self.denominator for v in self.numerators)
        )

    @property
    def phase_covector(self) -> Tuple[RationalPhase, ...]:
        return tuple(RationalPhase(Fraction(v, self.denominator)) for v in self.numerators)

    def rescaled(self, denominator: int) -> Tuple[int, ...]:
        """Numerators over a multiple of the own denominator."""
        factor, rest = divmod(denominator, self.denominator)
        if rest:
            raise ValueError(f"{denominator} is not a multiple of {self.denominator}")
        return tuple(v * factor for v in self.numerators)


def torus_eval(t: TorusPoint, weight) -> RationalPhase:
    """Phase of μ(t), i.e. Σ μ_i q_i mod 1."""
    total = sum(int(m) * v for m, v in zip(weight, t.numerators))
    return RationalPhase(Fraction(total, t.denominator))
