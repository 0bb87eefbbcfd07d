"""Documents emitted by the fusionring command line."""
from typing import List, Literal, Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field, field_validator

from config.constants import COMMANDS, OUTPUT_FORMATS
from config.settings import DEFAULT_THREADS, FUNDAMENTAL_SET_CAP, TOL_INTEGRALITY
from level.torus import RationalPhase


class JobConfig(BaseModel):
    """One CLI invocation."""
    command: str
    affine_type: str
    k: int = Field(ge=0)
    output_format: Literal["json", "csv"] = "json"
    genus: int = Field(default=0, ge=0)
    weights: List[List[int]] = Field(default_factory=list)
    tol_int: float = Field(default=TOL_INTEGRALITY, gt=0)
    fundamental_set_cap: int = Field(default=FUNDAMENTAL_SET_CAP, gt=0)
    threads: int = Field(default=DEFAULT_THREADS, ge=1)
    exhaustive: bool = False
    verbose: bool = False

    @field_validator("command")
    @classmethod
    def known_command(cls, v: str) -> str:
        if v not in COMMANDS:
            raise ValueError(f"unknown command '{v}', expected one of {COMMANDS}")
        return v

    @field_validator("output_format")
    @classmethod
    def known_format(cls, v: str) -> str:
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"unknown format '{v}'")
        return v


class WeightsDocument(BaseModel):
    """P_k with the torus points Σ_k as exact "p/q" phases."""
    affine_type: str
    k: int
    dual_coxeter: int
    norm_const: int
    weights: List[List[int]]
    dual_weights: Optional[List[List[int]]] = None
    point_labels: List[List[int]]
    phases: List[List[str]]

    @field_validator("phases")
    @classmethod
    def exact_phases(cls, v: List[List[str]]) -> List[List[str]]:
        for row in v:
            for phase in row:
                RationalPhase.parse(phase)
        return v

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "index": range(len(self.weights)),
            "coords": [",".join(map(str, w)) for w in self.weights],
            "phases": [";".join(p) for p in self.phases],
        })


class VerificationItem(BaseModel):
    name: str
    status: str
    detail: str = ""


class FusionDocument(BaseModel):
    """Sparse fusion table: [λ-idx, μ-idx, ν-idx, c] for nonzero c."""
    affine_type: str
    k: int
    weights: List[List[int]]
    entries: List[Tuple[int, int, int, int]]
    max_residual: float
    verification: List[VerificationItem] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)

    def to_coefficients(self) -> np.ndarray:
        """Dense coefficient array rebuilt from the sparse entries."""
        size = len(self.weights)
        coeffs = np.zeros((size, size, size), dtype=np.int64)
        for a, b, c, value in self.entries:
            coeffs[a, b, c] = value
        return coeffs

    def to_frame(self) -> pd.DataFrame:
        label = [",".join(map(str, w)) for w in self.weights]
        return pd.DataFrame(
            [(label[a], label[b], label[c], v) for a, b, c, v in self.entries],
            columns=["lambda", "mu", "nu", "c"],
        )


class VerlindeDocument(BaseModel):
    affine_type: str
    k: int
    genus: int
    weights: List[List[int]]
    value_integer: int
    raw_complex: Tuple[float, float]
    residual: float
    integral: bool

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([{
            "genus": self.genus,
            "value": self.value_integer,
            "re": self.raw_complex[0],
            "im": self.raw_complex[1],
            "residual": self.residual,
        }])


class SMatrixDocument(BaseModel):
    """S-matrix entries as [re, im] pairs."""
    source: str
    target: str
    k: int
    rows: List[List[int]]
    cols: List[List[int]]
    entries: List[List[Tuple[float, float]]]
    tolerance: float
    unitarity_residual: float
    quantum_dimensions: Optional[List[float]] = None

    def to_matrix(self) -> np.ndarray:
        return np.array([[complex(re, im) for re, im in row] for row in self.entries])

    def to_frame(self) -> pd.DataFrame:
        records = []
        for r, row in enumerate(self.entries):
            for c, (re, im) in enumerate(row):
                records.append({
                    "row": ",".join(map(str, self.rows[r])),
                    "col": ",".join(map(str, self.cols[c])),
                    "re": re,
                    "im": im,
                })
        return pd.DataFrame(records, columns=["row", "col", "re", "im"])


class Constituent(BaseModel):
    """A classical constituent with its level-k fold."""
    weight: List[int]
    multiplicity: int
    folded_to: Optional[List[int]] = None
    sign: int = 0


class DecomposeDocument(BaseModel):
    affine_type: str
    k: int
    lam: List[int]
    mu: List[int]
    classical: List[Constituent]
    fusion: List[Constituent]
    removed: List[List[int]] = Field(default_factory=list)
    cancelled: List[List[int]] = Field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([{
            "constituent": ",".join(map(str, c.weight)),
            "multiplicity": c.multiplicity,
            "folded_to": ",".join(map(str, c.folded_to)) if c.folded_to is not None else "wall",
            "sign": c.sign,
        } for c in self.classical])


class CheckDocument(BaseModel):
    affine_type: str
    k: int
    passed: bool
    checks: List[VerificationItem]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([c.model_dump() for c in self.checks], columns=["name", "status", "detail"])
