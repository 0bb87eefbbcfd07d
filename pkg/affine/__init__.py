"""Affine Cartan types and their Dynkin data."""
from affine.types import (
    AffineData,
    AffineType,
    FiniteType,
    affine_data,
    parse_affine_type,
)

__all__ = ["AffineData", "AffineType", "FiniteType", "affine_data", "parse_affine_type"]
