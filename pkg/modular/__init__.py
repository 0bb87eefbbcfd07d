"""Modular S-matrices and the adjacent-type identification."""
