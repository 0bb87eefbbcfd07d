"""Weyl characters evaluated on Σ_k."""
