"""Executable invariants of the fusion ring."""
