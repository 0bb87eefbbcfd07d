"""Finite root systems and classical representation theory."""
