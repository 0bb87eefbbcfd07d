"""Utilities module for fusionring."""
