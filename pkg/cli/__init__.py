"""Command line interface for fusionring."""
