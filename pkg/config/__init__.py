"""Configuration module for fusionring."""
