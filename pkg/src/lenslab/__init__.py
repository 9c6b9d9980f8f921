"""Exact invariants of lens spaces and small Seifert spaces, and an obstruction
pipeline for distance one surgeries between L(n,1) and L(s,1)."""

__version__ = "0.1.0"
