"""Tightness of simplicial complexes: homology, sigma/mu-vectors and stackedness."""

__all__ = ["__version__"]

__version__ = "0.1.0"
