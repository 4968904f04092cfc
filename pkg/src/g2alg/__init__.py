"""Exact G2 toolkit: structure constants, PBW rewriting, Verma-type representations,
extremal vectors and boson/fermion realizations over Q(sqrt2, sqrt3)."""

__version__ = "0.1.0"
