"""Exact cyclic homology of finite-dimensional Hopf algebras and their relatives."""

__version__ = "0.1.0"
