"""Finite-dimensional, degree-truncated exact model of differential linear logic."""
from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
