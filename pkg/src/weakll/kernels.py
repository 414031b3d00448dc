"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py`` module. Set ``WEAKLL_PURE_PYTHON=1`` to force the
fallback (the benchmark and the backend-parity tests do this per module).
"""
import os

if os.environ.get("WEAKLL_PURE_PYTHON"):
    from ._kernels_py import kron, matmul, merge, poly_mul, rref, sparse_axpy
    BACKEND = "python"
else:
    try:
        from ._kernels import kron, matmul, merge, poly_mul, rref, sparse_axpy
        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import kron, matmul, merge, poly_mul, rref, sparse_axpy
        BACKEND = "python"

__all__ = ["BACKEND", "kron", "matmul", "merge", "poly_mul", "rref", "sparse_axpy"]
