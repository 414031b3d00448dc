"""Lazily evaluated linear operators with sparse columns.

Iterated exponentials get large quickly (``!!!E`` for ``dim E = 2`` at
truncation 3 has about four million basis vectors), but the law checks only
ever push a handful of sparse vectors through them. An :class:`Op` knows its
domain and codomain and produces any single column on demand; composites,
Kronecker products and the functorial action of ``!`` are built from those
columns without materialising a matrix.

Vectors are dicts ``{index: Fraction}`` with no zero entries.
"""
from __future__ import annotations

from typing import Callable, Iterable

from . import kernels
from .errors import ShapeError
from .exact_linalg import ONE, ZERO, Matrix
from .spaces import Bang, BangNonUnit, LinMap, Space, Tensor


class Op:
    dom: Space
    cod: Space

    def __init__(self, dom: Space, cod: Space):
        self.dom = dom
        self.cod = cod
        self._cache: dict = {}

    def _column(self, j: int) -> dict:
        raise NotImplementedError

    def column(self, j: int) -> dict:
        col = self._cache.get(j)
        if col is None:
            col = self._column(j)
            self._cache[j] = col
        return col

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for j, c in vec.items():
            kernels.sparse_axpy(out, c, self.column(j))
        return out

    def __matmul__(self, inner: Op) -> Op:
        return ComposeOp(self, as_op(inner))

    def __add__(self, other: Op) -> Op:
        return SumOp(self, as_op(other))

    def to_linmap(self) -> LinMap:
        cols = {j: self.column(j) for j in range(self.dom.dim)}
        return LinMap(self.dom, self.cod, Matrix.from_sparse_columns(self.cod.dim, self.dom.dim, cols))

    def __repr__(self):
        return f"{type(self).__name__}({self.dom} -> {self.cod})"


class MatrixOp(Op):
    def __init__(self, f: LinMap):
        super().__init__(f.dom, f.cod)
        self.f = f

    def _column(self, j):
        return self.f.column(j)


def as_op(f) -> Op:
    if isinstance(f, Op):
        return f
    if isinstance(f, LinMap):
        return MatrixOp(f)
    raise TypeError(f"expected an Op or LinMap, got {type(f).__name__}")


class ColumnOp(Op):
    """Columns given by a function of the domain index."""

    def __init__(self, dom: Space, cod: Space, fn: Callable[[int], dict]):
        super().__init__(dom, cod)
        self.fn = fn

    def _column(self, j):
        return {k: v for k, v in self.fn(j).items() if v}


class RelabelOp(Op):
    """Sends the basis vector labelled ``l`` to ``c * e[m]`` where
    ``fn(l) = (m, c)``, or to zero when ``fn(l)`` is None."""

    def __init__(self, dom: Space, cod: Space, fn: Callable):
        super().__init__(dom, cod)
        self.fn = fn

    def _column(self, j):
        hit = self.fn(self.dom.label(j))
        if hit is None:
            return {}
        label, c = hit
        return {self.cod.index(label): c} if c else {}


class ComposeOp(Op):
    def __init__(self, outer: Op, inner: Op):
        if inner.cod != outer.dom:
            raise ShapeError(f"cannot compose: inner codomain {inner.cod} vs outer domain {outer.dom}")
        super().__init__(inner.dom, outer.cod)
        self.outer, self.inner = outer, inner

    def _column(self, j):
        return self.outer.apply(self.inner.column(j))


class SumOp(Op):
    def __init__(self, a: Op, b: Op):
        if (a.dom, a.cod) != (b.dom, b.cod):
            raise ShapeError(f"cannot add {a.dom} -> {a.cod} and {b.dom} -> {b.cod}")
        super().__init__(a.dom, a.cod)
        self.a, self.b = a, b

    def _column(self, j):
        out = dict(self.a.column(j))
        return kernels.sparse_axpy(out, ONE, self.b.column(j))


class KronOp(Op):
    """``f (x) g`` between pair spaces (plain or filtered tensors)."""

    def __init__(self, f, g, dom: Space | None = None, cod: Space | None = None):
        f, g = as_op(f), as_op(g)
        dom = dom or Tensor(f.dom, g.dom)
        cod = cod or Tensor(f.cod, g.cod)
        if (dom.left, dom.right) != (f.dom, g.dom) or (cod.left, cod.right) != (f.cod, g.cod):
            raise ShapeError(f"tensor of {f} and {g} does not fit {dom} -> {cod}")
        super().__init__(dom, cod)
        self.f, self.g = f, g

    def _column(self, k):
        i, j = self.dom.label(k)
        gc = self.g.column(j)
        out = {}
        for a, v in self.f.column(i).items():
            for b, w in gc.items():
                idx = self.cod.index((a, b))
                out[idx] = out.get(idx, ZERO) + v * w
        return {k2: v for k2, v in out.items() if v}


def sym_power_column(columns: Iterable[dict]) -> dict:
    """Symmetric product of sparse vectors, keyed by sorted index tuples."""
    acc = {(): ONE}
    for col in columns:
        acc = kernels.poly_mul(acc, {(i,): v for i, v in col.items()})
        if not acc:
            break
    return acc


class BangOp(Op):
    """The functorial action of the truncated exponential: ``Sym^n(f)`` on each grade."""

    def __init__(self, f, degree: int, nonunit: bool = False):
        f = as_op(f)
        kind = BangNonUnit if nonunit else Bang
        super().__init__(kind(f.dom, degree), kind(f.cod, degree))
        self.f = f

    def _column(self, k):
        n, ms = self.dom.label(k)
        prod = sym_power_column(self.f.column(i) for i in ms)
        return {self.cod.index((n, key)): v for key, v in prod.items()}


def compare(a, b, columns: Iterable[int] | None = None):
    """First column on which two operators differ, as ``(j, col_a, col_b)``; None if equal."""
    a, b = as_op(a), as_op(b)
    if (a.dom, a.cod) != (b.dom, b.cod):
        raise ShapeError(f"cannot compare {a.dom} -> {a.cod} with {b.dom} -> {b.cod}")
    for j in (range(a.dom.dim) if columns is None else columns):
        ca, cb = a.column(j), b.column(j)
        if ca != cb:
            return j, ca, cb
    return None


def identity_op(s: Space) -> Op:
    return ColumnOp(s, s, lambda j: {j: ONE})
