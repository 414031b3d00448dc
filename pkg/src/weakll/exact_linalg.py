"""Exact rational scalars and dense matrices.

Scalars are :class:`fractions.Fraction` values (always in lowest terms with a
positive denominator). A :class:`Matrix` is immutable; arithmetic delegates its
inner loops to :mod:`weakll.kernels`.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .errors import DimensionError

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Scalar.

    Floats are rejected: the model has no floating point anywhere.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def format_scalar(x: Fraction) -> str:
    return str(x)


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = [scalar(x) for x in entries]
        if len(entries) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def _raw(cls, rows: int, cols: int, entries) -> Matrix:
        m = cls.__new__(cls)
        m.rows, m.cols, m.entries = rows, cols, tuple(entries)
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls._raw(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        e = [ZERO] * (n * n)
        for i in range(n):
            e[i * n + i] = ONE
        return cls._raw(n, n, e)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
            flat.extend(r)
        return cls(len(rows), cols, flat)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        m = cls.from_rows(columns, rows) if columns else cls.zeros(0, rows)
        return m.T if columns else cls.zeros(rows, 0)

    @classmethod
    def from_sparse_columns(cls, rows: int, cols: int, columns: dict) -> Matrix:
        e = [ZERO] * (rows * cols)
        for j, col in columns.items():
            for i, v in col.items():
                e[i * cols + j] = v
        return cls._raw(rows, cols, e)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return list(self.entries[j::self.cols]) if self.cols else []

    def sparse_column(self, j: int) -> dict:
        return {i: v for i, v in enumerate(self.entries[j::self.cols]) if v}

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.to_rows())
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix._raw(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix._raw(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> Matrix:
        return Matrix._raw(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> Matrix:
        c = scalar(c)
        return Matrix._raw(self.rows, self.cols, [c * a for a in self.entries])

    def __rmul__(self, c) -> Matrix:
        return self.scale(c)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            out = kernels.matmul(list(self.entries), list(other.entries), self.rows, self.cols, other.cols)
            return Matrix._raw(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, vector: Sequence) -> list:
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        v = [scalar(x) for x in vector]
        return kernels.matmul(list(self.entries), v, self.rows, self.cols, 1)

    @property
    def T(self) -> Matrix:
        r, c = self.rows, self.cols
        e = self.entries
        return Matrix._raw(c, r, [e[i * c + j] for j in range(c) for i in range(r)])

    def kron(self, other: Matrix) -> Matrix:
        out = kernels.kron(list(self.entries), self.rows, self.cols,
                           list(other.entries), other.rows, other.cols)
        return Matrix._raw(self.rows * other.rows, self.cols * other.cols, out)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rref(self) -> tuple:
        """``(nonzero reduced rows, pivot columns)``."""
        return kernels.rref(list(self.entries), self.rows, self.cols)

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> Matrix:
        n = self.rows
        if n != self.cols:
            raise DimensionError("only square matrices are invertible")
        aug = []
        ident = Matrix.identity(n)
        for i in range(n):
            aug.extend(self.row(i))
            aug.extend(ident.row(i))
        rows, pivots = kernels.rref(aug, n, 2 * n)
        if len(pivots) < n or pivots[n - 1] >= n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix._raw(n, n, [x for r in rows for x in r[n:]])


def _check_lengths(vectors, n):
    for v in vectors:
        if len(v) != n:
            raise DimensionError(f"expected vectors of length {n}, got {len(v)}")


def solve_membership(target: Sequence, generators: Sequence[Sequence]):
    """Coefficients ``c`` with ``sum(c[i] * generators[i]) == target``, or None."""
    n = len(target)
    _check_lengths(generators, n)
    k = len(generators)
    aug = []
    for i in range(n):
        aug.extend(scalar(g[i]) for g in generators)
        aug.append(scalar(target[i]))
    rows, pivots = kernels.rref(aug, n, k + 1)
    if pivots and pivots[-1] == k:
        return None
    coeffs = [ZERO] * k
    for r, p in zip(rows, pivots):
        coeffs[p] = r[k]
    return coeffs


def kernel_basis(m: Matrix) -> list:
    rows, pivots = m.rref()
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} vs {len(v)}")
    return sum((scalar(a) * scalar(b) for a, b in zip(u, v)), ZERO)


def kernel_containment_iff_span(l: Sequence, ls: Sequence[Sequence]) -> tuple:
    """Decide both sides of the kernel/span lemma independently.

    ``a`` checks that every vector of the joint kernel of ``ls`` is killed by
    ``l``; ``b`` checks that ``l`` is a linear combination of ``ls``. The two
    must always agree.
    """
    n = len(l)
    _check_lengths(ls, n)
    if ls:
        joint = kernel_basis(Matrix.from_rows([[scalar(x) for x in f] for f in ls], n))
    else:
        joint = [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    a = all(dot(l, v) == 0 for v in joint)
    b = solve_membership(l, ls) is not None
    return a, b
