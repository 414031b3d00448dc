from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import rationals, vectors
from weakll import _kernels_py
from weakll.errors import DimensionError
from weakll.exact_linalg import (Matrix, dot, kernel_basis, kernel_containment_iff_span, scalar,
                                 solve_membership)

try:
    from weakll import _kernels as _kernels_c
except ImportError:  # compiled core not built
    _kernels_c = None

BACKENDS = [_kernels_py] + ([_kernels_c] if _kernels_c else [])


def matrices(rows, cols):
    return st.lists(rationals, min_size=rows * cols, max_size=rows * cols).map(
        lambda e: Matrix(rows, cols, e))


def test_scalar_coercion():
    assert scalar("3/6") == Fraction(1, 2)
    assert scalar(4) == Fraction(4)
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        scalar(True)


def test_matrix_shape_checks():
    with pytest.raises(DimensionError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix.identity(3)


def test_inverse_small():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert m.inverse().to_rows() == [[1, -1], [-1, 2]]
    assert not Matrix.from_rows([[1, 2], [2, 4]]).is_invertible()


def test_membership_example():
    # (1,1,0) = e0 + e1, not in span of (1,0,1)
    assert solve_membership([1, 1, 0], [[1, 0, 0], [0, 1, 0]]) == [1, 1]
    assert solve_membership([1, 1, 0], [[1, 0, 1]]) is None
    assert kernel_containment_iff_span([1, 1, 0], [[1, 0, 1]]) == (False, False)
    assert kernel_containment_iff_span([0, 0, 0], []) == (True, True)


@given(st.lists(vectors(4), min_size=0, max_size=3), vectors(4))
def test_kernel_containment_matches_span(ls, l):
    a, b = kernel_containment_iff_span(l, ls)
    assert a == b


@given(st.lists(vectors(4), min_size=1, max_size=3), vectors(3))
def test_membership_of_combination(gens, c):
    c = c[:len(gens)]
    target = [sum(ci * g[i] for ci, g in zip(c, gens)) for i in range(4)]
    coeffs = solve_membership(target, gens)
    assert coeffs is not None
    assert [sum(ci * g[i] for ci, g in zip(coeffs, gens)) for i in range(4)] == target


@given(matrices(3, 4))
def test_kernel_basis_is_killed(m):
    basis = kernel_basis(m)
    assert len(basis) == 4 - m.rank()
    for v in basis:
        assert m.apply(v) == [0, 0, 0]


@given(matrices(2, 3), matrices(3, 2), matrices(2, 2))
def test_matmul_associative_and_distributive(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a.T.T == a
    assert (a @ b).T == b.T @ a.T
    assert (c + c) == c.scale(2)


@given(matrices(3, 3))
def test_inverse_roundtrip(m):
    if m.is_invertible():
        assert m @ m.inverse() == Matrix.identity(3)
    else:
        assert m.rank() < 3


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


@given(vectors(3), vectors(3))
def test_dot_symmetric(u, v):
    assert dot(u, v) == dot(v, u)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@given(matrices(2, 3), matrices(3, 2))
def test_backend_parity(mod, a, b):
    assert mod.matmul(list(a.entries), list(b.entries), 2, 3, 2) == \
        _kernels_py.matmul(list(a.entries), list(b.entries), 2, 3, 2)
    assert mod.kron(list(a.entries), 2, 3, list(b.entries), 3, 2) == \
        _kernels_py.kron(list(a.entries), 2, 3, list(b.entries), 3, 2)
    assert mod.rref(list(a.entries), 2, 3) == _kernels_py.rref(list(a.entries), 2, 3)
    p = {(0,): a.entries[0], (1,): a.entries[1], (): a.entries[2]}
    q = {(0, 0): b.entries[0], (1,): b.entries[1]}
    assert mod.poly_mul(p, q) == _kernels_py.poly_mul(p, q)


def test_compiled_core_present_when_built():
    from weakll import kernels
    assert kernels.BACKEND in ("cython", "python")
    if _kernels_c is not None:
        assert kernels.BACKEND == "cython"
