from hypothesis import given
from hypothesis import strategies as st

from weakll.exponential import bang_map
from weakll.generators import random_linmap, rng_for
from weakll.operators import (BangOp, ColumnOp, KronOp, RelabelOp, as_op, compare, identity_op,
                              sym_power_column)
from weakll.spaces import Base, LinMap, Tensor, tensor_map

seeds = st.integers(0, 10 ** 6)


def test_sym_power_column():
    # (e0 + 2 e1)(e0) = e0.e0 + 2 e0.e1
    assert sym_power_column([{0: 1, 1: 2}, {0: 1}]) == {(0, 0): 1, (0, 1): 2}
    assert sym_power_column([]) == {(): 1}


@given(seeds)
def test_lazy_ops_match_dense(seed):
    rng = rng_for(seed, "ops")
    a, b, c = (Base(rng.randint(1, 3)) for _ in range(3))
    f, g, h = random_linmap(rng, a, b), random_linmap(rng, b, c), random_linmap(rng, a, b)
    assert (as_op(g) @ f).to_linmap() == g @ f
    assert (as_op(f) + h).to_linmap() == f + h
    assert KronOp(f, g).to_linmap() == tensor_map(f, g)
    assert BangOp(f, 2).to_linmap() == bang_map(f, 2)
    assert compare(identity_op(a), LinMap.identity(a)) is None


def test_compare_reports_first_column():
    s = Base(2)
    swap = RelabelOp(s, s, lambda lab: (1 - lab, 1))
    j, left, right = compare(swap, identity_op(s))
    assert (j, left, right) == (0, {1: 1}, {0: 1})
    zero_col = ColumnOp(s, s, lambda j: {0: 0})
    assert zero_col.column(0) == {}


def test_kron_shape_check():
    f = LinMap.identity(Base(2))
    op = KronOp(f, f)
    assert op.dom == Tensor(Base(2), Base(2))
