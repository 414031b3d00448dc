from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import vectors
from weakll.errors import HomogeneityError, ShapeError
from weakll.generators import random_linmap, rng_for
from weakll.monomials import (Monomial, compose_monomials, delinearize, eval_monomial,
                              linearize, monomial_power, multinomial, polarize, postcompose,
                              precompose, random_monomial, sym_power_embed, zero_monomial)
from weakll.spaces import UNIT, Base, LinMap, SymPow

seeds = st.integers(0, 10 ** 6)


def brute_eval(m, x):
    """``m(x)`` by summing over ordered index tuples."""
    out = [Fraction(0)] * m.cod.dim
    for t in product(range(m.dom.dim), repeat=m.degree):
        w = Fraction(1)
        for i in t:
            w *= x[i]
        for u, v in m.coeffs.get(tuple(sorted(t)), {}).items():
            out[u] += w * v
    return out


def random_mono(seed, max_dim=2, max_deg=4):
    rng = rng_for(seed, "mono")
    d, c, n = rng.randint(1, max_dim), rng.randint(1, 2), rng.randint(0, max_deg)
    return rng, random_monomial(rng, Base(d), Base(c), n)


def test_square_polarizes_to_product():
    m = polarize(lambda x: [x[0] ** 2], 2, UNIT, UNIT)
    assert m.multilinear([[3], [5]]) == [15]
    assert m.coeffs == {(0, 0): {0: 1}}


def test_cross_term_polarizes_to_half_sum():
    m = polarize(lambda x: [x[0] * x[1]], 2, Base(2), UNIT)
    a, b = [Fraction(2), Fraction(3)], [Fraction(5), Fraction(7)]
    assert m.multilinear([a, b]) == [(a[0] * b[1] + a[1] * b[0]) / 2]


def test_polarize_degree_one_is_linear_map():
    f = LinMap.from_rows(Base(2), Base(2), [[1, 2], [3, 4]])
    assert linearize(polarize(f, 1, Base(2), Base(2))).matrix == f.matrix


def test_polarize_rejects_non_homogeneous():
    with pytest.raises(HomogeneityError):
        polarize(lambda x: [x[0] ** 2 + x[0]], 2, UNIT, UNIT)


def test_eval_examples():
    assert eval_monomial(Monomial.constant(Base(2), UNIT, [7]), [1, 2]) == [7]
    assert eval_monomial(Monomial(UNIT, UNIT, 2, {(0, 0): {0: 1}}), [3]) == [9]


def test_sym_power_embed_examples():
    assert linearize(sym_power_embed(Base(2), 1)).matrix.to_rows() == [[1, 0], [0, 1]]
    assert eval_monomial(sym_power_embed(Base(3), 0), [4, 5, 6]) == [1]
    assert eval_monomial(sym_power_embed(Base(2), 2), [1, 1]) == [1, 2, 1]


def test_compose_example():
    g = Monomial(UNIT, UNIT, 2, {(0, 0): {0: 1}})
    f = Monomial(UNIT, UNIT, 3, {(0, 0, 0): {0: 1}})
    assert compose_monomials(g, f) == Monomial(UNIT, UNIT, 6, {(0,) * 6: {0: 1}})
    with pytest.raises(ShapeError):
        compose_monomials(Monomial(Base(2), UNIT, 1), f)


def test_multinomial_and_polynomials():
    assert multinomial((0, 0, 1)) == 3
    m = Monomial.from_polynomials(Base(2), UNIT, 2, {0: {(0, 1): 4, (1, 1): 1}})
    assert m.coeffs == {(0, 1): {0: 2}, (1, 1): {0: 1}}
    assert m.polynomials() == {0: {(0, 1): 4, (1, 1): 1}}


@given(seeds)
def test_polarize_eval_identity(seed):
    _, m = random_mono(seed)
    assert polarize(m, m.degree, m.dom, m.cod) == m


@given(seeds)
def test_eval_matches_ordered_sum(seed):
    rng, m = random_mono(seed, max_dim=3, max_deg=3)
    x = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(m.dom.dim)]
    assert eval_monomial(m, x) == brute_eval(m, x)
    assert m.multilinear([x] * m.degree) == eval_monomial(m, x)


@given(seeds, st.integers(-3, 3))
def test_homogeneity(seed, lam):
    rng, m = random_mono(seed, max_dim=3, max_deg=4)
    x = [Fraction(rng.randint(-4, 4)) for _ in range(m.dom.dim)]
    assert eval_monomial(m, [lam * v for v in x]) == [lam ** m.degree * v for v in eval_monomial(m, x)]


@given(seeds)
def test_linearize_roundtrip(seed):
    _, m = random_mono(seed, max_dim=3)
    assert linearize(m).dom == SymPow(m.dom, m.degree)
    assert delinearize(linearize(m), m.degree, m.dom) == m


@given(seeds)
def test_compose_is_pointwise(seed):
    rng = rng_for(seed, "compose")
    a, b, c = (Base(rng.randint(1, 2)) for _ in range(3))
    g = random_monomial(rng, b, c, rng.randint(0, 3))
    f = random_monomial(rng, a, b, rng.randint(1, 3))
    h = compose_monomials(g, f)
    assert h.degree == g.degree * f.degree
    x = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(a.dim)]
    assert h(x) == g(f(x))
    p = monomial_power(f, 2)
    assert p(x) == sym_power_embed(b, 2)(f(x))


@given(seeds)
def test_pre_and_post_composition(seed):
    rng = rng_for(seed, "prepost")
    a, b = Base(rng.randint(1, 3)), Base(rng.randint(1, 3))
    m = random_monomial(rng, a, b, 2)
    l, k = random_linmap(rng, b, a), random_linmap(rng, a, a)
    x = [Fraction(rng.randint(-3, 3)) for _ in range(a.dim)]
    assert postcompose(l, m)(x) == l(m(x))
    assert precompose(m, k)(x) == m(k(x))


@given(vectors(2), vectors(2))
def test_addition_and_scaling(x, y):
    m1 = Monomial(Base(2), UNIT, 2, {(0, 1): {0: 3}})
    m2 = Monomial(Base(2), UNIT, 2, {(0, 0): {0: -1}, (1, 1): {0: 2}})
    assert (m1 + m2)(x) == [a + b for a, b in zip(m1(x), m2(x))]
    assert m1.scale(2)(x) == [2 * v for v in m1(x)]
    assert m1 + zero_monomial(Base(2), UNIT, 2) == m1
