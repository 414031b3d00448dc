"""Homogeneous polynomial maps between spaces (n-monomials).

A :class:`Monomial` of degree ``n`` from ``dom`` to ``cod`` stores its
symmetric n-linear form ``fhat`` on basis multisets: ``coeffs[b]`` is the
sparse vector ``fhat(e_b1, ..., e_bn)`` in ``cod``. Evaluation is

    f(x) = sum over multisets b of  C(n; b) * x^b * fhat_b

where ``C(n; b)`` is the multinomial coefficient of ``b``. The same numbers
``fhat_b`` are the columns of the linearization on ``SymPow(dom, n)``, so
``linearize`` needs no rescaling.

Polynomials are dicts from sorted variable tuples to Fractions; a vector of
polynomials is a dict from codomain index to polynomial.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import factorial
from typing import Callable, Sequence

from . import kernels
from .errors import DimensionError, HomogeneityError, ShapeError
from .exact_linalg import ONE, ZERO, Matrix, scalar
from .spaces import LinMap, Space, SymPow


@lru_cache(maxsize=None)
def multinomial(ms: tuple) -> int:
    """``n! / prod(m_i!)`` for the multiplicities ``m_i`` of a sorted tuple."""
    out = factorial(len(ms))
    run = 1
    for a, b in zip(ms, ms[1:]):
        if a == b:
            run += 1
        else:
            out //= factorial(run)
            run = 1
    if ms:
        out //= factorial(run)
    return out


def _clean(vec: dict) -> dict:
    return {k: v for k, v in vec.items() if v}


class Monomial:
    __slots__ = ("dom", "cod", "degree", "coeffs")

    def __init__(self, dom: Space, cod: Space, degree: int, coeffs: dict | None = None):
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        self.dom = dom
        self.cod = cod
        self.degree = degree
        out = {}
        d, c = dom.dim, cod.dim
        for ms, vec in (coeffs or {}).items():
            ms = tuple(sorted(ms))
            if len(ms) != degree or any(not 0 <= i < d for i in ms):
                raise DimensionError(f"multiset {ms} invalid for degree {degree} on {dom}")
            clean = {}
            for u, v in vec.items():
                if not 0 <= u < c:
                    raise DimensionError(f"codomain index {u} out of range for {cod}")
                v = scalar(v)
                if v:
                    clean[u] = v
            if clean:
                out[ms] = clean
        self.coeffs = out

    @classmethod
    def _raw(cls, dom, cod, degree, coeffs) -> Monomial:
        m = cls.__new__(cls)
        m.dom, m.cod, m.degree = dom, cod, degree
        m.coeffs = {k: v for k, v in coeffs.items() if v}
        return m

    @classmethod
    def constant(cls, dom: Space, cod: Space, vec: Sequence) -> Monomial:
        return cls(dom, cod, 0, {(): dict(enumerate(vec))})

    @classmethod
    def from_linmap(cls, f: LinMap) -> Monomial:
        return cls._raw(f.dom, f.cod, 1, {(j,): f.column(j) for j in range(f.dom.dim)})

    @classmethod
    def from_polynomials(cls, dom: Space, cod: Space, degree: int, polys: dict) -> Monomial:
        """From ``{cod_index: {multiset: coefficient}}`` (ordinary polynomial
        coefficients, not symmetric-tensor ones). Terms must have the given degree."""
        coeffs: dict = {}
        for u, poly in polys.items():
            for ms, v in poly.items():
                ms = tuple(sorted(ms))
                if len(ms) != degree:
                    raise HomogeneityError(f"term {ms} has degree {len(ms)}, expected {degree}")
                vec = coeffs.setdefault(ms, {})
                vec[u] = vec.get(u, ZERO) + scalar(v) / multinomial(ms)
        return cls._raw(dom, cod, degree, {ms: _clean(vec) for ms, vec in coeffs.items()})

    def polynomials(self) -> dict:
        """``{cod_index: {multiset: coefficient}}``."""
        out: dict = {}
        for ms, vec in self.coeffs.items():
            c = multinomial(ms)
            for u, v in vec.items():
                out.setdefault(u, {})[ms] = c * v
        return out

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return (self.dom, self.cod, self.degree, self.coeffs) == (other.dom, other.cod, other.degree, other.coeffs)

    __hash__ = None

    def __repr__(self):
        return f"Monomial(deg {self.degree}: {self.dom} -> {self.cod}, {len(self.coeffs)} terms)"

    def __call__(self, x: Sequence) -> list:
        return eval_monomial(self, x)

    def __add__(self, other: Monomial) -> Monomial:
        return add_monomials(self, other)

    def scale(self, c) -> Monomial:
        return scale_monomial(c, self)

    def is_zero(self) -> bool:
        return not self.coeffs

    def multilinear(self, xs: Sequence[Sequence]) -> list:
        """``fhat(x_1, ..., x_n)``."""
        if len(xs) != self.degree:
            raise DimensionError(f"{len(xs)} arguments for a degree-{self.degree} form")
        d = self.dom.dim
        supports = []
        for x in xs:
            if len(x) != d:
                raise DimensionError(f"argument of length {len(x)} on {self.dom}")
            supports.append([(i, scalar(v)) for i, v in enumerate(x) if v])
        out: dict = {}
        for combo in product(*supports):
            w = ONE
            for _, v in combo:
                w *= v
            vec = self.coeffs.get(tuple(sorted(i for i, _ in combo)))
            if vec:
                kernels.sparse_axpy(out, w, vec)
        return _dense(out, self.cod.dim)


SymMultiMap = Monomial


def _dense(vec: dict, n: int) -> list:
    out = [ZERO] * n
    for k, v in vec.items():
        out[k] = v
    return out


def zero_monomial(dom: Space, cod: Space, degree: int) -> Monomial:
    return Monomial._raw(dom, cod, degree, {})


def _same_type(a: Monomial, b: Monomial):
    if (a.dom, a.cod, a.degree) != (b.dom, b.cod, b.degree):
        raise ShapeError(
            f"monomials differ: degree {a.degree} {a.dom} -> {a.cod} vs degree {b.degree} {b.dom} -> {b.cod}")


def add_monomials(a: Monomial, b: Monomial) -> Monomial:
    _same_type(a, b)
    out = {k: dict(v) for k, v in a.coeffs.items()}
    for ms, vec in b.coeffs.items():
        kernels.sparse_axpy(out.setdefault(ms, {}), ONE, vec)
    return Monomial._raw(a.dom, a.cod, a.degree, out)


def scale_monomial(c, m: Monomial) -> Monomial:
    c = scalar(c)
    if not c:
        return zero_monomial(m.dom, m.cod, m.degree)
    return Monomial._raw(m.dom, m.cod, m.degree,
                         {ms: {u: c * v for u, v in vec.items()} for ms, vec in m.coeffs.items()})


def eval_monomial(m: Monomial, x: Sequence) -> list:
    if len(x) != m.dom.dim:
        raise DimensionError(f"point of length {len(x)} for a monomial on {m.dom} (dim {m.dom.dim})")
    x = [scalar(v) for v in x]
    out: dict = {}
    for ms, vec in m.coeffs.items():
        w = Fraction(multinomial(ms))
        for i in ms:
            w *= x[i]
            if not w:
                break
        if w:
            kernels.sparse_axpy(out, w, vec)
    return _dense(out, m.cod.dim)


def _random_point(rng: random.Random, d: int) -> list:
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(d)]


def polarize(f: Callable, n: int, dom: Space, cod: Space, *, checks: int = 2,
             rng: random.Random | None = None) -> Monomial:
    """Recover the symmetric n-linear form of an n-homogeneous map ``f``.

    ``fhat(x_1..x_n) = 1/n! * sum over eps in {0,1}^n of
    (-1)^(n - |eps|) f(sum_j eps_j x_j)``, evaluated on basis multisets.
    ``f`` is spot-checked for n-homogeneity on ``checks`` random scalings.
    """
    d, c = dom.dim, cod.dim
    rng = rng or random.Random(0)
    cache: dict = {}

    def call(point: tuple) -> list:
        if point not in cache:
            val = list(f(list(point)))
            if len(val) != c:
                raise DimensionError(f"oracle returned {len(val)} values, codomain {cod} has dim {c}")
            cache[point] = [scalar(v) for v in val]
        return cache[point]

    for _ in range(checks):
        x = _random_point(rng, d)
        lam = Fraction(rng.choice([-3, -2, 2, 3]), rng.randint(1, 4))
        lhs = call(tuple(lam * v for v in x))
        rhs = [lam ** n * v for v in call(tuple(x))]
        if lhs != rhs:
            raise HomogeneityError(f"map is not {n}-homogeneous: f({lam}*x) != {lam}^{n} f(x) at x={x}")

    inv = Fraction(1, factorial(n))
    coeffs = {}
    for ms in combinations_with_replacement(range(d), n):
        acc = [ZERO] * c
        for eps in product((0, 1), repeat=n):
            point = [0] * d
            for j, on in enumerate(eps):
                if on:
                    point[ms[j]] += 1
            sign = -1 if (n - sum(eps)) % 2 else 1
            val = call(tuple(Fraction(v) for v in point))
            acc = [a + sign * v for a, v in zip(acc, val)]
        vec = {u: inv * v for u, v in enumerate(acc) if v}
        if vec:
            coeffs[ms] = vec
    return Monomial._raw(dom, cod, n, coeffs)


def linearize(m: Monomial) -> LinMap:
    """The linear map on ``SymPow(dom, n)`` through which ``m`` factors."""
    sp = SymPow(m.dom, m.degree)
    cols = {sp.index(ms): vec for ms, vec in m.coeffs.items()}
    return LinMap(sp, m.cod, Matrix.from_sparse_columns(m.cod.dim, sp.dim, cols))


def delinearize(f: LinMap, n: int, dom: Space) -> Monomial:
    """Inverse of :func:`linearize`."""
    sp = SymPow(dom, n)
    if f.dom != sp:
        raise ShapeError(f"expected a map out of {sp}, got {f.dom}")
    coeffs = {}
    for j in range(sp.dim):
        col = f.column(j)
        if col:
            coeffs[sp.label(j)] = col
    return Monomial._raw(dom, f.cod, n, coeffs)


def sym_power_embed(s: Space, n: int) -> Monomial:
    """``x |-> x^n`` into ``SymPow(s, n)``; at ``x = e_0 + e_1`` and ``n = 2`` the
    image has coordinates ``(1, 2, 1)``."""
    sp = SymPow(s, n)
    return Monomial._raw(s, sp, n, {ms: {k: ONE} for k, ms in enumerate(sp.basis())})


def _compose_core(ghat: Callable, k: int, f: Monomial, dom: Space, cod: Space) -> Monomial:
    """``x |-> ghat(f(x), ..., f(x))`` summed over multisets of ``f``'s support.

    ``ghat(gamma)`` returns the sparse value of the outer form on the basis
    multiset ``gamma`` (or None). Products of the inner coordinate
    polynomials are shared between multisets with a common prefix.
    """
    polys = f.polynomials()
    support = sorted(polys)
    total: dict = {}

    def walk(start: int, prefix: list, prod_poly: dict):
        if len(prefix) == k:
            vec = ghat(tuple(prefix))
            if not vec:
                return
            mult = multinomial(tuple(prefix))
            for ms, v in prod_poly.items():
                kernels.sparse_axpy(total.setdefault(ms, {}), mult * v, vec)
            return
        for pos in range(start, len(support)):
            u = support[pos]
            nxt = kernels.poly_mul(prod_poly, polys[u])
            if nxt:
                prefix.append(u)
                walk(pos, prefix, nxt)
                prefix.pop()

    walk(0, [], {(): ONE})
    n = k * f.degree
    coeffs = {}
    for ms, vec in total.items():
        c = multinomial(ms)
        vec = {u: v / c for u, v in vec.items() if v}
        if vec:
            coeffs[ms] = vec
    return Monomial._raw(dom, cod, n, coeffs)


def compose_monomials(g: Monomial, f: Monomial) -> Monomial:
    """``x |-> ghat(f(x), ..., f(x))``, of degree ``deg g * deg f``."""
    if f.cod != g.dom:
        raise ShapeError(f"cannot compose: inner codomain {f.cod} vs outer domain {g.dom}")
    if g.degree == 0:
        return Monomial._raw(f.dom, g.cod, 0, dict(g.coeffs))
    return _compose_core(g.coeffs.get, g.degree, f, f.dom, g.cod)


def monomial_power(f: Monomial, k: int) -> Monomial:
    """``x |-> f(x)^k`` in ``SymPow(cod f, k)``, without building the embedding."""
    sp = SymPow(f.cod, k)
    if k == 0:
        return Monomial._raw(f.dom, sp, 0, {(): {0: ONE}})
    return _compose_core(lambda gamma: {sp.index(gamma): ONE}, k, f, f.dom, sp)


def postcompose(l: LinMap, m: Monomial) -> Monomial:
    """``l`` after ``m``."""
    if l.dom != m.cod:
        raise ShapeError(f"cannot compose: monomial codomain {m.cod} vs map domain {l.dom}")
    out = {}
    for ms, vec in m.coeffs.items():
        out[ms] = l.apply_sparse(vec)
    return Monomial._raw(m.dom, l.cod, m.degree, out)


def precompose(m: Monomial, l: LinMap) -> Monomial:
    """``m`` after the linear map ``l``."""
    return compose_monomials(m, Monomial.from_linmap(l))


def random_monomial(rng: random.Random, dom: Space, cod: Space, degree: int, density: float = 1.0) -> Monomial:
    coeffs = {}
    for ms in combinations_with_replacement(range(dom.dim), degree):
        vec = {}
        for u in range(cod.dim):
            if rng.random() < density:
                v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                if v:
                    vec[u] = v
        if vec:
            coeffs[ms] = vec
    return Monomial._raw(dom, cod, degree, coeffs)
