"""The exponential without grade 0, ``BangNonUnit(S, D)``.

Its co-Kleisli morphisms are sequences ``(f_1, ..., f_D)`` and composition is
substitution of power series without constant term:

    (g o f)_p (x) = sum over n, and over ordered compositions k_1 + ... + k_n = p,
                    of  ghat_n(f_k1(x), ..., f_kn(x)).

In one dimension this is ordinary truncated composition of polynomials.
"""
from __future__ import annotations

from itertools import product
from math import comb

from . import kernels
from .errors import ShapeError
from .exact_linalg import ONE, ZERO, Matrix, scalar
from .exponential import (MonomialSeq, _kleisli_to_seq, _need_grade_one, _partition_column,
                          _seq_to_kleisli)
from .monomials import Monomial, multinomial
from .operators import BangOp, ColumnOp, Op, as_op
from .spaces import Bang, BangNonUnit, FilteredTensor, LinMap, Prod, Space, SymPow


class NonUnitSeq(MonomialSeq):
    """``(f_1, ..., f_D)``; there is no constant component."""

    variant = "nonunit"
    min_grade = 1

    def bang_space(self) -> Space:
        return BangNonUnit(self.dom, self.degree)


def nonunit_bang_space(s: Space, degree: int) -> BangNonUnit:
    return BangNonUnit(s, degree)


def nonunit_bang_map_op(f, degree: int) -> Op:
    return BangOp(f, degree, nonunit=True)


def nonunit_bang_map(f: LinMap, degree: int) -> LinMap:
    return nonunit_bang_map_op(f, degree).to_linmap()


def nonunit_kleisli_to_seq(f: LinMap) -> NonUnitSeq:
    return _kleisli_to_seq(f, NonUnitSeq, BangNonUnit)


def nonunit_seq_to_kleisli(seq: NonUnitSeq) -> LinMap:
    return _seq_to_kleisli(seq, BangNonUnit)


def identity_seq(s: Space, degree: int) -> NonUnitSeq:
    _need_grade_one(degree, "the identity sequence")
    return NonUnitSeq.from_dict(s, s, degree, {1: Monomial.from_linmap(LinMap.identity(s))})


def compositions(p: int, n: int):
    """Ordered tuples of ``n`` positive integers summing to ``p``."""
    if n == 1:
        if p >= 1:
            yield (p,)
        return
    for first in range(1, p - n + 2):
        for rest in compositions(p - first, n - 1):
            yield (first,) + rest


def _multilinear_on_polys(g: Monomial, args: list) -> dict:
    """``ghat(P_1, ..., P_n)`` for vectors of polynomials ``P_i``; returns
    ``{multiset: {cod_index: coefficient}}`` with ordinary polynomial coefficients."""
    out: dict = {}
    supports = [sorted(a) for a in args]
    for us in product(*supports):
        vec = g.coeffs.get(tuple(sorted(us)))
        if not vec:
            continue
        poly = {(): ONE}
        for u, a in zip(us, args):
            poly = kernels.poly_mul(poly, a[u])
            if not poly:
                break
        for ms, c in poly.items():
            kernels.sparse_axpy(out.setdefault(ms, {}), c, vec)
    return out


def substitute_compose(g: NonUnitSeq, f: NonUnitSeq) -> NonUnitSeq:
    if f.cod != g.dom:
        raise ShapeError(f"cannot compose: inner codomain {f.cod} vs outer domain {g.dom}")
    if f.degree != g.degree:
        raise ShapeError(f"truncation degrees differ: {f.degree} vs {g.degree}")
    polys = {k: f[k].polynomials() for k in f.grades()}
    parts = {}
    for p in range(1, f.degree + 1):
        total: dict = {}
        for n in range(1, p + 1):
            gn = g[n]
            if gn.is_zero():
                continue
            for ks in compositions(p, n):
                for ms, vec in _multilinear_on_polys(gn, [polys[k] for k in ks]).items():
                    kernels.sparse_axpy(total.setdefault(ms, {}), ONE, vec)
        coeffs = {}
        for ms, vec in total.items():
            c = multinomial(ms)
            vec = {u: v / c for u, v in vec.items() if v}
            if vec:
                coeffs[ms] = vec
        parts[p] = Monomial._raw(f.dom, g.cod, p, coeffs)
    return NonUnitSeq.from_dict(f.dom, g.cod, f.degree, parts)


def nonunit_counit_op(s: Space, degree: int) -> Op:
    _need_grade_one(degree, "the counit")
    b = BangNonUnit(s, degree)
    r = b.grade_range(1)
    return ColumnOp(b, s, lambda j: {j - r.start: ONE} if j in r else {})


def nonunit_counit(s: Space, degree: int) -> LinMap:
    return nonunit_counit_op(s, degree).to_linmap()


def nonunit_comultiplication_op(s: Space, degree: int) -> Op:
    """``x^p |->`` sum over ordered compositions of ``p`` of the products of
    the ``x^k_i``, each placed in grade ``k_i``. On basis vectors this is a sum
    over all splittings of the multiset into nonempty blocks."""
    b = BangNonUnit(s, degree)
    bb = BangNonUnit(b, degree)

    def col(j):
        p, beta = b.label(j)
        return _partition_column(b, bb, p, beta, lambda blocks: True)
    return ColumnOp(b, bb, col)


def nonunit_comultiplication(s: Space, degree: int) -> LinMap:
    """Dense form, computed by expanding ``(sum_k x^k)^n`` as polynomials and
    keeping each homogeneous part; cross-checked against the block formula."""
    b = BangNonUnit(s, degree)
    bb = BangNonUnit(b, degree)
    h: dict = {}
    for k in range(1, degree + 1):
        for r, ms in enumerate(SymPow(s, k).basis()):
            h[b.grade_starts[k] + r] = {ms: scalar(multinomial(ms))}
    support = sorted(h)
    cols: dict = {}
    for n in range(1, degree + 1):
        sp = SymPow(b, n)
        off = bb.grade_starts[n]

        def walk(start, prefix, poly):
            if len(prefix) == n:
                target = off + sp.index(tuple(prefix))
                mult = multinomial(tuple(prefix))
                for ms, v in poly.items():
                    idx = b.index((len(ms), ms))
                    col = cols.setdefault(idx, {})
                    col[target] = col.get(target, ZERO) + mult * v / multinomial(ms)
                return
            for pos in range(start, len(support)):
                u = support[pos]
                nxt = {ms: v for ms, v in kernels.poly_mul(poly, h[u]).items() if len(ms) <= degree}
                if nxt:
                    prefix.append(u)
                    walk(pos, prefix, nxt)
                    prefix.pop()

        walk(0, [], {(): ONE})
    return LinMap(b, bb, Matrix.from_sparse_columns(bb.dim, b.dim, cols))


def nonunit_kleisli_compose_via_comonad(g: NonUnitSeq, f: NonUnitSeq) -> NonUnitSeq:
    op = (as_op(nonunit_seq_to_kleisli(g)) @ nonunit_bang_map_op(nonunit_seq_to_kleisli(f), f.degree)
          @ nonunit_comultiplication_op(f.dom, f.degree))
    return nonunit_kleisli_to_seq(op.to_linmap())


def nonunit_seely_op(s: Space, t: Space, degree: int) -> Op:
    """``(x, y)^p |-> sum over n + m = p of x^n (x) y^m`` for ``p >= 1``.

    The target keeps the pieces with ``n = 0`` or ``m = 0``: it is the part of
    ``Bang(S) (x) Bang(T)`` of total grade between 1 and ``D``. Without them
    the map would not be injective.
    """
    bs, bt = Bang(s, degree), Bang(t, degree)
    dom = BangNonUnit(Prod(s, t), degree)
    cod = FilteredTensor(bs, bt, degree, 1)
    ds = s.dim

    def col(j):
        p, alpha = dom.label(j)
        left = tuple(a for a in alpha if a < ds)
        right = tuple(a - ds for a in alpha if a >= ds)
        n = len(left)
        idx = cod.index((bs.index((n, left)), bt.index((p - n, right))))
        return {idx: scalar(1) / comb(p, n)}
    return ColumnOp(dom, cod, col)


def nonunit_seely(s: Space, t: Space, degree: int) -> LinMap:
    return nonunit_seely_op(s, t, degree).to_linmap()
