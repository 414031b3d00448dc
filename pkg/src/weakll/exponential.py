"""The degree-truncated exponential ``Bang(S, D)``.

``Bang(S, D)`` is the direct sum of ``SymPow(S, n)`` for ``n <= D``. The basis
vector ``(n, b)`` is the symmetric tensor ``e^b``; the point evaluation
``ev_x`` restricted to grade ``n`` is ``x^n``, whose coordinates are
``C(n; b) x^b``. Every structure map below is fixed by what it does to the
powers ``x^n``, and its matrix follows from the rule

    L(x^p) = Q(x)   =>   L(e^b) = [x^b] Q / C(p; b).

A map ``Bang(S, D) -> T`` is the same thing as a :class:`MonomialSeq`
``(f_0, ..., f_D)`` with ``f_n(x) = f(x^n)``.

Composition of sequences is divisor composition: grade ``p`` of ``g o f`` is
the sum over divisors ``k`` of ``p`` of ``g_k o f_(p/k)``; grade 0 is ``g_0``.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations
from math import comb

from .errors import ShapeError, TruncationError
from .exact_linalg import ONE, ZERO, Matrix, scalar
from .monomials import (Monomial, add_monomials, compose_monomials, eval_monomial,
                        monomial_power, multinomial, random_monomial, zero_monomial)
from .operators import BangOp, ColumnOp, KronOp, Op, as_op, identity_op
from .report import check_equal, skipped
from .spaces import (UNIT, Bang, Dual, FilteredTensor, Hom, LinMap, Prod, Space,
                     SymPow, Tensor)


def bang_space(s: Space, degree: int) -> Bang:
    return Bang(s, degree)


def whynot_space(s: Space, degree: int) -> Dual:
    return Dual(Bang(Dual(s), degree))


def divisors(p: int) -> list:
    return [k for k in range(1, p + 1) if p % k == 0]


def _need_grade_one(degree: int, what: str):
    if degree < 1:
        raise TruncationError(f"{what} needs truncation degree >= 1, got {degree}")


# ------------------------------------------------------------ functor action

def bang_map_op(f, degree: int) -> Op:
    return BangOp(f, degree)


def bang_map(f: LinMap, degree: int) -> LinMap:
    """Blockwise ``Sym^n(f)``: ``x^n |-> f(x)^n``."""
    return BangOp(f, degree).to_linmap()


# ------------------------------------------------------- monomial sequences

class MonomialSeq:
    """``(f_0, ..., f_D)`` with ``f_n`` an n-monomial ``dom -> cod``."""

    variant = "unit"
    min_grade = 0

    def __init__(self, dom: Space, cod: Space, degree: int, monomials):
        monomials = tuple(monomials)
        expected = degree + 1 - self.min_grade
        if degree < 0 or len(monomials) != expected:
            raise ShapeError(f"a truncation-{degree} sequence needs {expected} monomials, got {len(monomials)}")
        for n, m in enumerate(monomials, start=self.min_grade):
            if m.degree != n or m.dom != dom or m.cod != cod:
                raise ShapeError(
                    f"component {n} is a degree-{m.degree} monomial {m.dom} -> {m.cod}, "
                    f"expected degree {n} {dom} -> {cod}")
        self.dom = dom
        self.cod = cod
        self.degree = degree
        self.monomials = monomials

    def __getitem__(self, n: int) -> Monomial:
        if n < self.min_grade or n > self.degree:
            return zero_monomial(self.dom, self.cod, n)
        return self.monomials[n - self.min_grade]

    def grades(self) -> range:
        return range(self.min_grade, self.degree + 1)

    @classmethod
    def zero(cls, dom: Space, cod: Space, degree: int):
        return cls(dom, cod, degree, [zero_monomial(dom, cod, n) for n in range(cls.min_grade, degree + 1)])

    @classmethod
    def from_dict(cls, dom: Space, cod: Space, degree: int, parts: dict):
        """Sequence whose grade ``n`` is ``parts.get(n)`` (zero when absent)."""
        return cls(dom, cod, degree, [parts.get(n) or zero_monomial(dom, cod, n)
                                      for n in range(cls.min_grade, degree + 1)])

    def __call__(self, x) -> list:
        out = [ZERO] * self.cod.dim
        for m in self.monomials:
            out = [a + b for a, b in zip(out, eval_monomial(m, x))]
        return out

    def __eq__(self, other):
        if not isinstance(other, MonomialSeq):
            return NotImplemented
        return (self.variant, self.dom, self.cod, self.degree, self.monomials) == \
            (other.variant, other.dom, other.cod, other.degree, other.monomials)

    __hash__ = None

    def __add__(self, other):
        if type(self) is not type(other) or (self.dom, self.cod, self.degree) != (other.dom, other.cod, other.degree):
            raise ShapeError("sequences of different types cannot be added")
        return type(self)(self.dom, self.cod, self.degree,
                          [add_monomials(a, b) for a, b in zip(self.monomials, other.monomials)])

    def __repr__(self):
        return f"{type(self).__name__}({self.dom} -> {self.cod}, D={self.degree})"

    def bang_space(self) -> Space:
        return Bang(self.dom, self.degree)


def random_seq(rng: random.Random, dom: Space, cod: Space, degree: int, cls=MonomialSeq,
               density: float = 1.0) -> MonomialSeq:
    return cls(dom, cod, degree,
               [random_monomial(rng, dom, cod, n, density) for n in range(cls.min_grade, degree + 1)])


def _kleisli_to_seq(f: LinMap, cls, kind) -> MonomialSeq:
    if not isinstance(f.dom, kind):
        raise ShapeError(f"expected a map out of a {kind.__name__} space, got {f.dom}")
    b = f.dom
    s = b.of
    parts = {}
    for n in range(cls.min_grade, b.degree + 1):
        coeffs = {}
        for k in b.grade_range(n):
            col = f.column(k)
            if col:
                coeffs[b.label(k)[1]] = col
        parts[n] = Monomial._raw(s, f.cod, n, coeffs)
    return cls.from_dict(s, f.cod, b.degree, parts)


def _seq_to_kleisli(seq: MonomialSeq, kind) -> LinMap:
    b = kind(seq.dom, seq.degree)
    cols = {}
    for n in seq.grades():
        for ms, vec in seq[n].coeffs.items():
            cols[b.index((n, ms))] = vec
    return LinMap(b, seq.cod, Matrix.from_sparse_columns(seq.cod.dim, b.dim, cols))


def kleisli_to_seq(f: LinMap) -> MonomialSeq:
    """``f_n(x) = f(x^n)``."""
    return _kleisli_to_seq(f, MonomialSeq, Bang)


def seq_to_kleisli(seq: MonomialSeq) -> LinMap:
    """Direct sum of the linearizations of the components."""
    return _seq_to_kleisli(seq, Bang)


def dereliction(s: Space, degree: int) -> MonomialSeq:
    """The identity of the co-Kleisli category: ``(0, id, 0, ...)``."""
    _need_grade_one(degree, "dereliction")
    ident = Monomial.from_linmap(LinMap.identity(s))
    return MonomialSeq.from_dict(s, s, degree, {1: ident})


def kleisli_compose(g: MonomialSeq, f: MonomialSeq) -> MonomialSeq:
    """Divisor composition ``(g o f)_p = sum over k | p of g_k o f_(p/k)``."""
    if f.cod != g.dom:
        raise ShapeError(f"cannot compose: inner codomain {f.cod} vs outer domain {g.dom}")
    if f.degree != g.degree:
        raise ShapeError(f"truncation degrees differ: {f.degree} vs {g.degree}")
    parts = {0: compose_monomials(g[0], f[0])}
    for p in range(1, f.degree + 1):
        acc = zero_monomial(f.dom, g.cod, p)
        for k in divisors(p):
            acc = add_monomials(acc, compose_monomials(g[k], f[p // k]))
        parts[p] = acc
    return MonomialSeq.from_dict(f.dom, g.cod, f.degree, parts)


def kleisli_compose_via_comonad(g: MonomialSeq, f: MonomialSeq) -> MonomialSeq:
    """``g o !f o delta``, read back as a sequence."""
    if f.cod != g.dom or f.degree != g.degree:
        raise ShapeError("sequences do not compose")
    op = as_op(seq_to_kleisli(g)) @ BangOp(seq_to_kleisli(f), f.degree) @ comultiplication_op(f.dom, f.degree)
    return kleisli_to_seq(op.to_linmap())


# ------------------------------------------------------------------ comonad

def counit_op(s: Space, degree: int) -> Op:
    _need_grade_one(degree, "the counit")
    b = Bang(s, degree)
    start = b.grade_starts[1]

    def col(j):
        if b.grade_starts[1] <= j < b.grade_starts[2]:
            return {j - start: ONE}
        return {}
    return ColumnOp(b, s, col)


def counit(s: Space, degree: int) -> LinMap:
    """Projection onto grade 1."""
    return counit_op(s, degree).to_linmap()


def coder_op(s: Space, degree: int) -> Op:
    _need_grade_one(degree, "codereliction")
    b = Bang(s, degree)
    start = b.grade_starts[1]
    return ColumnOp(s, b, lambda j: {start + j: ONE})


def coder(s: Space, degree: int) -> LinMap:
    """Inclusion at grade 1: ``x |-> ((f_n) |-> f_1(x))``."""
    return coder_op(s, degree).to_linmap()


def _grade_embedding(b: Space, s: Space, q: int) -> Monomial:
    """``x |-> x^q`` placed in grade ``q`` of ``b``."""
    start = b.grade_starts[q]
    return Monomial._raw(s, b, q, {ms: {start + r: ONE} for r, ms in enumerate(SymPow(s, q).basis())})


def comultiplication(s: Space, degree: int) -> LinMap:
    """``x^p |-> sum over k | p of (x^(p/k))^k``, with ``x^(p/k)`` placed in grade
    ``p/k`` of the inner exponential. Built from symmetric powers of the grade
    embeddings; the unit goes to the unit."""
    b = Bang(s, degree)
    bb = Bang(b, degree)
    cols: dict = {0: {0: ONE}}
    for p in range(1, degree + 1):
        for k in divisors(p):
            power = monomial_power(_grade_embedding(b, s, p // k), k)
            off = bb.grade_starts[k]
            for ms, vec in power.coeffs.items():
                col = cols.setdefault(b.index((p, ms)), {})
                for u, v in vec.items():
                    col[off + u] = col.get(off + u, ZERO) + v
    return LinMap(b, bb, Matrix.from_sparse_columns(bb.dim, b.dim, cols))


@lru_cache(maxsize=None)
def multiset_partitions(beta: tuple) -> tuple:
    """Distinct ways to split a sorted tuple into a multiset of nonempty blocks."""
    found = set()

    def rec(i, blocks):
        if i == len(beta):
            found.add(tuple(sorted(tuple(bl) for bl in blocks)))
            return
        x = beta[i]
        for bl in blocks:
            bl.append(x)
            rec(i + 1, blocks)
            bl.pop()
        blocks.append([x])
        rec(i + 1, blocks)
        blocks.pop()

    rec(0, [])
    return tuple(sorted(found))


def _partition_column(b: Space, bb: Space, p: int, beta: tuple, accept) -> dict:
    """Column of ``e^beta`` under ``x^p |-> sum of products of x^(block)``:
    coefficient ``C(k; G) * prod C(|g|; g) / C(p; beta)`` on ``e^G``."""
    out: dict = {}
    denom = multinomial(beta)
    for blocks in multiset_partitions(beta):
        if not accept(blocks):
            continue
        inner = tuple(sorted(b.index((len(g), g)) for g in blocks))
        w = multinomial(inner)
        for g in blocks:
            w *= multinomial(g)
        idx = bb.index((len(blocks), inner))
        out[idx] = out.get(idx, ZERO) + scalar(w) / denom
    return out


def comultiplication_op(s: Space, degree: int) -> Op:
    """Sparse form of :func:`comultiplication`, from the block-partition formula."""
    b = Bang(s, degree)
    bb = Bang(b, degree)

    def col(j):
        p, beta = b.label(j)
        if p == 0:
            return {0: ONE}
        return _partition_column(b, bb, p, beta, lambda blocks: len({len(g) for g in blocks}) == 1)
    return ColumnOp(b, bb, col)


# --------------------------------------------------------------- Seely

def seely_op(s: Space, t: Space, degree: int) -> Op:
    """``(x, y)^p |-> sum over n + m = p of x^n (x) y^m``."""
    bs, bt = Bang(s, degree), Bang(t, degree)
    dom = Bang(Prod(s, t), degree)
    cod = FilteredTensor(bs, bt, degree)
    ds = s.dim

    def col(j):
        p, alpha = dom.label(j)
        left = tuple(a for a in alpha if a < ds)
        right = tuple(a - ds for a in alpha if a >= ds)
        n = len(left)
        idx = cod.index((bs.index((n, left)), bt.index((p - n, right))))
        return {idx: scalar(1) / comb(p, n)}
    return ColumnOp(dom, cod, col)


def seely_iso(s: Space, t: Space, degree: int) -> LinMap:
    return seely_op(s, t, degree).to_linmap()


def curry_seq(f: MonomialSeq) -> MonomialSeq:
    """Split each grade of a sequence on ``S x T`` by bidegree: grade ``n`` of
    the result sends ``x`` to the map ``Bang(T, D) -> U`` whose grade ``m``
    part is the bidegree ``(n, m)`` component of ``f_(n+m)`` at ``x``."""
    if not isinstance(f.dom, Prod):
        raise ShapeError(f"curry_seq needs a sequence on a product, got {f.dom}")
    s, t, u, degree = f.dom.left, f.dom.right, f.cod, f.degree
    bt = Bang(t, degree)
    hom = Hom(bt, u)
    ds, du = s.dim, u.dim
    parts: dict = {n: {} for n in range(degree + 1)}
    for p in range(degree + 1):
        for alpha, vec in f[p].coeffs.items():
            beta = tuple(a for a in alpha if a < ds)
            gamma = tuple(a - ds for a in alpha if a >= ds)
            n = len(beta)
            tcol = bt.index((p - n, gamma))
            c = comb(p, n)
            dest = parts[n].setdefault(beta, {})
            for uu, v in vec.items():
                dest[tcol * du + uu] = c * v
    mons = {n: Monomial._raw(s, hom, n, coeffs) for n, coeffs in parts.items()}
    return MonomialSeq.from_dict(s, hom, degree, mons)


def uncurry_seq(g: MonomialSeq, t: Space | None = None) -> MonomialSeq:
    """Inverse of :func:`curry_seq`: each bidegree ``(n, m)`` piece is folded
    back into grade ``n + m`` with weight ``1 / C(n + m, n)``."""
    if not isinstance(g.cod, Hom) or not isinstance(g.cod.left, Bang):
        raise ShapeError(f"uncurry_seq needs a sequence into Hom(Bang(T, D), U), got {g.cod}")
    bt, u = g.cod.left, g.cod.right
    if bt.degree != g.degree:
        raise ShapeError(f"truncation degrees differ: {bt.degree} vs {g.degree}")
    s, degree = g.dom, g.degree
    tt = bt.of
    ds, du = s.dim, u.dim
    parts: dict = {p: {} for p in range(degree + 1)}
    for n in range(degree + 1):
        for beta, vec in g[n].coeffs.items():
            for h, v in vec.items():
                tcol, uu = divmod(h, du)
                m, gamma = bt.label(tcol)
                p = n + m
                if p > degree:
                    raise TruncationError(
                        f"component of bidegree ({n}, {m}) does not fit under truncation {degree}")
                alpha = tuple(sorted(beta + tuple(ds + c for c in gamma)))
                dest = parts[p].setdefault(alpha, {})
                dest[uu] = dest.get(uu, ZERO) + v / comb(p, n)
    dom = Prod(s, tt)
    mons = {p: Monomial._raw(dom, u, p, coeffs) for p, coeffs in parts.items()}
    return MonomialSeq.from_dict(dom, u, degree, mons)


# ------------------------------------------------------ monoidal structure

@lru_cache(maxsize=None)
def _matchings(beta: tuple, gamma: tuple) -> tuple:
    """Distinct multisets of pairs whose two marginals are ``beta`` and ``gamma``."""
    return tuple(sorted({tuple(sorted(zip(beta, perm))) for perm in set(permutations(gamma))}))


def mu_op(s: Space, t: Space, degree: int) -> Op:
    """``x^n (x) y^n |-> (x (x) y)^n``; unequal grades go to zero."""
    bs, bt = Bang(s, degree), Bang(t, degree)
    dom = Tensor(bs, bt)
    st = Tensor(s, t)
    cod = Bang(st, degree)
    dt = t.dim

    def col(k):
        i, j = dom.label(k)
        n, beta = bs.label(i)
        m, gamma = bt.label(j)
        if n != m:
            return {}
        out = {}
        den = multinomial(beta) * multinomial(gamma)
        for pairs in _matchings(beta, gamma):
            lam = tuple(sorted(a * dt + c for a, c in pairs))
            idx = cod.index((n, lam))
            out[idx] = out.get(idx, ZERO) + scalar(multinomial(lam)) / den
        return out
    return ColumnOp(dom, cod, col)


def monoidal_mu(s: Space, t: Space, degree: int) -> LinMap:
    return mu_op(s, t, degree).to_linmap()


def mu0(degree: int) -> LinMap:
    """``Base(1) -> Bang(Base(1), D)``, ``t |-> t * ev_1``: all grades equal to ``t``."""
    b = Bang(UNIT, degree)
    return LinMap.from_columns(UNIT, b, [{k: ONE for k in range(b.dim)}])


# ---------------------------------------------------------------- bialgebra

def _sub_multisets(beta: tuple):
    counts: dict = {}
    for x in beta:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)

    def rec(i, acc):
        if i == len(keys):
            yield tuple(acc)
            return
        x = keys[i]
        for c in range(counts[x] + 1):
            yield from rec(i + 1, acc + [x] * c)
    yield from rec(0, [])


def _minus(beta: tuple, sub: tuple) -> tuple:
    rest = list(beta)
    for x in sub:
        rest.remove(x)
    return tuple(rest)


def contraction_op(s: Space, degree: int) -> Op:
    """``x^p |-> sum over i + j = p of x^i (x) x^j``."""
    b = Bang(s, degree)
    cod = FilteredTensor(b, b, degree)

    def col(k):
        p, beta = b.label(k)
        out = {}
        den = multinomial(beta)
        for left in _sub_multisets(beta):
            right = _minus(beta, left)
            idx = cod.index((b.index((len(left), left)), b.index((len(right), right))))
            out[idx] = scalar(multinomial(left) * multinomial(right)) / den
        return out
    return ColumnOp(b, cod, col)


def contraction(s: Space, degree: int) -> LinMap:
    return contraction_op(s, degree).to_linmap()


def weakening(s: Space, degree: int) -> LinMap:
    """Projection onto grade 0."""
    b = Bang(s, degree)
    return LinMap.from_columns(b, UNIT, [{0: ONE} if k == 0 else {} for k in range(b.dim)])


def coweakening(s: Space, degree: int) -> LinMap:
    """``1 |-> ev_0``, the grade-0 unit."""
    b = Bang(s, degree)
    return LinMap.from_columns(UNIT, b, [{0: ONE}])


def cocontraction_op(s: Space, degree: int, full: bool = False) -> Op:
    """``x^a (x) y^b |->`` the bidegree ``(a, b)`` part of ``(x + y)^(a + b)``,
    which on basis vectors is ``C(a + b, a) e^(beta + gamma)``.

    With ``full`` the domain is the whole tensor square and products beyond
    the truncation degree are dropped."""
    b = Bang(s, degree)
    dom = Tensor(b, b) if full else FilteredTensor(b, b, degree)

    def col(k):
        i, j = dom.label(k)
        a, beta = b.label(i)
        c, gamma = b.label(j)
        if a + c > degree:
            return {}
        return {b.index((a + c, tuple(sorted(beta + gamma)))): scalar(comb(a + c, a))}
    return ColumnOp(dom, b, col)


def cocontraction(s: Space, degree: int) -> LinMap:
    return cocontraction_op(s, degree).to_linmap()


# ----------------------------------------------------- differential suite

def _ft_assoc(b: Space, degree: int) -> Op:
    """``FT(FT(B, B), B) -> FT(B, FT(B, B))``."""
    inner = FilteredTensor(b, b, degree)
    dom = FilteredTensor(inner, b, degree)
    cod = FilteredTensor(b, FilteredTensor(b, b, degree), degree)

    def col(k):
        ij, c = dom.label(k)
        a, bb = inner.label(ij)
        return {cod.index((a, cod.right.index((bb, c)))): ONE}
    return ColumnOp(dom, cod, col)


def _ft_swap(b: Space, degree: int) -> Op:
    ft = FilteredTensor(b, b, degree)
    return ColumnOp(ft, ft, lambda k: {ft.index(ft.label(k)[::-1]): ONE})


def differential_category_suite(s: Space, t: Space, degree: int) -> list:
    """Codereliction and bialgebra laws, each as an exact matrix equality."""
    params = {"dims": [s.dim, t.dim], "degree": degree}
    results: list = []
    names = ["strength", "coder_counit", "coder_comultiplication", "coder_weakening",
             "coder_contraction"]
    if degree < 1:
        results.extend(skipped(n, params, "needs truncation degree >= 1") for n in names)
    else:
        results.extend(_coder_laws(s, t, degree, params))
    results.extend(_bialgebra_laws(s, degree, params))
    return results


def _coder_laws(s: Space, t: Space, degree: int, params: dict) -> list:
    bs, bt = Bang(s, degree), Bang(t, degree)
    st = Tensor(s, t)
    out = []
    # strength: mu o (coder (x) id) == coder o (id (x) counit) on S (x) !T
    lhs = mu_op(s, t, degree) @ KronOp(coder_op(s, degree), identity_op(bt))
    rhs = coder_op(st, degree) @ KronOp(identity_op(s), counit_op(t, degree))
    out.append(check_equal("strength", params, lhs, rhs))
    out.append(check_equal("coder_counit", params, counit_op(s, degree) @ coder_op(s, degree), identity_op(s)))

    # delta o coder == nabla_{!S} o (coder_{!S} (x) delta_S) o (coder_S (x) nu) o unitor^-1
    unitor_inv = ColumnOp(s, Tensor(s, UNIT), lambda j: {j: ONE})
    first = KronOp(coder_op(s, degree), coweakening(s, degree))
    second = KronOp(coder_op(bs, degree), comultiplication_op(s, degree))
    rhs = cocontraction_op(bs, degree, full=True) @ second @ first @ unitor_inv
    lhs = comultiplication_op(s, degree) @ coder_op(s, degree)
    out.append(check_equal("coder_comultiplication", params, lhs, rhs))

    out.append(check_equal("coder_weakening", params, as_op(weakening(s, degree)) @ coder_op(s, degree),
                           ColumnOp(s, UNIT, lambda j: {})))
    ft = FilteredTensor(bs, bs, degree)
    start = bs.grade_starts[1]
    leibniz = ColumnOp(s, ft, lambda j: {ft.index((start + j, 0)): ONE, ft.index((0, start + j)): ONE})
    out.append(check_equal("coder_contraction", params, contraction_op(s, degree) @ coder_op(s, degree), leibniz))
    return out


def _bialgebra_laws(s: Space, degree: int, params: dict) -> list:
    b = Bang(s, degree)
    ft = FilteredTensor(b, b, degree)
    ident = identity_op(b)
    delta = contraction_op(s, degree)
    nabla = cocontraction_op(s, degree)
    e = as_op(weakening(s, degree))
    nu = as_op(coweakening(s, degree))
    out = []

    left = FilteredTensor(ft, b, degree)
    right = FilteredTensor(b, ft, degree)
    d_id = KronOp(delta, ident, ft, left)
    id_d = KronOp(ident, delta, ft, right)
    assoc = _ft_assoc(b, degree)
    out.append(check_equal("contraction_coassociative", params, assoc @ d_id @ delta, id_d @ delta))

    grade = b.grade_of
    left_counit = ColumnOp(ft, b, lambda k: (lambda i, j: {j: ONE} if grade(i) == 0 else {})(*ft.label(k)))
    right_counit = ColumnOp(ft, b, lambda k: (lambda i, j: {i: ONE} if grade(j) == 0 else {})(*ft.label(k)))
    out.append(check_equal("contraction_counit_left", params, left_counit @ delta, ident))
    out.append(check_equal("contraction_counit_right", params, right_counit @ delta, ident))
    swap = _ft_swap(b, degree)
    out.append(check_equal("contraction_cocommutative", params, swap @ delta, delta))

    n_id = KronOp(nabla, ident, left, ft)
    id_n = KronOp(ident, nabla, right, ft)
    out.append(check_equal("cocontraction_associative", params, nabla @ n_id, nabla @ id_n @ assoc))
    unit_left = ColumnOp(b, ft, lambda j: {ft.index((0, j)): ONE})
    unit_right = ColumnOp(b, ft, lambda j: {ft.index((j, 0)): ONE})
    out.append(check_equal("cocontraction_unit_left", params, nabla @ unit_left, ident))
    out.append(check_equal("cocontraction_unit_right", params, nabla @ unit_right, ident))
    out.append(check_equal("cocontraction_commutative", params, nabla @ swap, nabla))

    quad = FilteredTensor(ft, ft, degree)
    dd = KronOp(delta, delta, ft, quad)
    nn = KronOp(nabla, nabla, quad, ft)

    def middle(k):
        x, y = quad.label(k)
        a, bb = ft.label(x)
        c, d = ft.label(y)
        return {quad.index((ft.index((a, c)), ft.index((bb, d)))): ONE}
    out.append(check_equal("bialgebra", params, delta @ nabla, nn @ ColumnOp(quad, quad, middle) @ dd))

    ee = ColumnOp(ft, UNIT, lambda k: {0: ONE} if k == 0 else {})
    out.append(check_equal("weakening_cocontraction", params, e @ nabla, ee))
    out.append(check_equal("contraction_coweakening", params, delta @ nu, ColumnOp(UNIT, ft, lambda j: {0: ONE})))
    out.append(check_equal("weakening_coweakening", params, e @ nu, identity_op(UNIT)))
    return out
