"""Independent reference computations for the tests.

Nothing here goes through the multiset/multinomial machinery of the package:
points of an exponential are built by summing over *ordered* index tuples, and
power series are plain coefficient lists.
"""
from fractions import Fraction
from itertools import product


# ------------------------------------------------------------ point evaluations

def ev_point(bang, x, nonunit=False):
    """Coordinates of ``ev_x`` in ``bang`` (a Bang or BangNonUnit over Base(d)):
    grade n holds ``x (x) ... (x) x`` folded onto sorted tuples."""
    out = {}
    for n in range(1 if nonunit else 0, bang.degree + 1):
        for t in product(range(len(x)), repeat=n):
            c = Fraction(1)
            for i in t:
                c *= x[i]
            if c:
                k = bang.index((n, tuple(sorted(t))))
                out[k] = out.get(k, 0) + c
    return {k: v for k, v in out.items() if v}


def sym_power_point(vec, k, outer, grade=None):
    """``vec^k`` in grade ``k`` of the exponential ``outer`` whose inner space
    holds ``vec`` (a sparse dict)."""
    out = {}
    support = sorted(vec)
    for t in product(support, repeat=k):
        c = Fraction(1)
        for i in t:
            c *= vec[i]
        idx = outer.index((k, tuple(sorted(t))))
        out[idx] = out.get(idx, 0) + c
    return {i: v for i, v in out.items() if v}


def grade_part(bang, vec, q):
    r = bang.grade_range(q)
    return {i: v for i, v in vec.items() if i in r}


def add_into(acc, vec, c=1):
    for i, v in vec.items():
        acc[i] = acc.get(i, 0) + c * v
    return {i: v for i, v in acc.items() if v}


def divisor_comultiplication_point(bang, outer, x, nonunit=False):
    """``delta(ev_x)``: grade p of ev_x goes to the sum over k | p of
    ``(grade p/k of ev_x)^k`` in grade k of ``outer``; grade 0 goes to the unit
    (only 0 divides 0)."""
    ev = ev_point(bang, x, nonunit)
    out = {}
    if not nonunit:
        out = add_into(out, {outer.index((0, ())): Fraction(1)})
    for p in range(1, bang.degree + 1):
        for k in range(1, p + 1):
            if p % k == 0:
                out = add_into(out, sym_power_point(grade_part(bang, ev, p // k), k, outer))
    return out


def composition_comultiplication_point(bang, outer, x):
    """Non-unit ``delta(ev_x)``: the sum over ordered compositions is the
    k-th power of the whole point, cut at total grade D."""
    ev = ev_point(bang, x, nonunit=True)
    out = {}
    for k in range(1, bang.degree + 1):
        for t in product(sorted(ev), repeat=k):
            if sum(bang.grade_of(i) for i in t) > bang.degree:
                continue
            c = Fraction(1)
            for i in t:
                c *= ev[i]
            idx = outer.index((k, tuple(sorted(t))))
            out[idx] = out.get(idx, 0) + c
    return {i: v for i, v in out.items() if v}


def filtered_pair(ft, a, b):
    """``a (x) b`` restricted to the filtered tensor ``ft``."""
    out = {}
    for i, u in a.items():
        for j, v in b.items():
            gi, gj = ft.left.grade_of(i), ft.right.grade_of(j)
            if ft.low <= gi + gj <= ft.degree:
                out[ft.index((i, j))] = u * v
    return out


def plain_pair(t, a, b):
    return {t.index((i, j)): u * v for i, u in a.items() for j, v in b.items()}


def apply(f, vec):
    """Apply a LinMap or Op to a sparse vector."""
    if hasattr(f, "apply_sparse"):
        return {k: v for k, v in f.apply_sparse(vec).items() if v}
    return {k: v for k, v in f.apply(vec).items() if v}


# -------------------------------------------------------------- power series

def poly_mul(a, b, top):
    out = [Fraction(0)] * (top + 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                if i + j <= top:
                    out[i + j] += u * v
    return out


def series_compose(g, f, top):
    """``g(f(x))`` cut at degree ``top``; coefficient lists indexed by degree.
    ``f`` must have no constant term when ``g`` has terms above degree 0."""
    out = [Fraction(0)] * (top + 1)
    power = [Fraction(1)] + [Fraction(0)] * top
    for n, c in enumerate(g):
        if n > top:
            break
        out = [o + c * p for o, p in zip(out, power)]
        power = poly_mul(power, f, top)
    return out


def divisor_compose(g, f, top):
    """Scalar divisor composition: ``(g o f)_p = sum over k | p of g_k f_(p/k)^k``,
    and ``(g o f)_0 = g_0``."""
    out = [Fraction(0)] * (top + 1)
    out[0] = g[0]
    for p in range(1, top + 1):
        for k in range(1, p + 1):
            if p % k == 0:
                out[p] += g[k] * f[p // k] ** k
    return out


def eval_series(coeffs, t):
    return sum(c * t ** n for n, c in enumerate(coeffs))


# ------------------------------------------------------------------- counting

def count_multisets(d, n):
    """Brute-force number of sorted n-tuples over range(d)."""
    return len({tuple(sorted(t)) for t in product(range(d), repeat=n)})
