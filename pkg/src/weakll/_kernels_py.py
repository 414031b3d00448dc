"""Pure-Python exact kernels.

Reference implementation of the hot loops. ``_kernels.pyx`` mirrors every
function here one-for-one; ``weakll.kernels`` picks whichever is importable.

Matrices are flat row-major lists of :class:`fractions.Fraction`. Work is done
on integer rows scaled by a common denominator, which keeps the inner loops on
machine-level bigint arithmetic instead of ``Fraction.__add__``.
"""
from fractions import Fraction
from math import gcd, lcm

ZERO = Fraction(0)


def _scaled(row):
    den = 1
    for x in row:
        if x:
            den = lcm(den, x.denominator)
    return [x.numerator * (den // x.denominator) for x in row], den


def matmul(a, b, n, k, m):
    """Product of an ``n x k`` and a ``k x m`` matrix, skipping zeros."""
    bden = 1
    for x in b:
        if x:
            bden = lcm(bden, x.denominator)
    brows = []
    for r in range(k):
        nz = []
        base = r * m
        for j in range(m):
            x = b[base + j]
            if x:
                nz.append((j, x.numerator * (bden // x.denominator)))
        brows.append(nz)
    out = [ZERO] * (n * m)
    for i in range(n):
        row = a[i * k:(i + 1) * k]
        aden = 1
        for x in row:
            if x:
                aden = lcm(aden, x.denominator)
        acc = {}
        for t in range(k):
            x = row[t]
            if not x:
                continue
            v = x.numerator * (aden // x.denominator)
            for j, w in brows[t]:
                acc[j] = acc.get(j, 0) + v * w
        den = aden * bden
        base = i * m
        for j, s in acc.items():
            if s:
                out[base + j] = Fraction(s, den)
    return out


def kron(a, ra, ca, b, rb, cb):
    """Kronecker product; row index is ``i * rb + k``, column ``j * cb + l``."""
    rows, cols = ra * rb, ca * cb
    out = [ZERO] * (rows * cols)
    bnz = [(k, l, b[k * cb + l]) for k in range(rb) for l in range(cb) if b[k * cb + l]]
    for i in range(ra):
        for j in range(ca):
            x = a[i * ca + j]
            if not x:
                continue
            for k, l, y in bnz:
                out[(i * rb + k) * cols + j * cb + l] = x * y
    return out


def rref(entries, nrows, ncols):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` holds only the nonzero rows of
    the reduced matrix, each a list of Fractions with a leading 1.
    """
    rows = []
    for i in range(nrows):
        ints, _ = _scaled(entries[i * ncols:(i + 1) * ncols])
        rows.append(ints)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p < 0:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            new = [pv * row[j] - f * prow[j] for j in range(ncols)]
            g = gcd(*new)
            if g > 1:
                new = [v // g for v in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    out = []
    for i in range(r):
        row = rows[i]
        pv = row[pivots[i]]
        out.append([Fraction(v, pv) if v else ZERO for v in row])
    return out, pivots


def merge(ka, kb):
    """Multiset union of two sorted tuples."""
    if not ka:
        return kb
    if not kb:
        return ka
    return tuple(sorted(ka + kb))


def poly_mul(p, q):
    """Product of sparse polynomials keyed by sorted variable tuples."""
    out = {}
    for ka, va in p.items():
        for kb, vb in q.items():
            key = merge(ka, kb)
            out[key] = out.get(key, 0) + va * vb
    return {k: v for k, v in out.items() if v}


def sparse_axpy(acc, coef, vec):
    """``acc += coef * vec`` on dict vectors, in place; drops cancelled keys."""
    for k, v in vec.items():
        s = acc.get(k, 0) + coef * v
        if s:
            acc[k] = s
        elif k in acc:
            del acc[k]
    return acc
