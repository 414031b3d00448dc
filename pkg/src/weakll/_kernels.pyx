# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same signatures, same results."""
from fractions import Fraction
from math import gcd, lcm

ZERO = Fraction(0)


cdef tuple _scaled(list row):
    cdef object den = 1
    cdef object x
    for x in row:
        if x:
            den = lcm(den, x.denominator)
    return [x.numerator * (den // x.denominator) for x in row], den


cpdef list matmul(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef object bden = 1
    cdef object x, v, w, s, aden, den
    cdef Py_ssize_t i, j, t, r, base
    cdef list brows = []
    cdef list nz, row, out
    cdef dict acc
    for x in b:
        if x:
            bden = lcm(bden, x.denominator)
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
            for j, w in <list>brows[t]:
                acc[j] = acc.get(j, 0) + v * w
        den = aden * bden
        base = i * m
        for j, s in acc.items():
            if s:
                out[base + j] = Fraction(s, den)
    return out


cpdef list kron(list a, Py_ssize_t ra, Py_ssize_t ca, list b, Py_ssize_t rb, Py_ssize_t cb):
    cdef Py_ssize_t rows = ra * rb, cols = ca * cb
    cdef Py_ssize_t i, j, k, l
    cdef object x, y
    cdef list out = [ZERO] * (rows * cols)
    cdef list bnz = [(k, l, b[k * cb + l]) for k in range(rb) for l in range(cb) if b[k * cb + l]]
    for i in range(ra):
        for j in range(ca):
            x = a[i * ca + j]
            if not x:
                continue
            for k, l, y in bnz:
                out[(i * rb + k) * cols + j * cb + l] = x * y
    return out


cpdef tuple rref(list entries, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef list rows = []
    cdef list pivots = []
    cdef list prow, row, new, out
    cdef Py_ssize_t i, j, c, p, r = 0
    cdef object pv, f, g, v
    for i in range(nrows):
        rows.append(_scaled(entries[i * ncols:(i + 1) * ncols])[0])
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        for i in range(r, nrows):
            if (<list>rows[i])[c]:
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


cpdef tuple merge(tuple ka, tuple kb):
    if not ka:
        return kb
    if not kb:
        return ka
    return tuple(sorted(ka + kb))


cpdef dict poly_mul(dict p, dict q):
    cdef dict out = {}
    cdef tuple ka, kb, key
    cdef object va, vb
    for ka, va in p.items():
        for kb, vb in q.items():
            if not ka:
                key = kb
            elif not kb:
                key = ka
            else:
                key = tuple(sorted(ka + kb))
            out[key] = out.get(key, 0) + va * vb
    return {k: v for k, v in out.items() if v}


cpdef dict sparse_axpy(dict acc, object coef, dict vec):
    cdef object k, v, s
    for k, v in vec.items():
        s = acc.get(k, 0) + coef * v
        if s:
            acc[k] = s
        elif k in acc:
            del acc[k]
    return acc
