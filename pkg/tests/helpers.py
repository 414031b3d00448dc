"""Shared strategies and constructors for the test-suite."""
from fractions import Fraction

import hypothesis.strategies as st

from weakll.exponential import MonomialSeq
from weakll.exponential_nonunit import NonUnitSeq
from weakll.monomials import Monomial
from weakll.spaces import UNIT

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
nonzero = rationals.filter(bool)


def vectors(n):
    return st.lists(rationals, min_size=n, max_size=n)


def scalar_seq(coeffs, degree, cls=MonomialSeq):
    """The 1-dimensional sequence with ``f_n(x) = coeffs[n] x^n``."""
    parts = {n: Monomial(UNIT, UNIT, n, {(0,) * n: {0: Fraction(c)}})
             for n, c in enumerate(coeffs) if n >= cls.min_grade and n <= degree}
    return cls.from_dict(UNIT, UNIT, degree, parts)


def seq_coeffs(seq):
    """Inverse of :func:`scalar_seq`."""
    out = []
    for n in range(seq.degree + 1):
        c = seq[n].coeffs.get((0,) * n, {}).get(0, Fraction(0)) if n >= seq.min_grade else Fraction(0)
        out.append(c)
    return out


def nonunit_scalar_seq(coeffs, degree):
    return scalar_seq(coeffs, degree, NonUnitSeq)
