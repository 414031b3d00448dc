"""Acceptance criteria, one test each, every check exact.

Each test records a ``criterion N: PASS|FAIL`` line that is printed in the
terminal summary. A criterion fails if any of its checks fails or if it runs
over its time budget.
"""
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from helpers import nonunit_scalar_seq, scalar_seq, seq_coeffs
from weakll.dsl import parse_formula, polarity
from weakll.exact_linalg import Matrix, kernel_containment_iff_span
from weakll.exponential import (comultiplication_op, counit_op, curry_seq, differential_category_suite,
                                kleisli_compose, kleisli_compose_via_comonad, kleisli_to_seq,
                                random_seq, seely_iso, seq_to_kleisli, uncurry_seq, bang_map)
from weakll.exponential_nonunit import (NonUnitSeq, nonunit_comultiplication_op, nonunit_counit_op,
                                        substitute_compose)
from weakll.generators import random_linmap, random_space, random_vector, rng_for
from weakll.monomials import Monomial, polarize, random_monomial
from weakll.operators import BangOp, KronOp, as_op, compare, identity_op
from weakll.spaces import (UNIT, Bang, BangNonUnit, Base, Hom, Prod, Tensor, curry, double_dual_ev,
                           hom_dual_decompose, hom_dual_reconstruct, prod_map, uncurry, vector_to_map)

SEED = 20240601


@contextmanager
def criterion(number, title, budget):
    failures = []
    start = time.perf_counter()
    try:
        yield failures
    except AssertionError as e:
        failures.append(str(e) or "assertion failed")
    elapsed = time.perf_counter() - start
    if elapsed >= budget:
        failures.append(f"took {elapsed:.2f} s, budget {budget} s")
    status = "FAIL" if failures else "PASS"
    line = f"criterion {number}: {status} {title} ({elapsed:.2f} s / {budget} s)"
    if failures:
        line += " -- " + "; ".join(failures)
    ACCEPTANCE_LINES.append(line)
    print(line)
    if failures:
        pytest.fail(line, pytrace=False)


def check(failures, ok, message):
    if not ok:
        failures.append(message)


def test_criterion_01_kernel_containment_equals_span_membership():
    with criterion(1, "kernel containment <=> span membership, 200 instances on K^4", 1) as bad:
        rng = rng_for(SEED, "c1")
        agree = spans = 0
        for k in range(200):
            ls = [random_vector(rng, 4) for _ in range(rng.randint(0, 3))]
            if ls and k % 2:
                coeffs = random_vector(rng, len(ls))
                l = [sum(c * f[i] for c, f in zip(coeffs, ls)) for i in range(4)]
            else:
                l = random_vector(rng, 4)
            a, b = kernel_containment_iff_span(l, ls)
            agree += a == b
            spans += b
        check(bad, agree == 200, f"{200 - agree} disagreements")
        check(bad, 0 < spans < 200, "instances did not cover both outcomes")


def test_criterion_02_star_autonomy():
    with criterion(2, "double dual is the identity on 50 random spaces of dim <= 16", 1) as bad:
        rng = rng_for(SEED, "c2")
        for _ in range(50):
            s = random_space(rng, 16)
            m = double_dual_ev(s)
            check(bad, s.dim <= 16 and m.is_invertible() and m.matrix == Matrix.identity(s.dim), str(s))


def test_criterion_03_curry_roundtrip():
    with criterion(3, "curry/uncurry round trip on 30 maps, dims <= (3,3,3)", 1) as bad:
        rng = rng_for(SEED, "c3")
        for _ in range(30):
            s, t, u = (Base(rng.randint(1, 3)) for _ in range(3))
            f = random_linmap(rng, Tensor(s, t), u)
            g = random_linmap(rng, s, Hom(t, u))
            check(bad, uncurry(curry(f)) == f and curry(uncurry(g)) == g, f"{s}, {t}, {u}")


def test_criterion_04_hom_dual_reconstruction():
    with criterion(4, "hom-dual reconstruction on a full basis, dims <= (3,3), 30 functionals", 1) as bad:
        rng = rng_for(SEED, "c4")
        for _ in range(30):
            s, t = Base(rng.randint(1, 3)), Base(rng.randint(1, 3))
            n = s.dim * t.dim
            phi = random_vector(rng, n)
            pairs = hom_dual_decompose(phi, s, t)
            for k in range(n):
                basis = vector_to_map(Hom(s, t), [1 if i == k else 0 for i in range(n)])
                check(bad, hom_dual_reconstruct(pairs, basis) == phi[k], f"{s}, {t}, basis {k}")


def test_criterion_05_polarization():
    with criterion(5, "polarize after eval is the identity on 50 monomials; x^2 -> xy", 2) as bad:
        rng = rng_for(SEED, "c5")
        for _ in range(50):
            d, n = rng.randint(1, 2), rng.randint(0, 4)
            m = random_monomial(rng, Base(d), Base(rng.randint(1, 2)), n)
            check(bad, polarize(m, n, m.dom, m.cod) == m, f"dim {d}, degree {n}")
        sq = polarize(lambda x: [x[0] ** 2], 2, UNIT, UNIT)
        check(bad, sq == Monomial(UNIT, UNIT, 2, {(0, 0): {0: 1}}), "x^2")
        check(bad, sq.multilinear([[Fraction(3)], [Fraction(7)]]) == [21], "x^2 does not polarize to xy")


def test_criterion_06_comonad_laws():
    with criterion(6, "comonad laws at (1,4) and (2,3)", 30) as bad:
        for d, D in [(1, 4), (2, 3)]:
            s = Base(d)
            b = Bang(s, D)
            delta = comultiplication_op(s, D)
            ident = identity_op(b)
            laws = {
                "counit_{!E} o delta = id": compare(counit_op(b, D) @ delta, ident),
                "!counit o delta = id": compare(BangOp(counit_op(s, D), D) @ delta, ident),
                "delta coassociative": compare(comultiplication_op(b, D) @ delta, BangOp(delta, D) @ delta),
            }
            for name, diff in laws.items():
                check(bad, diff is None, f"{name} fails at ({d},{D}) on column {b.label_str(diff[0]) if diff else ''}")


def test_criterion_07_co_kleisli_correspondence():
    with criterion(7, "co-Kleisli round trip and divisor = comonad composition; degree-4 witness", 30) as bad:
        rng = rng_for(SEED, "c7")
        for d, D in [(1, 4), (2, 3)]:
            s = Base(d)
            for _ in range(20):
                f, g = random_seq(rng, s, s, D), random_seq(rng, s, Base(rng.randint(1, 2)), D)
                check(bad, kleisli_to_seq(seq_to_kleisli(f)) == f, f"round trip at ({d},{D})")
                k = seq_to_kleisli(g)
                check(bad, seq_to_kleisli(kleisli_to_seq(k)) == k, f"inverse round trip at ({d},{D})")
                check(bad, kleisli_compose(g, f) == kleisli_compose_via_comonad(g, f),
                      f"divisor composition differs from g o !f o delta at ({d},{D})")
        a = [Fraction(0)] + random_vector(rng, 4)
        b = [Fraction(0)] + random_vector(rng, 4)
        got = seq_coeffs(kleisli_compose(scalar_seq(b, 4), scalar_seq(a, 4)))[4]
        check(bad, got == b[1] * a[4] + b[2] * a[2] ** 2 + b[4] * a[1] ** 4, "degree-4 witness")


def test_criterion_08_seely_and_cartesian_closure():
    with criterion(8, "Seely invertible and natural; curry_seq round trip at (1,1), D=4", 10) as bad:
        rng = rng_for(SEED, "c8")
        for ds, dt in [(1, 1), (1, 2)]:
            s, t = Base(ds), Base(dt)
            for D in range(3):
                m = seely_iso(s, t, D)
                check(bad, m.is_invertible(), f"not invertible at ({ds},{dt}), D={D}")
                for _ in range(3):
                    f, g = random_linmap(rng, s, s), random_linmap(rng, t, t)
                    lhs = as_op(m) @ bang_map(prod_map(f, g), D)
                    rhs = KronOp(bang_map(f, D), bang_map(g, D), m.cod, m.cod) @ m
                    check(bad, compare(lhs, rhs) is None, f"not natural at ({ds},{dt}), D={D}")
        for _ in range(10):
            h = random_seq(rng, Prod(UNIT, UNIT), UNIT, 4)
            check(bad, uncurry_seq(curry_seq(h)) == h, "uncurry_seq o curry_seq")
            c = curry_seq(random_seq(rng, Prod(UNIT, UNIT), UNIT, 4))
            check(bad, curry_seq(uncurry_seq(c)) == c, "curry_seq o uncurry_seq")


def test_criterion_09_differential_category():
    with criterion(9, "differential category suite at (1,3) and (2,2)", 30) as bad:
        for d, D in [(1, 3), (2, 2)]:
            for r in differential_category_suite(Base(d), Base(d), D):
                check(bad, r.status == "pass", f"{r.law} {r.status} at ({d},{D})")


def test_criterion_10_nonunit_exponential():
    with criterion(10, "substitution = power-series oracle on 100 pairs at D=6; non-unit comonad at (1,4)", 5) as bad:
        rng = rng_for(SEED, "c10")
        for _ in range(100):
            a = [Fraction(0)] + random_vector(rng, 6)
            b = [Fraction(0)] + random_vector(rng, 6)
            got = seq_coeffs(substitute_compose(nonunit_scalar_seq(b, 6), nonunit_scalar_seq(a, 6)))
            check(bad, got == oracles.series_compose(b, a, 6), f"g={b}, f={a}")
        example = substitute_compose(nonunit_scalar_seq([0, 0, 1], 6), nonunit_scalar_seq([0, 1, 1], 6))
        check(bad, seq_coeffs(example) == [0, 0, 1, 2, 1, 0, 0], "x^2 o (x + x^2)")
        s, D = UNIT, 4
        b1 = BangNonUnit(s, D)
        delta = nonunit_comultiplication_op(s, D)
        ident = identity_op(b1)
        check(bad, compare(nonunit_counit_op(b1, D) @ delta, ident) is None, "outer counit law")
        check(bad, compare(BangOp(nonunit_counit_op(s, D), D, nonunit=True) @ delta, ident) is None,
              "inner counit law")
        check(bad, compare(nonunit_comultiplication_op(b1, D) @ delta,
                           BangOp(delta, D, nonunit=True) @ delta) is None, "coassociativity")


def test_criterion_11_distinct_from_pointwise():
    with criterion(11, "divisor composition != pointwise; substitution = pointwise", 1) as bad:
        f, g = [0, 1, 1], [0, 0, 1]
        pointwise = oracles.series_compose(g, f, 4)
        divisor = seq_coeffs(kleisli_compose(scalar_seq(g, 4), scalar_seq(f, 4)))
        nonunit = seq_coeffs(substitute_compose(nonunit_scalar_seq(g, 4), nonunit_scalar_seq(f, 4)))
        check(bad, pointwise == [0, 0, 1, 2, 1], "pointwise oracle")
        check(bad, divisor == [0, 0, 1, 0, 1] and divisor != pointwise, f"divisor gave {divisor}")
        check(bad, nonunit == pointwise, f"substitution gave {nonunit}")


POLARITY_CORPUS = [
    # negatives: never a shift
    ("X^", "negative", False),
    ("X^ | Y^", "negative", False),
    ("X^ & Y^", "negative", False),
    ("?[2](X^)", "negative", False),
    ("?[3](X^ | Y^)", "negative", False),
    ("dn(X)", "negative", False),
    ("dn(X * Y)", "negative", False),
    ("dn(![2]X)", "negative", False),
    ("?[2](dn(X * Y)) & Z^", "negative", False),
    ("dn(X + Y) | Z^", "negative", False),
    # tensors and bangs need a shift
    ("X * Y", "positive", True),
    ("![2]X", "positive", True),
    ("![1](X + Y)", "positive", True),
    ("(X * Y) + Z", "positive", True),
    ("X * up(Y^)", "positive", True),
    ("![2](X * Y)", "positive", True),
    # binary coproducts of weak spaces are exempt
    ("X + Y", "positive", False),
    ("X + (Y + Z)", "positive", False),
    ("up(X^) + Y", "positive", False),
    ("up(X^ | Y^)", "positive", False),
]


def test_criterion_12_polarity_table():
    with criterion(12, "polarity classification on a 20-formula corpus", 1) as bad:
        check(bad, len(POLARITY_CORPUS) == 20, "corpus size")
        for text, pol, shift in POLARITY_CORPUS:
            r = polarity(parse_formula(text))
            check(bad, (r.polarity, r.requires_shift) == (pol, shift),
                  f"{text}: got {r.polarity}/{r.requires_shift}")


def test_criterion_13_deterministic_report():
    with criterion(13, "check-laws --seed 42 is byte-identical across two runs", 60) as bad:
        cmd = [sys.executable, "-m", "weakll", "check-laws", "--seed", "42"]
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
        check(bad, bool(first.stdout) and first.stdout == second.stdout, "reports differ")
        check(bad, first.returncode == second.returncode, "exit codes differ")
