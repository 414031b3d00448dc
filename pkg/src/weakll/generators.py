"""Deterministic random instances over small rationals.

Every value is ``p/q`` with ``p`` in ``[-9, 9]`` and ``q`` in ``[1, 9]``. Callers pass
their own ``random.Random``; string seeds such as ``"42:comonad:(2, 3)"`` are
hashed by :mod:`random` itself and give the same stream on every platform.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .exact_linalg import Matrix
from .spaces import (Base, Coprod, Dual, Hom, LinMap, Par, Prod, Space, SymPow, Tensor)


def rng_for(seed, *parts) -> random.Random:
    return random.Random(":".join(str(p) for p in (seed,) + parts))


def small_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_vector(rng: random.Random, n: int) -> list:
    return [small_rational(rng) for _ in range(n)]


def random_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, random_vector(rng, rows * cols))


def random_linmap(rng: random.Random, dom: Space, cod: Space) -> LinMap:
    return LinMap(dom, cod, random_matrix(rng, cod.dim, dom.dim))


def random_rank_matrix(rng: random.Random, rows: int, cols: int, rank: int) -> Matrix:
    """Product of random ``rows x rank`` and ``rank x cols`` factors, retried
    until the rank is exact."""
    while True:
        m = random_matrix(rng, rows, rank) @ random_matrix(rng, rank, cols)
        if m.rank() == rank:
            return m


def random_space(rng: random.Random, max_dim: int = 16, depth: int = 3) -> Space:
    """A random space expression of dimension between 1 and ``max_dim``."""
    if depth == 0 or max_dim < 2 or rng.random() < 0.3:
        return Base(rng.randint(1, max(1, min(max_dim, 4))))
    kind = rng.choice(["dual", "tensor", "par", "prod", "coprod", "hom", "sympow"])
    if kind == "dual":
        return Dual(random_space(rng, max_dim, depth - 1))
    if kind in ("prod", "coprod"):
        left = random_space(rng, max_dim - 1, depth - 1)
        right = random_space(rng, max_dim - left.dim, depth - 1)
        return (Prod if kind == "prod" else Coprod)(left, right)
    if kind == "sympow":
        of = random_space(rng, min(max_dim, 4), depth - 1)
        n = rng.randint(0, 3)
        while SymPow(of, n).dim > max_dim or SymPow(of, n).dim == 0:
            n -= 1
        return SymPow(of, n)
    left = random_space(rng, max_dim // 2, depth - 1)
    right = random_space(rng, max_dim // left.dim, depth - 1)
    return {"tensor": Tensor, "par": Par, "hom": Hom}[kind](left, right)
