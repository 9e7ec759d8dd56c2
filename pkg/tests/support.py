"""Shared test helpers: independent oracles and seeded sample generators.

The multiplication oracle expands products term-by-term from the 4x4 basis
table instead of using the library's closed multiplication formula, so the
two can check each other.
"""

from __future__ import annotations

import random
from fractions import Fraction

from dualpell import DualComplex

# basis order: 1, i, eps, i*eps; cell = (result index, sign) or None for zero
BASIS_TABLE = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, 1), None, None],
    [(3, 1), (2, -1), None, None],
]


def table_mul(x: DualComplex, y: DualComplex) -> DualComplex:
    acc = [Fraction(0)] * 4
    xs = x.coefficients()
    ys = y.coefficients()
    for a in range(4):
        for b in range(4):
            cell = BASIS_TABLE[a][b]
            if cell is None:
                continue
            index, sign = cell
            acc[index] += sign * xs[a] * ys[b]
    return DualComplex(*acc)


def random_rational(rng: random.Random, magnitude: int = 10**6) -> Fraction:
    return Fraction(rng.randint(-magnitude, magnitude), rng.randint(1, 1000))


def random_dc(rng: random.Random, magnitude: int = 10**6) -> DualComplex:
    return DualComplex(*(random_rational(rng, magnitude) for _ in range(4)))


def naive_pell_row(k: Fraction, count: int) -> list[Fraction]:
    """First ``count`` k-Pell terms by the bare recurrence, library-free."""
    row = [Fraction(0), Fraction(1)]
    while len(row) < count:
        row.append(2 * row[-1] + Fraction(k) * row[-2])
    return row[:count]
