"""Shared helpers: small constructors and seeded random generators.

All randomness in this suite flows through random.Random with explicit
seeds, so every run exercises exactly the same cases.
"""

from __future__ import annotations

import random
from fractions import Fraction

from jordanform import ExactMatrix, GaussianRational, parse_scalar


def gr(value) -> GaussianRational:
    if isinstance(value, str):
        return parse_scalar(value)
    return GaussianRational(value)


def mat(rows) -> ExactMatrix:
    return ExactMatrix.from_rows(rows)


def col(entries) -> ExactMatrix:
    return ExactMatrix.column([gr(x) for x in entries])


def rand_fraction(rng: random.Random, bound: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def rand_scalar(rng: random.Random, bound: int = 6, gaussian: bool = True) -> GaussianRational:
    re = rand_fraction(rng, bound)
    im = rand_fraction(rng, bound) if gaussian and rng.random() < 0.5 else 0
    return GaussianRational(re, im)


def rand_matrix(rng: random.Random, rows: int, cols: int, bound: int = 4) -> ExactMatrix:
    return ExactMatrix(
        [[rand_scalar(rng, bound) for _ in range(cols)] for _ in range(rows)]
    )


def rand_ranked_matrix(rng: random.Random, rows: int, cols: int) -> ExactMatrix:
    """A matrix whose rank is often deficient: a thin product half the time."""
    if rng.random() < 0.5:
        inner = rng.randint(0, min(rows, cols))
        if inner == 0:
            return ExactMatrix.zeros(rows, cols)
        return rand_matrix(rng, rows, inner) * rand_matrix(rng, inner, cols)
    return rand_matrix(rng, rows, cols)


# Recurring matrices.
SHEAR2 = mat([[1, 1], [0, 1]])
UPPER3 = mat([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
DENSE3 = mat([[2, 1, 1], [-4, 5, 4], [1, 0, 2]])
ROTATION2 = mat([[0, -1], [1, 0]])
CUBE_COMPANION = mat([[0, 0, 2], [1, 0, 0], [0, 1, 0]])
