"""Seeded constructors for random test objects.

Both the verification suites and the CLI build their random inputs here,
so a (seed, parameters) pair identifies an input exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .group import FiniteSupportPermutation
from .scalars import EXACT, FLOAT, ExactComplex
from .series import TruncatedDirichletSeries


def random_series(
    window: int,
    seed: int,
    density: float = 0.1,
    mode: str = EXACT,
    max_numerator: int = 9,
    max_denominator: int = 4,
    real_only: bool = False,
) -> TruncatedDirichletSeries:
    """Sparse random series; exact mode draws small rationals."""
    rng = random.Random(seed)
    coeffs = {}
    for n in range(1, window + 1):
        if rng.random() >= density:
            continue
        if mode == EXACT:
            re = Fraction(
                rng.randint(-max_numerator, max_numerator),
                rng.randint(1, max_denominator),
            )
            if real_only:
                coeffs[n] = ExactComplex(re)
            else:
                im = Fraction(
                    rng.randint(-max_numerator, max_numerator),
                    rng.randint(1, max_denominator),
                )
                coeffs[n] = ExactComplex(re, im)
        else:
            re = rng.gauss(0.0, 1.0)
            im = 0.0 if real_only else rng.gauss(0.0, 1.0)
            coeffs[n] = complex(re, im)
    return TruncatedDirichletSeries(window, coeffs, mode)


def random_unit(
    window: int, seed: int, density: float = 0.1, mode: str = EXACT
) -> TruncatedDirichletSeries:
    """Random series with a_1 forced nonzero, hence invertible."""
    f = random_series(window, seed, density, mode)
    coeffs = dict(f.coeffs)
    a1 = coeffs.get(1)
    if a1 is None or (mode == FLOAT and abs(a1) < 0.5):
        rng = random.Random(seed ^ 0x5EED)
        if mode == EXACT:
            coeffs[1] = ExactComplex(rng.randint(1, 5), rng.randint(0, 3))
        else:
            coeffs[1] = complex(1.0 + rng.random(), rng.random())
    return TruncatedDirichletSeries(window, coeffs, mode)


def random_support_series(
    support_pool,
    seed: int,
    size: int,
    mode: str = EXACT,
    real_only: bool = False,
) -> TruncatedDirichletSeries:
    """Series supported on a random subset of a given pool of integers."""
    rng = random.Random(seed)
    pool = sorted(support_pool)
    chosen = rng.sample(pool, min(size, len(pool)))
    coeffs = {}
    for n in chosen:
        if mode == EXACT:
            re = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            im = Fraction(0) if real_only else Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            coeffs[n] = ExactComplex(re, im)
        else:
            coeffs[n] = complex(rng.gauss(0, 1), 0 if real_only else rng.gauss(0, 1))
    window = max(pool)
    return TruncatedDirichletSeries(window, coeffs, mode)


def random_permutation(max_index: int, seed: int, moved: int | None = None) -> FiniteSupportPermutation:
    """Random finitely supported permutation of [1..max_index]."""
    rng = random.Random(seed)
    if moved is None:
        moved = max_index
    points = rng.sample(range(1, max_index + 1), min(moved, max_index))
    images = points[:]
    rng.shuffle(images)
    return FiniteSupportPermutation(dict(zip(points, images)))
