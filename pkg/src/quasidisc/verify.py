"""Seeded exactness batteries: compact formulas against the Sylvester oracle.

The same sampling recipes drive the CLI verification subcommands and the
acceptance suite: 25 (s, t) pairs including t = 0, and 25 c values
including 0 and every rational pole of the family's denominator.  All
comparisons are exact; a single mismatch is a defect.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .compact import disc_family, res_family
from .families import (
    CHEBYSHEV_T,
    CHEBYSHEV_U,
    GEGENBAUER,
    JACOBI,
    LAGUERRE,
    FamilySpec,
    quasi,
)
from .resultants import discriminant, resultant

DEFAULT_SEED = 20260810

DEFAULT_SPECS: tuple[FamilySpec, ...] = (
    FamilySpec.jacobi(0, 0),
    FamilySpec.jacobi(Fraction(1, 2), Fraction(1, 3)),
    FamilySpec.jacobi(Fraction(-1, 2), Fraction(-1, 2)),
    FamilySpec.laguerre(0),
    FamilySpec.laguerre(Fraction(1, 2)),
    FamilySpec.hermite(),
    FamilySpec.chebyshev_t(),
    FamilySpec.chebyshev_u(),
    FamilySpec.gegenbauer(1),
    FamilySpec.gegenbauer(Fraction(3, 2)),
)


def seeded_rational(rng: random.Random, height: int = 10) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def seeded_st_pairs(seed: int, count: int = 25) -> list[tuple[Fraction, Fraction]]:
    """count (s, t) pairs of height <= 10; the first has t = 0."""
    rng = random.Random(seed)
    pairs = [(seeded_rational(rng), Fraction(0))]
    while len(pairs) < count:
        pairs.append((seeded_rational(rng), seeded_rational(rng)))
    return pairs


def family_disc_poles(spec: FamilySpec, n: int) -> list[Fraction]:
    """The rational c at which the family's compact denominator vanishes."""
    if spec.kind == JACOBI:
        return [Fraction(-(n + spec.alpha), n), Fraction(n + spec.beta, n)]
    if spec.kind == LAGUERRE:
        return [Fraction(-(n + spec.alpha), n)]
    if spec.kind == CHEBYSHEV_T:
        return [Fraction(1), Fraction(-1)]
    if spec.kind == CHEBYSHEV_U:
        return [Fraction(n + 1, n), Fraction(-(n + 1), n)]
    if spec.kind == GEGENBAUER:
        pole = Fraction(n + 2 * spec.lam - 1, n)
        return [pole, -pole]
    return []


def seeded_c_values(spec: FamilySpec, n: int, seed: int, count: int = 25) -> list[Fraction]:
    """count c values: 0, every formula pole, then seeded height-10 fill."""
    rng = random.Random(seed)
    values = [Fraction(0)] + family_disc_poles(spec, n)
    while len(values) < count:
        values.append(seeded_rational(rng))
    return values


def check_resultants(spec: FamilySpec, n: int, seed: int,
                     count: int = 25) -> list[tuple[Fraction, Fraction]]:
    """(s, t) samples where res_family disagrees with the Sylvester oracle."""
    bad = []
    for s, t in seeded_st_pairs(seed, count):
        if res_family(spec, n, s, t) != resultant(quasi(spec, n, s), quasi(spec, n - 1, t)):
            bad.append((s, t))
    return bad


def check_discriminants(spec: FamilySpec, n: int, seed: int,
                        count: int = 25) -> list[Fraction]:
    """c samples where disc_family disagrees with the Sylvester oracle."""
    bad = []
    for c in seeded_c_values(spec, n, seed, count):
        if disc_family(spec, n, c) != discriminant(quasi(spec, n, c)):
            bad.append(c)
    return bad
