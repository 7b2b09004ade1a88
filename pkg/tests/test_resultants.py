import random
from fractions import Fraction as F

import pytest

from quasidisc.errors import DegreeTooLowError, ZeroPolynomialError
from quasidisc.families import FamilySpec, polynomial
from quasidisc.poly import Poly, affine_substitute
from quasidisc.resultants import (
    disc_vanishes_iff_repeated_root,
    discriminant,
    discriminant_padded,
    resultant,
    resultant_oracle,
)

SEED = 20260810


def random_poly(rng, max_degree=6, height=10):
    degree = rng.randint(0, max_degree)
    coeffs = [F(rng.randint(-height, height), rng.randint(1, height))
              for _ in range(degree + 1)]
    coeffs[-1] = coeffs[-1] or F(1)
    return Poly(coeffs)


def test_resultant_known_values():
    assert resultant(Poly([0, 1]), Poly([-1, 1])) == -1
    assert resultant(Poly([1, 3, 2]), Poly([1, 1])) == 0
    # frozen: 6x6 Sylvester of (H_3, H_2), cross-checked against the
    # closed product over Hermite recurrence coefficients
    h = FamilySpec.hermite()
    assert resultant(polynomial(h, 3), polynomial(h, 2)) == -2048


def test_resultant_constant_conventions():
    assert resultant(Poly([3]), Poly([5])) == 1
    assert resultant(Poly([1, 2, 1]), Poly([4])) == 16
    assert resultant(Poly([4]), Poly([1, 2, 1])) == 16


def test_resultant_rejects_zero():
    with pytest.raises(ZeroPolynomialError):
        resultant(Poly(), Poly([1, 1]))
    with pytest.raises(ZeroPolynomialError):
        resultant_oracle(Poly([1, 1]), Poly())


def test_oracle_known_values():
    assert resultant_oracle(Poly([0, 1]), Poly([-1, 1])) == -1
    assert resultant_oracle(Poly([1, 1]), Poly([1, 1])) == 0


def test_oracle_agreement_seeded():
    rng = random.Random(SEED)
    for _ in range(120):
        f, g = random_poly(rng), random_poly(rng)
        if f.is_zero or g.is_zero:
            continue
        assert resultant(f, g) == resultant_oracle(f, g)


def test_antisymmetry_and_multiplicativity_seeded():
    rng = random.Random(SEED + 1)
    for _ in range(60):
        f, g, h = random_poly(rng, 4), random_poly(rng, 4), random_poly(rng, 3)
        sign = (-1) ** (f.degree * g.degree)
        assert resultant(f, g) == sign * resultant(g, f)
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_discriminant_known_values():
    assert discriminant(Poly([1, 3, 1])) == 5       # b^2 - 4c at (3, 1)
    assert discriminant(Poly([-2, 0, 4])) == 32     # Hilbert: 2^3 * 1 * 2^2
    assert discriminant(Poly([1, -2, 1])) == 0      # double root
    assert discriminant(Poly([5, 7])) == 1          # any linear


def test_discriminant_degree_guard():
    with pytest.raises(DegreeTooLowError):
        discriminant(Poly([3]))
    with pytest.raises(ZeroPolynomialError):
        discriminant(Poly())


def test_discriminant_homogeneity_seeded():
    rng = random.Random(SEED + 2)
    for _ in range(40):
        f = random_poly(rng, 6)
        if f.degree < 2:
            continue
        n = f.degree
        c = F(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])
        assert discriminant(c * f) == c ** (2 * (n - 1)) * discriminant(f)
        a = F(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])
        b = F(rng.randint(-9, 9), rng.randint(1, 9))
        assert discriminant(affine_substitute(f, a, b)) == a ** (n * (n - 1)) * discriminant(f)


def test_discriminant_padded():
    f = Poly([-2, 0, 4])
    assert discriminant_padded(f, 2) == discriminant(f)
    assert discriminant_padded(f, 3) == 16 * 32     # one pad: lc^2 * disc
    assert discriminant_padded(f, 4) == 0           # zero top coefficient squared
    assert discriminant_padded(Poly([0, 1]), 2) == 1  # x as degenerate quadratic
    with pytest.raises(DegreeTooLowError):
        discriminant_padded(f, 1)
    with pytest.raises(DegreeTooLowError):
        discriminant_padded(Poly([2]), 1)


def test_padding_recursion_seeded():
    rng = random.Random(SEED + 3)
    for _ in range(30):
        f = random_poly(rng, 5)
        if f.degree < 1:
            continue
        d = f.degree
        assert discriminant_padded(f, d + 1) == f.leading_coefficient ** 2 * discriminant_padded(f, d)


def test_disc_zero_iff_repeated_root():
    rng = random.Random(SEED + 4)
    for _ in range(40):
        g = random_poly(rng, 3)
        if g.is_zero:
            continue
        r = F(rng.randint(-5, 5), rng.randint(1, 5))
        doubled = Poly([-r, 1]) ** 2 * g
        assert discriminant(doubled) == 0
        assert disc_vanishes_iff_repeated_root(doubled)
    for _ in range(40):
        f = random_poly(rng, 6)
        if f.degree < 1:
            continue
        assert (discriminant(f) == 0) == disc_vanishes_iff_repeated_root(f)
