import random
from fractions import Fraction as F

import pytest

from quasidisc.errors import ZeroPolynomialError
from quasidisc.poly import MINUS_INFINITY, Poly, affine_substitute, interpolate


def test_trailing_zeros_stripped():
    assert Poly([1, 2, 0, 0]).coeffs == (F(1), F(2))
    assert Poly([0, 0]).is_zero
    assert Poly().degree == MINUS_INFINITY


def test_zero_has_no_leading_coefficient():
    with pytest.raises(ZeroPolynomialError):
        Poly().leading_coefficient


def test_arithmetic_exact():
    f = Poly([F(1, 3), 2])
    g = Poly([1, 0, F(5, 7)])
    assert (f + g) - g == f
    assert f * g == g * f
    assert (f * g)(F(2, 5)) == f(F(2, 5)) * g(F(2, 5))
    assert (f ** 3) == f * f * f
    assert Poly([1, 1]) ** 0 == Poly([1])


def test_divmod_reconstructs():
    rng = random.Random(7)
    for _ in range(50):
        f = Poly([F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 7))])
        g = Poly([F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 5))])
        if g.is_zero:
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero or r.degree < g.degree


def test_derivative():
    assert Poly([5, 3, 0, 2]).derivative() == Poly([3, 0, 6])
    assert Poly([7]).derivative().is_zero


def test_serialization_round_trip():
    f = Poly([F(-3, 4), 0, F(5)])
    assert f.to_json() == ["-3/4", "0", "5"]
    assert Poly.from_json(f.to_json()) == f


def test_str_rendering():
    assert str(Poly([-2, 0, 4])) == "4x^2 - 2"
    assert str(Poly()) == "0"
    assert str(Poly([0, -1])) == "-x"


def test_affine_substitute():
    assert affine_substitute(Poly([0, 0, 1]), 2, 1) == Poly([1, 4, 4])
    f = Poly([-2, 0, 4])
    assert affine_substitute(f, 1, 0) == f
    # a = 0 collapses to the constant f(b)
    assert affine_substitute(f, 0, 3) == Poly([f(3)])


def test_interpolate_round_trip():
    rng = random.Random(11)
    for _ in range(20):
        f = Poly([F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 6))])
        xs = list(range(-3, -3 + len(f.coeffs) + 1))
        assert interpolate([(x, f(x)) for x in xs]) == f


def test_interpolate_rejects_duplicates():
    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])
