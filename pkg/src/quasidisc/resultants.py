"""Sylvester resultants and discriminants, computed two independent ways.

``resultant`` expands the Sylvester determinant with fraction-free Bareiss
elimination; ``resultant_oracle`` reduces by Euclidean remainders using
Res(g, f) = lc(g)^(deg f - deg r) * Res(g, r).  The two share no code path
and cross-check each other in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DegreeTooLowError, ZeroPolynomialError
from .poly import Poly, as_rational


def sylvester_matrix(f: Poly, g: Poly) -> list[list[Fraction]]:
    """The (m+n) x (m+n) Sylvester matrix, rows listing coefficients from
    the leading one down: deg g rows of f shifts above deg f rows of g."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant requires nonzero polynomials")
    n, m = len(f.coeffs) - 1, len(g.coeffs) - 1
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - i - n - 1))
    for i in range(n):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - i - m - 1))
    return rows


def _bareiss_det(mat: list[list[int]]) -> int:
    """Determinant of an integer matrix by Bareiss's fraction-free scheme.

    Every division below is exact; intermediate entries stay minors of the
    original matrix, so there is no coefficient blow-up beyond Hadamard.
    """
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_exact(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix: clear each row to integers,
    run Bareiss, divide the cleared scales back out."""
    if not rows:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for row in rows:
        mult = lcm(*(c.denominator for c in row)) if row else 1
        scale *= mult
        int_rows.append([int(c * mult) for c in row])
    return Fraction(_bareiss_det(int_rows)) / scale


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) as the Sylvester determinant.

    Degree-zero edge cases follow the product formula: Res of two constants
    is 1, and Res(f, b0) = b0^deg f, which keeps multiplicativity exact.
    """
    return det_exact(sylvester_matrix(f, g))


def resultant_oracle(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) by Euclidean remainder reduction; independent of Bareiss."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant requires nonzero polynomials")
    n, m = len(f.coeffs) - 1, len(g.coeffs) - 1
    if n == 0 and m == 0:
        return Fraction(1)
    if m == 0:
        return g.leading_coefficient ** n
    if n == 0:
        return f.leading_coefficient ** m
    # Res(f, g) = (-1)^(nm) Res(g, f) = (-1)^(nm) lc(g)^(n - deg r) Res(g, r)
    r = f % g
    if r.is_zero:
        return Fraction(0)
    sign = -1 if (n % 2 and m % 2) else 1
    return (
        sign
        * g.leading_coefficient ** (n - (len(r.coeffs) - 1))
        * resultant_oracle(g, r)
    )


def discriminant(f: Poly) -> Fraction:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).

    The rational content is factored out first and restored through
    disc(c*f) = c^(2n-2) disc(f); the determinant then runs on the
    primitive integer model, which keeps Bareiss entries small.
    """
    if f.is_zero:
        raise ZeroPolynomialError("discriminant of the zero polynomial")
    n = len(f.coeffs) - 1
    if n < 1:
        raise DegreeTooLowError("discriminant requires degree >= 1")
    if n == 1:
        return Fraction(1)
    denom = lcm(*(c.denominator for c in f.coeffs))
    numer = gcd(*(int(c * denom) for c in f.coeffs))
    content = Fraction(numer, denom)
    primitive = Poly([c / content for c in f.coeffs])
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    disc = sign * resultant(primitive, primitive.derivative())
    disc /= primitive.leading_coefficient
    return content ** (2 * n - 2) * disc


def discriminant_padded(f: Poly, n: int) -> Fraction:
    """disc_n(f): the discriminant of f regarded as a degree-n form.

    Padding one level multiplies by lc(f)^2; padding further inserts a zero
    top coefficient squared, so the value collapses to 0.
    """
    if n < 1:
        raise DegreeTooLowError("padded discriminant requires n >= 1")
    if f.is_zero:
        raise ZeroPolynomialError("discriminant of the zero polynomial")
    d = len(f.coeffs) - 1
    if n < d or d < 1:
        raise DegreeTooLowError(f"need n >= deg f >= 1, got n={n}, deg f={d}")
    if n == d:
        return discriminant(f)
    if n == d + 1:
        return f.leading_coefficient**2 * discriminant(f)
    return Fraction(0)


def disc_vanishes_iff_repeated_root(f: Poly) -> bool:
    """Exact gcd(f, f') degree test; used as an independent oracle in tests."""
    a, b = f, f.derivative()
    while not b.is_zero:
        a, b = b, a % b
    return len(a.coeffs) - 1 >= 1
