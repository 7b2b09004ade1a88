"""Classical orthogonal polynomial families and their order-one quasi variants.

Jacobi, Laguerre and Hermite members come from their closed-form sums;
Gegenbauer and the two Chebyshev kinds are built by their own integer/rational
recurrences and cross-checked against the scaled Jacobi closed form in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import InvalidParameterError, NotApplicableError
from .poly import Poly, Scalar, as_rational

JACOBI = "jacobi"
LAGUERRE = "laguerre"
HERMITE = "hermite"
GEGENBAUER = "gegenbauer"
CHEBYSHEV_T = "chebyshev-t"
CHEBYSHEV_U = "chebyshev-u"

KINDS = (JACOBI, LAGUERRE, HERMITE, GEGENBAUER, CHEBYSHEV_T, CHEBYSHEV_U)


def _is_nonpositive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class FamilySpec:
    """Tag plus parameters picking one family instance.

    Jacobi carries (alpha, beta), Laguerre alpha, Gegenbauer lam; the
    parameter-free kinds carry nothing.  Parameters are validated eagerly
    because every downstream formula divides by k+alpha-type factors.
    """

    kind: str
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    lam: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameterError(f"unknown family kind {self.kind!r}")
        want = {JACOBI: ("alpha", "beta"), LAGUERRE: ("alpha",), GEGENBAUER: ("lam",)}
        expected = want.get(self.kind, ())
        for name in ("alpha", "beta", "lam"):
            value = getattr(self, name)
            if name in expected:
                if value is None:
                    raise InvalidParameterError(f"{self.kind} requires {name}")
                object.__setattr__(self, name, as_rational(value))
            elif value is not None:
                raise InvalidParameterError(f"{self.kind} does not take {name}")
        if self.kind in (JACOBI, LAGUERRE):
            if self.alpha.denominator == 1 and self.alpha <= -1:
                raise InvalidParameterError("alpha must not be a negative integer")
        if self.kind == JACOBI:
            if self.beta.denominator == 1 and self.beta <= -1:
                raise InvalidParameterError("beta must not be a negative integer")
        if self.kind == GEGENBAUER and _is_nonpositive_integer(2 * self.lam):
            raise InvalidParameterError("gegenbauer needs lambda != 0 with 2*lambda "
                                        "not a nonpositive integer")

    @classmethod
    def jacobi(cls, alpha: Scalar, beta: Scalar) -> "FamilySpec":
        return cls(JACOBI, alpha=as_rational(alpha), beta=as_rational(beta))

    @classmethod
    def laguerre(cls, alpha: Scalar) -> "FamilySpec":
        return cls(LAGUERRE, alpha=as_rational(alpha))

    @classmethod
    def hermite(cls) -> "FamilySpec":
        return cls(HERMITE)

    @classmethod
    def gegenbauer(cls, lam: Scalar) -> "FamilySpec":
        return cls(GEGENBAUER, lam=as_rational(lam))

    @classmethod
    def chebyshev_t(cls) -> "FamilySpec":
        return cls(CHEBYSHEV_T)

    @classmethod
    def chebyshev_u(cls) -> "FamilySpec":
        return cls(CHEBYSHEV_U)

    def describe(self) -> str:
        if self.kind == JACOBI:
            return f"jacobi(alpha={self.alpha}, beta={self.beta})"
        if self.kind == LAGUERRE:
            return f"laguerre(alpha={self.alpha})"
        if self.kind == GEGENBAUER:
            return f"gegenbauer(lambda={self.lam})"
        return self.kind


class RecurrenceCoeffs(NamedTuple):
    """Degree-m coefficients of Phi_m = (a x + b) Phi_{m-1} - c Phi_{m-2}."""

    a: Fraction
    b: Fraction
    c: Fraction


def pochhammer(lam: Scalar, n: int) -> Fraction:
    """Rising factorial lam (lam+1) ... (lam+n-1), with empty product 1."""
    if n < 0:
        raise InvalidParameterError("pochhammer needs n >= 0")
    lam = as_rational(lam)
    out = Fraction(1)
    for j in range(n):
        out *= lam + j
    return out


def binomial(top: Scalar, m: int) -> Fraction:
    """binom(top, m) for rational top, as a falling-factorial quotient."""
    if m < 0:
        raise InvalidParameterError("binomial needs m >= 0")
    top = as_rational(top)
    num = Fraction(1)
    den = 1
    for j in range(m):
        num *= top - j
        den *= j + 1
    return num / den


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@lru_cache(maxsize=None)
def polynomial(spec: FamilySpec, n: int) -> Poly:
    """The exact degree-n member of the family."""
    if n < 0:
        raise InvalidParameterError("polynomial degree must be >= 0")
    if spec.kind == HERMITE:
        coeffs = [Fraction(0)] * (n + 1)
        for k in range(n // 2 + 1):
            coeffs[n - 2 * k] = Fraction(
                (-1) ** k * _factorial(n) * 2 ** (n - 2 * k),
                _factorial(k) * _factorial(n - 2 * k),
            )
        return Poly(coeffs)
    if spec.kind == LAGUERRE:
        coeffs = [
            (-1) ** k * binomial(n + spec.alpha, n - k) / _factorial(k)
            for k in range(n + 1)
        ]
        return Poly(coeffs)
    if spec.kind == JACOBI:
        half = Fraction(1, 2)
        poly = Poly()
        for m in range(n + 1):
            term = (
                binomial(n + spec.alpha, m)
                * binomial(n + spec.beta, n - m)
                * Poly([-half, half]) ** (n - m)
                * Poly([half, half]) ** m
            )
            poly = poly + term
        return poly
    if spec.kind == GEGENBAUER:
        prev, cur = Poly([1]), Poly([0, 2 * spec.lam])
    elif spec.kind == CHEBYSHEV_T:
        prev, cur = Poly([1]), Poly([0, 1])
    else:
        prev, cur = Poly([1]), Poly([0, 2])
    if n == 0:
        return prev
    for m in range(2, n + 1):
        rc = recurrence_coeffs(spec, m)
        prev, cur = cur, Poly([rc.b, rc.a]) * cur - rc.c * prev
    return cur


def recurrence_coeffs(spec: FamilySpec, m: int) -> RecurrenceCoeffs:
    """The (a_m, b_m, c_m) triple of the family's three-term relation.

    c_1 never multiplies anything (its exponent in every product formula
    is zero); it is returned as the family formula's value where finite
    and as 1 for Jacobi, whose formula is singular at m = 1.
    """
    if m < 1:
        raise InvalidParameterError("recurrence index must be >= 1")
    if spec.kind == HERMITE:
        return RecurrenceCoeffs(Fraction(2), Fraction(0), Fraction(2 * (m - 1)))
    if spec.kind == CHEBYSHEV_T:
        return RecurrenceCoeffs(Fraction(1 if m == 1 else 2), Fraction(0), Fraction(1))
    if spec.kind == CHEBYSHEV_U:
        return RecurrenceCoeffs(Fraction(2), Fraction(0), Fraction(1))
    if spec.kind == LAGUERRE:
        return RecurrenceCoeffs(
            Fraction(-1, m),
            (2 * m + spec.alpha - 1) / m,
            (m + spec.alpha - 1) / m,
        )
    if spec.kind == GEGENBAUER:
        return RecurrenceCoeffs(
            2 * (m + spec.lam - 1) / m,
            Fraction(0),
            (m + 2 * spec.lam - 2) / m,
        )
    # Jacobi
    al, be = spec.alpha, spec.beta
    if m == 1:
        a1 = (al + be + 2) / 2
        if a1 == 0:
            raise InvalidParameterError("degenerate jacobi recurrence: alpha+beta=-2")
        return RecurrenceCoeffs(a1, (al - be) / 2, Fraction(1))
    s = 2 * m + al + be
    d1 = 2 * m * (m + al + be)
    d2 = s - 2
    if d1 == 0 or d2 == 0:
        raise InvalidParameterError(
            f"jacobi recurrence undefined at m={m} for alpha+beta={al + be}"
        )
    return RecurrenceCoeffs(
        (s - 1) * s / d1,
        (s - 1) * (al * al - be * be) / (d1 * d2),
        (m + al - 1) * (m + be - 1) * s / (m * (m + al + be) * d2),
    )


def quasi(spec: FamilySpec, n: int, c: Scalar) -> Poly:
    """Order-one quasi-orthogonal member Phi_n + c Phi_{n-1}."""
    if n < 1:
        raise InvalidParameterError("quasi-orthogonal degree must be >= 1")
    return polynomial(spec, n) + as_rational(c) * polynomial(spec, n - 1)


def derivative_identity_residual(spec: FamilySpec, n: int, variant: str = "lower") -> Poly:
    """LHS - RHS of the family derivative identity; identically zero.

    Jacobi has two identities: "lower" relates P_n' to P_n and P_{n-1},
    "raise" to P_n and P_{n+1}.  Chebyshev and Gegenbauer are covered
    through the Jacobi identity after rescaling and are not served here.
    """
    if n < 1:
        raise InvalidParameterError("derivative identity needs n >= 1")
    if variant not in ("lower", "raise"):
        raise InvalidParameterError(f"unknown identity variant {variant!r}")
    if spec.kind in (GEGENBAUER, CHEBYSHEV_T, CHEBYSHEV_U):
        raise NotApplicableError(f"no dedicated derivative identity for {spec.kind}")
    if variant == "raise" and spec.kind != JACOBI:
        raise NotApplicableError("the raising identity is Jacobi-only")
    if spec.kind == HERMITE:
        return polynomial(spec, n).derivative() - 2 * n * polynomial(spec, n - 1)
    if spec.kind == LAGUERRE:
        ln, lnm1 = polynomial(spec, n), polynomial(spec, n - 1)
        return (
            Poly([0, 1]) * ln.derivative()
            - n * ln
            + (n + spec.alpha) * lnm1
        )
    al, be = spec.alpha, spec.beta
    pn = polynomial(spec, n)
    one_minus_x2 = Poly([1, 0, -1])
    if variant == "lower":
        s = 2 * n + al + be
        return (
            s * one_minus_x2 * pn.derivative()
            + n * Poly([be - al, s]) * pn
            - 2 * (n + al) * (n + be) * polynomial(spec, n - 1)
        )
    s = 2 * n + al + be + 2
    return (
        s * one_minus_x2 * pn.derivative()
        - (n + al + be + 1) * Poly([al - be, s]) * pn
        + 2 * (n + 1) * (n + al + be + 1) * polynomial(spec, n + 1)
    )
