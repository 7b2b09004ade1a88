"""Closed-form resultant and discriminant evaluators.

Every function here is an independent implementation of a compact formula;
none of them calls the Sylvester machinery except ``disc_general``, which
needs one auxiliary resultant against its (tiny) weight-derivative factor.
The test suite holds each of them to exact equality with the brute-force
oracles in :mod:`quasidisc.resultants`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameterError, InvalidRecurrenceError, NotApplicableError, \
    PoleEncounteredError
from .families import (
    CHEBYSHEV_T,
    CHEBYSHEV_U,
    GEGENBAUER,
    HERMITE,
    JACOBI,
    LAGUERRE,
    FamilySpec,
    RecurrenceCoeffs,
    polynomial,
    quasi,
    recurrence_coeffs,
)
from .poly import Poly, Scalar, as_rational
from .resultants import discriminant, resultant


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class GeneralRecurrence:
    """The (a_m, b_m, c_m) sequence for m = 1..n of a three-term relation.

    a_m must never vanish; c_m must not vanish for m >= 2.  c_1 never enters
    any product (its exponent is always zero), so a zero there is legal --
    Hermite has c_1 = 0.
    """

    coeffs: tuple[RecurrenceCoeffs, ...]

    def __post_init__(self):
        for m, rc in enumerate(self.coeffs, start=1):
            if rc.a == 0:
                raise InvalidRecurrenceError(f"a_{m} = 0")
            if m >= 2 and rc.c == 0:
                raise InvalidRecurrenceError(f"c_{m} = 0")

    @classmethod
    def for_family(cls, spec: FamilySpec, n: int) -> "GeneralRecurrence":
        return cls(tuple(recurrence_coeffs(spec, m) for m in range(1, n + 1)))

    def coeff(self, m: int) -> RecurrenceCoeffs:
        if not 1 <= m <= len(self.coeffs):
            raise InvalidRecurrenceError(f"recurrence holds m = 1..{len(self.coeffs)}")
        return self.coeffs[m - 1]


@dataclass(frozen=True)
class DerivativeRelation:
    """Constants of the degree-lowering derivative pair at index n:

        rho * Phi_n'     = (A x + B) Phi_n     + C Phi_{n-1}
        rho * Phi_{n-1}' = (D x + E) Phi_{n-1} + F Phi_n
    """

    rho: Poly
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction
    F: Fraction

    def __post_init__(self):
        if self.D - self.A == 0:
            raise InvalidParameterError("derivative relation needs D != A")

    @classmethod
    def for_family(cls, spec: FamilySpec, n: int) -> "DerivativeRelation":
        zero, one = Fraction(0), Fraction(1)
        if spec.kind == HERMITE:
            return cls(Poly([1]), zero, zero, Fraction(2 * n), Fraction(2), zero, -one)
        if spec.kind == LAGUERRE:
            na = n + spec.alpha
            return cls(Poly([0, 1]), zero, Fraction(n), -na, one, -na, Fraction(n))
        weight = Poly([1, 0, -1])
        if spec.kind == JACOBI:
            al, be = spec.alpha, spec.beta
            s = 2 * n + al + be
            return cls(
                weight,
                Fraction(-n),
                n * (al - be) / s,
                2 * (n + al) * (n + be) / s,
                n + al + be,
                (n + al + be) * (al - be) / s,
                -2 * n * (n + al + be) / s,
            )
        if spec.kind == GEGENBAUER:
            top = n + 2 * spec.lam - 1
            return cls(weight, Fraction(-n), zero, top, top, zero, Fraction(-n))
        if spec.kind == CHEBYSHEV_U:
            return cls(weight, Fraction(-n), zero, Fraction(n + 1), Fraction(n + 1),
                       zero, Fraction(-n))
        # Chebyshev T
        return cls(weight, Fraction(-n), zero, Fraction(n), Fraction(n - 1),
                   zero, Fraction(-(n - 1)))


def schur_product(rec: GeneralRecurrence, n: int) -> Fraction:
    """prod_k Phi_{n-1}(y_k) over the roots y_k of Phi_n, from the
    recurrence alone: (-1)^(n(n-1)/2) prod a_k^(n-2k+1) c_k^(k-1)."""
    if n < 1:
        raise InvalidParameterError("schur product needs n >= 1")
    out = Fraction(_sign(n * (n - 1) // 2))
    for k in range(1, n + 1):
        rc = rec.coeff(k)
        out *= rc.a ** (n - 2 * k + 1)
        if k >= 2:
            out *= rc.c ** (k - 1)
    return out


def res_general(rec: GeneralRecurrence, n: int, s: Scalar, t: Scalar,
                phi_ns: Poly) -> Fraction:
    """Res(Phi_{n;s}, Phi_{n-1;t}) for any three-term sequence.

    phi_ns must be the polynomial Phi_n + s Phi_{n-1} built from the same
    recurrence; at t = 0 the value is independent of s and of phi_ns.
    """
    if n < 2:
        raise InvalidParameterError("general resultant formula needs n >= 2")
    s, t = as_rational(s), as_rational(t)
    if t == 0:
        out = Fraction(_sign(n * (n - 1) // 2))
        for k in range(1, n + 1):
            rc = rec.coeff(k)
            out *= rc.a ** (2 * n - 2 * k)
            if k >= 2:
                out *= rc.c ** (k - 1)
        return out
    an, bn, cn = rec.coeff(n)
    out = Fraction(_sign(n * (n + 1) // 2)) * an**n * cn**-n
    for k in range(1, n + 1):
        rc = rec.coeff(k)
        out *= rc.a ** (2 * n - 2 * k - 1)
        if k >= 2:
            out *= rc.c ** (k - 1)
    return out * t**n * phi_ns(-(cn + bn * t + s * t) / (an * t))


def _res_t0_family(spec: FamilySpec, n: int) -> Fraction:
    """Res(Phi_n, Phi_{n-1}) by the per-family closed product."""
    if spec.kind == JACOBI:
        al, be = spec.alpha, spec.beta
        out = Fraction(_sign(n * (n - 1) // 2), 2 ** (n * (n - 1)))
        out *= (2 * n + al + be) ** (n - 1)
        for k in range(1, n + 1):
            out *= Fraction(k) ** (k - 2 * n + 1)
        for k in range(1, n):
            out *= (k + al) ** k * (k + be) ** k * (n + k + al + be) ** (n - k - 1)
        return out
    if spec.kind == LAGUERRE:
        out = Fraction(_sign(n * (n - 1) // 2))
        for k in range(1, n + 1):
            out *= Fraction(k) ** (k - 2 * n + 1)
        for k in range(1, n):
            out *= (k + spec.alpha) ** k
        return out
    if spec.kind == HERMITE:
        out = Fraction(_sign(n * (n - 1) // 2)) * Fraction(2) ** (3 * n * (n - 1) // 2)
        for k in range(1, n):
            out *= Fraction(k) ** k
        return out
    if spec.kind == CHEBYSHEV_T:
        return Fraction(_sign(n * (n - 1) // 2)) * Fraction(2) ** ((n - 1) * (n - 2))
    if spec.kind == CHEBYSHEV_U:
        return Fraction(_sign(n * (n - 1) // 2)) * Fraction(2) ** (n * (n - 1))
    # Gegenbauer has no published display; evaluate the general product.
    return res_general(GeneralRecurrence.for_family(spec, n), n, 0, 0, Poly([1]))


def res_family(spec: FamilySpec, n: int, s: Scalar, t: Scalar) -> Fraction:
    """Res(quasi(spec,n,s), quasi(spec,n-1,t)) by the family compact formula."""
    if n < 2:
        raise InvalidParameterError("family resultant formula needs n >= 2")
    s, t = as_rational(s), as_rational(t)
    if t == 0:
        return _res_t0_family(spec, n)
    phi_ns = quasi(spec, n, s)
    if spec.kind == HERMITE:
        pref = Fraction(_sign(n * (n + 1) // 2)) * Fraction(2) ** (n * (3 * n - 5) // 2)
        pref /= Fraction(n - 1) ** n
        for k in range(1, n):
            pref *= Fraction(k) ** k
        return pref * t**n * phi_ns(-(2 * (n - 1) + s * t) / (2 * t))
    if spec.kind == LAGUERRE:
        al = spec.alpha
        pref = Fraction(_sign(n * (n + 1) // 2)) / (n + al - 1) ** n
        for k in range(1, n + 1):
            pref *= Fraction(k) ** (k - 2 * n + 2)
        for k in range(1, n):
            pref *= (k + al) ** k
        arg = (n + al - 1 + (2 * n + al - 1) * t + n * s * t) / t
        return pref * t**n * phi_ns(arg)
    if spec.kind == CHEBYSHEV_T:
        pref = Fraction(_sign(n * (n + 1) // 2)) * Fraction(2) ** (n * n - 3 * n + 3)
        return pref * t**n * phi_ns(-(1 + s * t) / (2 * t))
    if spec.kind == CHEBYSHEV_U:
        pref = Fraction(_sign(n * (n + 1) // 2)) * Fraction(2) ** (n * (n - 1))
        return pref * t**n * phi_ns(-(1 + s * t) / (2 * t))
    if spec.kind == JACOBI:
        al, be = spec.alpha, spec.beta
        s2 = 2 * n + al + be
        pref = Fraction(_sign(n * (n + 1) // 2), 2 ** (n * (n - 1)))
        pref *= s2 ** (n - 2) * (s2 - 1) ** n * (s2 - 2) ** n
        pref /= (n + al - 1) ** n * (n + be - 1) ** n
        for k in range(1, n + 1):
            pref *= Fraction(k) ** (k - 2 * n + 2)
        for k in range(1, n):
            pref *= (k + al) ** k * (k + be) ** k * (n + k + al + be) ** (n - k - 2)
        arg = (
            -2 * (n + al - 1) * (n + be - 1) / ((s2 - 1) * (s2 - 2) * t)
            - (al * al - be * be) / (s2 * (s2 - 2))
            - 2 * n * (n + al + be) * s / (s2 * (s2 - 1))
        )
        return pref * t**n * phi_ns(arg)
    # Gegenbauer: no published family display; the general theorem applies.
    rec = GeneralRecurrence.for_family(spec, n)
    return res_general(rec, n, s, t, phi_ns)


def disc_general(rel: DerivativeRelation, lead: Scalar, res_n_nm1: Scalar,
                 n: int, c: Scalar, phi_nc: Poly) -> Fraction:
    """disc(Phi_{n;c}) from a derivative relation, the leading coefficient
    of Phi_n and the known Res(Phi_n, Phi_{n-1}).

    Raises PoleEncounteredError at c = 0 or when Res(Phi_{n;c}, rho) = 0;
    the caller falls back to the Sylvester oracle there.
    """
    if n < 2:
        raise InvalidParameterError("general discriminant formula needs n >= 2")
    lead, res_n_nm1, c = as_rational(lead), as_rational(res_n_nm1), as_rational(c)
    if c == 0:
        raise PoleEncounteredError("xi_{n;c} divides by c")
    res_rho = resultant(phi_nc, rel.rho)
    if res_rho == 0:
        raise PoleEncounteredError("Res(Phi_{n;c}, rho) vanished")
    d_minus_a = rel.D - rel.A
    xi = (rel.F * c * c + (rel.B - rel.E) * c - rel.C) / (d_minus_a * c)
    deg_rho = len(rel.rho.coeffs) - 1
    out = Fraction(_sign(n * (n + 1) // 2)) * d_minus_a**n * c**n
    out /= lead ** (2 - deg_rho) * res_rho
    return out * res_n_nm1 * phi_nc(xi)


def disc_family(spec: FamilySpec, n: int, c: Scalar) -> Fraction:
    """disc(quasi(spec, n, c)) via the family compact formula, with automatic
    fallback to the Sylvester oracle at c = 0 and at formula poles."""
    if n < 1:
        raise InvalidParameterError("discriminant needs n >= 1")
    c = as_rational(c)
    if n == 1 or c == 0 or _family_disc_pole(spec, n, c):
        return discriminant(quasi(spec, n, c))
    phi = quasi(spec, n, c)
    if spec.kind == HERMITE:
        pref = Fraction(2) ** (n * (3 * n - 5) // 2)
        for k in range(1, n):
            pref *= Fraction(k) ** k
        return pref * (-c) ** n * phi(-(c * c + 2 * n) / (2 * c))
    if spec.kind == LAGUERRE:
        al = spec.alpha
        pref = Fraction(1) / (n + al + c * n)
        for k in range(1, n + 1):
            pref *= Fraction(k) ** (k - 2 * n + 3)
        for k in range(1, n):
            pref *= (k + al) ** (k - 1)
        arg = (n * c * c + (2 * n + al) * c + n + al) / c
        return pref * (-c) ** n * phi(arg)
    if spec.kind == CHEBYSHEV_T:
        pref = Fraction(2) ** ((n - 1) * (n - 2)) * Fraction(2 * n - 1) ** n
        return pref * (-c) ** n / (1 - c * c) * phi(-((n - 1) * c * c + n) / ((2 * n - 1) * c))
    if spec.kind == CHEBYSHEV_U:
        pref = Fraction(2) ** (n * (n - 1)) * Fraction(2 * n + 1) ** n
        pref /= Fraction(n + 1) ** 2 - (c * n) ** 2
        return pref * (-c) ** n * phi(-(n * c * c + n + 1) / ((2 * n + 1) * c))
    if spec.kind == GEGENBAUER:
        lam = spec.lam
        pref = Fraction(2) ** (n * (n - 1)) * (2 * n + 2 * lam - 1) ** n
        for k in range(1, n + 1):
            pref *= Fraction(k) ** (k - 2 * n + 3) * (k + lam - 1) ** (2 * n - 2 * k)
        for k in range(1, n):
            pref *= (k + 2 * lam - 1) ** (k - 2)
        pref /= (n + 2 * lam - 1) ** 2 - (c * n) ** 2
        arg = -(n * c * c + n + 2 * lam - 1) / ((2 * n + 2 * lam - 1) * c)
        return pref * (-c) ** n * phi(arg)
    # Jacobi
    al, be = spec.alpha, spec.beta
    s = 2 * n + al + be
    pref = s ** (2 * n - 1) / Fraction(2) ** (n * (n - 1))
    for k in range(1, n + 1):
        pref *= Fraction(k) ** (k - 2 * n + 3)
    for k in range(1, n):
        pref *= (k + al) ** (k - 1) * (k + be) ** (k - 1) * (n + k + al + be) ** (n - k - 1)
    pref /= (n + al + c * n) * (n + be - c * n)
    arg = -(2 * n * (n + al + be) * c * c + (al * al - be * be) * c
            + 2 * (n + al) * (n + be)) / (s * s * c)
    return pref * (-c) ** n * phi(arg)


def _family_disc_pole(spec: FamilySpec, n: int, c: Fraction) -> bool:
    """True when the family's compact denominator vanishes at this c."""
    if spec.kind == JACOBI:
        return (n + spec.alpha + c * n) * (n + spec.beta - c * n) == 0
    if spec.kind == LAGUERRE:
        return n + spec.alpha + c * n == 0
    if spec.kind == CHEBYSHEV_T:
        return c * c == 1
    if spec.kind == CHEBYSHEV_U:
        return Fraction(n + 1) ** 2 == (c * n) ** 2
    if spec.kind == GEGENBAUER:
        return (n + 2 * spec.lam - 1) ** 2 == (c * n) ** 2
    return False


def disc_as_poly_in_c(spec: FamilySpec, n: int) -> Poly:
    """The map c -> disc(quasi(spec, n, c)) as an exact polynomial of degree
    2(n-1), obtained by interpolating the scalar evaluator at pole-free
    integer sample points c = 2, 3, ..."""
    from .poly import interpolate

    if n < 2:
        raise InvalidParameterError("discriminant polynomial needs n >= 2")
    points = []
    c = 2
    while len(points) < 2 * n - 1:
        cr = Fraction(c)
        if not _family_disc_pole(spec, n, cr):
            points.append((cr, disc_family(spec, n, cr)))
        c += 1
    poly = interpolate(points)
    if poly.degree != 2 * (n - 1):
        raise InvalidParameterError(
            f"expected degree {2 * (n - 1)}, interpolation gave {poly.degree}"
        )
    return poly


def stieltjes_hilbert_limit(spec: FamilySpec, n: int) -> Fraction:
    """disc of the plain degree-n member from the classical closed products."""
    if n < 1:
        raise InvalidParameterError("limit formula needs n >= 1")
    if spec.kind == HERMITE:
        out = Fraction(2) ** (3 * n * (n - 1) // 2)
        for k in range(1, n + 1):
            out *= Fraction(k) ** k
        return out
    if spec.kind == LAGUERRE:
        out = Fraction(1)
        for k in range(1, n + 1):
            out *= Fraction(k) ** (k - 2 * n + 2) * (k + spec.alpha) ** (k - 1)
        return out
    if spec.kind == JACOBI:
        al, be = spec.alpha, spec.beta
        out = Fraction(1, 2 ** (n * (n - 1)))
        for k in range(1, n + 1):
            out *= (
                Fraction(k) ** (k - 2 * n + 2)
                * (k + al) ** (k - 1)
                * (k + be) ** (k - 1)
                * (n + k + al + be) ** (n - k)
            )
        return out
    raise NotApplicableError("limit formulas exist for jacobi, laguerre, hermite")


def hermite_disc_leading_coefficient(r: int) -> Fraction:
    """Leading coefficient of c -> disc(H_{r+1;c}): 2^((r+1)(3r-2)/2+1) prod k^k."""
    if r < 1:
        raise InvalidParameterError("needs r >= 1")
    out = Fraction(2) ** ((r + 1) * (3 * r - 2) // 2 + 1)
    for k in range(1, r + 1):
        out *= Fraction(k) ** k
    return out
