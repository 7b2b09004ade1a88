"""p-adic square tests and certified local solvability of y^2 = f(x).

The solvability search is a residue-subdivision recursion over Z_p disks.
At the disk x = center + p^k Z_p it evaluates f at small integer
representatives: an exact rational value that is a square in Q_p certifies
a point outright, and v_p(f(x0)) > 2 v_p(f'(x0)) certifies a y = 0 point by
Hensel lifting.  A residue class whose values provably have constant odd
valuation or a constant non-square unit class is pruned; only classes where
f vanishes mod p are subdivided.  "Unsolvable" therefore means every leaf
of the finite tree was pruned by a certificate, never that sampling gave up.
Points with v_p(x) < 0 are covered by the same search on the reversed
polynomial x^(2r) f(1/x) over p Z_p, and the two points at infinity are
rational exactly when the leading coefficient is a square in Q_p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .compact import disc_as_poly_in_c, disc_family
from .errors import (
    EvenPrimeError,
    InconclusiveVerdictError,
    InvalidParameterError,
    MalformedCurveError,
    NotPrimeError,
)
from .families import FamilySpec
from .poly import Poly, Scalar, as_rational, format_rational
from .resultants import discriminant

INFINITY = math.inf

SOLVABLE = "solvable"
UNSOLVABLE = "unsolvable"
INCONCLUSIVE = "inconclusive"

POINT_AT_INFINITY = "point at infinity"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    return [p for p in range(2, bound + 1) if is_prime(p)]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")


def _vp_int(a: int, p: int) -> int:
    # valuation of a nonzero integer
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def v_p(x: Scalar, p: int) -> Union[int, float]:
    """Exponent of p in x; infinity for x = 0."""
    _require_prime(p)
    x = as_rational(x)
    if x == 0:
        return INFINITY
    return _vp_int(x.numerator, p) - _vp_int(x.denominator, p)


def legendre_symbol(a: int, p: int) -> int:
    """(a|p) by Euler's criterion; p must be an odd prime."""
    _require_prime(p)
    if p == 2:
        raise EvenPrimeError("legendre symbol needs an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def is_square_Q2(x: Scalar) -> bool:
    """x = 2^n u is a square in Q_2 iff n is even and u = 1 (mod 8).

    For a rational unit a/b with a, b odd, u mod 8 equals a*b mod 8 since
    b^2 = 1 (mod 8).
    """
    x = as_rational(x)
    if x == 0:
        return True
    v = _vp_int(x.numerator, 2) - _vp_int(x.denominator, 2)
    if v % 2:
        return False
    a = x.numerator >> _vp_int(x.numerator, 2)
    b = x.denominator >> _vp_int(x.denominator, 2)
    return (a * b) % 8 == 1


def is_square_Qp(x: Scalar, p: int) -> bool:
    """Square test in Q_p for odd p: even valuation and unit part a QR."""
    _require_prime(p)
    if p == 2:
        raise EvenPrimeError("use is_square_Q2 for p = 2")
    x = as_rational(x)
    if x == 0:
        return True
    if (_vp_int(x.numerator, p) - _vp_int(x.denominator, p)) % 2:
        return False
    a = x.numerator // p ** _vp_int(x.numerator, p)
    b = x.denominator // p ** _vp_int(x.denominator, p)
    return legendre_symbol(a * b, p) == 1


def _is_square_local(x: Fraction, p: int) -> bool:
    return is_square_Q2(x) if p == 2 else is_square_Qp(x, p)


def curve_poly(r: int) -> Poly:
    """f_r, the integer polynomial of degree 2r whose values are the
    quasi-Hermite discriminants at degree r+1."""
    if r < 1:
        raise InvalidParameterError("curve index must be >= 1")
    poly = disc_as_poly_in_c(FamilySpec.hermite(), r + 1)
    if any(c.denominator != 1 for c in poly.coeffs):
        raise InvalidParameterError(f"curve coefficients are not integral at r={r}")
    return poly


@dataclass(frozen=True)
class Witness:
    """A certified point locator.

    kind "value": f(x) itself is a square in Q_p, so (x, sqrt(f(x))) is a
    point.  kind "root": the Hensel inequality v_p(h(u)) > 2 v_p(h'(u))
    holds, certifying a y = 0 point near u, where h is f for side "affine"
    and the reversed polynomial (with u = 1/x) for side "inverted".
    precision is the number of p-adic digits the search had fixed.
    """

    x: Fraction
    precision: int
    kind: str
    side: str

    def to_json(self):
        return {
            "x": format_rational(self.x),
            "precision": self.precision,
            "kind": self.kind,
            "side": self.side,
        }


@dataclass(frozen=True)
class LocalSolvability:
    verdict: str
    witness: Union[Witness, str, None]
    depth_used: int

    def to_json(self):
        if isinstance(self.witness, Witness):
            witness = self.witness.to_json()
        else:
            witness = self.witness
        return {"verdict": self.verdict, "witness": witness, "depth_used": self.depth_used}


def _int_coeffs(f: Poly) -> list[int]:
    if f.is_zero:
        raise MalformedCurveError("zero polynomial is not a curve")
    if any(c.denominator != 1 for c in f.coeffs):
        raise MalformedCurveError("curve polynomial must have integer coefficients")
    return [int(c) for c in f.coeffs]


def _strip_even_powers(coeffs: list[int], p: int) -> list[int]:
    """Divide out p^(2a) so the minimum coefficient valuation is 0 or 1.

    Values change by the square p^(2a), so squareness in Q_p is preserved.
    """
    e = min(_vp_int(c, p) for c in coeffs if c)
    if e >= 2:
        q = p ** (e - (e & 1))
        return [c // q for c in coeffs]
    return coeffs


def _eval_int(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _derive_int(coeffs: list[int]) -> list[int]:
    return [k * c for k, c in enumerate(coeffs)][1:] or [0]


def _shift_scale(coeffs: list[int], t0: int, p: int) -> list[int]:
    """Coefficients of g(t0 + p t), by Taylor shift then scaling."""
    taylor = []
    cur = list(coeffs)
    while cur:
        # synthetic division of cur by (t - t0); remainder is cur(t0)
        quot = [0] * (len(cur) - 1)
        acc = cur[-1]
        for j in reversed(range(len(cur) - 1)):
            if j < len(quot):
                quot[j] = acc
            acc = acc * t0 + cur[j]
        taylor.append(acc)
        cur = quot
    return [c * p**j for j, c in enumerate(taylor)]


def _search_units_and_roots(g: list[int], p: int):
    """One disk step: (square witness t0, hensel witness t0, child residues).

    Scans t0 = 0..p-1 (0..7 for p = 2, since units are classified mod 8),
    then lists the residues mod p where g/p^e vanishes mod p; those are the
    only classes the certificates cannot settle.
    """
    e = 0 if any(c % p for c in g) else 1
    reduced = g if e == 0 else [c // p for c in g]
    deriv = _derive_int(g)
    square_at = None
    hensel_at = None
    for t0 in range(8 if p == 2 else p):
        val = _eval_int(g, t0)
        if _is_square_local(Fraction(val), p):
            square_at = t0
            break
        dval = _eval_int(deriv, t0)
        if val and dval and _vp_int(val, p) > 2 * _vp_int(dval, p):
            hensel_at = t0
    children = [t0 for t0 in range(p) if _eval_int(reduced, t0) % p == 0]
    return square_at, hensel_at, children


def _round_padic(u: Fraction, p: int, m: int) -> Fraction:
    """The integer in [0, p^m) congruent to the p-integral rational u."""
    mod = p**m
    return Fraction(u.numerator * pow(u.denominator, -1, mod) % mod)


def _refine_root_witness(base: list[int], p: int, u: Fraction,
                         avoid_zero: bool) -> tuple[Fraction, str, int]:
    """Newton-iterate u on the side polynomial until its own Hensel
    inequality v_p(h(u)) > 2 v_p(h'(u)) re-verifies (or u is an exact root).

    A disk-level certificate guarantees a simple root nearby, and Newton
    commutes with the disk's affine change of variable, so the loop
    terminates in a handful of steps.  The refined point is then rounded to
    the smallest integer representative that still certifies: with
    w = v_p(h'(u)), any point congruent mod p^(w+1) keeps v_p(h') = w and
    value valuation above 2w.
    """
    h = Poly(base)
    hp = h.derivative()
    for _ in range(64):
        val = h(u)
        if val == 0 and not (avoid_zero and u == 0):
            return u, "value", 0  # exact rational root: a y = 0 point
        if val != 0:
            dval = hp(u)
            if (
                dval != 0
                and v_p(val, p) > 2 * v_p(dval, p)
                and not (avoid_zero and u == 0)
            ):
                w = int(v_p(dval, p))
                m = max(w + 1, int(v_p(u, p)) + 1 if u != 0 else 1)
                rounded = _round_padic(u, p, m)
                if v_p(h(rounded), p) > 2 * v_p(hp(rounded), p) and not (
                    avoid_zero and rounded == 0
                ):
                    return rounded, "root", m
                return u, "root", m
        u = u - val / hp(u)
    raise InvalidParameterError("root witness refinement failed to converge")


def _search_side(base: list[int], p: int, max_depth: int, side: str,
                 start_depth: int = 0):
    """Certified search over one side's disk tree.

    base is the side polynomial h (f itself, or its reversal for the
    v_p(x) < 0 side); witnesses are refined against it so that the emitted
    certificate re-verifies directly.  Returns (witness or None,
    inconclusive flag, deepest level visited).
    """
    if start_depth == 0:
        start = _strip_even_powers(base, p)
    else:
        start = _strip_even_powers(_shift_scale(_strip_even_powers(base, p), 0, p), p)
    stack = [(start, 0, start_depth)]
    inconclusive = False
    deepest = start_depth
    while stack:
        g, center, k = stack.pop()
        deepest = max(deepest, k)
        square_at, hensel_at, children = _search_units_and_roots(g, p)
        if square_at is not None:
            u = Fraction(center + square_at * p**k)
            return Witness(x=u, precision=k, kind="value", side=side), False, deepest
        if hensel_at is not None:
            u, kind, digits = _refine_root_witness(
                base, p, Fraction(center + hensel_at * p**k), side == "inverted"
            )
            return Witness(x=u, precision=max(k, digits), kind=kind,
                           side=side), False, deepest
        if children:
            if k >= max_depth:
                inconclusive = True
                continue
            for t0 in children:
                child = _strip_even_powers(_shift_scale(g, t0, p), p)
                stack.append((child, center + t0 * p**k, k + 1))
    return None, inconclusive, deepest


def default_max_depth(f: Poly, p: int) -> int:
    """v_p(disc f) + 4: past the discriminant valuation the disk values act
    like unit multiples of a square-free model, so certificates decide."""
    disc = discriminant(f)
    if disc == 0:
        raise InvalidParameterError(
            "curve polynomial has a repeated factor; pass max_depth explicitly"
        )
    return int(v_p(disc, p)) + 4


def is_locally_solvable(f: Poly, p: int, max_depth: Optional[int] = None) -> LocalSolvability:
    """Decide whether y^2 = f(x) has a Q_p-point (affine or at infinity)."""
    _require_prime(p)
    coeffs = _int_coeffs(f)
    degree = len(coeffs) - 1
    if degree < 2 or degree % 2:
        raise MalformedCurveError(f"even degree >= 2 required, got {degree}")
    if max_depth is None:
        max_depth = default_max_depth(f, p)
    if max_depth < 1:
        raise InvalidParameterError("max_depth must be >= 1")

    if _is_square_local(Fraction(coeffs[-1]), p):
        return LocalSolvability(SOLVABLE, POINT_AT_INFINITY, 0)

    witness, stuck_a, deep_a = _search_side(coeffs, p, max_depth, "affine")
    if witness is not None:
        return LocalSolvability(SOLVABLE, witness, deep_a)

    # x with v_p(x) < 0: search u = 1/x in p Z_p on the reversed polynomial.
    witness, stuck_b, deep_b = _search_side(list(reversed(coeffs)), p, max_depth,
                                            "inverted", start_depth=1)
    deepest = max(deep_a, deep_b)
    if witness is not None:
        return LocalSolvability(SOLVABLE, Witness(x=1 / witness.x,
                                                  precision=witness.precision,
                                                  kind=witness.kind,
                                                  side=witness.side), deepest)
    if stuck_a or stuck_b:
        return LocalSolvability(INCONCLUSIVE, None, deepest)
    return LocalSolvability(UNSOLVABLE, None, deepest)


def verify_witness(f: Poly, p: int, result: LocalSolvability) -> bool:
    """Re-check a Solvable verdict's certificate from scratch."""
    if result.verdict != SOLVABLE:
        return False
    if result.witness == POINT_AT_INFINITY:
        return _is_square_local(f.leading_coefficient, p)
    w = result.witness
    if w.kind == "value":
        return _is_square_local(f(w.x), p)
    if w.side == "affine":
        h, u = f, w.x
    else:
        h, u = Poly(list(reversed(f.coeffs))), 1 / w.x
    return v_p(h(u), p) > 2 * v_p(h.derivative()(u), p)


def primes_with_no_points(r: int, prime_bound: int,
                          max_depth: Optional[int] = None) -> list[int]:
    """All p <= prime_bound with no Q_p-point on y^2 = f_r(x).

    The curve discriminant behind the per-prime default depth is computed
    once and shared across primes.
    """
    if r < 1:
        raise InvalidParameterError("curve index must be >= 1")
    if prime_bound < 2:
        raise InvalidParameterError("prime bound must be >= 2")
    f = curve_poly(r)
    disc = discriminant(f) if max_depth is None else None
    if disc == 0:
        raise InvalidParameterError(
            "curve polynomial has a repeated factor; pass max_depth explicitly"
        )
    out = []
    for p in primes_up_to(prime_bound):
        depth = max_depth if max_depth is not None else int(v_p(disc, p)) + 4
        verdict = is_locally_solvable(f, p, depth)
        if verdict.verdict == INCONCLUSIVE:
            raise InconclusiveVerdictError(r, p, verdict.depth_used)
        if verdict.verdict == UNSOLVABLE:
            out.append(p)
    return out


def disc_square_test_Q2(n: int, c: Scalar) -> bool:
    """Whether disc(H_{n;c}) is a square in Q_2; false for all rational c
    whenever n = 3,4,5,6,7 (mod 8)."""
    if n < 2:
        raise InvalidParameterError("square test needs n >= 2")
    return is_square_Q2(disc_family(FamilySpec.hermite(), n, c))


def not_square_c_grid() -> list[Fraction]:
    """The standard 40-point c-grid: valuations -3..3 crossed with unit
    classes 1, 3, 5, 7 mod 8, in both integral and fractional unit form."""
    units = [Fraction(1), Fraction(3), Fraction(5), Fraction(7), Fraction(1, 3)]
    grid = [u * Fraction(2) ** v for v in range(-3, 4) for u in units]
    grid += [Fraction(9, 5) * Fraction(2) ** v for v in range(-3, 2)]
    return grid
