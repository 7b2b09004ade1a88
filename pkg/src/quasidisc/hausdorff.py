"""Gaussian moments, rational quadrature, and Hausdorff-type solvability.

The moment system sum_i x_i y_i^k = a_k (k = 0..n) with Gaussian moments
a_k ties rational quadrature rules to quasi-Hermite polynomials: an m-node
rule exact to degree 2m-2 exists precisely when some H_m + c H_{m-1} splits
over the rationals, and the nodes are then its roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import (
    DuplicateNodesError,
    InvalidParameterError,
    QuasidiscError,
    ZeroPolynomialError,
)
from .families import FamilySpec, quasi
from .poly import Poly, Scalar, as_rational, format_rational

PROVEN_NONEXISTENT = "proven_nonexistent"
LOCALLY_OBSTRUCTED = "locally_obstructed"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class QuadratureRule:
    """Rational nodes/weights meant to integrate exactly up to ``degree``."""

    nodes: tuple[Fraction, ...]
    weights: tuple[Fraction, ...]
    degree: int

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise InvalidParameterError("nodes and weights must pair up")
        if len(set(self.nodes)) != len(self.nodes):
            raise DuplicateNodesError("quadrature nodes must be distinct")

    def to_json(self):
        return {
            "nodes": [format_rational(y) for y in self.nodes],
            "weights": [format_rational(x) for x in self.weights],
            "degree": self.degree,
        }


@dataclass(frozen=True)
class HausdorffInstance:
    """Problem size: m summands, moments required up to index n."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 0:
            raise InvalidParameterError("need m >= 1 and n >= 0")


@dataclass(frozen=True)
class NonexistenceVerdict:
    kind: str
    primes: tuple[int, ...] = ()

    def to_json(self):
        out = {"kind": self.kind}
        if self.kind == LOCALLY_OBSTRUCTED:
            out["primes"] = list(self.primes)
        return out


def gaussian_moment(k: int) -> Fraction:
    """k-th moment of exp(-t^2)/sqrt(pi): zero for odd k, (2j)!/(4^j j!)
    for k = 2j."""
    if k < 0:
        raise InvalidParameterError("moment index must be >= 0")
    if k % 2:
        return Fraction(0)
    j = k // 2
    num = 1
    for i in range(j + 1, 2 * j + 1):
        num *= i
    return Fraction(num, 4**j)


def verify_hausdorff(rule: QuadratureRule, n: int) -> bool:
    """Exact check of sum x_i y_i^k = a_k for every 0 <= k <= n."""
    if n < 0:
        raise InvalidParameterError("moment index must be >= 0")
    powers = [Fraction(1)] * len(rule.nodes)
    for k in range(n + 1):
        if sum(x * yk for x, yk in zip(rule.weights, powers)) != gaussian_moment(k):
            return False
        powers = [yk * y for yk, y in zip(powers, rule.nodes)]
    return True


def stroud_admissible(inst: HausdorffInstance) -> bool:
    """Necessary bound n <= 2m - 1 for any positive rule, rational or not."""
    return inst.n <= 2 * inst.m - 1


def _divisors(n: int) -> list[int]:
    """All positive divisors, via trial-division factoring.  The extreme
    coefficients this library meets are factorial-smooth, so this stays
    cheap even when they are astronomically large."""
    n = abs(n)
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [d * prime**e for d in divs for e in range(mult + 1)]
    return divs


_SCREEN_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def rational_roots(f: Poly) -> list[Fraction]:
    """All rational roots, each reported once, in increasing order.

    Clears denominators, strips powers of x, screens with roots mod small
    primes (a rootless reduction mod p with p not dividing the leading
    coefficient proves there are no rational roots at all), then tests the
    classical p/q divisor candidates, filtered by (p-q) | F(1) and
    (p+q) | F(-1), with exact homogeneous integer evaluation as the judge.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has every root")
    scale = 1
    for c in f.coeffs:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    coeffs = [int(c * scale) for c in f.coeffs]
    roots = []
    low = next(i for i, c in enumerate(coeffs) if c)
    if low > 0:
        roots.append(Fraction(0))
        coeffs = coeffs[low:]
    if len(coeffs) == 1:
        return roots
    content = 0
    for c in coeffs:
        content = gcd(content, c)
    coeffs = [c // content for c in coeffs]
    degree = len(coeffs) - 1
    lead, const = coeffs[-1], coeffs[0]

    screens = 0
    for p in _SCREEN_PRIMES:
        if lead % p == 0:
            continue
        reduced = [c % p for c in coeffs]
        if all(_eval_mod(reduced, t, p) for t in range(p)):
            return sorted(roots)
        screens += 1
        if screens >= 4:
            break

    f1 = sum(coeffs)
    fm1 = sum(c if i % 2 == 0 else -c for i, c in enumerate(coeffs))
    seen = set(roots)
    for q in _divisors(lead):
        for num in _divisors(const):
            for p0 in (num, -num):
                if gcd(abs(p0), q) != 1:
                    continue
                cand = Fraction(p0, q)
                if cand in seen:
                    continue
                if f1 and (p0 - q) and f1 % (p0 - q):
                    continue
                if fm1 and (p0 + q) and fm1 % (p0 + q):
                    continue
                # homogeneous evaluation: sum c_j p0^j q^(d-j)
                val = 0
                pw = 1
                qw = q**degree
                for c in coeffs:
                    val += c * pw * qw
                    pw *= p0
                    if qw != 1:
                        qw //= q
                if val == 0:
                    seen.add(cand)
                    roots.append(cand)
    return sorted(roots)


def _eval_mod(coeffs: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def weights_from_nodes(nodes, n: int) -> Optional[QuadratureRule]:
    """Exact solve of the (n+1) x m moment system for the weights.

    Returns the rule when the system is consistent, None otherwise.  With
    distinct nodes and n >= m-1 the Vandermonde columns are independent,
    so a consistent system has exactly one solution.
    """
    nodes = tuple(as_rational(y) for y in nodes)
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodesError("nodes must be pairwise distinct")
    m = len(nodes)
    if n < m - 1:
        raise InvalidParameterError("need n >= len(nodes) - 1")
    rows = []
    power = [Fraction(1)] * m
    for k in range(n + 1):
        rows.append(list(power) + [gaussian_moment(k)])
        power = [pk * y for pk, y in zip(power, nodes)]
    # Gaussian elimination over the rationals.
    pivot_row = 0
    pivots = []
    for col in range(m):
        src = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if src is None:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        inv = 1 / rows[pivot_row][col]
        rows[pivot_row] = [v * inv for v in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    for r in range(pivot_row, len(rows)):
        if rows[r][m]:
            return None
    if len(pivots) < m:
        return None
    weights = [Fraction(0)] * m
    for i, col in enumerate(pivots):
        weights[col] = rows[i][m]
    return QuadratureRule(nodes, tuple(weights), n)


def quasi_hermite_rule(m: int, c: Scalar) -> Optional[QuadratureRule]:
    """The m-node rule of degree 2m-2 whose nodes are the roots of
    H_m + c H_{m-1}, when that polynomial splits over the rationals."""
    if m < 1:
        raise InvalidParameterError("need m >= 1")
    roots = rational_roots(quasi(FamilySpec.hermite(), m, as_rational(c)))
    if len(roots) != m:
        return None
    rule = weights_from_nodes(tuple(roots), 2 * m - 2)
    if rule is None:
        raise QuasidiscError(
            "Riesz-Shohat contract violated: split nodes gave an inconsistent system"
        )
    return rule


def nonexistence_verdict(r: int, prime_bound: int = 37,
                         max_depth: Optional[int] = None) -> NonexistenceVerdict:
    """Solvability status of the (m, n) = (r+1, 2r) Hausdorff system.

    r = 2..6 mod 8 is proven nonexistent outright; otherwise a local
    obstruction is searched for below prime_bound, and absence of one
    leaves the question open.
    """
    from .padic import primes_with_no_points

    if r < 1:
        raise InvalidParameterError("need r >= 1")
    if r % 8 in (2, 3, 4, 5, 6):
        return NonexistenceVerdict(PROVEN_NONEXISTENT)
    primes = primes_with_no_points(r, prime_bound, max_depth)
    if primes:
        return NonexistenceVerdict(LOCALLY_OBSTRUCTED, tuple(primes))
    return NonexistenceVerdict(UNKNOWN)


def search_splitting_c(m: int, height: int) -> list[tuple[Fraction, QuadratureRule]]:
    """Every reduced c = p/q with |p| <= height, 1 <= q <= height whose
    quasi-Hermite polynomial splits rationally, with its quadrature rule,
    ordered by (q, p)."""
    if m < 1 or height < 1:
        raise InvalidParameterError("need m >= 1 and height >= 1")
    out = []
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if gcd(abs(p), q) != 1:
                continue
            c = Fraction(p, q)
            rule = quasi_hermite_rule(m, c)
            if rule is not None:
                out.append((c, rule))
    return out
