"""Command-line driver.

Every subcommand prints one JSON document (default) or aligned text with
--format text.  Exit codes: 0 success, 1 domain error or failed
verification, 2 usage error, 3 inconclusive local-solvability verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import compact, hausdorff, padic, verify
from .errors import InconclusiveVerdictError, QuasidiscError
from .families import FamilySpec, polynomial
from .poly import as_rational, format_rational

FAMILY_CHOICES = ("jacobi", "laguerre", "hermite", "gegenbauer",
                  "chebyshev-t", "chebyshev-u")

NOT_SQUARE_DEGREES = (3, 4, 5, 6, 7, 11, 12, 13, 14, 15)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from exc


def _add_family_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    sub.add_argument("--alpha", type=_rational, help="Jacobi/Laguerre parameter")
    sub.add_argument("--beta", type=_rational, help="Jacobi parameter")
    sub.add_argument("--lambda", dest="lam", type=_rational, help="Gegenbauer parameter")


def _spec_from(args: argparse.Namespace) -> FamilySpec:
    return FamilySpec(args.family, alpha=args.alpha, beta=args.beta, lam=args.lam)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasidisc",
        description="Exact resultants/discriminants of quasi-orthogonal polynomials, "
                    "p-adic solvability of their discriminant curves, and rational "
                    "Gaussian quadrature.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="subcommand", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[common], **kw))

    p = sub.add_parser("poly", help="one family member, lowest-degree coefficient first")
    _add_family_flags(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("resultant", help="Res(Phi_n + s Phi_{n-1}, Phi_{n-1} + t Phi_{n-2})")
    _add_family_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=_rational, default=Fraction(0))
    p.add_argument("--t", type=_rational, default=Fraction(0))

    p = sub.add_parser("discriminant", help="disc(Phi_n + c Phi_{n-1})")
    _add_family_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=_rational, default=Fraction(0))

    p = sub.add_parser("disc-poly", help="disc(Phi_n + c Phi_{n-1}) as a polynomial in c")
    _add_family_flags(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("res-verify", help="compact resultants vs Sylvester, seeded")
    _add_family_flags(p)
    p.add_argument("--n", type=int, help="single degree; default sweeps 2..8")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)

    p = sub.add_parser("disc-verify", help="compact discriminants vs Sylvester, seeded")
    _add_family_flags(p)
    p.add_argument("--n", type=int, help="single degree; default sweeps 2..8")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)

    p = sub.add_parser("moments", help="Gaussian moments a_0..a_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("quadrature", help="quasi-Hermite rule of degree 2m-2")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=_rational, required=True)

    p = sub.add_parser("split-search", help="c of height <= H with rational quadrature")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--height", type=int, required=True)

    p = sub.add_parser("local-solve", help="Q_p-points on y^2 = f_r(x)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-depth", type=int)

    p = sub.add_parser("table1", help="primes p <= bound with no Q_p-point, r <= r-max")
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--max-depth", type=int)

    p = sub.add_parser("not-square-sweep", help="disc(H_{n;c}) never a square in Q_2")
    p.add_argument("--n", type=int, help=f"single degree; default {NOT_SQUARE_DEGREES}")

    return parser


def _cmd_poly(args):
    spec = _spec_from(args)
    return {"family": spec.describe(), "n": args.n,
            "coeffs": polynomial(spec, args.n).to_json()}, 0


def _cmd_resultant(args):
    spec = _spec_from(args)
    value = compact.res_family(spec, args.n, args.s, args.t)
    return {"family": spec.describe(), "n": args.n,
            "s": format_rational(args.s), "t": format_rational(args.t),
            "resultant": format_rational(value)}, 0


def _cmd_discriminant(args):
    spec = _spec_from(args)
    value = compact.disc_family(spec, args.n, args.c)
    return {"family": spec.describe(), "n": args.n, "c": format_rational(args.c),
            "discriminant": format_rational(value)}, 0


def _cmd_disc_poly(args):
    spec = _spec_from(args)
    return {"family": spec.describe(), "n": args.n,
            "coeffs": compact.disc_as_poly_in_c(spec, args.n).to_json()}, 0


def _verify_common(args, checker):
    spec = _spec_from(args)
    degrees = [args.n] if args.n else list(range(2, 9))
    rows = []
    mismatches = 0
    for n in degrees:
        bad = checker(spec, n, args.seed)
        mismatches += len(bad)
        rows.append({"n": n, "checked": 25, "mismatches": len(bad)})
    payload = {"family": spec.describe(), "seed": args.seed, "rows": rows,
               "ok": mismatches == 0}
    return payload, 0 if mismatches == 0 else 1


def _cmd_res_verify(args):
    return _verify_common(args, verify.check_resultants)


def _cmd_disc_verify(args):
    return _verify_common(args, verify.check_discriminants)


def _cmd_moments(args):
    values = [format_rational(hausdorff.gaussian_moment(k)) for k in range(args.n + 1)]
    return {"n": args.n, "moments": values}, 0


def _cmd_quadrature(args):
    rule = hausdorff.quasi_hermite_rule(args.m, args.c)
    payload = {"m": args.m, "c": format_rational(args.c), "exists": rule is not None}
    if rule is not None:
        payload["rule"] = rule.to_json()
    return payload, 0


def _cmd_split_search(args):
    hits = hausdorff.search_splitting_c(args.m, args.height)
    return {"m": args.m, "height": args.height,
            "hits": [{"c": format_rational(c), "rule": rule.to_json()}
                     for c, rule in hits]}, 0


def _cmd_local_solve(args):
    f = padic.curve_poly(args.r)
    result = padic.is_locally_solvable(f, args.p, args.max_depth)
    payload = {"r": args.r, "p": args.p,
               "curve": [int(c) for c in f.coeffs],
               **result.to_json()}
    return payload, 3 if result.verdict == padic.INCONCLUSIVE else 0


def _cmd_table1(args):
    rows = []
    for r in range(1, args.r_max + 1):
        try:
            primes = padic.primes_with_no_points(r, args.p_max, args.max_depth)
        except InconclusiveVerdictError as exc:
            return {"r_max": args.r_max, "p_max": args.p_max, "rows": rows,
                    "inconclusive": {"r": exc.r, "p": exc.p,
                                     "depth_used": exc.depth_used}}, 3
        rows.append({"r": r, "primes": primes})
    return {"r_max": args.r_max, "p_max": args.p_max, "rows": rows}, 0


def _cmd_not_square_sweep(args):
    degrees = [args.n] if args.n else list(NOT_SQUARE_DEGREES)
    grid = padic.not_square_c_grid()
    rows = []
    clean = True
    for n in degrees:
        squares = [format_rational(c) for c in grid if padic.disc_square_test_Q2(n, c)]
        clean = clean and not squares
        rows.append({"n": n, "checked": len(grid), "squares": squares})
    return {"rows": rows, "all_false": clean}, 0 if clean else 1


_HANDLERS = {
    "poly": _cmd_poly,
    "resultant": _cmd_resultant,
    "discriminant": _cmd_discriminant,
    "disc-poly": _cmd_disc_poly,
    "res-verify": _cmd_res_verify,
    "disc-verify": _cmd_disc_verify,
    "moments": _cmd_moments,
    "quadrature": _cmd_quadrature,
    "split-search": _cmd_split_search,
    "local-solve": _cmd_local_solve,
    "table1": _cmd_table1,
    "not-square-sweep": _cmd_not_square_sweep,
}


def _render_text(payload, indent: str = "") -> str:
    lines = []
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{indent}{key}:")
                lines.append(_render_text(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_flat(value)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)):
                lines.append(_render_text(item, indent + "  ").lstrip("\n"))
            else:
                lines.append(f"{indent}- {_flat(item)}")
    else:
        lines.append(f"{indent}{_flat(payload)}")
    return "\n".join(line for line in lines if line)


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    if value is None:
        return "none"
    return str(value)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.subcommand]
    try:
        payload, code = handler(args)
    except QuasidiscError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(_render_text(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
