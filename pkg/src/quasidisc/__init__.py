"""quasidisc: exact resultants and discriminants of classical quasi-orthogonal
polynomials, the 2-adic/p-adic solvability of their discriminant curves, and
rational quadrature for Gaussian integration."""

from .compact import (
    DerivativeRelation,
    GeneralRecurrence,
    disc_as_poly_in_c,
    disc_family,
    disc_general,
    res_family,
    res_general,
    schur_product,
    stieltjes_hilbert_limit,
)
from .families import (
    FamilySpec,
    RecurrenceCoeffs,
    derivative_identity_residual,
    pochhammer,
    polynomial,
    quasi,
    recurrence_coeffs,
)
from .hausdorff import (
    HausdorffInstance,
    NonexistenceVerdict,
    QuadratureRule,
    gaussian_moment,
    nonexistence_verdict,
    quasi_hermite_rule,
    rational_roots,
    search_splitting_c,
    stroud_admissible,
    verify_hausdorff,
    weights_from_nodes,
)
from .padic import (
    LocalSolvability,
    Witness,
    curve_poly,
    disc_square_test_Q2,
    is_locally_solvable,
    is_square_Q2,
    is_square_Qp,
    legendre_symbol,
    primes_with_no_points,
    v_p,
    verify_witness,
)
from .poly import Poly, Rational, affine_substitute, interpolate
from .resultants import (
    discriminant,
    discriminant_padded,
    resultant,
    resultant_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "DerivativeRelation",
    "FamilySpec",
    "GeneralRecurrence",
    "HausdorffInstance",
    "LocalSolvability",
    "NonexistenceVerdict",
    "Poly",
    "QuadratureRule",
    "Rational",
    "RecurrenceCoeffs",
    "Witness",
    "affine_substitute",
    "curve_poly",
    "derivative_identity_residual",
    "disc_as_poly_in_c",
    "disc_family",
    "disc_general",
    "disc_square_test_Q2",
    "discriminant",
    "discriminant_padded",
    "gaussian_moment",
    "interpolate",
    "is_locally_solvable",
    "is_square_Q2",
    "is_square_Qp",
    "legendre_symbol",
    "nonexistence_verdict",
    "pochhammer",
    "polynomial",
    "primes_with_no_points",
    "quasi",
    "quasi_hermite_rule",
    "rational_roots",
    "recurrence_coeffs",
    "res_family",
    "res_general",
    "resultant",
    "resultant_oracle",
    "schur_product",
    "search_splitting_c",
    "stieltjes_hilbert_limit",
    "stroud_admissible",
    "v_p",
    "verify_hausdorff",
    "verify_witness",
    "weights_from_nodes",
]
