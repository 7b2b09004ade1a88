import random
from fractions import Fraction as F

import pytest

from quasidisc.compact import (
    DerivativeRelation,
    GeneralRecurrence,
    disc_as_poly_in_c,
    disc_family,
    disc_general,
    hermite_disc_leading_coefficient,
    res_family,
    res_general,
    schur_product,
    stieltjes_hilbert_limit,
)
from quasidisc.errors import (
    InvalidParameterError,
    InvalidRecurrenceError,
    NotApplicableError,
    PoleEncounteredError,
)
from quasidisc.families import FamilySpec, RecurrenceCoeffs, polynomial, quasi
from quasidisc.poly import Poly
from quasidisc.resultants import discriminant, resultant
from quasidisc.verify import (
    DEFAULT_SEED,
    DEFAULT_SPECS,
    check_discriminants,
    check_resultants,
    family_disc_poles,
    seeded_st_pairs,
)

HERMITE = FamilySpec.hermite()
CHEB_U = FamilySpec.chebyshev_u()


def test_schur_product_values():
    assert schur_product(GeneralRecurrence.for_family(HERMITE, 2), 2) == -2
    assert schur_product(GeneralRecurrence.for_family(HERMITE, 1), 1) == 1
    # cross-check through Res(U_3, U_2) = lc^2 * prod U_2(roots of U_3)
    rec = GeneralRecurrence.for_family(CHEB_U, 3)
    u3, u2 = polynomial(CHEB_U, 3), polynomial(CHEB_U, 2)
    assert schur_product(rec, 3) == resultant(u3, u2) / u3.leading_coefficient ** 2


def test_recurrence_validation():
    with pytest.raises(InvalidRecurrenceError):
        GeneralRecurrence((RecurrenceCoeffs(F(0), F(0), F(1)),))
    with pytest.raises(InvalidRecurrenceError):
        GeneralRecurrence((RecurrenceCoeffs(F(1), F(0), F(0)),
                           RecurrenceCoeffs(F(1), F(0), F(0))))
    # Hermite's c_1 = 0 is legal: the coefficient never enters a product
    GeneralRecurrence.for_family(HERMITE, 4)


def test_res_general_t0_matches_oracle_and_ignores_s():
    rec = GeneralRecurrence.for_family(HERMITE, 2)
    oracle = resultant(polynomial(HERMITE, 2), polynomial(HERMITE, 1))
    assert res_general(rec, 2, 0, 0, quasi(HERMITE, 2, 0)) == oracle
    values = {res_general(rec, 2, s, 0, quasi(HERMITE, 2, s))
              for s in (F(0), F(1), F(-7, 3), F(5, 2))}
    assert values == {oracle}


def test_res_general_matches_family_display():
    rec = GeneralRecurrence.for_family(CHEB_U, 3)
    s, t = F(1), F(2)
    got = res_general(rec, 3, s, t, quasi(CHEB_U, 3, s))
    # Eq-style display: sign * 2^(n(n-1)) * t^n * U_{n;s}(-(1+st)/(2t))
    display = F(1) * 2 ** 6 * t ** 3 * quasi(CHEB_U, 3, s)(-(1 + s * t) / (2 * t))
    assert got == display == res_family(CHEB_U, 3, s, t)


def test_res_family_examples():
    assert res_family(HERMITE, 2, 1, 1) == resultant(quasi(HERMITE, 2, 1),
                                                     quasi(HERMITE, 1, 1))
    # frozen: Chebyshev T at n = 3, s = t = 0 from the closed product
    t_spec = FamilySpec.chebyshev_t()
    assert res_family(t_spec, 3, 0, 0) == -4
    assert res_family(t_spec, 3, 0, 0) == resultant(polynomial(t_spec, 3),
                                                    polynomial(t_spec, 2))
    j = FamilySpec.jacobi(0, 0)
    assert res_family(j, 2, F(1, 2), 0) == resultant(quasi(j, 2, F(1, 2)),
                                                     polynomial(j, 1))
    with pytest.raises(InvalidParameterError):
        res_family(HERMITE, 1, 0, 0)


def test_master_equality_slice():
    rng = random.Random(DEFAULT_SEED)
    for spec in DEFAULT_SPECS:
        for n in (2, 3, 5):
            for s, t in seeded_st_pairs(rng.randint(0, 10**6), count=6):
                assert res_family(spec, n, s, t) == resultant(
                    quasi(spec, n, s), quasi(spec, n - 1, t)
                ), (spec.describe(), n, s, t)


def test_disc_general_hermite_example():
    rel = DerivativeRelation.for_family(HERMITE, 3)
    assert rel.rho == Poly([1]) and rel.D - rel.A == 2
    lead = polynomial(HERMITE, 3).leading_coefficient
    r0 = resultant(polynomial(HERMITE, 3), polynomial(HERMITE, 2))
    got = disc_general(rel, lead, r0, 3, 1, quasi(HERMITE, 3, 1))
    assert got == 65024  # frozen Sylvester value
    assert got == discriminant(quasi(HERMITE, 3, 1))


def test_disc_general_poles():
    rel = DerivativeRelation.for_family(HERMITE, 3)
    lead = polynomial(HERMITE, 3).leading_coefficient
    r0 = resultant(polynomial(HERMITE, 3), polynomial(HERMITE, 2))
    with pytest.raises(PoleEncounteredError):
        disc_general(rel, lead, r0, 3, 0, quasi(HERMITE, 3, 0))
    # Laguerre alpha = 0 at c = -1 kills Res(Phi, rho)
    lag = FamilySpec.laguerre(0)
    rel = DerivativeRelation.for_family(lag, 2)
    lead = polynomial(lag, 2).leading_coefficient
    r0 = resultant(polynomial(lag, 2), polynomial(lag, 1))
    with pytest.raises(PoleEncounteredError):
        disc_general(rel, lead, r0, 2, -1, quasi(lag, 2, -1))


def test_disc_general_laguerre_example():
    lag = FamilySpec.laguerre(F(1, 2))
    rel = DerivativeRelation.for_family(lag, 3)
    lead = polynomial(lag, 3).leading_coefficient
    r0 = resultant(polynomial(lag, 3), polynomial(lag, 2))
    got = disc_general(rel, lead, r0, 3, 2, quasi(lag, 3, 2))
    assert got == discriminant(quasi(lag, 3, 2))


def test_disc_family_examples():
    assert disc_family(HERMITE, 2, 0) == 32
    # formula pole 1 - c^2 = 0 falls back to the Sylvester oracle
    assert disc_family(FamilySpec.chebyshev_t(), 2, 1) == 9
    j = FamilySpec.jacobi(F(1, 2), F(1, 3))
    assert disc_family(j, 3, F(2, 5)) == discriminant(quasi(j, 3, F(2, 5)))
    assert disc_family(HERMITE, 1, F(7, 3)) == 1


def test_disc_family_at_every_pole():
    for spec in DEFAULT_SPECS:
        for n in (2, 3, 4):
            for c in family_disc_poles(spec, n):
                assert disc_family(spec, n, c) == discriminant(quasi(spec, n, c))


def test_master_equality_disc_slice():
    for spec in DEFAULT_SPECS:
        for n in (2, 3, 5):
            bad = check_discriminants(spec, n, DEFAULT_SEED, count=8)
            assert not bad, (spec.describe(), n, bad)


def test_general_to_special_agreement():
    rng = random.Random(DEFAULT_SEED + 9)
    for spec in DEFAULT_SPECS:
        for n in (2, 4):
            s = F(rng.randint(-8, 8), rng.randint(1, 8))
            t = F(rng.randint(-8, 8), rng.randint(1, 8))
            rec = GeneralRecurrence.for_family(spec, n)
            assert res_general(rec, n, s, t, quasi(spec, n, s)) == res_family(spec, n, s, t)
            c = F(rng.randint(1, 8), rng.randint(1, 8))
            rel = DerivativeRelation.for_family(spec, n)
            lead = polynomial(spec, n).leading_coefficient
            r0 = resultant(polynomial(spec, n), polynomial(spec, n - 1))
            try:
                general = disc_general(rel, lead, r0, n, c, quasi(spec, n, c))
            except PoleEncounteredError:
                continue
            assert general == disc_family(spec, n, c)


def test_disc_poly_in_c_hermite():
    f1 = disc_as_poly_in_c(HERMITE, 2)
    assert f1 == Poly([32, 0, 4])
    assert f1.leading_coefficient == hermite_disc_leading_coefficient(1)
    f2 = disc_as_poly_in_c(HERMITE, 3)
    assert f2.degree == 4
    assert all(f2.coefficient(k) == 0 for k in (1, 3))
    assert f2(0) == stieltjes_hilbert_limit(HERMITE, 3)
    # dividing by the 2^(n(3n-5)/2) prod k^k prefactor leaves the integer
    # model 2c^(2n-2) + 4 s_(n-2) c^(2n-4) + ... + 4 s_0
    prefactor = F(2) ** 6 * 4
    reduced = [c / prefactor for c in f2.coeffs]
    assert reduced[-1] == 2
    assert all(c.denominator == 1 and c % 2 == 0 for c in reduced)
    assert all(c % 4 == 0 for c in reduced[:-1] if c)


def test_disc_poly_degree_and_parity_all_families():
    for spec in DEFAULT_SPECS:
        for n in (2, 3, 4):
            f = disc_as_poly_in_c(spec, n)
            assert f.degree == 2 * (n - 1)
            assert f(0) == disc_family(spec, n, 0)
            if spec.kind in ("hermite", "gegenbauer", "chebyshev-t", "chebyshev-u"):
                assert all(f.coefficient(k) == 0 for k in range(1, f.degree, 2))


def test_stieltjes_hilbert_values():
    assert stieltjes_hilbert_limit(HERMITE, 2) == 32
    assert stieltjes_hilbert_limit(FamilySpec.laguerre(0), 2) == 2
    assert stieltjes_hilbert_limit(FamilySpec.jacobi(0, 0), 1) == 1
    for n in range(1, 8):
        assert stieltjes_hilbert_limit(HERMITE, n) == discriminant(polynomial(HERMITE, n)) \
            if n > 1 else stieltjes_hilbert_limit(HERMITE, 1) == 1
    with pytest.raises(NotApplicableError):
        stieltjes_hilbert_limit(FamilySpec.chebyshev_t(), 3)


def test_resultant_battery_slice():
    for spec in (HERMITE, FamilySpec.jacobi(0, 0)):
        assert check_resultants(spec, 4, DEFAULT_SEED) == []
