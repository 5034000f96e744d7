import random

import pytest

from cfmoments.cfrac import InsufficientCoefficients, JFractionCoeffs, SFractionCoeffs, s_to_j
from cfmoments.pipeline import (
    CatalanLikenessError,
    _discrepancy_check,
    build_M,
    build_N_via_behead,
    build_N_via_rescale,
    compare,
    op_coeff_triangle,
    q_binomial,
    qcase_factorization_check,
    schroder_structure_checks,
    verify_example,
)
from cfmoments.ring import QPoly, eval_q, q
from cfmoments.series import RiordanPair, TruncatedSeries, catalan_series, riordan_matrix
from cfmoments.triangle import Triangle, invert, mul, production_of


def ones(n):
    return SFractionCoeffs([1] * n)


def alternating(n):
    return SFractionCoeffs([1 if k % 2 == 0 else 2 for k in range(n)])


def q_powers(n):
    return SFractionCoeffs([q**k if k else 1 for k in range(n)])


# --- the two constructions of the first matrix ---


def test_behead_route_catalan():
    N = build_N_via_behead(ones(6), 6)
    c = catalan_series(6)
    xc = TruncatedSeries((0,) + c.coeffs[:-1])
    assert N == riordan_matrix(RiordanPair(c, xc), 6)


def test_routes_agree_random():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randrange(2, 7)
        terms = [1] + [rng.randrange(1, 5) for _ in range(n - 1)]
        a = SFractionCoeffs(terms)
        assert build_N_via_behead(a, n) == build_N_via_rescale(a, n)


def test_routes_agree_symbolic():
    a = q_powers(6)
    assert build_N_via_behead(a, 6) == build_N_via_rescale(a, 6)


def test_build_n_size_one():
    assert build_N_via_behead(ones(1), 1) == Triangle([[1]])
    assert build_N_via_rescale(ones(1), 1) == Triangle([[1]])


def test_build_n_insufficient():
    with pytest.raises(InsufficientCoefficients):
        build_N_via_behead(ones(3), 4)
    with pytest.raises(InsufficientCoefficients):
        build_N_via_rescale(ones(3), 4)


def test_rescale_route_rejects_zero_coefficient():
    a = SFractionCoeffs([1, 0, 1, 1])
    with pytest.raises(ValueError):
        build_N_via_rescale(a, 4)


# --- polynomial coefficient triangle and the second matrix ---


def test_op_coeff_rows():
    # b = (1, 2, 2), l = (1, 1): p2 = (x - 2)(x - 1) - 1, p3 follows
    j = JFractionCoeffs([1, 2, 2], [1, 1])
    T = op_coeff_triangle(j, 4)
    assert T.rows == ((1,), (-1, 1), (1, -3, 1), (-1, 6, -5, 1))


def test_op_coeff_insufficient():
    with pytest.raises(InsufficientCoefficients):
        op_coeff_triangle(JFractionCoeffs([1, 2], [1]), 4)


def test_build_m_first_column_is_moments():
    from cfmoments.cfrac import moments_from_sfraction

    a = alternating(8)
    M = build_M(a, 4)
    assert list(M.column(0)) == moments_from_sfraction(a, 4)


def test_build_m_matches_riordan_catalan():
    c = catalan_series(6)
    xc2 = TruncatedSeries((0,) + tuple((c * c).coeffs[:-1]))
    assert build_M(ones(11), 6) == riordan_matrix(RiordanPair(c, xc2), 6)


def test_build_m_inverts_op_coeff():
    a = q_powers(9)
    assert invert(build_M(a, 5)) == op_coeff_triangle(s_to_j(a), 5)


# --- compare ---


def test_compare_catalan_product():
    r = compare(ones(12), 6)
    assert r.C.rows[4] == (0, 1, 3, 3, 1)
    assert r.C.rows[5] == (0, 1, 4, 6, 4, 1)
    assert all(ok for _, ok in r.diagnostics)
    assert r.mu == [1, 1, 2, 5, 14, 42]


def test_compare_symbolic_spot_values():
    r = compare(q_powers(12), 6)
    assert r.C.rows[3] == (0, q**5, q**3 + q**4, 1)
    assert r.N.rows[2] == (1 + q, 1 + q, 1)
    assert r.prodM.rows[1] == (q, q + q**2, 1)
    assert all(ok for _, ok in r.diagnostics)


def test_compare_product_is_inverse_times_second():
    r = compare(alternating(12), 6)
    assert mul(r.N, r.C) == r.M
    assert production_of(r.N) == r.prodN
    assert production_of(invert(r.C)) == r.prodCinv


def test_compare_smallest_size():
    r = compare(ones(4), 2)
    assert r.N.size == 2 and r.M.size == 2 and r.C.size == 2


def test_compare_requires_leading_one():
    with pytest.raises(ValueError):
        compare(SFractionCoeffs([2, 1, 1, 1]), 2)


def test_compare_insufficient():
    with pytest.raises(InsufficientCoefficients):
        compare(ones(7), 4)


def test_compare_degenerate_sequence():
    # a2 = 0 forces constant moments, whose order-1 determinant vanishes
    a = SFractionCoeffs([1, 0, 1, 1, 1, 1, 1, 1])
    with pytest.raises(CatalanLikenessError) as e:
        compare(a, 4)
    assert e.value.order == 1


# --- Gaussian binomials and the factorization check ---


def test_q_binomial_known_values():
    assert q_binomial(2, 1) == 1 + q
    assert q_binomial(4, 2) == QPoly((1, 1, 2, 1, 1))
    assert q_binomial(5, 0) == 1
    assert q_binomial(5, 5) == 1
    assert q_binomial(2, 3) == 0


def test_q_binomial_symmetry_and_counting():
    rng = random.Random(5)
    from math import comb

    for _ in range(30):
        m = rng.randrange(0, 9)
        k = rng.randrange(0, m + 1)
        v = q_binomial(m, k)
        assert v == q_binomial(m, m - k)
        assert eval_q(v, 1) == comb(m, k)


def test_q_binomial_rejects_negative():
    with pytest.raises(ValueError):
        q_binomial(-1, 0)


def test_factorization_check_passes():
    r = compare(q_powers(14), 7)
    res = qcase_factorization_check(r.C)
    assert res.status == "pass"


def test_factorization_check_reports_first_failure():
    r = compare(q_powers(12), 6)
    rows = [list(row) for row in r.C.rows]
    rows[3][1] = rows[3][1] + 1
    res = qcase_factorization_check(Triangle(rows))
    assert res.status == "fail"
    assert "row 3 column 1" in res.note


# --- structure checks for the alternating sequence ---


def test_schroder_structure_all_pass():
    r = compare(alternating(14), 7)
    for c in schroder_structure_checks(r):
        assert c.status == "pass", c.name


def test_schroder_structure_detects_other_sequences():
    r = compare(ones(12), 6)
    statuses = {c.name: c.status for c in schroder_structure_checks(r)}
    assert statuses["parity-row-recurrences"] == "fail"
    assert statuses["interleaved-columns"] == "fail"


# --- verify_example ---


def test_verify_catalan_all_pass():
    rep = verify_example("catalan", 6)
    assert rep.passed
    assert rep.counts[1] == 0 and rep.counts[2] == 0
    assert rep.q_value is None


def test_verify_qcase_symbolic_discrepancies():
    rep = verify_example("qcase", 6)
    assert rep.passed
    disc = {c.name for c in rep.checks if c.status == "documented-discrepancy"}
    assert disc == {"product-entry-5-3", "product-production-entry-2-1"}
    assert not any(c.status == "fail" for c in rep.checks)


def test_verify_qcase_numeric_discrepancies():
    rep = verify_example("qcase", 6, q_value=2)
    assert rep.passed
    disc = {c.name for c in rep.checks if c.status == "documented-discrepancy"}
    assert disc == {"first-matrix-entry-4-3", "chain-hankel-reference-indexing"}
    assert rep.q_value == 2


def test_verify_qcase_generic_value():
    rep = verify_example("qcase", 6, q_value=3)
    assert rep.passed
    names = {c.name for c in rep.checks}
    assert "specializes-symbolic-product" in names
    assert "qd-recovers-geometric-sequence" in names


def test_verify_schroder_all_pass():
    rep = verify_example("schroder", 6)
    assert rep.passed
    assert rep.counts[1] == 0 and rep.counts[2] == 0
    names = {c.name for c in rep.checks}
    assert "inverse-row-mixture" in names
    assert "flag-triangle-production" in names


def test_verify_scales_beyond_reference_region():
    assert verify_example("catalan", 8).passed
    assert verify_example("schroder", 8).passed
    assert verify_example("qcase", 8).passed


def test_verify_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify_example("pascal", 6)
    with pytest.raises(ValueError):
        verify_example("catalan", 5)
    with pytest.raises(ValueError):
        verify_example("catalan", 6, q_value=2)
    with pytest.raises(TypeError):
        verify_example("qcase", 6, q_value=True)


def test_discrepancy_check_fails_when_computation_drifts():
    good = _discrepancy_check("x", 15, 51, 15, "note")
    assert good.status == "documented-discrepancy"
    drifted = _discrepancy_check("x", 14, 51, 15, "note")
    assert drifted.status == "fail"
