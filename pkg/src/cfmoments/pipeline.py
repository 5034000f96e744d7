"""End-to-end constructions and the scripted verification of the worked
examples.

The comparison takes a coefficient sequence a1, a2, ... (a1 = 1) and
produces two triangles with the moments in column 0: one generated by
beheading the inverse of a bidiagonal matrix, one generated by the
tridiagonal production matrix of the equivalent two-parameter form.
Their product (inverse of the first times the second) is the object of
interest; production matrices of all three are part of the result.

``verify_example`` replays a named example against frozen reference
values and live structural identities, reporting pass, fail, or
documented-discrepancy per check.  Discrepancies are places where the
reference values disagree with exact computation; each carries a note
with the independent evidence.
"""

from __future__ import annotations

from .cfrac import (
    InsufficientCoefficients,
    JFractionCoeffs,
    SFractionCoeffs,
    hankel_from_sfraction,
    moments_from_jfraction,
    moments_from_sfraction,
    qd_sfraction_from_moments,
    s_to_j,
    two_power_chain_coeff,
)
from .ring import ExactDivisionError, QPoly, eval_q, exact_div, q, render
from .series import (
    RiordanPair,
    TruncatedSeries,
    catalan_series,
    interleave_columns,
    riordan_matrix,
    schroder_column,
    series_from_rational,
)
from .triangle import (
    ProductionMatrix,
    Triangle,
    behead,
    generate,
    hankel_det,
    hankel_transform,
    invert,
    mul,
    production_of,
    rescale_columns,
)

__all__ = [
    "CatalanLikenessError",
    "ComparisonResult",
    "CheckResult",
    "VerifyReport",
    "EXAMPLE_NAMES",
    "build_N_via_behead",
    "build_N_via_rescale",
    "op_coeff_triangle",
    "build_M",
    "compare",
    "q_binomial",
    "qcase_factorization_check",
    "schroder_structure_checks",
    "verify_example",
]


class CatalanLikenessError(ArithmeticError):
    """A leading Hankel determinant vanishes, so the comparison is not
    defined; ``order`` is the first failing order."""

    def __init__(self, order: int):
        super().__init__(f"hankel determinant vanishes at order {order}")
        self.order = order


def _unit_bidiagonal(a: SFractionCoeffs, size: int) -> Triangle:
    """Unit lower bidiagonal with -a1, -a2, ... below the diagonal."""
    rows = [[1]]
    for i in range(1, size):
        rows.append([0] * (i - 1) + [-a.terms[i - 1], 1])
    return Triangle(rows)


def build_N_via_behead(a: SFractionCoeffs, n: int) -> Triangle:
    """First construction: generate from the beheaded inverse of the
    unit bidiagonal matrix holding the negated coefficients."""
    if n < 1:
        raise ValueError("size must be positive")
    if len(a.terms) < n:
        raise InsufficientCoefficients(f"need {n} coefficients, got {len(a.terms)}")
    cumulative = invert(_unit_bidiagonal(a, n + 1))
    return generate(behead(cumulative), n)


def build_N_via_rescale(a: SFractionCoeffs, n: int) -> Triangle:
    """Second construction: generate from the staircase production
    matrix whose row i is filled with a_{i+1}, then divide column k by
    the product a_1 ... a_k.  The division is exact."""
    if n < 1:
        raise ValueError("size must be positive")
    if len(a.terms) < n:
        raise InsufficientCoefficients(f"need {n} coefficients, got {len(a.terms)}")
    if n == 1:
        return Triangle([[1]])
    for v in a.terms[: n - 1]:
        if v == 0:
            raise ValueError("zero coefficient makes the column divisors vanish")
    staircase = ProductionMatrix([[a.terms[i]] * (i + 2) for i in range(n - 1)])
    scaled = generate(staircase, n)
    divisors = [1]
    for k in range(1, n):
        divisors.append(divisors[-1] * a.terms[k - 1])
    return rescale_columns(scaled, divisors, divide=True)


def op_coeff_triangle(j: JFractionCoeffs, n: int) -> Triangle:
    """Coefficient triangle of the monic polynomial family attached to
    the two-parameter coefficients: p_0 = 1, p_1 = x - b_0, and
    p_r = (x - b_{r-1}) p_{r-1} - l_{r-1} p_{r-2}; row r holds the
    coefficients of p_r, ascending."""
    if n < 1:
        raise ValueError("size must be positive")
    if len(j.b) < n - 1 or len(j.lam) < n - 2:
        raise InsufficientCoefficients(
            f"need {n - 1} b and {max(0, n - 2)} l coefficients, "
            f"got {len(j.b)} and {len(j.lam)}"
        )
    rows = [[1]]
    if n == 1:
        return Triangle(rows)
    prev, cur = [1], [-j.b[0], 1]
    rows.append(cur)
    for r in range(2, n):
        b, lam = j.b[r - 1], j.lam[r - 2]
        nxt = [0] * (r + 1)
        for i, c in enumerate(cur):
            nxt[i + 1] = nxt[i + 1] + c
            if c != 0:
                nxt[i] = nxt[i] - b * c
        for i, c in enumerate(prev):
            if c != 0:
                nxt[i] = nxt[i] - lam * c
        prev, cur = cur, nxt
        rows.append(cur)
    return Triangle(rows)


def build_M(a: SFractionCoeffs, n: int) -> Triangle:
    """Moment triangle of the two-parameter form, built two independent
    ways: generated from the tridiagonal production matrix, and as the
    inverse of the polynomial coefficient triangle.  The two must agree;
    disagreement signals a bug and raises."""
    if n < 1:
        raise ValueError("size must be positive")
    j = s_to_j(a)
    if n == 1:
        return Triangle([[1]])
    if len(j.b) < n - 1:
        raise InsufficientCoefficients(
            f"need {n - 1} two-parameter levels, got {len(j.b)}"
        )
    rows = []
    for i in range(n - 1):
        row = [0] * (i + 2)
        if i >= 1:
            row[i - 1] = j.lam[i - 1]
        row[i] = j.b[i]
        row[i + 1] = 1
        rows.append(row)
    via_production = generate(ProductionMatrix(rows), n)
    via_polynomials = invert(op_coeff_triangle(j, n))
    if via_production != via_polynomials:
        raise ArithmeticError(
            "internal disagreement between the production and polynomial routes"
        )
    return via_production


class ComparisonResult:
    """Bundle of everything the comparison produces: the coefficient
    sequence, moments, both matrices, their product, production
    matrices, and named self-consistency diagnostics."""

    __slots__ = (
        "a",
        "mu",
        "N",
        "M",
        "C",
        "prodN",
        "prodM",
        "prodCinv",
        "diagnostics",
    )

    def __init__(self, a, mu, N, M, C, prodN, prodM, prodCinv, diagnostics):
        self.a = a
        self.mu = mu
        self.N = N
        self.M = M
        self.C = C
        self.prodN = prodN
        self.prodM = prodM
        self.prodCinv = prodCinv
        self.diagnostics = diagnostics


def compare(a: SFractionCoeffs, n: int) -> ComparisonResult:
    """Full comparison at size n.

    Requires a_1 = 1, at least 2n coefficients, and nonvanishing leading
    Hankel determinants (raises CatalanLikenessError otherwise).
    """
    if n < 2:
        raise ValueError("size must be at least 2")
    if len(a.terms) < 2 * n:
        raise InsufficientCoefficients(
            f"need {2 * n} coefficients for size {n}, got {len(a.terms)}"
        )
    if a.terms[0] != 1:
        raise ValueError("first coefficient must be 1")
    mu_long = moments_from_sfraction(a, 2 * n - 1)
    for k in range(n):
        if hankel_det(mu_long, k) == 0:
            raise CatalanLikenessError(k)
    N = build_N_via_behead(a, n)
    N_again = build_N_via_rescale(a, n)
    M = build_M(a, n)
    C = mul(invert(N), M)
    prodN = production_of(N)
    prodM = production_of(M)
    prodCinv = production_of(invert(C))
    mu = mu_long[:n]
    diagnostics = [
        ("construction-route-agreement", N == N_again),
        ("first-column-of-first-matrix-is-moments", list(N.column(0)) == mu),
        ("first-column-of-second-matrix-is-moments", list(M.column(0)) == mu),
        ("product-first-column-is-unit-vector", list(C.column(0)) == [1] + [0] * (n - 1)),
        ("unit-diagonals", N.unit_diagonal and M.unit_diagonal and C.unit_diagonal),
    ]
    return ComparisonResult(a, mu, N, M, C, prodN, prodM, prodCinv, diagnostics)


def q_binomial(m: int, k: int):
    """Gaussian binomial coefficient, an integer polynomial in q."""
    if m < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > m:
        return 0
    row = [1]
    for i in range(1, m + 1):
        nxt = [1]
        for jj in range(1, i):
            nxt.append(row[jj - 1] + q**jj * row[jj])
        nxt.append(1)
        row = nxt
    return row[k]


class CheckResult:
    """One verification check: name, status (pass, fail, or
    documented-discrepancy), rendered expected/actual values, and a
    free-form note."""

    __slots__ = ("name", "status", "expected", "actual", "note")

    def __init__(self, name, status, expected="", actual="", note=""):
        self.name = name
        self.status = status
        self.expected = expected
        self.actual = actual
        self.note = note

    def __repr__(self):
        return f"CheckResult({self.name!r}, {self.status!r})"


class VerifyReport:
    """Outcome of replaying one example: the check list plus context."""

    __slots__ = ("example", "size", "q_value", "checks")

    def __init__(self, example, size, q_value, checks):
        self.example = example
        self.size = size
        self.q_value = q_value
        self.checks = list(checks)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def counts(self):
        """(passes, failures, documented discrepancies)"""
        p = sum(1 for c in self.checks if c.status == "pass")
        f = sum(1 for c in self.checks if c.status == "fail")
        d = sum(1 for c in self.checks if c.status == "documented-discrepancy")
        return (p, f, d)


def qcase_factorization_check(product: Triangle, n=None) -> CheckResult:
    """Entrywise factorization of the product triangle for the geometric
    coefficient sequence: entry (i, k) divided by q to the power
    binom(i-k+2, 2) - 1 equals the Gaussian binomial [i-1, i-k] times
    q^((k-1)(i-k)).  Reports the first failing entry."""
    n = product.size if n is None else n
    if n > product.size:
        raise ValueError("region exceeds the triangle")
    for i in range(1, n):
        for k in range(1, i + 1):
            d = i - k
            shift = (d + 2) * (d + 1) // 2 - 1
            try:
                lhs = exact_div(product.rows[i][k], q**shift)
            except ExactDivisionError:
                return CheckResult(
                    "entrywise-factorization",
                    "fail",
                    render(q**shift),
                    render(product.rows[i][k]),
                    f"entry at row {i} column {k} is not divisible by the "
                    "expected power",
                )
            rhs = q_binomial(i - 1, d) * q ** ((k - 1) * d)
            if lhs != rhs:
                return CheckResult(
                    "entrywise-factorization",
                    "fail",
                    render(rhs),
                    render(lhs),
                    f"first failure at row {i} column {k}",
                )
    return CheckResult(
        "entrywise-factorization", "pass", note=f"rows 1..{n - 1} verified"
    )


def _schroder_secondary_pair(n: int) -> RiordanPair:
    """The partner family whose columns supply the odd columns of the
    interleaved triangle."""
    phi_over_x = schroder_column(1, n)
    phi_over_x2 = schroder_column(1, n + 1)[1:]
    return RiordanPair(TruncatedSeries(phi_over_x2), TruncatedSeries(phi_over_x))


def schroder_structure_checks(result: ComparisonResult) -> list:
    """Structural identities special to the alternating 1, 2 sequence."""
    n = result.N.size
    checks = []

    # internal entries of the product obey parity-switched recurrences
    ok = True
    note = ""
    for i in range(2, n):
        w = 1 if i % 2 == 0 else 2
        for jj in range(1, i):
            want = result.C.entry(i - 1, jj - 1) + w * result.C.entry(i - 1, jj)
            if result.C.rows[i][jj] != want:
                ok = False
                note = f"fails at row {i} column {jj}"
                break
        if not ok:
            break
    checks.append(
        CheckResult(
            "parity-row-recurrences",
            "pass" if ok else "fail",
            note=note or f"rows 2..{n - 1}",
        )
    )

    # production matrix of the product's inverse equals the beheaded
    # inverse of the flagged cumulative-product triangle
    cumulative = invert(_unit_bidiagonal(result.a, n))
    s_rows = [[1]]
    for i in range(1, n):
        s_rows.append([0] + list(cumulative.rows[i - 1]))
    flag = Triangle(s_rows)
    lhs = production_of(invert(result.C))
    rhs = behead(invert(flag))
    checks.append(
        CheckResult(
            "flag-triangle-production",
            "pass" if lhs == rhs else "fail",
            note="beheaded inverse of the flagged triangle",
        )
    )

    # the first matrix interleaves the second matrix with the partner family
    partner = riordan_matrix(_schroder_secondary_pair(n), n)
    woven = interleave_columns(result.M, partner)
    checks.append(
        CheckResult(
            "interleaved-columns",
            "pass" if woven == result.N else "fail",
            note="columns alternate between the two families",
        )
    )

    # every column also matches the closed-form series expansion
    ok = all(
        list(result.N.column(k)) == schroder_column(k, n) for k in range(n)
    )
    checks.append(
        CheckResult(
            "series-columns",
            "pass" if ok else "fail",
            note=f"columns 0..{n - 1}",
        )
    )

    # rows of the inverse alternate between two rational families
    a_rows = riordan_matrix(
        RiordanPair(
            series_from_rational([1], [1, 3, 2], n),
            series_from_rational([0, 1], [1, 3, 2], n),
        ),
        n,
    )
    b_rows = riordan_matrix(
        RiordanPair(
            series_from_rational([1], [1, 1], n),
            series_from_rational([0, 1], [1, 3, 2], n),
        ),
        n,
    )
    n_inv = invert(result.N)
    ok = True
    note = ""
    for i in range(n):
        half, odd = divmod(i, 2)
        if odd:
            want = [0] * half + list(b_rows.rows[half + 1])
        else:
            want = [0] * half + list(a_rows.rows[half])
        if list(n_inv.rows[i]) != want:
            ok = False
            note = f"fails at row {i}"
            break
    checks.append(
        CheckResult(
            "inverse-row-mixture", "pass" if ok else "fail", note=note or f"rows 0..{n - 1}"
        )
    )

    # the odd-row family is exactly the inverse of the second matrix
    checks.append(
        CheckResult(
            "odd-family-is-second-matrix-inverse",
            "pass" if b_rows == invert(result.M) else "fail",
        )
    )
    return checks


# ---------------------------------------------------------------------------
# frozen reference values for the worked examples
#
# Where a reference value disagrees with exact computation, the printed
# value and the computed value are both kept; the verify registries
# report those entries as documented-discrepancy with the supporting
# evidence in the note.

_REF_Q_N = (
    (1,),
    (1, 1),
    (1 + q, 1 + q, 1),
    (QPoly((1, 2, 1, 1)), QPoly((1, 2, 1, 1)), QPoly((1, 1, 1)), 1),
    (
        QPoly((1, 3, 3, 3, 2, 1, 1)),
        QPoly((1, 3, 3, 3, 2, 1, 1)),
        QPoly((1, 2, 2, 2, 1, 1)),
        QPoly((1, 1, 1, 1)),
        1,
    ),
)

_REF_Q_C = (
    (1,),
    (0, 1),
    (0, q**2, 1),
    (0, q**5, q**3 + q**4, 1),
    (0, q**9, q**7 + q**8 + q**9, q**4 + q**5 + q**6, 1),
    (
        0,
        q**14,
        q**12 + q**13 + q**14 + q**15,
        None,  # entry (5, 3) reported separately
        q**5 + q**6 + q**7 + q**8,
        1,
    ),
)
_REF_Q_C_5_3_PRINTED = q**9 + q**10 + q**11 + q**12 + q**13
_REF_Q_C_5_3_COMPUTED = q**9 + q**10 + 2 * q**11 + q**12 + q**13

_REF_Q_PRODN = (
    (1, 1),
    (q, q, 1),
    (q**3, q**3, q**2, 1),
    (q**6, q**6, q**5, q**3, 1),
    (q**10, q**10, q**9, q**7, q**4, 1),
    (q**15, q**15, q**14, q**12, q**9, q**5, 1),
)

_REF_Q_PRODM = (
    (1, 1),
    (q, q + q**2, 1),
    (0, q**5, q**3 + q**4, 1),
    (0, 0, q**9, q**5 + q**6, 1),
    (0, 0, 0, q**13, q**7 + q**8, 1),
    (0, 0, 0, 0, q**17, q**9 + q**10, 1),
)

_REF_Q_PRODC = (
    (0, 1),
    (0, q**2, 1),
    (0, None, q**4 + q**3 - q**2, 1),  # entry (2, 1) reported separately
    (0, 0, q**9 - q**7, q**6 + q**5 - q**3, 1),
    (0, 0, 0, q**13 - q**10, q**8 + q**7 - q**4, 1),
    (0, 0, 0, 0, q**17 - q**13, q**10 + q**9 - q**5, 1),
)
_REF_Q_PRODC_2_1_PRINTED = q**6 - q**5
_REF_Q_PRODC_2_1_COMPUTED = q**5 - q**4

_REF_Q2_M = (
    (1,),
    (1, 1),
    (3, 7, 1),
    (17, 77, 31, 1),
    (171, 1471, 1333, 127, 1),
    (3113, 51653, 98487, 21717, 511, 1),
)

_REF_Q2_N = (
    (1,),
    (1, 1),
    (3, 3, 1),
    (17, 17, 7, 1),
    (171, 171, 77, None, 1),  # entry (4, 3) reported separately
    (3113, 3113, 1471, 325, 31, 1),
)
_REF_Q2_N_4_3_PRINTED = 51
_REF_Q2_N_4_3_COMPUTED = 15

_REF_Q2_C = (
    (1,),
    (0, 1),
    (0, 4, 1),
    (0, 32, 24, 1),
    (0, 512, 896, 112, 1),
    (0, 16384, 61440, 17920, 480, 1),
)

_REF_Q2_REDUCED = (
    (1,),
    (4, 1),
    (32, 24, 1),
    (512, 896, 112, 1),
    (16384, 61440, 17920, 480, 1),
    (1048576, 8126464, 5079040, 317440, 1984, 1),
)

_REF_Q2_REDUCED_PROD = (
    (4, 1),
    (16, 20, 1),
    (0, 384, 88, 1),
    (0, 0, 7168, 368, 1),
    (0, 0, 0, 122880, 1504, 1),
    (0, 0, 0, 0, 2031616, 6080, 1),
)

_REF_Q2_CHAIN_J = JFractionCoeffs([4, 20, 88, 368, 1504], [16, 384, 7168, 122880])
_REF_Q2_CHAIN_HANKEL = (1, 16, 98304, 4329327034368, 23428840713137027316449280)

_REF_S_CUMULATIVE = (
    (1,),
    (1, 1),
    (2, 2, 1),
    (2, 2, 1, 1),
    (4, 4, 2, 2, 1),
    (4, 4, 2, 2, 1, 1),
)

_REF_S_N = (
    (1,),
    (1, 1),
    (3, 3, 1),
    (11, 11, 4, 1),
    (45, 45, 17, 6, 1),
    (197, 197, 76, 31, 7, 1),
)

_REF_S_M = (
    (1,),
    (1, 1),
    (3, 4, 1),
    (11, 17, 7, 1),
    (45, 76, 40, 10, 1),
    (197, 353, 216, 72, 13, 1),
)

_REF_S_NINV = (
    (1,),
    (-1, 1),
    (0, -3, 1),
    (0, 1, -4, 1),
    (0, 0, 7, -6, 1),
    (0, 0, -1, 11, -7, 1),
)

_REF_S_C = (
    (1,),
    (0, 1),
    (0, 1, 1),
    (0, 2, 3, 1),
    (0, 2, 5, 4, 1),
    (0, 4, 12, 13, 6, 1),
)

_REF_S_PRODN = (
    (1, 1),
    (2, 2, 1),
    (2, 2, 1, 1),
    (4, 4, 2, 2, 1),
    (4, 4, 2, 2, 1, 1),
    (8, 8, 4, 4, 2, 2, 1),
)

_REF_S_PRODM = (
    (1, 1),
    (2, 3, 1),
    (0, 2, 3, 1),
    (0, 0, 2, 3, 1),
    (0, 0, 0, 2, 3, 1),
    (0, 0, 0, 0, 2, 3, 1),
)

_REF_S_PRODCINV = (
    (0, 1),
    (0, -1, 1),
    (0, 0, -2, 1),
    (0, 0, 0, -1, 1),
    (0, 0, 0, 0, -2, 1),
    (0, 0, 0, 0, 0, -1, 1),
)

_REF_S_FLAG = (
    (1,),
    (0, 1),
    (0, 1, 1),
    (0, 2, 2, 1),
    (0, 2, 2, 1, 1),
    (0, 4, 4, 2, 2, 1),
)

_REF_S_EVEN_FAMILY = (
    (1,),
    (-3, 1),
    (7, -6, 1),
    (-15, 23, -9, 1),
    (31, -72, 48, -12, 1),
    (-63, 201, -198, 82, -15, 1),
)

_REF_S_ODD_FAMILY = (
    (1,),
    (-1, 1),
    (1, -4, 1),
    (-1, 11, -7, 1),
    (1, -26, 30, -10, 1),
    (-1, 57, -102, 58, -13, 1),
)

_REF_S_MOMENTS = (1, 1, 3, 11, 45, 197, 903)


def _region_check(name, computed, expected_rows, note="") -> CheckResult:
    """Compare leading rows of a computed matrix against frozen rows;
    ``None`` marks entries reported separately."""
    for i, row in enumerate(expected_rows):
        for jj, want in enumerate(row):
            if want is None:
                continue
            got = computed.rows[i][jj]
            if got != want:
                return CheckResult(
                    name,
                    "fail",
                    render(want),
                    render(got),
                    f"first mismatch at row {i} column {jj}",
                )
    return CheckResult(name, "pass", note=note or f"{len(expected_rows)} rows")


def _discrepancy_check(name, computed_value, printed_value, corrected_value, note):
    """Report a known disagreement between reference and computation; if
    the computation stops matching the corrected value, that is a real
    failure."""
    if computed_value == corrected_value:
        return CheckResult(
            name,
            "documented-discrepancy",
            render(printed_value),
            render(computed_value),
            note,
        )
    return CheckResult(
        name,
        "fail",
        render(corrected_value),
        render(computed_value),
        "computation no longer matches the corrected value",
    )


def _diagnostic_checks(result: ComparisonResult) -> list:
    return [
        CheckResult(nm, "pass" if ok else "fail") for nm, ok in result.diagnostics
    ]


def _verify_catalan(n: int) -> list:
    a = SFractionCoeffs([1] * (2 * n))
    r = compare(a, n)
    checks = _diagnostic_checks(r)

    c = catalan_series(n)
    checks.append(
        CheckResult(
            "moments-are-catalan",
            "pass" if tuple(r.mu) == c.coeffs[:n] else "fail",
        )
    )

    xc = TruncatedSeries((0,) + c.coeffs[:-1])
    xc2 = TruncatedSeries((0,) + tuple((c * c).coeffs[:-1]))
    checks.append(
        _region_check(
            "first-matrix-is-catalan-pair",
            r.N,
            riordan_matrix(RiordanPair(c, xc), n).rows,
            note="column k holds the k-fold convolution",
        )
    )
    checks.append(
        _region_check(
            "second-matrix-is-catalan-square-pair",
            r.M,
            riordan_matrix(RiordanPair(c, xc2), n).rows,
            note="column k holds the 2k-fold shifted convolution",
        )
    )
    shifted_binomial = riordan_matrix(
        RiordanPair(TruncatedSeries([1], n), series_from_rational([0, 1], [1, -1], n)),
        n,
    )
    checks.append(
        _region_check(
            "product-is-shifted-binomial",
            r.C,
            shifted_binomial.rows,
        )
    )

    ok = all(
        all(v == 1 for v in row) for row in r.prodN.rows
    )
    checks.append(CheckResult("first-production-all-ones", "pass" if ok else "fail"))

    ok = True
    for i, row in enumerate(r.prodM.rows):
        want = [0] * (i + 2)
        if i == 0:
            want[0], want[1] = 1, 1
        else:
            want[i - 1], want[i], want[i + 1] = 1, 2, 1
        if list(row) != want:
            ok = False
            break
    checks.append(
        CheckResult("second-production-tridiagonal-1-2-1", "pass" if ok else "fail")
    )

    mu_long = moments_from_sfraction(a, 2 * n - 1)
    checks.append(
        CheckResult(
            "hankel-all-ones",
            "pass"
            if hankel_transform(mu_long, n) == [1] * n
            and hankel_from_sfraction(a, n) == [1] * n
            else "fail",
        )
    )
    back = qd_sfraction_from_moments(mu_long)
    checks.append(
        CheckResult(
            "qd-recovers-constant-sequence",
            "pass" if all(v == 1 for v in back.terms) else "fail",
        )
    )
    return checks


def _q_power_coeffs(count: int) -> SFractionCoeffs:
    return SFractionCoeffs([q**k if k else 1 for k in range(count)])


def _verify_qcase_symbolic(n: int) -> list:
    nn = max(n, 7)
    a = _q_power_coeffs(2 * nn)
    r = compare(a, nn)
    checks = _diagnostic_checks(r)

    checks.append(_region_check("first-matrix-reference-display", r.N, _REF_Q_N))
    checks.append(
        _region_check("product-reference-display", r.C, _REF_Q_C)
    )
    checks.append(
        _discrepancy_check(
            "product-entry-5-3",
            r.C.rows[5][3],
            _REF_Q_C_5_3_PRINTED,
            _REF_Q_C_5_3_COMPUTED,
            "the reference display drops the coefficient 2 on q^11; the "
            "factored display and the numeric display at q=2 (17920) both "
            "require the computed value",
        )
    )

    checks.append(
        _region_check("first-production-reference-display", r.prodN, _REF_Q_PRODN)
    )
    ok = True
    for i, row in enumerate(r.prodN.rows):
        for jj, v in enumerate(row):
            want = 1 if jj == i + 1 else q ** ((i * (i + 1) - jj * (jj - 1)) // 2)
            if v != want:
                ok = False
                break
        if not ok:
            break
    checks.append(
        CheckResult(
            "first-production-power-pattern",
            "pass" if ok else "fail",
            note=f"rows 0..{len(r.prodN.rows) - 1}",
        )
    )

    checks.append(
        _region_check("second-production-reference-display", r.prodM, _REF_Q_PRODM)
    )

    j = s_to_j(a)
    ok = j.b[0] == 1
    for i in range(1, nn - 1):
        ok = ok and j.b[i] == q ** (2 * i - 1) + q ** (2 * i)
        ok = ok and j.lam[i - 1] == q ** (4 * i - 3)
    checks.append(
        CheckResult("two-parameter-power-pattern", "pass" if ok else "fail")
    )

    prod_c = production_of(r.C)
    checks.append(
        _region_check("product-production-reference-display", prod_c, _REF_Q_PRODC)
    )
    checks.append(
        _discrepancy_check(
            "product-production-entry-2-1",
            prod_c.rows[2][1],
            _REF_Q_PRODC_2_1_PRINTED,
            _REF_Q_PRODC_2_1_COMPUTED,
            "the reference display scales the entry by one extra power of q; "
            "the numeric display at q=2 (16) and the power pattern of the "
            "following rows both require the computed value",
        )
    )

    checks.append(qcase_factorization_check(r.C))
    return checks


def _verify_qcase_at(v: int, n: int) -> list:
    nn = max(n, 8) if v == 2 else n
    a = SFractionCoeffs([v**k for k in range(2 * nn)])
    r = compare(a, nn)
    checks = _diagnostic_checks(r)

    sym = compare(_q_power_coeffs(12), 6)
    ok = sym.C.map_entries(lambda s: eval_q(s, v)) == Triangle(
        [row[: i + 1] for i, row in enumerate(r.C.rows[:6])]
    )
    checks.append(
        CheckResult(
            "specializes-symbolic-product",
            "pass" if ok else "fail",
            note=f"evaluated at q={v}",
        )
    )

    if v >= 1:
        back = qd_sfraction_from_moments(moments_from_sfraction(a, nn))
        ok = list(back.terms) == [v**k for k in range(nn - 1)]
        checks.append(
            CheckResult("qd-recovers-geometric-sequence", "pass" if ok else "fail")
        )

    if v != 2:
        return checks

    checks.append(_region_check("second-matrix-reference-display", r.M, _REF_Q2_M))
    checks.append(_region_check("first-matrix-reference-display", r.N, _REF_Q2_N))
    checks.append(
        _discrepancy_check(
            "first-matrix-entry-4-3",
            r.N.rows[4][3],
            _REF_Q2_N_4_3_PRINTED,
            _REF_Q2_N_4_3_COMPUTED,
            "the entry 325 printed below it in the same display is generated "
            "from the computed value, and the symbolic display evaluates to it",
        )
    )
    checks.append(_region_check("product-reference-display", r.C, _REF_Q2_C))

    reduced = Triangle([row[1:] for row in r.C.rows[1:]])
    checks.append(
        _region_check("reduced-product-reference-display", reduced, _REF_Q2_REDUCED)
    )
    checks.append(
        _region_check(
            "reduced-product-production-reference-display",
            production_of(reduced),
            _REF_Q2_REDUCED_PROD,
        )
    )

    chain = [2 ** (m * (m + 3) // 2) for m in range(10)]
    ok = moments_from_jfraction(_REF_Q2_CHAIN_J, 10) == chain
    checks.append(
        CheckResult("chain-two-parameter-form", "pass" if ok else "fail")
    )

    back = qd_sfraction_from_moments(chain)
    ok = list(back.terms) == [two_power_chain_coeff(m) for m in range(9)]
    checks.append(CheckResult("chain-closed-form", "pass" if ok else "fail"))

    chain_a = SFractionCoeffs([two_power_chain_coeff(m) for m in range(8)])
    dets = hankel_transform(chain, 5)
    prods = hankel_from_sfraction(chain_a, 5)
    ok = dets == prods == list(_REF_Q2_CHAIN_HANKEL)
    checks.append(
        CheckResult("chain-hankel-determinants", "pass" if ok else "fail")
    )

    # reference pairing starts one coefficient later than the determinants do
    ref_pairing_h1 = two_power_chain_coeff(1) * two_power_chain_coeff(2)
    checks.append(
        CheckResult(
            "chain-hankel-reference-indexing",
            "documented-discrepancy",
            render(ref_pairing_h1),
            render(dets[1]),
            "the reference product formula pairs coefficients one index too "
            "late; pairing from the first coefficient reproduces every "
            "determinant",
        )
    )
    return checks


def _verify_schroder(n: int) -> list:
    # the production displays have six rows, which takes a size-7 build
    n = max(n, 7)
    a = SFractionCoeffs([1 if k % 2 == 0 else 2 for k in range(2 * n)])
    r = compare(a, n)
    checks = _diagnostic_checks(r)

    mu_long = moments_from_sfraction(a, 2 * n - 1)
    ok = mu_long[:7] == list(_REF_S_MOMENTS) and list(r.mu) == schroder_column(0, n)
    checks.append(CheckResult("moments-reference-values", "pass" if ok else "fail"))

    cumulative = invert(_unit_bidiagonal(a, n + 1))
    checks.append(
        _region_check(
            "cumulative-product-reference-display", cumulative, _REF_S_CUMULATIVE
        )
    )
    checks.append(_region_check("first-matrix-reference-display", r.N, _REF_S_N))
    checks.append(_region_check("second-matrix-reference-display", r.M, _REF_S_M))
    checks.append(
        _region_check("first-matrix-inverse-reference-display", invert(r.N), _REF_S_NINV)
    )
    checks.append(_region_check("product-reference-display", r.C, _REF_S_C))
    checks.append(
        _region_check("first-production-reference-display", r.prodN, _REF_S_PRODN)
    )
    checks.append(
        _region_check("second-production-reference-display", r.prodM, _REF_S_PRODM)
    )
    checks.append(
        _region_check(
            "product-inverse-production-reference-display",
            r.prodCinv,
            _REF_S_PRODCINV,
        )
    )

    s_rows = [[1]]
    for i in range(1, 6):
        s_rows.append([0] + list(cumulative.rows[i - 1]))
    checks.append(
        _region_check("flag-triangle-reference-display", Triangle(s_rows), _REF_S_FLAG)
    )

    even_family = riordan_matrix(
        RiordanPair(
            series_from_rational([1], [1, 3, 2], n),
            series_from_rational([0, 1], [1, 3, 2], n),
        ),
        n,
    )
    odd_family = riordan_matrix(
        RiordanPair(
            series_from_rational([1], [1, 1], n),
            series_from_rational([0, 1], [1, 3, 2], n),
        ),
        n,
    )
    checks.append(
        _region_check("even-family-reference-display", even_family, _REF_S_EVEN_FAMILY)
    )
    checks.append(
        _region_check("odd-family-reference-display", odd_family, _REF_S_ODD_FAMILY)
    )

    checks.extend(schroder_structure_checks(r))

    dets = hankel_transform(mu_long, n)
    prods = hankel_from_sfraction(a, n)
    ok = dets == prods == [2 ** (k * (k + 1) // 2) for k in range(n)]
    checks.append(
        CheckResult("hankel-powers-of-two", "pass" if ok else "fail")
    )

    back = qd_sfraction_from_moments(mu_long)
    ok = all(v == (1 if k % 2 == 0 else 2) for k, v in enumerate(back.terms))
    checks.append(
        CheckResult("qd-recovers-alternating-sequence", "pass" if ok else "fail")
    )
    return checks


EXAMPLE_NAMES = ("catalan", "qcase", "schroder")


def verify_example(name: str, size: int, q_value=None) -> VerifyReport:
    """Replay a worked example at the given size.

    ``q_value`` selects numeric evaluation for the geometric example
    (None keeps it symbolic) and must be None for the others.  Known
    disagreements with the reference values appear as
    documented-discrepancy checks and do not fail the report.
    """
    if name not in EXAMPLE_NAMES:
        raise ValueError(f"unknown example {name!r}")
    if size < 6:
        raise ValueError("size must be at least 6 to cover the reference displays")
    if name != "qcase" and q_value is not None:
        raise ValueError("only the geometric example takes a q value")
    if q_value is not None and (not isinstance(q_value, int) or isinstance(q_value, bool)):
        raise TypeError("q value must be a plain int")
    if name == "catalan":
        checks = _verify_catalan(size)
    elif name == "schroder":
        checks = _verify_schroder(size)
    elif q_value is None:
        checks = _verify_qcase_symbolic(size)
    else:
        checks = _verify_qcase_at(q_value, size)
    return VerifyReport(name, size, q_value if name == "qcase" else None, checks)
