"""Walkthrough: the constant coefficient sequence 1, 1, 1, ...

Both matrix constructions, their product, and the production matrices,
with every claim checked as it is printed.  Run with:

    python3 demos/catalan_walkthrough.py
"""

from cfmoments import (
    RiordanPair,
    SFractionCoeffs,
    TruncatedSeries,
    catalan_series,
    compare,
    hankel_transform,
    matrix_mul,
    moments_from_sfraction,
    qd_sfraction_from_moments,
    render,
    riordan_matrix,
    series_from_rational,
)

N_SIZE = 8


def show(label, rows):
    cells = [[render(v) for v in row] for row in rows]
    width = max(len(c) for row in cells for c in row)
    print(f"{label}:")
    for row in cells:
        print("  " + "  ".join(c.rjust(width) for c in row))
    print()


def main():
    a = SFractionCoeffs([1] * (2 * N_SIZE))
    mu = moments_from_sfraction(a, 2 * N_SIZE - 1)
    print("coefficients: all ones")
    print("moments:", " ".join(str(v) for v in mu[:N_SIZE]))
    print()

    r = compare(a, N_SIZE)
    show("first matrix (columns repeat the moment column)", r.N.rows)
    show("second matrix", r.M.rows)
    show("connecting product", r.C.rows)

    # the product triangle is the shifted binomial array
    from math import comb

    for i in range(N_SIZE):
        for k in range(1, i + 1):
            assert r.C.rows[i][k] == comb(i - 1, i - k)
    print("product entries are binomial(i-1, i-k): checked")

    # both matrices are Riordan arrays built from the same base series
    c = catalan_series(N_SIZE)
    xc = TruncatedSeries((0,) + c.coeffs[:-1])
    xc2 = TruncatedSeries((0,) + tuple((c * c).coeffs[:-1]))
    assert r.N == riordan_matrix(RiordanPair(c, xc), N_SIZE)
    assert r.M == riordan_matrix(RiordanPair(c, xc2), N_SIZE)
    assert r.C == riordan_matrix(
        RiordanPair(TruncatedSeries([1], N_SIZE), series_from_rational([0, 1], [1, -1], N_SIZE)),
        N_SIZE,
    )
    print("Riordan forms (c, xc), (c, xc^2), (1, x/(1-x)): checked")
    print()

    show("production of the first matrix (all ones)", r.prodN.rows)
    show("production of the second (tridiagonal 1/1, 1/2/1)", r.prodM.rows)

    assert matrix_mul(r.N, r.C) == r.M
    print("N times the product equals M: checked")

    print("Hankel determinants:", hankel_transform(mu, N_SIZE))
    back = qd_sfraction_from_moments(mu[:N_SIZE])
    print("coefficients recovered from moments:", " ".join(render(v) for v in back.terms))


if __name__ == "__main__":
    main()
