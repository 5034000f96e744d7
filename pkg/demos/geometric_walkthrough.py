"""Walkthrough: the geometric coefficient sequence 1, q, q^2, ...

Everything here happens in exact integer polynomials in q.  The script
builds both matrices symbolically, shows the power patterns in the
production matrices, factors the connecting product entrywise, and then
specializes q to 2 to meet the moment chain 1, 4, 32, 512, ...

    python3 demos/geometric_walkthrough.py
"""

from cfmoments import (
    SFractionCoeffs,
    Triangle,
    compare,
    eval_q,
    exact_div,
    hankel_from_sfraction,
    hankel_transform,
    moments_from_sfraction,
    production_of,
    q,
    q_binomial,
    qd_sfraction_from_moments,
    render,
    two_power_chain_coeff,
)

N_SIZE = 6


def show(label, rows):
    cells = [[render(v) for v in row] for row in rows]
    widths = [max(len(r[c]) for r in cells if c < len(r)) for c in range(len(cells[-1]))]
    print(f"{label}:")
    for row in cells:
        print("  " + "  ".join(c.rjust(w) for c, w in zip(row, widths)))
    print()


def main():
    a = SFractionCoeffs([q**k if k else 1 for k in range(2 * N_SIZE)])
    print("coefficients:", " ".join(render(v) for v in a.terms[:5]), "...")
    mu = moments_from_sfraction(a, N_SIZE)
    print("moments:")
    for v in mu:
        print("  " + render(v))
    print()

    r = compare(a, N_SIZE)
    show("first matrix, rows 0 to 4", r.N.rows[:5])
    show("connecting product", r.C.rows)

    # production of the first matrix: entry (i, j) is q^((i(i+1) - j(j-1))/2)
    for i, row in enumerate(r.prodN.rows):
        for j in range(i + 2):
            want = q ** ((i * (i + 1) - j * (j - 1)) // 2) if j <= i else 1
            assert row[j] == want
    show("its production matrix (pure powers, superdiagonal ones)", r.prodN.rows)

    show("production of the second matrix (tridiagonal)", r.prodM.rows)

    # each interior product entry carries a fixed power of q times a
    # Gaussian binomial times one more shifted power
    print("entrywise factorization of the product, rows 2 to 5:")
    for i in range(2, N_SIZE):
        parts = []
        for k in range(1, i + 1):
            d = i - k
            lift = (d + 2) * (d + 1) // 2 - 1
            rest = exact_div(r.C.rows[i][k], q**lift)
            assert rest == q_binomial(i - 1, d) * q ** ((k - 1) * d)
            parts.append(f"q^{lift} * ({render(rest)})")
        print(f"  row {i}: " + ",  ".join(parts))
    print()

    # now set q = 2
    two = SFractionCoeffs([2**k for k in range(16)])
    mu2 = moments_from_sfraction(two, 10)
    print("at q = 2 the moments become:", " ".join(str(v) for v in mu2[:6]))
    for sym, val in zip(mu, mu2):
        assert eval_q(sym, 2) == val
    print("symbolic moments evaluate to them: checked")
    print()

    r2 = compare(two, 8)
    show("second matrix at q = 2, size 6", r2.M.rows[:6])

    # dropping row and column 0 of the product leaves the moment matrix
    # of the chain 2^(m(m+3)/2)
    chain = [2 ** (m * (m + 3) // 2) for m in range(10)]
    print("chain:", " ".join(str(v) for v in chain[:6]), "...")
    reduced = Triangle([row[1:] for row in r2.C.rows[1:]])
    assert list(reduced.column(0)) == chain[:7]
    s = qd_sfraction_from_moments(chain)
    print("its coefficients:", " ".join(render(v) for v in s.terms))
    assert [int(v) for v in s.terms] == [two_power_chain_coeff(m) for m in range(9)]
    print("closed form 2^(n+2), alternating with 2^(n+2) - 2^((n+3)/2): checked")
    print()

    show("production of the reduced product", production_of(reduced).rows)

    dets = hankel_transform(chain, 5)
    prods = hankel_from_sfraction(SFractionCoeffs([int(v) for v in s.terms][:8]), 5)
    assert dets == prods
    print("chain Hankel determinants (determinant route = product route):")
    for v in dets:
        print(f"  {v}")


if __name__ == "__main__":
    main()
