"""Continued-fraction coefficient sequences and the algorithms tying them
to moment sequences: conversion between the one-parameter and the
two-parameter form, moment expansion, the quotient-difference scheme,
and Hankel determinants read off the coefficients.

Conventions: the one-parameter form
1 / (1 - a1 x / (1 - a2 x / (1 - ...))) is indexed from a1; the
two-parameter form 1 / (1 - b0 x - l1 x^2 / (1 - b1 x - l2 x^2 / ...))
carries one more b than l.
"""

from __future__ import annotations

from .ring import field_div, is_scalar

__all__ = [
    "SFractionCoeffs",
    "JFractionCoeffs",
    "InsufficientCoefficients",
    "QDBreakdownError",
    "s_to_j",
    "moments_from_sfraction",
    "moments_from_jfraction",
    "qd_sfraction_from_moments",
    "hankel_from_sfraction",
    "two_power_chain_coeff",
]


class InsufficientCoefficients(ValueError):
    """A construction needs more coefficients than were supplied."""


class QDBreakdownError(ArithmeticError):
    """The quotient-difference scheme divided by zero.

    ``depth`` is the 1-based index of the coefficient that could not be
    produced; a zero cell there means a vanishing determinant.
    """

    def __init__(self, depth: int):
        super().__init__(f"zero cell at coefficient {depth}")
        self.depth = depth


def _check_terms(terms, what):
    for v in terms:
        if not is_scalar(v):
            raise TypeError(f"{what} coefficient is not a ring scalar: {v!r}")


class SFractionCoeffs:
    """Coefficients a1, a2, ... of the one-parameter form, stored with
    a1 at index 0 of ``terms``."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        ts = tuple(terms)
        _check_terms(ts, "fraction")
        self.terms = ts

    def term(self, k: int):
        """1-indexed accessor: term(1) is a1."""
        if k < 1 or k > len(self.terms):
            raise IndexError(f"no coefficient a{k}")
        return self.terms[k - 1]

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, SFractionCoeffs):
            return self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        return f"SFractionCoeffs({list(self.terms)!r})"


class JFractionCoeffs:
    """Coefficients b0, b1, ... and l1, l2, ... of the two-parameter
    form; always one more b than l."""

    __slots__ = ("b", "lam")

    def __init__(self, b, lam):
        bs, ls = tuple(b), tuple(lam)
        _check_terms(bs, "fraction")
        _check_terms(ls, "fraction")
        if len(bs) != len(ls) + 1:
            raise ValueError(
                f"need exactly one more b than l, got {len(bs)} and {len(ls)}"
            )
        self.b = bs
        self.lam = ls

    def __eq__(self, other):
        if isinstance(other, JFractionCoeffs):
            return self.b == other.b and self.lam == other.lam
        return NotImplemented

    def __repr__(self):
        return f"JFractionCoeffs({list(self.b)!r}, {list(self.lam)!r})"


def s_to_j(s: SFractionCoeffs) -> JFractionCoeffs:
    """Two-parameter coefficients of the same series: b0 = a1,
    b_n = a_{2n} + a_{2n+1}, l_n = a_{2n-1} a_{2n}.

    With an even number of a-terms the last l has no matching b and is
    dropped to keep the one-more-b invariant.
    """
    m = len(s.terms)
    if m < 1:
        raise InsufficientCoefficients("need at least a1")
    a = s.terms
    nb = (m + 1) // 2
    b = [a[0]]
    for n in range(1, nb):
        b.append(a[2 * n - 1] + a[2 * n])
    lam = [a[2 * n - 2] * a[2 * n - 1] for n in range(1, nb)]
    return JFractionCoeffs(b, lam)


def moments_from_sfraction(s: SFractionCoeffs, count: int):
    """First ``count`` series coefficients of the one-parameter form.

    Built bottom up: the truncated tail at depth count is 1, and each
    level wraps it as 1 / (1 - a_k x t).  The reciprocal never divides
    because every constant term is 1, so moments stay in the base ring.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if len(s.terms) < count - 1:
        raise InsufficientCoefficients(
            f"need {count - 1} coefficients for {count} moments, got {len(s.terms)}"
        )
    t = [1] + [0] * (count - 1)
    for k in range(count - 1, 0, -1):
        ak = s.terms[k - 1]
        # u = a_k x t, then t <- 1 / (1 - u)
        u = [0] * count
        for i in range(count - 1):
            if t[i] != 0:
                u[i + 1] = ak * t[i]
        nxt = [1] + [0] * (count - 1)
        for i in range(1, count):
            acc = 0
            for j in range(1, i + 1):
                if u[j] != 0:
                    acc = acc + u[j] * nxt[i - j]
            nxt[i] = acc
        t = nxt
    return t


def moments_from_jfraction(j: JFractionCoeffs, count: int):
    """First ``count`` series coefficients of the two-parameter form.

    Levels below (count - 1) // 2 + 1 cannot reach coefficient
    count - 1, so the tail starts as 0 there.
    """
    if count < 1:
        raise ValueError("count must be positive")
    levels = (count - 1) // 2 + 1
    if len(j.b) < levels:
        raise InsufficientCoefficients(
            f"need {levels} b-coefficients for {count} moments, got {len(j.b)}"
        )
    g = [0] * count
    for i in range(levels - 1, -1, -1):
        # u = b_i x + l_{i+1} x^2 g, then g <- 1 / (1 - u)
        u = [0] * count
        if count > 1:
            u[1] = j.b[i]
        if i + 1 <= len(j.lam):
            li = j.lam[i]
            for kk in range(count - 2):
                if g[kk] != 0:
                    u[kk + 2] = u[kk + 2] + li * g[kk]
        nxt = [1] + [0] * (count - 1)
        for ii in range(1, count):
            acc = 0
            for jj in range(1, ii + 1):
                if u[jj] != 0:
                    acc = acc + u[jj] * nxt[ii - jj]
            nxt[ii] = acc
        g = nxt
    return g


def qd_sfraction_from_moments(mu) -> SFractionCoeffs:
    """Recover a1 .. a_m from moments mu_0 .. mu_m by the
    quotient-difference scheme.

    Requires mu_0 = 1.  Raises QDBreakdownError when a needed divisor
    cell is zero; a zero coefficient at the very end of the output
    signals a vanishing determinant at the boundary instead.
    """
    mu = list(mu)
    _check_terms(mu, "moment")
    if not mu:
        raise ValueError("empty moment list")
    if mu[0] != 1:
        raise ValueError("moment 0 must be 1")
    m = len(mu) - 1
    if m == 0:
        return SFractionCoeffs([])
    # q-columns and e-columns by superdiagonal sweeps
    qcol = []
    for n in range(m):
        if mu[n] == 0:
            raise QDBreakdownError(n + 1)
        qcol.append(field_div(mu[n + 1], mu[n]))
    out = [qcol[0]]
    ecol = [0] * len(qcol)
    while len(out) < m:
        nxt_e = [qcol[n + 1] - qcol[n] + ecol[n + 1] for n in range(len(qcol) - 1)]
        out.append(nxt_e[0])
        if len(out) == m:
            break
        nxt_q = []
        for n in range(len(nxt_e) - 1):
            if nxt_e[n] == 0:
                raise QDBreakdownError(len(out) + 1)
            nxt_q.append(field_div(qcol[n + 1] * nxt_e[n + 1], nxt_e[n]))
        out.append(nxt_q[0])
        qcol, ecol = nxt_q, nxt_e
    return SFractionCoeffs(out)


def hankel_from_sfraction(s: SFractionCoeffs, count: int):
    """Hankel determinants h_0 .. h_{count-1} of the moment sequence,
    as products of the coefficients: h_n is the product over k < n of
    (a_{2k+1} a_{2k+2})^(n-k)."""
    if count < 1:
        raise ValueError("count must be positive")
    need = 2 * (count - 1)
    if len(s.terms) < need:
        raise InsufficientCoefficients(
            f"need {need} coefficients for {count} determinants, got {len(s.terms)}"
        )
    out = [1]
    for n in range(1, count):
        h = 1
        for k in range(n):
            pair = s.terms[2 * k] * s.terms[2 * k + 1]
            h = h * pair ** (n - k)
        out.append(h)
    return out


def two_power_chain_coeff(n: int):
    """n-th coefficient (0-indexed) of the one-parameter expansion of
    the sequence 2^(m(m+3)/2): 2^(n+2) for even n, else
    2^(n+2) - 2^((n+3)/2)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n % 2 == 0:
        return 2 ** (n + 2)
    return 2 ** (n + 2) - 2 ** ((n + 3) // 2)
