"""Lower-triangular matrices and almost-lower-Hessenberg production
matrices, with the operations the moment constructions are built from:
generation from a production matrix, beheading, inversion, recovery of
the production matrix, column rescaling, Hankel determinants, and
entrywise products.

Everything is exact; entries are ring scalars and all divisions either
stay in the ring or raise.
"""

from __future__ import annotations

from .ring import exact_div, field_div, is_scalar

__all__ = [
    "Triangle",
    "ProductionMatrix",
    "generate",
    "behead",
    "invert",
    "mul",
    "production_of",
    "rescale_columns",
    "hankel_det",
    "hankel_transform",
    "hadamard",
]


def _check_entries(rows):
    for r in rows:
        for v in r:
            if not is_scalar(v):
                raise TypeError(f"matrix entry is not a ring scalar: {v!r}")


class Triangle:
    """Lower-triangular matrix; row i stores entries for columns 0..i."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rs = tuple(tuple(r) for r in rows)
        if not rs:
            raise ValueError("empty triangle")
        for i, r in enumerate(rs):
            if len(r) != i + 1:
                raise ValueError(f"row {i} must have {i + 1} entries, got {len(r)}")
        _check_entries(rs)
        self.rows = rs

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i, j):
        """Entry at (i, j); zero above the diagonal."""
        if j > i:
            return 0
        return self.rows[i][j]

    @property
    def unit_diagonal(self) -> bool:
        return all(r[i] == 1 for i, r in enumerate(self.rows))

    def column(self, k):
        """Column k padded to full height with structural zeros."""
        return tuple(self.entry(i, k) for i in range(self.size))

    def map_entries(self, fn) -> "Triangle":
        return Triangle([[fn(v) for v in r] for r in self.rows])

    @staticmethod
    def identity(n) -> "Triangle":
        return Triangle([[0] * i + [1] for i in range(n)])

    def __eq__(self, other):
        if isinstance(other, Triangle):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Triangle({[list(r) for r in self.rows]!r})"


class ProductionMatrix:
    """Almost-lower-Hessenberg matrix; row i stores columns 0..i+1."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rs = tuple(tuple(r) for r in rows)
        if not rs:
            raise ValueError("empty production matrix")
        for i, r in enumerate(rs):
            if len(r) != i + 2:
                raise ValueError(f"row {i} must have {i + 2} entries, got {len(r)}")
        _check_entries(rs)
        self.rows = rs

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i, j):
        """Entry at (i, j); zero above the superdiagonal."""
        if j > i + 1:
            return 0
        return self.rows[i][j]

    @property
    def superdiagonal(self):
        return tuple(r[i + 1] for i, r in enumerate(self.rows))

    def map_entries(self, fn) -> "ProductionMatrix":
        return ProductionMatrix([[fn(v) for v in r] for r in self.rows])

    def __eq__(self, other):
        if isinstance(other, ProductionMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ProductionMatrix({[list(r) for r in self.rows]!r})"


def generate(P: ProductionMatrix, n: int) -> Triangle:
    """Triangle whose row 0 is (1, 0, ...) and whose row r+1 is row r
    times P.  Needs at least n-1 production rows."""
    if n < 1:
        raise ValueError("need at least one row")
    if P.size < n - 1:
        raise ValueError(f"production matrix has {P.size} rows, need {n - 1}")
    rows = [[1]]
    for r in range(n - 1):
        prev = rows[r]
        nxt = []
        for j in range(r + 2):
            s = 0
            for t in range(max(0, j - 1), r + 1):
                s = s + prev[t] * P.rows[t][j]
            nxt.append(s)
        rows.append(nxt)
    return Triangle(rows)


def behead(x) -> ProductionMatrix:
    """Drop the first row.

    Beheading a lower triangle yields exactly the almost-Hessenberg
    shape.  A production-matrix input is accepted only when no nonzero
    entry would land above the superdiagonal.
    """
    rows = x.rows
    if len(rows) < 2:
        raise ValueError("need at least two rows to behead")
    if isinstance(x, Triangle):
        return ProductionMatrix(rows[1:])
    out = []
    for i, r in enumerate(rows[1:]):
        if any(v != 0 for v in r[i + 2 :]):
            raise ValueError("beheading would move a nonzero entry above the superdiagonal")
        out.append(r[: i + 2])
    return ProductionMatrix(out)


def invert(T: Triangle) -> Triangle:
    """Inverse triangle by forward substitution.

    A unit diagonal keeps every entry in the ring of T; other nonzero
    diagonals lift to the fraction field.  A zero diagonal entry raises.
    """
    n = T.size
    diag_inv = []
    for i in range(n):
        d = T.rows[i][i]
        if d == 0:
            raise ZeroDivisionError(f"zero diagonal entry at row {i}")
        diag_inv.append(1 if d == 1 else (-1 if d == -1 else field_div(1, d)))
    rows = [[0] * (i + 1) for i in range(n)]
    for i in range(n):
        rows[i][i] = diag_inv[i]
        for j in range(i - 1, -1, -1):
            s = 0
            for t in range(j, i):
                s = s + T.rows[i][t] * rows[t][j]
            rows[i][j] = -(diag_inv[i] * s) if s != 0 else 0
    return Triangle(rows)


def mul(A: Triangle, B: Triangle) -> Triangle:
    """Matrix product of two triangles of the same size."""
    if A.size != B.size:
        raise ValueError("size mismatch")
    n = A.size
    rows = []
    for i in range(n):
        row = []
        for j in range(i + 1):
            s = 0
            for t in range(j, i + 1):
                s = s + A.rows[i][t] * B.rows[t][j]
            row.append(s)
        rows.append(row)
    return Triangle(rows)


def production_of(T: Triangle) -> ProductionMatrix:
    """The unique production matrix that generates T.

    Equals the inverse of T without its last row, applied to T without
    its first row; returns size-1 production rows.
    """
    n = T.size
    if n < 2:
        raise ValueError("need at least two rows")
    top_inv = invert(Triangle(T.rows[: n - 1]))
    out = []
    for i in range(n - 1):
        row = []
        for j in range(i + 2):
            s = 0
            for t in range(max(0, j - 1), i + 1):
                if j <= t + 1:
                    s = s + top_inv.rows[i][t] * T.rows[t + 1][j]
            row.append(s)
        out.append(row)
    return ProductionMatrix(out)


def rescale_columns(T: Triangle, scale, divide: bool = False) -> Triangle:
    """Scale column k of T by scale[k], or divide exactly when divide is
    set.  Non-divisibility raises ExactDivisionError."""
    if len(scale) < T.size:
        raise ValueError("need a scale factor for every column")
    for v in scale[: T.size]:
        if not is_scalar(v):
            raise TypeError(f"scale factor is not a ring scalar: {v!r}")
        if v == 0:
            raise ValueError("zero scale factor")
    rows = []
    for r in T.rows:
        if divide:
            rows.append([exact_div(v, scale[j]) for j, v in enumerate(r)])
        else:
            rows.append([v * scale[j] for j, v in enumerate(r)])
    return Triangle(rows)


def _bareiss_det(m):
    """Fraction-free determinant of a square matrix given as lists; every
    interior division is exact in the entries' ring."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = 0
        prev = m[k][k]
    v = m[n - 1][n - 1]
    return -v if sign < 0 else v


def hankel_det(mu, n: int):
    """Determinant of the (n+1) x (n+1) matrix with entry (i, j) equal to
    mu[i + j]."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if len(mu) < 2 * n + 1:
        raise ValueError(f"need {2 * n + 1} moments for order {n}, got {len(mu)}")
    m = [[mu[i + j] for j in range(n + 1)] for i in range(n + 1)]
    _check_entries(m)
    return _bareiss_det(m)


def hankel_transform(mu, count: int):
    """First ``count`` Hankel determinants of a moment list."""
    if count < 1:
        raise ValueError("count must be positive")
    if len(mu) < 2 * (count - 1) + 1:
        raise ValueError(f"need {2 * (count - 1) + 1} moments, got {len(mu)}")
    return [hankel_det(mu, k) for k in range(count)]


def hadamard(A: Triangle, B: Triangle) -> Triangle:
    """Entrywise product of two triangles of the same size."""
    if A.size != B.size:
        raise ValueError("size mismatch")
    return Triangle(
        [[a * b for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)]
    )
