"""Exact scalar arithmetic: integers, rationals, integer polynomials in q,
and quotients of such polynomials.

A scalar is one of four types: plain ``int``, ``fractions.Fraction``,
``QPoly``, ``QRat``.  Values always live in the simplest type that can
hold them exactly: constant polynomials demote to int, quotients reduce
and demote when the denominator cancels.  This keeps equality structural
and renderings canonical.  No floating point is accepted anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "ExactDivisionError",
    "ScalarParseError",
    "QPoly",
    "QRat",
    "q",
    "is_scalar",
    "add",
    "sub",
    "mul",
    "exact_div",
    "field_div",
    "eval_q",
    "render",
    "parse_scalar",
]


class ExactDivisionError(ArithmeticError):
    """exact_div was asked for a quotient that does not exist in the ring."""


class ScalarParseError(ValueError):
    """Text is not a valid scalar; ``offset`` points at the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"offset {offset}: {message}")
        self.reason = message
        self.offset = offset


def _strip(coeffs):
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _check_int_coeffs(cs):
    for c in cs:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError("coefficients must be plain ints")


class QPoly:
    """Polynomial in q with int coefficients, stored lowest degree first.

    Instances always have degree >= 1; constant values belong to int.
    Use ``QPoly.make`` to build a value that might turn out constant.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = _strip(coeffs)
        _check_int_coeffs(cs)
        if len(cs) < 2:
            raise ValueError("constant value; use QPoly.make")
        self.coeffs = tuple(cs)

    @staticmethod
    def make(coeffs):
        """Canonical int-or-QPoly from a coefficient sequence."""
        cs = _strip(coeffs)
        _check_int_coeffs(cs)
        if not cs:
            return 0
        if len(cs) == 1:
            return cs[0]
        p = object.__new__(QPoly)
        p.coeffs = tuple(cs)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            cs = list(self.coeffs)
            cs[0] += other
            return QPoly.make(cs)
        if isinstance(other, QPoly):
            a, b = self.coeffs, other.coeffs
            n = max(len(a), len(b))
            return QPoly.make(
                [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
            )
        if isinstance(other, Fraction):
            return QRat.make(self * other.denominator + other.numerator, other.denominator)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, QPoly, Fraction)) and not isinstance(other, bool):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, QPoly, Fraction)) and not isinstance(other, bool):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return QPoly.make([c * other for c in self.coeffs])
        if isinstance(other, QPoly):
            a, b = self.coeffs, other.coeffs
            out = [0] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] += ca * cb
            return QPoly.make(out)
        if isinstance(other, Fraction):
            return QRat.make(self * other.numerator, other.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        r = 1
        b = self
        while n:
            if n & 1:
                r = b * r
            b = b * b
            n >>= 1
        return r

    def __truediv__(self, other):
        if is_scalar(other):
            return QRat.make(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_scalar(other):
            return QRat.make(other, self)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(("QPoly",) + self.coeffs)

    def __bool__(self):
        return True

    def __str__(self):
        return _poly_text(self.coeffs)

    def __repr__(self):
        return f"QPoly({str(self)!r})"


q = QPoly((0, 1))


def _zq_coeffs(x):
    return (x,) if isinstance(x, int) else x.coeffs


def _content(cs):
    g = 0
    for c in cs:
        g = math.gcd(g, abs(c))
    return g


def _frac_mod(a, b):
    """Remainder of a by b over the rationals (coefficient lists)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        f = a[-1] / lb
        base = len(a) - 1 - db
        for j in range(db + 1):
            a[base + j] -= f * b[j]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _zq_gcd(x, y):
    """gcd in the polynomial ring, normalized to positive leading coefficient."""
    xs, ys = _strip(_zq_coeffs(x)), _strip(_zq_coeffs(y))
    if not xs and not ys:
        raise ZeroDivisionError("gcd(0, 0)")
    if not xs or not ys:
        zs = xs or ys
        if zs[-1] < 0:
            zs = [-c for c in zs]
        return QPoly.make(zs)
    cx, cy = _content(xs), _content(ys)
    a = [Fraction(c, cx) for c in xs]
    b = [Fraction(c, cy) for c in ys]
    while b:
        a, b = b, _frac_mod(a, b)
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = _content(ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    cg = math.gcd(cx, cy)
    return QPoly.make([c * cg for c in ints])


def _zq_exact_div(x, y):
    """Exact division in the polynomial ring; raises when not divisible."""
    xs = list(_zq_coeffs(x))
    ys = _strip(_zq_coeffs(y))
    if not any(xs):
        return 0
    if len(_strip(xs)) < len(ys):
        raise ExactDivisionError(f"{render(x)} not divisible by {render(y)}")
    xs = _strip(xs)
    dy = len(ys) - 1
    out = [0] * (len(xs) - dy)
    for k in range(len(out) - 1, -1, -1):
        c = xs[k + dy]
        quot, rem = divmod(c, ys[-1])
        if rem:
            raise ExactDivisionError(f"{render(x)} not divisible by {render(y)}")
        out[k] = quot
        for j, yc in enumerate(ys):
            xs[k + j] -= quot * yc
    if any(xs):
        raise ExactDivisionError(f"{render(x)} not divisible by {render(y)}")
    return QPoly.make(out)


def _as_zq_pair(x):
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return (x, 1)
    if isinstance(x, Fraction):
        return (x.numerator, x.denominator)
    if isinstance(x, QPoly):
        return (x, 1)
    if isinstance(x, QRat):
        return (x.num, x.den)
    return None


class QRat:
    """Reduced quotient of integer polynomials in q.

    Invariants: nonzero denominator with positive leading coefficient,
    gcd(num, den) = 1, and the value does not fit a simpler type (those
    demote through ``QRat.make``).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        v = QRat.make(num, den)
        if not isinstance(v, QRat):
            raise ValueError("value demotes to a simpler type; use QRat.make")
        self.num = v.num
        self.den = v.den

    @staticmethod
    def make(num, den=1):
        """Exact quotient of two scalars, demoted to the simplest type."""
        p1 = _as_zq_pair(num)
        p2 = _as_zq_pair(den)
        if p1 is None or p2 is None:
            raise TypeError(f"not a scalar: {num!r} / {den!r}")
        n = p1[0] * p2[1]
        d = p1[1] * p2[0]
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if n == 0:
            return 0
        g = _zq_gcd(n, d)
        n = _zq_exact_div(n, g)
        d = _zq_exact_div(d, g)
        if _zq_coeffs(d)[-1] < 0:
            n, d = -n, -d
        if d == 1:
            return n
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        r = object.__new__(QRat)
        r.num = n
        r.den = d
        return r

    def __add__(self, other):
        p = _as_zq_pair(other)
        if p is None:
            return NotImplemented
        return QRat.make(self.num * p[1] + p[0] * self.den, self.den * p[1])

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(QRat)
        r.num = -self.num
        r.den = self.den
        return r

    def __sub__(self, other):
        p = _as_zq_pair(other)
        if p is None:
            return NotImplemented
        return QRat.make(self.num * p[1] - p[0] * self.den, self.den * p[1])

    def __rsub__(self, other):
        p = _as_zq_pair(other)
        if p is None:
            return NotImplemented
        return QRat.make(p[0] * self.den - self.num * p[1], self.den * p[1])

    def __mul__(self, other):
        p = _as_zq_pair(other)
        if p is None:
            return NotImplemented
        return QRat.make(self.num * p[0], self.den * p[1])

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = _as_zq_pair(other)
        if p is None:
            return NotImplemented
        return QRat.make(self.num * p[1], self.den * p[0])

    def __rtruediv__(self, other):
        p = _as_zq_pair(other)
        if p is None:
            return NotImplemented
        return QRat.make(p[0] * self.den, p[1] * self.num)

    def __pow__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("exponent must be an int")
        if n < 0:
            return QRat.make(self.den ** (-n), self.num ** (-n))
        return QRat.make(self.num**n, self.den**n)

    def __eq__(self, other):
        p = _as_zq_pair(other)
        if p is None:
            return NotImplemented
        return self.num * p[1] == p[0] * self.den

    def __hash__(self):
        return hash(("QRat", _zq_coeffs(self.num), _zq_coeffs(self.den)))

    def __bool__(self):
        return True

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"QRat({render(self)!r})"


def is_scalar(x) -> bool:
    """True for the four exact scalar types; bools and floats are rejected."""
    return isinstance(x, (int, Fraction, QPoly, QRat)) and not isinstance(x, bool)


def _require_scalar(x):
    if not is_scalar(x):
        raise TypeError(f"incompatible ring value: {x!r}")


def add(x, y):
    _require_scalar(x)
    _require_scalar(y)
    return x + y


def sub(x, y):
    _require_scalar(x)
    _require_scalar(y)
    return x - y


def mul(x, y):
    _require_scalar(x)
    _require_scalar(y)
    return x * y


def field_div(x, y):
    """x / y in the smallest field containing the operands."""
    _require_scalar(x)
    _require_scalar(y)
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        if y == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(x) / Fraction(y)
    return QRat.make(x, y)


def exact_div(x, y):
    """x / y when the quotient exists in the operands' ring.

    Integer and polynomial operands never leave their ring: a pair that
    does not divide raises ExactDivisionError instead of producing a
    fraction.  Field operands (Fraction, QRat) divide freely.
    """
    _require_scalar(x)
    _require_scalar(y)
    if y == 0:
        raise ZeroDivisionError("exact_div by zero")
    if isinstance(x, (Fraction, QRat)) or isinstance(y, (Fraction, QRat)):
        return field_div(x, y)
    if isinstance(x, int) and isinstance(y, int):
        quot, rem = divmod(x, y)
        if rem:
            raise ExactDivisionError(f"{x} not divisible by {y}")
        return quot
    return _zq_exact_div(x, y)


def eval_q(p, v):
    """Value of a scalar at q = v, for a plain int v.

    Constants pass through unchanged.  A quotient whose denominator
    vanishes at v raises ZeroDivisionError.
    """
    if not isinstance(v, int) or isinstance(v, bool):
        raise TypeError("evaluation point must be a plain int")
    _require_scalar(p)
    if isinstance(p, (int, Fraction)):
        return p
    if isinstance(p, QPoly):
        acc = 0
        for c in reversed(p.coeffs):
            acc = acc * v + c
        return acc
    nv = eval_q(p.num, v)
    dv = eval_q(p.den, v)
    if dv == 0:
        raise ZeroDivisionError(f"denominator vanishes at q={v}")
    f = Fraction(nv, dv)
    return f.numerator if f.denominator == 1 else f


def _poly_text(cs, var: str = "q"):
    parts = []
    for k, c in enumerate(cs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        parts.append((c < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _side_text(z, var, is_den=False):
    s = str(z) if isinstance(z, int) else _poly_text(z.coeffs, var)
    # a '*' in the denominator would rebind under left association
    if " " in s or (is_den and "*" in s):
        return f"({s})"
    return s


def render(x, var: str = "q") -> str:
    """Canonical text form: base-10 ints, p/r rationals, ascending
    polynomials like '1 + 2*q + q^2', quotients with parentheses around
    multi-term sides."""
    _require_scalar(x)
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, QPoly):
        return _poly_text(x.coeffs, var)
    return f"{_side_text(x.num, var)}/{_side_text(x.den, var, is_den=True)}"


def _tokenize(text, var):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch == var:
            toks.append(("var", var, i))
            i += 1
            continue
        if ch in "+-*/^()":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ScalarParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


def parse_scalar(text: str, var: str = "q"):
    """Parse a canonical rendering back to a scalar.

    Accepts sums of terms with optional leading minus, integer
    coefficients and exponents, parenthesized groups, and quotients.
    round-trips with ``render``.  Errors carry the byte offset.
    """
    toks = _tokenize(text, var)
    pos = [0]

    def peek():
        return toks[pos[0]]

    def take():
        t = toks[pos[0]]
        pos[0] += 1
        return t

    def expect(kind):
        t = take()
        if t[0] != kind:
            raise ScalarParseError(f"expected {kind!r}", t[2])
        return t

    def atom():
        t = take()
        if t[0] == "int":
            return t[1]
        if t[0] == "var":
            return QPoly((0, 1))
        if t[0] == "(":
            v = sumexpr()
            expect(")")
            return v
        raise ScalarParseError("expected a value", t[2])

    def factor():
        neg = False
        while peek()[0] == "-":
            take()
            neg = not neg
        v = atom()
        if peek()[0] == "^":
            take()
            e = expect("int")[1]
            v = v**e
        return -v if neg else v

    def term():
        v = factor()
        while peek()[0] in ("*", "/"):
            op = take()
            w = factor()
            if op[0] == "*":
                v = v * w
            else:
                try:
                    v = field_div(v, w)
                except ZeroDivisionError:
                    raise ScalarParseError("division by zero", op[2]) from None
        return v

    def sumexpr():
        v = term()
        while peek()[0] in ("+", "-"):
            op = take()[0]
            w = term()
            v = v + w if op == "+" else v - w
        return v

    v = sumexpr()
    t = peek()
    if t[0] != "end":
        raise ScalarParseError("unexpected trailing input", t[2])
    return v
