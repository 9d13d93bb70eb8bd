"""Exact arithmetic in one variable ``t`` over the rationals.

Polynomials, rational functions expandable at ``t = 0`` (generating series),
truncated power-series expansion, and small dense linear algebra over ``Q``.
Everything is immutable; rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

DEFAULT_ORDER = 40

Scalar = Union[int, Fraction]


class DivisionByZeroConstantError(ZeroDivisionError):
    """A denominator vanishes at ``t = 0`` (not expandable as a power series)."""


class SingularMatrixError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _scaled(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Integer numerators over a common denominator."""
    d = 1
    for c in cs:
        if c.denominator != 1:
            d = d * c.denominator // math.gcd(d, c.denominator)
    if d == 1:
        return [int(c) for c in cs], 1
    return [c.numerator * (d // c.denominator) for c in cs], d


class Polynomial:
    """Dense polynomial in ``t`` with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        xa, da = _scaled(self.coeffs)
        xb, db = _scaled(other.coeffs)
        out = [0] * (len(xa) + len(xb) - 1)
        for i, a in enumerate(xa):
            if a:
                for j, b in enumerate(xb):
                    out[i + j] += a * b
        d = da * db
        return Polynomial(Fraction(c, d) if d != 1 else c for c in out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dq = other.degree
        lead = other.coeffs[-1]
        if lead == 1 and all(c.denominator == 1 for c in other.coeffs):
            # integral monic divisor: work with integer numerators
            xs, d = _scaled(self.coeffs)
            ys = [int(c) for c in other.coeffs]
            iq = [0] * max(len(xs) - dq, 0)
            for i in range(len(xs) - 1, dq - 1, -1):
                c = xs[i]
                if c:
                    iq[i - dq] = c
                    for j, b in enumerate(ys):
                        xs[i - dq + j] -= c * b
            return (Polynomial(Fraction(c, d) for c in iq),
                    Polynomial(Fraction(c, d) for c in xs[:dq]) if dq > 0 else Polynomial())
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else [])

    def valuation(self) -> int:
        """Lowest degree with a non-zero coefficient (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Polynomial":
        return self * (1 / self.coeffs[-1])

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)})"


def _primitive(cs: Sequence[Scalar]) -> list[int]:
    """Integer multiple of ``cs`` with content 1 (trailing zeros dropped)."""
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    den = 1
    for c in cs:
        if isinstance(c, Fraction) and c.denominator != 1:
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in cs] if den != 1 else [int(c) for c in cs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd, by a primitive pseudo-remainder sequence over ``Z``."""
    x, y = _primitive(a.coeffs), _primitive(b.coeffs)
    if len(x) < len(y):
        x, y = y, x
    while y:
        # pseudo-remainder of x by y, kept primitive to stop coefficient growth
        r = list(x)
        ly = y[-1]
        dy = len(y) - 1
        while len(r) - 1 >= dy and r:
            lr = r[-1]
            shift = len(r) - 1 - dy
            if ly != 1:
                r = [c * ly for c in r]
            for j, c in enumerate(y):
                r[shift + j] -= lr * c
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        x, y = y, _primitive(r)
    if not x:
        return Polynomial()
    return Polynomial(x).monic()


def one_minus_t(a: int) -> Polynomial:
    return Polynomial.constant(1) - Polynomial.monomial(a)


class RationalFunction:
    """Reduced quotient ``num/den`` with ``den(0) == 1``.

    Represents the power series of the quotient at ``t = 0``.
    """

    __slots__ = ("num", "den", "hint")

    def __init__(self, num: Polynomial, den: Polynomial | None = None,
                 hint: tuple[int, ...] | None = None):
        if den is None:
            den = Polynomial.constant(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if not num.is_zero() else den
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
        c0 = den[0]
        if c0 == 0:
            raise DivisionByZeroConstantError(
                "denominator vanishes at t=0; not a power series")
        self.num = num * (1 / c0)
        self.den = den * (1 / c0)
        # preferred display denominator prod(1 - t^a); ignored by equality
        self.hint = tuple(sorted(hint)) if hint and not num.is_zero() else ()

    @classmethod
    def from_int(cls, c: Scalar) -> "RationalFunction":
        return cls(Polynomial.constant(c))

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalFunction":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        return parse_rf(text)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den,
                                _hint_union(self.hint, other.hint))

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, self.hint)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _as_rf(other) - self

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.num * other, self.den, self.hint)
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den,
                                self.hint + other.hint)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero series")
        hint = self.hint if other.num.degree <= 0 else None
        if other.num.degree > 0:
            exps = one_minus_factorization(other.num)
            if exps is not None:
                hint = self.hint + tuple(exps)
        return RationalFunction(self.num * other.den, self.den * other.num, hint)

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return RationalFunction.from_int(1) / (self ** -e)
        return RationalFunction(self.num ** e, self.den ** e, self.hint * e)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = _as_rf(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return rf_equal(self, other)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def expand(self, order: int = DEFAULT_ORDER) -> list[Fraction]:
        return rf_expand(self, order).coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.expand(k)[k]

    def __str__(self) -> str:
        return format_rf(self)

    def __repr__(self) -> str:
        return f"RationalFunction({format_rf(self)})"


def _hint_union(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = list(a)
    for x in set(b):
        need = b.count(x) - out.count(x)
        out.extend([x] * max(need, 0))
    return tuple(out)


def one_minus_factorization(p: Polynomial) -> list[int] | None:
    """Exponents ``a_i`` with ``p == c * prod(1 - t^a_i)``, or None."""
    if p.is_zero() or p[0] == 0:
        return None
    rest = p * (1 / p[0])
    exps = []
    while rest.degree > 0:
        a = next(i for i in range(1, len(rest.coeffs)) if rest[i] != 0)
        q, r = rest.divmod(one_minus_t(a))
        if not r.is_zero():
            return None
        exps.append(a)
        rest = q
    return exps


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    if isinstance(x, (int, Fraction)):
        return RationalFunction.from_int(x)
    raise TypeError(f"cannot interpret {x!r} as a rational function")


def _check_valid(f: RationalFunction) -> None:
    if f.den[0] == 0:
        raise DivisionByZeroConstantError("denominator vanishes at t=0")


def rf_add(a: RationalFunction, b) -> RationalFunction:
    _check_valid(a)
    return a + b


def rf_sub(a: RationalFunction, b) -> RationalFunction:
    _check_valid(a)
    return a - b


def rf_mul(a: RationalFunction, b) -> RationalFunction:
    _check_valid(a)
    return a * b


def rf_scale(a: RationalFunction, c: Scalar) -> RationalFunction:
    _check_valid(a)
    return a * _frac(c)


def rf_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """Exact equality by cross-multiplication."""
    return a.num * b.den == b.num * a.den


class SeriesCoeffs:
    """Taylor coefficients ``c[0..order]`` of a generating series."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Scalar]):
        self.coeffs = [_frac(c) for c in coeffs]
        self.order = len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, SeriesCoeffs):
            return self.coeffs == other.coeffs
        return list(self.coeffs) == list(other)

    def __repr__(self) -> str:
        return f"SeriesCoeffs({[str(c) for c in self.coeffs]})"


def rf_expand(f: RationalFunction, order: int = DEFAULT_ORDER) -> SeriesCoeffs:
    """Expand ``f`` at ``t = 0`` through ``t**order`` by exact long division."""
    _check_valid(f)
    d0 = f.den[0]
    out: list[Fraction] = []
    for k in range(order + 1):
        acc = f.num[k]
        for j in range(1, min(k, f.den.degree) + 1):
            acc -= f.den[j] * out[k - j]
        out.append(acc / d0)
    return SeriesCoeffs(out)


# --- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\*\*|[-+*/^()]))")


def parse_rf(text: str) -> RationalFunction:
    """Parse an expression in ``t`` such as ``"t^8(1+t^2)/((1-t^4)(1-t^6))"``.

    Supports ``+ - * / ^`` (or ``**``), parentheses, integer literals and
    implicit multiplication.
    """
    tokens: list[str] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected input at {text[pos:]!r}")
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    tokens = ["^" if tok == "**" else tok for tok in tokens]
    parser = _Parser(tokens)
    value = parser.expr()
    if parser.i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return value


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> RationalFunction:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        value = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.power()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                value = value * self.power()
            elif tok == "/":
                self.take()
                value = value / self.power()
            elif tok is not None and (tok == "(" or tok == "t" or tok.isdigit()):
                value = value * self.power()
            else:
                return value

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not exp.isdigit():
                raise ValueError("exponents must be non-negative integers")
            return base ** int(exp)
        return base

    def atom(self) -> RationalFunction:
        tok = self.take()
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok == "t":
            return RationalFunction(Polynomial.monomial(1))
        if tok.isdigit():
            return RationalFunction.from_int(int(tok))
        raise ValueError(f"unexpected token {tok!r}")


# --- canonical printing ----------------------------------------------------

def format_rational(x: Scalar) -> str:
    x = _frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_poly(p: Polynomial, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}{mono}"
        parts.append(("-" if c < 0 else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def cyclotomic(n: int) -> Polynomial:
    """The ``n``-th cyclotomic polynomial."""
    p = Polynomial.monomial(n) - Polynomial.constant(1)
    for d in range(1, n):
        if n % d == 0:
            p = p.divmod(cyclotomic(d))[0]
    return p


def cyclotomic_factors(p: Polynomial) -> dict[int, int] | None:
    """Multiplicities of cyclotomic factors of ``p``, or None if ``p`` has others."""
    rest = p
    mult: dict[int, int] = {}
    n = 1
    # every cyclotomic factor of rest has phi(n) <= deg(rest), so n <= 2*deg^2 suffices
    while rest.degree > 0 and n <= 2 * max(rest.degree, 1) ** 2 + 2:
        phi = cyclotomic(n)
        q, r = rest.divmod(phi)
        if r.is_zero():
            mult[n] = mult.get(n, 0) + 1
            rest = q
            continue
        n += 1
    if rest.degree > 0:
        return None
    return mult


def denominator_exponents(den: Polynomial) -> list[int] | None:
    """Exponents ``a_i`` with ``den`` dividing ``prod(1 - t^a_i)``, greedily minimal."""
    mult = cyclotomic_factors(den)
    if mult is None:
        return None
    exps = []
    while mult:
        n = max(mult)
        exps.append(n)
        for d in list(mult):
            if n % d == 0:
                mult[d] -= 1
                if mult[d] == 0:
                    del mult[d]
    return sorted(exps)


def _cover_cost(f: RationalFunction, exps: Sequence[int]) -> tuple[int, int]:
    """Sparsity of the numerator over prod(1 - t^a), then denominator degree."""
    full = Polynomial.constant(1)
    for a in exps:
        full = full * one_minus_t(a)
    num = f.num * full.divmod(f.den)[0]
    return sum(1 for c in num.coeffs if c), sum(exps)


def _display_exponents(f: RationalFunction) -> list[int] | None:
    """Denominator exponents for printing: the sparsest numerator among a few covers."""
    if f.den.degree <= 0:
        return []
    candidates: list[list[int]] = []
    if f.hint:
        full = Polynomial.constant(1)
        for a in f.hint:
            full = full * one_minus_t(a)
        if full.divmod(f.den)[1].is_zero():
            exps = sorted(f.hint, reverse=True)
            # drop surplus factors, smallest first, while the cover survives
            for a in sorted(set(exps)):
                while a in exps:
                    trial = list(exps)
                    trial.remove(a)
                    prod = Polynomial.constant(1)
                    for b in trial:
                        prod = prod * one_minus_t(b)
                    if not prod.divmod(f.den)[1].is_zero():
                        break
                    exps = trial
            candidates.append(sorted(exps))
    greedy = denominator_exponents(f.den)
    if greedy is not None and len(greedy) <= 8:
        # doubling some exponents often uncovers the familiar factored form
        for mask in range(1 << len(greedy)):
            candidates.append(sorted(a * 2 if mask >> i & 1 else a
                                     for i, a in enumerate(greedy)))
    elif greedy is not None:
        candidates.append(greedy)
    if not candidates:
        return None
    return min(candidates, key=lambda e: _cover_cost(f, e))


def _content(p: Polynomial) -> Fraction:
    from math import gcd
    if any(c.denominator != 1 for c in p.coeffs):
        return Fraction(1)
    g = 0
    for c in p.coeffs:
        g = gcd(g, int(c))
    return Fraction(g or 1)


def format_rf(f: RationalFunction) -> str:
    """Canonical text form, e.g. ``t^8 / ((1-t^4)(1-t^6))``."""
    exps = _display_exponents(f)
    if exps is None:
        num, den_text = f.num, f"({format_poly(f.den)})"
    else:
        full = Polynomial.constant(1)
        for a in exps:
            full = full * one_minus_t(a)
        num = f.num * full.divmod(f.den)[0]
        groups: dict[int, int] = {}
        for a in exps:
            groups[a] = groups.get(a, 0) + 1
        den_text = "".join(
            f"(1-t{'' if a == 1 else '^' + str(a)})" + (f"^{e}" if e > 1 else "")
            for a, e in sorted(groups.items()))
        if len(groups) > 1:
            den_text = f"({den_text})"
    if num.is_zero():
        return "0"
    v = num.valuation()
    rest = Polynomial(num.coeffs[v:])
    mono = "" if v == 0 else ("t" if v == 1 else f"t^{v}")
    if rest.degree == 0:
        c = rest[0]
        if not mono:
            num_text = format_rational(c)
        else:
            num_text = mono if c == 1 else ("-" + mono if c == -1 else f"{format_rational(c)}{mono}")
    else:
        c = _content(rest)
        prefix = (format_rational(c) if c != 1 else "") + mono
        rest = rest * (1 / c)
        num_text = f"{prefix}({format_poly(rest)})"
    if not den_text:
        return num_text
    return f"{num_text} / {den_text}"


# --- linear algebra over Q ------------------------------------------------

def _to_frac_matrix(A: Sequence[Sequence[Scalar]]) -> list[list[Fraction]]:
    return [[_frac(x) for x in row] for row in A]


def det(A: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant by Gaussian elimination over ``Q``."""
    M = _to_frac_matrix(A)
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionMismatchError("determinant needs a square matrix")
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            result = -result
        p = M[col][col]
        result *= p
        for r in range(col + 1, n):
            f = M[r][col] / p
            if f:
                for c in range(col, n):
                    M[r][c] -= f * M[col][c]
    return result


def is_invertible(A: Sequence[Sequence[Scalar]]) -> bool:
    return len(A) > 0 and all(len(r) == len(A) for r in A) and det(A) != 0


def rank(A: Sequence[Sequence[Scalar]]) -> int:
    """Rank over ``Q`` of a (possibly non-square) matrix."""
    M = _to_frac_matrix(A)
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            f = M[i][c] / M[r][c]
            if f:
                for j in range(c, cols):
                    M[i][j] -= f * M[r][j]
        r += 1
        if r == rows:
            break
    return r


def solve_linear(A: Sequence[Sequence[Scalar]], b: Sequence) -> list:
    """Solve ``A x = b`` exactly; ``b`` may hold rationals or rational functions.

    Plain Gauss-Jordan elimination with the first non-zero pivot in each column.
    """
    n = len(A)
    if any(len(row) != n for row in A):
        raise DimensionMismatchError("coefficient matrix must be square")
    if len(b) != n:
        raise DimensionMismatchError(f"right-hand side has length {len(b)}, expected {n}")
    M = _to_frac_matrix(A)
    rhs = [x if isinstance(x, RationalFunction) else _frac(x) for x in b]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        M[col], M[piv] = M[piv], M[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        rhs[col] = rhs[col] * (1 / p)
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
                rhs[r] = rhs[r] - rhs[col] * f
    return rhs


def matvec(A: Sequence[Sequence[Scalar]], x: Sequence) -> list:
    """``A @ x`` for a rational matrix and a vector of scalars or series."""
    if any(len(row) != len(x) for row in A):
        raise DimensionMismatchError("matrix/vector shapes differ")
    out = []
    for row in A:
        acc = RationalFunction.from_int(0) if any(
            isinstance(v, RationalFunction) for v in x) else Fraction(0)
        for a, v in zip(row, x):
            if a:
                acc = acc + v * _frac(a)
        out.append(acc)
    return out
