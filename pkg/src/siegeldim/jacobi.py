"""Jacobi forms by truncated Fourier expansion, and the weight 4 Klingen level 4 checks.

A Jacobi form of weight k and index m is stored as its coefficients c(n, r)
for 0 <= n <= nq and r^2 <= 4nm.  Fourier-Jacobi expansions of degree 2
forms are lists of such forms indexed by m.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt
from typing import Mapping, Sequence

from sympy import divisors, factorint
from sympy.functions.combinatorial.numbers import divisor_sigma, kronecker_symbol, mobius

from . import golden
from .exactmath import rank
from .report import Report

DEFAULT_NQ = 6
DEFAULT_FJ = 4


# --- Bernoulli numbers and Cohen's function ----------------------------------

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, j) * bernoulli(j) for j in range(n)) / Fraction(n + 1)


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    return sum(comb(n, j) * bernoulli(j) * x ** (n - j) for j in range(n + 1))


def zeta_neg(k: int) -> Fraction:
    """zeta(1 - k) for k >= 2."""
    return -bernoulli(k) / k


@lru_cache(maxsize=None)
def twisted_bernoulli(k: int, D: int) -> Fraction:
    """B_{k, chi_D} from the generating function of the Kronecker character."""
    f = abs(D)
    return Fraction(f) ** (k - 1) * sum(
        int(kronecker_symbol(D, a)) * bernoulli_poly(k, Fraction(a, f)) for a in range(1, f + 1))


def l_value(r: int, D: int) -> Fraction:
    """L(1 - r, chi_D)."""
    return -twisted_bernoulli(r, D) / r


def fundamental_split(N: int) -> tuple[int, int]:
    """(D, f) with N = D f^2 and D a fundamental discriminant (N = 0, 1 mod 4)."""
    if N == 0 or N % 4 in (2, 3):
        raise ValueError(f"{N} is not a discriminant")
    core = -1 if N < 0 else 1
    for p, e in factorint(abs(N)).items():
        if e % 2:
            core *= p
    D = core if core % 4 == 1 else 4 * core
    f2, rem = divmod(N, D)
    f = isqrt(f2)
    if rem or f * f != f2:
        raise ArithmeticError(f"could not split {N}")
    return D, f


@lru_cache(maxsize=None)
def cohen_H(r: int, n: int) -> Fraction:
    if r < 2 or n < 0:
        raise ValueError(f"H({r}, {n}) undefined: need r >= 2 and n >= 0")
    if n == 0:
        return zeta_neg(2 * r)
    N = (-1) ** r * n
    if N % 4 in (2, 3):
        return Fraction(0)
    D, f = fundamental_split(N)
    s = sum(int(mobius(d)) * int(kronecker_symbol(D, d)) * d ** (r - 1)
            * int(divisor_sigma(f // d, 2 * r - 1)) for d in divisors(f))
    return l_value(r, D) * s


# --- q-series and Jacobi forms --------------------------------------------------

@dataclass(frozen=True)
class QSeries:
    weight: int
    coeffs: tuple[Fraction, ...]

    @property
    def nq(self) -> int:
        return len(self.coeffs) - 1

    def as_jacobi(self) -> "JacobiFormFE":
        return JacobiFormFE(self.weight, 0, self.nq,
                            {(n, 0): c for n, c in enumerate(self.coeffs) if c})


def _r_bound(n: int, m: int) -> int:
    return isqrt(4 * n * m)


@dataclass(frozen=True)
class JacobiFormFE:
    weight: int
    index: int
    nq: int
    c: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __getitem__(self, nr: tuple[int, int]) -> Fraction:
        return self.c.get(nr, Fraction(0))

    def support(self):
        for n in range(self.nq + 1):
            b = _r_bound(n, self.index)
            for r in range(-b, b + 1):
                yield n, r

    def row(self, n: int) -> dict[int, Fraction]:
        b = _r_bound(n, self.index)
        return {r: self[n, r] for r in range(-b, b + 1)}

    def truncate(self, nq: int) -> "JacobiFormFE":
        if nq > self.nq:
            raise ValueError(f"cannot extend truncation from {self.nq} to {nq}")
        return JacobiFormFE(self.weight, self.index, nq,
                            {k: v for k, v in self.c.items() if k[0] <= nq})

    def scale(self, a) -> "JacobiFormFE":
        a = Fraction(a)
        return JacobiFormFE(self.weight, self.index, self.nq,
                            {k: v * a for k, v in self.c.items() if v * a})

    def __add__(self, other: "JacobiFormFE") -> "JacobiFormFE":
        if (self.weight, self.index) != (other.weight, other.index):
            raise ValueError("adding Jacobi forms of different weight or index")
        nq = min(self.nq, other.nq)
        keys = {k for k in (*self.c, *other.c) if k[0] <= nq}
        out = {k: self[k] + other[k] for k in keys}
        return JacobiFormFE(self.weight, self.index, nq, {k: v for k, v in out.items() if v})

    def __sub__(self, other: "JacobiFormFE") -> "JacobiFormFE":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return fe_mul(self, other)

    __rmul__ = __mul__

    def equals(self, other: "JacobiFormFE", nq: int | None = None) -> bool:
        nq = min(self.nq, other.nq) if nq is None else nq
        if self.index != other.index:
            return False
        return all(self[k] == other[k] for k in self.support() if k[0] <= nq) and \
            all(self[k] == other[k] for k in other.support() if k[0] <= nq)


def zero_form(weight: int, index: int, nq: int) -> JacobiFormFE:
    return JacobiFormFE(weight, index, nq, {})


def eisenstein_G(k: int, nq: int = DEFAULT_NQ) -> QSeries:
    if k < 4 or k % 2:
        raise ValueError(f"G_k needs even k >= 4, got {k}")
    return QSeries(k, (zeta_neg(k) / 2,)
                   + tuple(Fraction(int(divisor_sigma(n, k - 1))) for n in range(1, nq + 1)))


def jacobi_eisenstein_Ek1(k: int, nq: int = DEFAULT_NQ) -> JacobiFormFE:
    if k < 4 or k % 2:
        raise ValueError(f"E_(k,1) needs even k >= 4, got {k}")
    h0 = cohen_H(k - 1, 0)
    c = {}
    for n in range(nq + 1):
        b = _r_bound(n, 1)
        for r in range(-b, b + 1):
            v = cohen_H(k - 1, 4 * n - r * r) / h0
            if v:
                c[n, r] = v
    return JacobiFormFE(k, 1, nq, c)


# --- Hecke-type operators ------------------------------------------------------

def apply_V(phi: JacobiFormFE, ell: int) -> JacobiFormFE:
    """Index-raising V_ell: c'(n, r) = sum_{d | (n, r, ell)} d^(k-1) c(n ell / d^2, r / d)."""
    if ell < 1:
        raise ValueError("V_ell needs ell >= 1")
    k, m = phi.weight, phi.index
    nq = phi.nq // ell
    out = {}
    for n in range(nq + 1):
        b = _r_bound(n, m * ell)
        for r in range(-b, b + 1):
            g = gcd(gcd(n, r), ell)
            v = sum(Fraction(d) ** (k - 1) * phi[n * ell // (d * d), r // d]
                    for d in divisors(g))
            if v:
                out[n, r] = v
    return JacobiFormFE(k, m * ell, nq, out)


def apply_V2_closed(phi: JacobiFormFE) -> JacobiFormFE:
    """V_2 as 2^(k-1) phi(2 tau, 2 z) + (phi(tau/2, z) + phi((tau+1)/2, z)) / 2."""
    k = phi.weight
    nq = phi.nq // 2
    out: dict[tuple[int, int], Fraction] = {}
    # the average over tau/2 and (tau+1)/2 keeps the even powers of q^(1/2)
    for (n, r), v in phi.c.items():
        if n % 2 == 0 and n // 2 <= nq:
            out[n // 2, r] = out.get((n // 2, r), Fraction(0)) + v
    for (n, r), v in phi.c.items():
        if 2 * n <= nq:
            key = (2 * n, 2 * r)
            out[key] = out.get(key, Fraction(0)) + 2 ** (k - 1) * v
    return JacobiFormFE(k, 2 * phi.index, nq, {a: b for a, b in out.items() if b})


def apply_U(phi: JacobiFormFE, ell: int) -> JacobiFormFE:
    """U_ell: ell^k phi(tau, ell z)."""
    if ell < 1:
        raise ValueError("U_ell needs ell >= 1")
    scale = Fraction(ell) ** phi.weight
    return JacobiFormFE(phi.weight, phi.index * ell * ell, phi.nq,
                        {(n, r * ell): v * scale for (n, r), v in phi.c.items()})


# --- products, quotients, rank ------------------------------------------------

def fe_mul(a, b):
    """Product of two Jacobi forms, or of two Fourier-Jacobi expansions."""
    if isinstance(a, FJExpansion) and isinstance(b, FJExpansion):
        top = min(a.max_index, b.max_index)
        entries = []
        for m in range(top + 1):
            acc = None
            for i in range(m + 1):
                term = fe_mul(a.entries[i], b.entries[m - i])
                acc = term if acc is None else acc + term
            entries.append(acc)
        return FJExpansion(a.weight + b.weight, tuple(entries))
    if isinstance(a, QSeries):
        a = a.as_jacobi()
    if isinstance(b, QSeries):
        b = b.as_jacobi()
    nq = min(a.nq, b.nq)
    out: dict[tuple[int, int], Fraction] = {}
    for (n1, r1), v1 in a.c.items():
        if n1 > nq:
            continue
        for (n2, r2), v2 in b.c.items():
            if n1 + n2 <= nq:
                key = (n1 + n2, r1 + r2)
                out[key] = out.get(key, Fraction(0)) + v1 * v2
    return JacobiFormFE(a.weight + b.weight, a.index + b.index, nq,
                        {k: v for k, v in out.items() if v})


def fe_quotient_by_qseries(a: JacobiFormFE, u: QSeries) -> JacobiFormFE:
    """Formal a / u for a q-series u with non-zero constant term."""
    if u.coeffs[0] == 0:
        raise ZeroDivisionError("quotient by a q-series with zero constant term")
    nq = min(a.nq, u.nq)
    u0 = u.coeffs[0]
    out: dict[tuple[int, int], Fraction] = {}
    for n in range(nq + 1):
        rs = {r for (nn, r) in a.c if nn == n}
        for j in range(1, n + 1):
            rs |= {r for (nn, r) in out if nn == n - j}
        for r in sorted(rs):
            v = a[n, r] - sum(u.coeffs[j] * out.get((n - j, r), Fraction(0))
                              for j in range(1, n + 1))
            if v:
                out[n, r] = v / u0
    return JacobiFormFE(a.weight - u.weight, a.index, nq, out)


@dataclass(frozen=True)
class FJExpansion:
    weight: int
    entries: tuple[JacobiFormFE, ...]  # entry m has index m

    @property
    def max_index(self) -> int:
        return len(self.entries) - 1

    def __add__(self, other: "FJExpansion") -> "FJExpansion":
        top = min(self.max_index, other.max_index)
        return FJExpansion(self.weight,
                           tuple(self.entries[m] + other.entries[m] for m in range(top + 1)))

    def __sub__(self, other: "FJExpansion") -> "FJExpansion":
        return self + other.scale(-1)

    def scale(self, a) -> "FJExpansion":
        return FJExpansion(self.weight, tuple(e.scale(a) for e in self.entries))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return fe_mul(self, other)


def _flatten(form, depth_fj: int, nq: int) -> list[Fraction]:
    """Coefficients in the order (m, n, r) ascending; m is absent for a single Jacobi form."""
    if isinstance(form, JacobiFormFE):
        if form.nq < nq:
            raise ValueError(f"form truncated at q^{form.nq}, need q^{nq}")
        return [form[n, r] for n in range(nq + 1)
                for r in range(-_r_bound(n, form.index), _r_bound(n, form.index) + 1)]
    if form.max_index < depth_fj:
        raise ValueError(f"expansion known through index {form.max_index}, need {depth_fj}")
    vec: list[Fraction] = []
    for m in range(depth_fj + 1):
        e = form.entries[m]
        if e.nq < nq:
            raise ValueError(f"entry {m} truncated at q^{e.nq}, need q^{nq}")
        vec += [e[n, r] for n in range(nq + 1)
                for r in range(-_r_bound(n, m), _r_bound(n, m) + 1)]
    return vec


def fe_rank(forms: Sequence, depth_fj: int = DEFAULT_FJ, nq: int | None = None) -> int:
    if not forms:
        return 0
    kinds = {type(f) for f in forms}
    if len(kinds) != 1:
        raise ValueError("cannot mix Jacobi forms and Fourier-Jacobi expansions")
    if isinstance(forms[0], JacobiFormFE) and len({f.index for f in forms}) != 1:
        raise ValueError("Jacobi forms of different index")
    if nq is None:
        if isinstance(forms[0], JacobiFormFE):
            nq = min(f.nq for f in forms)
        else:
            nq = min(e.nq for f in forms for e in f.entries[:depth_fj + 1])
    return rank([_flatten(f, depth_fj, nq) for f in forms])


# --- Gritsenko lift and theta --------------------------------------------------

def gritsenko_lift(phi: JacobiFormFE, max_index: int = DEFAULT_FJ,
                   nq: int | None = None) -> FJExpansion:
    """Fourier-Jacobi expansion of Grit(phi) through index ``max_index``.

    For phi of index N the expansion lives in powers of xi^N: the entry at
    index N*j is phi|V_j and entries at indices prime to that pattern vanish.
    """
    N, k = phi.index, phi.weight
    if N < 1:
        raise ValueError("Gritsenko lift needs index >= 1")
    c00 = phi[0, 0]
    if c00 and (k < 4 or k % 2):
        raise ValueError("c(0,0) must vanish unless the weight is even and >= 4")
    top = max_index // N
    if nq is None:
        nq = phi.nq // max(top, 1)
    if top and phi.nq < nq * top:
        raise ValueError(f"need phi through q^{nq * top}, have q^{phi.nq}")
    head = eisenstein_G(k, nq).as_jacobi().scale(c00) if c00 else zero_form(k, 0, nq)
    entries = [head]
    for m in range(1, max_index + 1):
        if m % N:
            entries.append(zero_form(k, m, nq))
        else:
            entries.append(apply_V(phi.truncate(nq * (m // N)), m // N).truncate(nq))
    return FJExpansion(k, tuple(entries))


def theta8(nq: int = DEFAULT_NQ) -> JacobiFormFE:
    """Eighth power of the odd Jacobi theta function."""
    # exponents scaled: q by 8, zeta by 2, so theta has integral keys
    theta: dict[tuple[int, int], int] = {}
    n = 0
    while (2 * n + 1) ** 2 <= 8 * nq:
        for s in (n, -n - 1):
            theta[(2 * s + 1) ** 2, 2 * s + 1] = (-1) ** s
        n += 1
    power: dict[tuple[int, int], int] = {(0, 0): 1}
    for _ in range(8):
        nxt: dict[tuple[int, int], int] = {}
        for (a1, b1), v1 in power.items():
            for (a2, b2), v2 in theta.items():
                if a1 + a2 <= 64 * nq:
                    key = (a1 + a2, b1 + b2)
                    nxt[key] = nxt.get(key, 0) + v1 * v2
        power = nxt
    out = {}
    for (a, b), v in power.items():
        if v:
            if a % 8 or b % 2:
                raise ArithmeticError("non-integral exponent survived the eighth power")
            if a // 8 <= nq:
                out[a // 8, b // 2] = Fraction(v)
    return JacobiFormFE(4, 4, nq, out)


# --- the weight 4 forms ---------------------------------------------------------

@dataclass(frozen=True)
class AppendixForms:
    nq: int
    G4: QSeries
    phi: tuple[JacobiFormFE, ...]  # phi0..phi3 (phi0 has extra depth)
    g: tuple[FJExpansion, ...]  # g0..g3 through FJ index 4


@lru_cache(maxsize=None)
def appendix_forms(nq: int = DEFAULT_NQ) -> AppendixForms:
    e41 = jacobi_eisenstein_Ek1(4, 4 * nq)
    phi0 = e41
    phi1 = apply_U(e41, 2).scale(Fraction(1, 16))
    phi2 = apply_V(e41, 2).scale(Fraction(1, 9))
    phi3 = apply_V(apply_V(e41, 2), 2).scale(Fraction(1, 81))
    g = (gritsenko_lift(phi0, 4, nq), gritsenko_lift(phi1.truncate(nq), 4, nq),
         gritsenko_lift(phi2, 4, nq), gritsenko_lift(phi3.truncate(nq), 4, nq))
    return AppendixForms(nq, eisenstein_G(4, nq), (phi0, phi1, phi2, phi3), g)


@lru_cache(maxsize=None)
def deep_products(max_index: int = 8, nq: int = 2) -> tuple[FJExpansion, ...]:
    """g_i g_j for 1 <= i <= j <= 3, expanded through a larger Fourier-Jacobi index."""
    top = max_index // 2  # g2 lives in powers of xi^2
    e41 = jacobi_eisenstein_Ek1(4, 2 * top * nq)
    phi1 = apply_U(e41, 2).scale(Fraction(1, 16))
    phi2 = apply_V(e41, 2).scale(Fraction(1, 9))
    phi3 = apply_V(apply_V(e41, 2), 2).scale(Fraction(1, 81))
    g1 = gritsenko_lift(phi1, max_index, nq)
    g2 = gritsenko_lift(phi2, max_index, nq)
    g3 = gritsenko_lift(phi3, max_index, nq)
    gs = (g1, g2, g3)
    return tuple(fe_mul(gs[i], gs[j]) for i in range(3) for j in range(i, 3))


def products(nq: int = DEFAULT_NQ) -> tuple[FJExpansion, ...]:
    g = appendix_forms(nq).g
    return tuple(fe_mul(g[i], g[j]) for i in range(1, 4) for j in range(i, 4))


def jacobi_dim(k: int, m: int) -> int:
    """dim J_{k,m} for even k, from dimensions of elliptic modular forms."""
    if k % 2:
        raise ValueError("only even weight is supported")

    def dim_mk(w: int) -> int:
        if w < 0 or w % 2:
            return 0
        if w == 2:
            return 0
        return w // 12 + (0 if w % 12 == 2 else 1)

    return sum(dim_mk(k + 2 * j) - (-(-j * j // (4 * m))) for j in range(m + 1))


# --- verification -------------------------------------------------------------

def _row_matches(form: JacobiFormFE, n: int, printed: Mapping[int, str]) -> bool:
    """Compare a q^n row against printed values given for r >= 0 (even forms)."""
    row = form.row(n)
    want = {r: Fraction(v) for r, v in printed.items()}
    return all(row.get(r, 0) == want.get(abs(r), 0) for r in set(row) | set(want) | {-r for r in want})


def verify_appendix(nq: int = DEFAULT_NQ) -> Report:
    rep = Report()
    F = appendix_forms(nq)
    phi0, phi1, phi2, phi3 = F.phi
    G4 = F.G4

    rep.add("cohen.H30", cohen_H(3, 0) == Fraction(-1, 252))
    rep.add("cohen.H32_zero", cohen_H(3, 2) == 0)
    rep.add("G4.head", list(G4.coeffs[:4]) == [Fraction(x) for x in golden.G4_HEAD])

    for name, form in zip(("phi0", "phi1", "phi2", "phi3"), F.phi):
        rep.add(f"{name}.constant", form.row(0) == {0: 1} if form.index else True)
        for n, printed in golden.PHI_ROWS[name].items():
            rep.add(f"{name}.q{n}", _row_matches(form, n, printed), str(form.row(n)))
        sym = all(form[n, r] == form[n, -r] for n, r in form.support())
        rep.add(f"{name}.even", sym)

    e41 = phi0
    by_disc = {}
    ok = True
    for n, r in e41.support():
        d = 4 * n - r * r
        if by_disc.setdefault(d, e41[n, r]) != e41[n, r]:
            ok = False
    rep.add("E41.depends_on_discriminant", ok)

    v_general = apply_V(e41, 2)
    v_closed = apply_V2_closed(e41)
    rep.add("V2.closed_form", v_general.equals(v_closed) and v_general.nq >= DEFAULT_NQ,
            f"compared through q^{v_general.nq}")
    uv = apply_U(apply_V(e41, 2), 2)
    vu = apply_V(apply_U(e41, 2), 2)
    rep.add("U2V2.commute", uv.equals(vu))

    quot = fe_quotient_by_qseries(fe_mul(phi2, phi2), QSeries(4, tuple(240 * c for c in G4.coeffs)))
    for n, printed in golden.PHI2SQ_OVER_240G4_ROWS.items():
        rep.add(f"phi2sq_over_240G4.q{n}", _row_matches(quot, n, printed), str(quot.row(n)))
    rep.add("phi2sq_over_240G4.rank", fe_rank([phi1, phi3, quot], nq=2) == 3)

    th = theta8(4)
    target = (phi1 - phi3).scale(Fraction(9, 8))
    rep.add("theta8", th.equals(target, 4), "through q^4")
    rep.add("theta8.constant", th[0, 0] == 0)

    g0, g1, g2, g3 = F.g
    G4j = G4.as_jacobi()
    V3 = apply_V(phi0, 3).truncate(nq)
    V4 = apply_V(phi0, 4).truncate(nq)
    zero = lambda m: zero_form(4, m, nq)  # noqa: E731
    expected = {
        "g0": (G4j, phi0, phi2.scale(9), V3, V4),
        "g1": (G4j, zero(1), zero(2), zero(3), phi1),
        "g2": (G4j, zero(1), phi2, zero(3), phi3.scale(9)),
        "g3": (G4j, zero(1), zero(2), zero(3), phi3),
    }
    for name, g in zip(("g0", "g1", "g2", "g3"), F.g):
        for m, want in enumerate(expected[name]):
            rep.add(f"{name}.xi{m}", g.entries[m].equals(want, nq))
    rep.add("rank.g0..g3", fe_rank(list(F.g), 4) == 4)

    P = products(nq)
    G4sq = fe_mul(G4j, G4j)
    G4phi = lambda f, a=1: fe_mul(G4j, f).scale(a)  # noqa: E731
    prod_expected = {
        "g1g1": (G4sq, None, G4phi(phi1, 2)),
        "g1g2": (G4sq, G4phi(phi2), G4phi(phi3, 9) + G4phi(phi1)),
        "g1g3": (G4sq, None, G4phi(phi3) + G4phi(phi1)),
        "g2g2": (G4sq, G4phi(phi2, 2), G4phi(phi3, 18) + fe_mul(phi2, phi2)),
        "g2g3": (G4sq, G4phi(phi2), G4phi(phi3, 10)),
        "g3g3": (G4sq, None, G4phi(phi3, 2)),
    }
    for (name, (e0, e2, e4)), prod in zip(prod_expected.items(), P):
        ok = prod.entries[0].equals(e0) and prod.entries[4].equals(e4)
        ok = ok and prod.entries[2].equals(e2 if e2 is not None else zero_form(8, 2, nq))
        ok = ok and all(not prod.entries[m].c for m in (1, 3))
        rep.add(f"product.{name}", ok)
    rep.add("rank.products.index4", fe_rank(list(P), 4) == 4,
            "index <= 4 coefficients impose rank-4 conditions")
    rep.add("rank.products.index8", fe_rank(list(deep_products(8, 2)), 8) == 6)

    rep.add("dimJ4", tuple(jacobi_dim(4, m) for m in (1, 2, 4)) == (1, 1, 2))
    rep.add("dimJ2", tuple(jacobi_dim(2, m) for m in (1, 2)) == (0, 0))
    return rep
