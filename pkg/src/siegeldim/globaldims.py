"""Global congruence subgroups: cusps, codimensions and dimension series.

For each of the eleven groups the zero-dimensional cusps are only counted,
while each one-dimensional cusp carries the lattice shape of its stabilizer
``SL(2, Q) ∩ [[Z, m'Z], [nZ, Z]]``.  Conjugating by a diagonal similitude
rescales ``m'`` and ``n`` in opposite directions, so the product ``n * m'``
determines which classical group (SL(2, Z), Gamma0(2) or Gamma0(4)) the
stabilizer is conjugate to.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import golden
from .exactmath import DEFAULT_ORDER, RationalFunction, parse_rf
from .report import Report

GROUPS = golden.GROUPS


@dataclass(frozen=True)
class OneCusp:
    label: str
    m_prime: Fraction  # upper-right scale
    n: Fraction  # lower-left multiplier


@dataclass(frozen=True)
class CuspData:
    zero_cusp_count: int
    one_cusps: tuple[OneCusp, ...]


def _cusps(*items: tuple[str, Fraction | int, Fraction | int]) -> tuple[OneCusp, ...]:
    return tuple(OneCusp(lbl, Fraction(m), Fraction(n)) for lbl, m, n in items)


_HALF, _QUARTER = Fraction(1, 2), Fraction(1, 4)

ONE_CUSPS: dict[str, tuple[OneCusp, ...]] = {
    "Gamma2": _cusps(*[(f"y{i}", 2, 2) for i in range(1, 16)]),
    "Sp4Z": _cusps(("y1", 1, 1)),
    "K2": _cusps(("y1", 1, 1), ("y2", _HALF, 2)),
    "K4": _cusps(("y1", 1, 1), ("y2", _QUARTER, 4), ("y6", 1, 2)),
    "Gamma0p2": _cusps(("y1", 1, 2), ("y3", 1, 2)),
    "Gamma0p4": _cusps(("y1", 1, 4), ("y4", 4, 1), ("y5", 1, 4), ("y7", 1, 4)),
    "Gamma0star4": _cusps(("y1", 1, 4), ("y4", 4, 1), ("y5", 1, 4), ("y7", 1, 4),
                          ("y8", 1, 4)),
    "Klingen2": _cusps(("y1", 1, 1), ("y2", 1, 2), ("y4", 1, 1)),
    "Klingen4": _cusps(("y1", 1, 1), ("y2", 1, 4), ("y4", 1, 1), ("y5", 1, 1),
                       ("y6", 1, 2), ("y9", 1, 4)),
    "M4": _cusps(("y1", 1, 1), ("y2", _HALF, 4), ("y4", 1, 1), ("y6", 1, 2),
                 ("y9", _HALF, 4)),
    "B2": _cusps(*[(f"y{i}", 1, 2) for i in range(1, 5)]),
}

CUSPS: dict[str, CuspData] = {
    g: CuspData(golden.P_COSET_COUNT[g], ONE_CUSPS[g]) for g in GROUPS
}


def _check_group(group: str) -> None:
    if group not in CUSPS:
        raise KeyError(f"unknown group {group!r}; expected one of {', '.join(GROUPS)}")


def classify_cusp_group(shape: tuple[Fraction | int, Fraction | int]) -> int:
    """Level N in {1, 2, 4} of the classical group a cusp stabilizer is conjugate to."""
    m_prime, n = (Fraction(x) for x in shape)
    level = m_prime * n
    if level not in (1, 2, 4):
        raise ValueError(f"cannot classify lattice shape (m'={m_prime}, n={n}): n*m' = {level}")
    return int(level)


@lru_cache(maxsize=None)
def elliptic_cusp_series(N: int) -> RationalFunction:
    """Generating series of dim S_k for SL(2, Z), Gamma0(2), Gamma0(4), even k only."""
    texts = {1: "t^12/((1-t^4)(1-t^6))",
             2: "t^8/((1-t^2)(1-t^4))",
             4: "t^6/(1-t^2)^2"}
    if N not in texts:
        raise ValueError(f"no elliptic series for level {N}")
    return parse_rf(texts[N])


EVEN_INDICATOR = parse_rf("t^6/(1-t^2)")  # sum of t^k over even k >= 6


def codim_params(group: str) -> tuple[int, int, int, int]:
    _check_group(group)
    counts = {1: 0, 2: 0, 4: 0}
    for c in CUSPS[group].one_cusps:
        counts[classify_cusp_group((c.m_prime, c.n))] += 1
    return counts[1], counts[2], counts[4], CUSPS[group].zero_cusp_count


def codim_series(group: str) -> RationalFunction:
    """dim M_k - dim S_k, valid for even k >= 6 and zero at odd k."""
    a, b, c, d = codim_params(group)
    return (elliptic_cusp_series(1) * a + elliptic_cusp_series(2) * b
            + elliptic_cusp_series(4) * c + EVEN_INDICATOR * d)


def codim_at(group: str, k: int) -> int:
    """Codimension at weight k >= 4 from the cusp data (k = 4 included)."""
    a, b, c, d = codim_params(group)
    if k % 2:
        return 0
    total = d
    for coeff, N in ((a, 1), (b, 2), (c, 4)):
        total += coeff * elliptic_cusp_series(N).coefficient(k)
    return int(total)


@lru_cache(maxsize=None)
def _golden_series(table: str, group: str) -> RationalFunction:
    return parse_rf(getattr(golden, table)[group])


def mk_series(group: str) -> RationalFunction:
    _check_group(group)
    if group == "Klingen4":
        from .arthur import klingen4
        return klingen4().M
    return _golden_series("MK", group)


def sk_series(group: str) -> RationalFunction:
    _check_group(group)
    if group == "Klingen4":
        from .arthur import klingen4
        return klingen4().S
    return _golden_series("SK", group)


def printed_series(table: str, group: str) -> RationalFunction:
    """A published series (table is one of MK, SK, SKP, SKG), never recomputed."""
    _check_group(group)
    return _golden_series(table, group)


def verify_codim_consistency(order: int = DEFAULT_ORDER) -> Report:
    rep = Report()
    for g in GROUPS:
        a, b, c, d = codim_params(g)
        want = golden.CODIM[g]
        rep.add(f"codim.params.{g}", (a, b, c, d) == want[:4],
                f"got {(a, b, c, d)}, printed {want[:4]}")
        rep.add(f"codim.count.{g}",
                a + b + c == golden.Q_COSET_COUNT[g] and d == golden.P_COSET_COUNT[g],
                f"one-cusps {a + b + c}, zero-cusps {d}")
        series = codim_series(g)
        rep.add(f"codim.closed_form.{g}", series == parse_rf(want[4]),
                f"{series} vs {want[4]}")
        co = series.expand(order)
        rep.add(f"codim.odd_zero.{g}", all(co[k] == 0 for k in range(1, order + 1, 2)))

        m = mk_series(g).expand(order)
        s = sk_series(g).expand(order)
        bad = [k for k in range(6, order + 1, 2) if m[k] - s[k] != co[k]]
        if m[4] - s[4] != codim_at(g, 4):
            bad.insert(0, 4)
        rep.add(f"codim.even.{g}", not bad, f"mismatch at k={bad}" if bad else "4<=k<=%d" % order)
        odd = [k for k in range(1, order + 1, 2) if m[k] != s[k]]
        rep.add(f"codim.odd_M_eq_S.{g}", not odd, f"M != S at k={odd}" if odd else "")
    return rep


def verify_low_weights(max_weight: int = 20) -> Report:
    """Expansions of the M and S series against the printed low-weight values."""
    rep = Report()
    for g in GROUPS:
        for kind, series, table in (("M", mk_series(g), golden.MK_LOW),
                                    ("S", sk_series(g), golden.SK_LOW)):
            got = series.expand(max_weight)[1:]
            bad = [k for k, (x, y) in enumerate(zip(got, table[g]), 1) if x != y]
            rep.add(f"lowweight.{kind}.{g}", not bad, f"mismatch at k={bad}" if bad else "")
    return rep
