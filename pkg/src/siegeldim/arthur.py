"""Counting automorphic representations by Arthur type, and the Klingen level 4 formulas.

Saito-Kurokawa counts ``s^(P)`` are input data.  Multiplying by the (P)
matrix gives dim S^(P) for every group; subtracting from dim S gives
dim S^(G) for the ten groups where dim S is already known, and the
invertible 10x10 (G) system then yields the general-type counts.  The
remaining row of that system produces dim S_k(Gamma0'(4)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import golden, localreps
from .exactmath import (DEFAULT_ORDER, RationalFunction, SingularMatrixError, det,
                        matvec, parse_rf, solve_linear)
from .globaldims import codim_series, elliptic_cusp_series, printed_series, sk_series
from .report import Report

P_LABELS = localreps.P_COLUMNS
G_LABELS = localreps.G_COLUMNS
G_ROWS = localreps.G_ROWS

CountSeries = dict  # label -> RationalFunction


# --- Saito-Kurokawa lifting --------------------------------------------------

@dataclass(frozen=True)
class SKLiftRule:
    level: int  # 1, 2 or 4
    sign: int  # sign of the newform space, +1 or -1
    k_parity: str  # "even" or "odd"
    eps_inf: int
    eps_2: int
    bad_places: frozenset[str] | None  # None when no lift exists
    target: str | None  # representation type at 2, None when no relevant lift

    def parity_ok(self) -> bool:
        if self.bad_places is None:
            return True
        return self.eps_inf * self.eps_2 == (-1) ** len(self.bad_places)


_INF, _INF2 = frozenset({"inf"}), frozenset({"inf", "2"})

SK_LIFT_RULES: tuple[SKLiftRule, ...] = (
    SKLiftRule(1, 0, "even", -1, 1, _INF, "IIb"),
    SKLiftRule(1, 0, "odd", 1, 1, None, None),
    SKLiftRule(2, 1, "even", -1, -1, _INF2, "VIb"),
    SKLiftRule(2, 1, "odd", 1, 1, _INF2, "Va*"),
    SKLiftRule(2, -1, "even", -1, 1, _INF, "Vb"),
    SKLiftRule(2, -1, "odd", 1, -1, _INF, "VIc"),
    SKLiftRule(4, 1, "even", -1, -1, _INF2, None),  # XIa*, no parahoric restriction
    SKLiftRule(4, 1, "odd", 1, 1, None, None),
    SKLiftRule(4, -1, "even", -1, 1, None, None),
    SKLiftRule(4, -1, "odd", 1, -1, _INF, "XIb"),
)


def check_lift_rules() -> Report:
    rep = Report()
    for r in SK_LIFT_RULES:
        tag = f"sk_rule.N{r.level}{'+-'[r.sign < 0] if r.sign else ''}.{r.k_parity}"
        eps_inf = 1 if r.k_parity == "odd" else -1  # (-1)^(k-1)
        rep.add(tag + ".eps_inf", r.eps_inf == eps_inf)
        if r.sign:
            rep.add(tag + ".sign", r.eps_inf * r.eps_2 == r.sign)
        rep.add(tag + ".parity", r.parity_ok())
        if r.target is not None:
            rec = localreps.record(r.target)
            rep.add(tag + ".target_inP", rec.inP)
    return rep


# --- (P) ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _sk_p_counts() -> tuple[tuple[str, RationalFunction], ...]:
    return tuple((lbl, parse_rf(golden.COUNTS_P[lbl])) for lbl in P_LABELS)


def sk_p_counts() -> CountSeries:
    return dict(_sk_p_counts())


def s_p(omega: str) -> RationalFunction:
    """Saito-Kurokawa count series for any catalogued type (zero off the (P) list)."""
    localreps.record(omega)
    return sk_p_counts().get(omega, RationalFunction.from_int(0))


def _row(group: str) -> int:
    if group not in golden.GROUPS:
        raise KeyError(f"unknown group {group!r}")
    return golden.GROUPS.index(group)


def dim_sk_p(group: str) -> RationalFunction:
    row = localreps.p_matrix()[_row(group)]
    counts = sk_p_counts()
    return matvec([row], [counts[lbl] for lbl in P_LABELS])[0]


def dim_sk_g_known(group: str) -> RationalFunction:
    if group == "Klingen4":
        raise ValueError("dim S_k(Gamma0'(4)) is an output of the (G) system, not an input")
    out = sk_series(group) - dim_sk_p(group)
    co = out.expand(DEFAULT_ORDER)
    neg = [k for k, c in enumerate(co) if c < 0]
    if neg:
        raise ArithmeticError(f"{group}: negative general-type dimension at k={neg}")
    return out


# --- (G) ---------------------------------------------------------------------

@dataclass(frozen=True)
class GSolution:
    counts: dict
    determinant: Fraction


def _check_counts(counts: dict, order: int = DEFAULT_ORDER) -> None:
    for lbl, f in counts.items():
        for k, c in enumerate(f.expand(order)):
            if c.denominator != 1 or c < 0:
                raise ArithmeticError(f"count {lbl} at k={k} is {c}")


def _solve(matrix, rhs) -> dict:
    sol = solve_linear(matrix, rhs)
    return dict(zip(G_LABELS, sol))


@lru_cache(maxsize=None)
def _g_solution() -> GSolution:
    A = localreps.g_matrix()
    d = det(A)
    if d == 0:
        raise SingularMatrixError("the (G) matrix is singular")
    counts = _solve(A, [dim_sk_g_known(g) for g in G_ROWS])
    _check_counts(counts)
    return GSolution(counts, d)


def g_determinant() -> Fraction:
    return _g_solution().determinant


def solve_g_counts() -> CountSeries:
    return dict(_g_solution().counts)


# --- Gamma0'(4) --------------------------------------------------------------

@dataclass(frozen=True)
class Klingen4Result:
    SG: RationalFunction
    SP: RationalFunction
    S: RationalFunction
    M: RationalFunction


@lru_cache(maxsize=None)
def klingen4() -> Klingen4Result:
    counts = solve_g_counts()
    sg = matvec([localreps.klingen4_row()], [counts[lbl] for lbl in G_LABELS])[0]
    sp = dim_sk_p("Klingen4")
    s = sg + sp
    # Weights 0, 2, 4 are outside the range of the codimension series:
    # constants in weight 0, nothing in weight 2, four non-cusp forms in weight 4.
    boundary = parse_rf("1+4t^4")
    m = s + codim_series("Klingen4") + boundary
    return Klingen4Result(sg, sp, s, m)


# --- consistency checks -------------------------------------------------------

def _series_mismatch(a: RationalFunction, b: RationalFunction, order: int) -> list[int]:
    x, y = a.expand(order), b.expand(order)
    return [k for k in range(order + 1) if x[k] != y[k]]


def full_counts(split: Fraction | int = 0) -> dict[str, RationalFunction]:
    """Counts s_k(Omega) on the 19 columns of the full system.

    The (G) counts of IIIa and of VIa/VIb (likewise VII and VIIIa/VIIIb) are
    only known as a sum; ``split`` is the fraction assigned to IIIa (resp.
    VII), the rest going to the L-packet partners.
    """
    split = Fraction(split)
    g = solve_g_counts()
    p = sk_p_counts()
    zero = RationalFunction.from_int(0)
    s = {om: zero for om in localreps.FULL_COLUMNS}
    for lbl in ("I", "IIa", "IVa", "IXa", "X", "XIa", "sc(16)"):
        s[lbl] = g[lbl]
    s["IIIa"] = g["IIIa+VIa/b"] * split
    s["VIa"] = s["VIb"] = g["IIIa+VIa/b"] * (1 - split)
    s["VII"] = g["VII+VIIIa/b"] * split
    s["VIIIa"] = s["VIIIb"] = g["VII+VIIIa/b"] * (1 - split)
    s["Va"] = s["Va*"] = g["Va/a*"]
    for lbl, f in p.items():
        s[lbl] = s[lbl] + f
    return s


def verify_full_system(order: int = DEFAULT_ORDER) -> Report:
    rep = Report()
    A = localreps.full_matrix()
    for split in (0, 1, Fraction(1, 2)):
        s = full_counts(split)
        dims = matvec(A, [s[om] for om in localreps.FULL_COLUMNS])
        for g, d in zip(golden.GROUPS, dims):
            bad = _series_mismatch(d, printed_series("SK", g), order)
            rep.add(f"full_system.split={split}.{g}", not bad,
                    f"mismatch at k={bad}" if bad else f"k<={order}")
    # S = S^(P) + S^(G) against the printed pieces
    counts = solve_g_counts()
    G_all = localreps.g_matrix_all()
    for i, g in enumerate(golden.GROUPS):
        sg = matvec([G_all[i]], [counts[lbl] for lbl in G_LABELS])[0]
        sp = dim_sk_p(g)
        rep.add(f"arthur_decomp.{g}", sg == printed_series("SKG", g)
                and sp == printed_series("SKP", g)
                and sg + sp == printed_series("SK", g))
    return rep


def overdetermination_resolve() -> Report:
    """Swap one (G) row for the Gamma0'(4) row and solve again."""
    rep = Report()
    base = solve_g_counts()
    k4_row = localreps.klingen4_row()
    k4_rhs = printed_series("SKG", "Klingen4")
    A = [list(r) for r in localreps.g_matrix()]
    rhs = [dim_sk_g_known(g) for g in G_ROWS]
    for i, g in enumerate(G_ROWS):
        A2 = A[:i] + [list(k4_row)] + A[i + 1:]
        b2 = rhs[:i] + [k4_rhs] + rhs[i + 1:]
        if det(A2) == 0:
            rep.add(f"overdetermined.drop_{g}", True, "singular after swap; not solvable")
            continue
        sol = _solve(A2, b2)
        same = all(sol[lbl] == base[lbl] for lbl in G_LABELS)
        rep.add(f"overdetermined.drop_{g}", same, "re-solved counts identical" if same else "")
    return rep


def level2_newform_counts(order: int = DEFAULT_ORDER) -> list[Fraction]:
    """dim S^new_{2k-2}(Gamma0(2)) for k = 0..order, from the classical series."""
    s2 = elliptic_cusp_series(2).expand(2 * order)
    s1 = elliptic_cusp_series(1).expand(2 * order)
    return [Fraction(0) if k < 2 else s2[2 * k - 2] - 2 * s1[2 * k - 2]
            for k in range(order + 1)]


def verify_level2_sk(order: int = DEFAULT_ORDER) -> Report:
    rep = Report()
    p = sk_p_counts()
    total = (p["Vb"] + p["VIc"] + p["VIb"] + p["Va*"]).expand(order)
    new = level2_newform_counts(order)
    bad = [k for k in range(4, order + 1) if total[k] != new[k]]
    rep.add("sk_level2_newforms", not bad,
            f"mismatch at k={bad}" if bad else f"4<=k<={order}")
    s1 = elliptic_cusp_series(1).expand(2 * order)
    iib = p["IIb"].expand(order)
    bad = [k for k in range(2, order + 1)
           if iib[k] != (s1[2 * k - 2] if k % 2 == 0 else 0)]
    rep.add("sk_level1_IIb", not bad, f"mismatch at k={bad}" if bad else "")
    return rep


def verify_parity_support(order: int = DEFAULT_ORDER) -> Report:
    rep = Report()
    p = sk_p_counts()
    even_only = ("IIb", "Vb", "VIb")
    for lbl in P_LABELS:
        co = p[lbl].expand(order)
        vanish = 1 if lbl in even_only else 0
        bad = [k for k in range(order + 1) if k % 2 == vanish and co[k] != 0]
        rep.add(f"sk_parity.{lbl}", not bad, f"non-zero at k={bad}" if bad else "")
    for lbl in P_LABELS:
        rep.add(f"support.P.{lbl}", localreps.record(lbl).inP)
    for lbl in ("I", "IIa", "IIIa", "VIa", "VIb", "IVa", "Va", "Va*", "VII", "VIIIa",
                "VIIIb", "IXa", "X", "XIa", "sc(16)"):
        rep.add(f"support.G.{lbl}", localreps.record(lbl).inG)
    return rep


def verify_systems(order: int = DEFAULT_ORDER, max_weight: int = 20) -> Report:
    rep = Report()
    counts_p = sk_p_counts()
    for lbl in P_LABELS:
        got = counts_p[lbl].expand(max_weight)[1:]
        rep.add(f"countsP.low.{lbl}", list(got) == list(golden.COUNTS_P_LOW[lbl]))
        co = counts_p[lbl].expand(order)
        rep.add(f"countsP.nonneg.{lbl}", all(c >= 0 and c.denominator == 1 for c in co))
    for g in golden.GROUPS:
        sp = dim_sk_p(g)
        rep.add(f"SkP.series.{g}", sp == printed_series("SKP", g), str(sp))
        rep.add(f"SkP.low.{g}", list(sp.expand(max_weight)[1:]) == list(golden.SKP_LOW[g]))
    for g in G_ROWS:
        sg = dim_sk_g_known(g)
        rep.add(f"SkG.series.{g}", sg == printed_series("SKG", g), str(sg))
        rep.add(f"SkG.low.{g}", list(sg.expand(max_weight)[1:]) == list(golden.SKG_LOW[g]))
    rep.add("G.determinant", g_determinant() != 0, f"det = {g_determinant()}")
    counts = solve_g_counts()
    for lbl in G_LABELS:
        rep.add(f"countsG.series.{lbl}", counts[lbl] == parse_rf(golden.COUNTS_G[lbl]),
                str(counts[lbl]))
        rep.add(f"countsG.low.{lbl}",
                list(counts[lbl].expand(max_weight)[1:]) == list(golden.COUNTS_G_LOW[lbl]))
    rep.extend(verify_full_system(order))
    rep.extend(overdetermination_resolve())
    rep.extend(verify_level2_sk(order))
    rep.extend(verify_parity_support(order))
    rep.extend(check_lift_rules())
    return rep


def verify_klingen4(max_weight: int = 20) -> Report:
    rep = Report()
    k4 = klingen4()
    rep.add("klingen4.SG", k4.SG == printed_series("SKG", "Klingen4"), str(k4.SG))
    rep.add("klingen4.SP", k4.SP == printed_series("SKP", "Klingen4"), str(k4.SP))
    rep.add("klingen4.S", k4.S == printed_series("SK", "Klingen4"), str(k4.S))
    rep.add("klingen4.M", k4.M == printed_series("MK", "Klingen4"), str(k4.M))
    m = k4.M.expand(max_weight)
    s = k4.S.expand(max_weight)
    rep.add("klingen4.M.low", list(m[1:]) == list(golden.MK_LOW["Klingen4"]))
    rep.add("klingen4.S.low", list(s[1:]) == list(golden.SK_LOW["Klingen4"]))
    for what, got, want in (("M0", m[0], 1), ("M2", m[2], 0), ("M4", m[4], 4),
                            ("S7", s[7], 1), ("S12", s[12], 19), ("M12", m[12], 36)):
        rep.add(f"klingen4.{what}", got == want, f"{got}")
    return rep
