"""Local representation types with non-zero hyperspecial parahoric restriction.

Each type records its restriction to Sp(4, F2) as a multiset of S6-types.
Fixed-vector dimensions under a local congruence subgroup H follow by summing
the fixed dimensions of the constituents under the image of H, except for
K(p) and the Klingen group of level p^2, which have no conjugate between
Gamma(p) and K; those two columns are carried as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from . import golden
from .report import Report
from .s6 import IRREPS, Partition, character_table, s6_fixed_table

PLUS, MINUS = 1, -1


@dataclass(frozen=True)
class RepTypeRecord:
    label: str
    restriction: tuple[tuple[Partition, int], ...]  # (S6-type, multiplicity)
    conductor_a: int
    eps: frozenset[int]
    tempered: bool
    para: bool
    inG: bool
    inP: bool

    def constituents(self) -> list[Partition]:
        return [lam for lam, m in self.restriction for _ in range(m)]


def _r(*parts: tuple[Partition, int] | Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    for p in parts:
        if isinstance(p[0], tuple):
            out.append(p)
        else:
            out.append((p, 1))
    return tuple(out)


_PM = frozenset({PLUS, MINUS})
_P = frozenset({PLUS})
_M = frozenset({MINUS})

CATALOGUE: tuple[RepTypeRecord, ...] = (
    RepTypeRecord("I", _r((6,), (5, 1), ((4, 2), 2), (3, 2, 1), (2, 2, 2)), 0, _P, True, True, True, False),
    RepTypeRecord("IIa", _r((5, 1), (4, 2), (3, 2, 1)), 1, _PM, True, True, True, False),
    RepTypeRecord("IIb", _r((6,), (4, 2), (2, 2, 2)), 0, _P, False, True, False, True),
    RepTypeRecord("IIIa", _r((4, 2), (3, 2, 1), (2, 2, 2)), 2, _P, True, True, True, False),
    RepTypeRecord("IIIb", _r((6,), (5, 1), (4, 2)), 0, _P, False, True, False, False),
    RepTypeRecord("IVa", _r((3, 2, 1)), 3, _PM, True, True, True, False),
    RepTypeRecord("IVb", _r((4, 2), (2, 2, 2)), 2, _P, False, True, False, False),
    RepTypeRecord("IVc", _r((4, 2), (5, 1)), 1, _PM, False, True, False, False),
    RepTypeRecord("IVd", _r((6,)), 0, _P, False, True, False, False),
    RepTypeRecord("Va", _r((5, 1), (3, 2, 1)), 2, _M, True, True, True, False),
    RepTypeRecord("Vb", _r((4, 2)), 1, _PM, False, True, False, True),
    RepTypeRecord("Vc", _r((4, 2)), 1, _PM, False, True, False, True),
    RepTypeRecord("Vd", _r((6,), (2, 2, 2)), 0, _P, False, True, False, False),
    RepTypeRecord("VIa", _r((4, 2), (3, 2, 1)), 2, _P, True, True, True, False),
    RepTypeRecord("VIb", _r((2, 2, 2)), 2, _P, True, False, True, True),
    RepTypeRecord("VIc", _r((5, 1)), 1, _PM, False, True, False, True),
    RepTypeRecord("VId", _r((6,), (4, 2)), 0, _P, False, True, False, False),
    RepTypeRecord("VII", _r((3, 1, 1, 1), (2, 1, 1, 1, 1)), 4, _P, True, True, True, False),
    RepTypeRecord("VIIIa", _r((3, 1, 1, 1)), 4, _P, True, True, True, False),
    RepTypeRecord("VIIIb", _r((2, 1, 1, 1, 1)), 4, _P, True, False, True, False),
    RepTypeRecord("IXa", _r((3, 1, 1, 1)), 4, _P, True, True, True, False),
    RepTypeRecord("IXb", _r((2, 1, 1, 1, 1)), 4, _P, False, False, False, False),
    RepTypeRecord("X", _r((4, 1, 1), (3, 3)), 2, _M, True, True, True, False),
    RepTypeRecord("XIa", _r((4, 1, 1)), 3, _PM, True, True, True, False),
    RepTypeRecord("XIb", _r((3, 3)), 2, _M, False, True, False, True),
    RepTypeRecord("Va*", _r((1, 1, 1, 1, 1, 1)), 2, _M, True, False, True, True),
    RepTypeRecord("sc(16)", _r((2, 2, 1, 1)), 4, _M, True, True, True, False),
)

OMEGAS = tuple(rec.label for rec in CATALOGUE)

# CLI-friendly names for the types whose labels are not plain identifiers.
OMEGA_SLUGS = {label: label for label in OMEGAS}
OMEGA_SLUGS.update({"Va*": "Vastar", "sc(16)": "sc16"})


def catalogue() -> tuple[RepTypeRecord, ...]:
    return CATALOGUE


def record(label: str) -> RepTypeRecord:
    for rec in CATALOGUE:
        if rec.label == label:
            return rec
    raise KeyError(f"unknown representation type {label!r}")


# --- local groups -------------------------------------------------------------

@dataclass(frozen=True)
class LocalGroup:
    label: str
    pattern: str | None  # name of the mod-2 pattern, None for literature data

    @property
    def source(self) -> str:
        return "pattern" if self.pattern else "literature-data"


LOCAL_GROUPS: tuple[LocalGroup, ...] = (
    LocalGroup("Gamma(p)", "Gamma(2)"),
    LocalGroup("K", "Sp(4,Z)"),
    LocalGroup("K(p)", None),
    LocalGroup("K(p^2)", "K(4)"),
    LocalGroup("Gamma0(p)", "Gamma0(2)"),
    LocalGroup("Gamma0(p^2)", "Gamma0(4)"),
    LocalGroup("Gamma0*(p^2)", "Gamma0*(4)"),
    LocalGroup("Gamma0'(p)", "Gamma0'(2)"),
    LocalGroup("Gamma0'(p^2)", None),
    LocalGroup("M(p^2)", "M(4)"),
    LocalGroup("B(p)", "B(2)"),
)

LOCAL_LABELS = tuple(g.label for g in LOCAL_GROUPS)


def local_group(label: str) -> LocalGroup:
    for g in LOCAL_GROUPS:
        if g.label == label:
            return g
    raise KeyError(f"unknown local group {label!r}")


def local_fixed_dim(omega: str, H: str,
                    literature: Mapping[str, tuple[int, ...]] | None = None) -> int:
    rec = record(omega)
    g = local_group(H)
    if g.pattern is None:
        table = golden.LOCALDIM if literature is None else literature
        return table[omega][LOCAL_LABELS.index(H)]
    fixed = s6_fixed_table()[g.pattern]
    return sum(fixed[IRREPS.index(lam)] * m for lam, m in rec.restriction)


def restriction_dim(omega: str) -> int:
    dims = character_table().dims()
    return sum(dims[IRREPS.index(lam)] * m for lam, m in record(omega).restriction)


@lru_cache(maxsize=None)
def dim_table() -> dict[str, tuple[int, ...]]:
    """Fixed-vector dimension of every catalogued type under every local group."""
    table = {rec.label: tuple(local_fixed_dim(rec.label, H) for H in LOCAL_LABELS)
             for rec in CATALOGUE}
    for rec in CATALOGUE:
        row = table[rec.label]
        if row[0] != restriction_dim(rec.label):
            raise AssertionError(f"{rec.label}: Gamma(p) column is not the restriction dimension")
    return table


def table_mismatches(table: Mapping[str, tuple[int, ...]] | None = None
                     ) -> list[tuple[str, str, int, int]]:
    """Cells where ``table`` differs from the published values."""
    table = dim_table() if table is None else table
    out = []
    for omega, expected in golden.LOCALDIM.items():
        for H, got, want in zip(LOCAL_LABELS, table[omega], expected):
            if got != want:
                out.append((omega, H, got, want))
    return out


# --- the linear systems -------------------------------------------------------

# Global group slug -> local column (same order as the global rows).
GLOBAL_TO_LOCAL = dict(zip(golden.GROUPS, (
    "Gamma(p)", "K", "K(p)", "K(p^2)", "Gamma0(p)", "Gamma0(p^2)", "Gamma0*(p^2)",
    "Gamma0'(p)", "Gamma0'(p^2)", "M(p^2)", "B(p)")))

FULL_COLUMNS = ("I", "IIa", "IIb", "IIIa", "IVa", "Va", "Vb", "VIa", "VIb", "VIc",
                "VII", "VIIIa", "VIIIb", "IXa", "X", "XIa", "XIb", "Va*", "sc(16)")
P_COLUMNS = ("IIb", "Vb", "VIb", "VIc", "XIb", "Va*")
G_COLUMNS = ("I", "IIa", "IIIa+VIa/b", "IVa", "Va/a*", "VII+VIIIa/b", "IXa", "X",
             "XIa", "sc(16)")
G_ROWS = tuple(g for g in golden.GROUPS if g != "Klingen4")


def _cell(table: Mapping[str, tuple[int, ...]], omega: str, group: str) -> int:
    return table[omega][LOCAL_LABELS.index(GLOBAL_TO_LOCAL[group])]


def full_matrix(table: Mapping[str, tuple[int, ...]] | None = None
                ) -> tuple[tuple[int, ...], ...]:
    table = dim_table() if table is None else table
    return tuple(tuple(_cell(table, om, g) for om in FULL_COLUMNS) for g in golden.GROUPS)


def p_matrix(table: Mapping[str, tuple[int, ...]] | None = None
             ) -> tuple[tuple[int, ...], ...]:
    table = dim_table() if table is None else table
    return tuple(tuple(_cell(table, om, g) for om in P_COLUMNS) for g in golden.GROUPS)


def _g_row(table: Mapping[str, tuple[int, ...]], group: str) -> tuple[int, ...]:
    c = lambda om: _cell(table, om, group)  # noqa: E731
    if c("IIIa") != c("VIa") + c("VIb"):
        raise AssertionError(f"{group}: dim IIIa != dim VIa + dim VIb")
    if c("VII") != c("VIIIa") + c("VIIIb"):
        raise AssertionError(f"{group}: dim VII != dim VIIIa + dim VIIIb")
    return (c("I"), c("IIa"), c("IIIa"), c("IVa"), c("Va") + c("Va*"), c("VII"),
            c("IXa"), c("X"), c("XIa"), c("sc(16)"))


def g_matrix(table: Mapping[str, tuple[int, ...]] | None = None
             ) -> tuple[tuple[int, ...], ...]:
    table = dim_table() if table is None else table
    return tuple(_g_row(table, g) for g in G_ROWS)


def klingen4_row(table: Mapping[str, tuple[int, ...]] | None = None) -> tuple[int, ...]:
    table = dim_table() if table is None else table
    return _g_row(table, "Klingen4")


def g_matrix_all(table: Mapping[str, tuple[int, ...]] | None = None
                 ) -> tuple[tuple[int, ...], ...]:
    """Combined-column (G) matrix with all 11 rows in group order."""
    table = dim_table() if table is None else table
    return tuple(_g_row(table, g) for g in golden.GROUPS)


def verify() -> Report:
    rep = Report()
    table = dim_table()
    for omega, H, got, want in table_mismatches(table):
        rep.add(f"localdim.{omega}.{H}", False, f"computed {got}, printed {want}")
    derivable = [H for H in LOCAL_GROUPS if H.pattern]
    for omega in OMEGAS:
        expected = golden.LOCALDIM[omega]
        ok = all(table[omega][LOCAL_LABELS.index(H.label)]
                 == expected[LOCAL_LABELS.index(H.label)] for H in derivable)
        rep.add(f"localdim.row.{omega}", ok)
        rep.add(f"localdim.restriction_dim.{omega}", table[omega][0] == restriction_dim(omega))
    for rec in CATALOGUE:
        if not rec.para:
            cols = [LOCAL_LABELS.index(h) for h in ("K", "K(p)", "K(p^2)")]
            rep.add(f"paramodular.{rec.label}", sum(table[rec.label][i] for i in cols) == 0)
    rep.add("matrix.full", full_matrix(table) == golden.FULL_MATRIX)
    rep.add("matrix.P", p_matrix(table) == golden.P_MATRIX)
    rep.add("matrix.G", g_matrix(table) == golden.G_MATRIX)
    rep.add("matrix.klingen4_row", klingen4_row(table) == golden.KLINGEN4_ROW)
    return rep
