"""Command-line front end: ``siegeldim <table|series|verify> ...``.

Group slugs: Gamma2, Sp4Z, K2, K4, Gamma0p2, Gamma0p4, Gamma0star4, Klingen2
(Gamma0'(2)), Klingen4 (Gamma0'(4)), M4, B2.  Representation slugs are the
type names (I, IIa, ..., XIb) plus Vastar for Va* and sc16 for sc(16); the
general-type counts that are only known in combination use IIIa_VIab,
Va_Vastar and VII_VIIIab.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import arthur, globaldims, golden, jacobi, localreps, s6
from .exactmath import DEFAULT_ORDER, RationalFunction, format_rational
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- selectors ------------------------------------------------------------------

COMBINED_SLUGS = {"IIIa_VIab": "IIIa+VIa/b", "Va_Vastar": "Va/a*", "VII_VIIIab": "VII+VIIIa/b"}
OMEGA_FROM_SLUG = {slug: label for label, slug in localreps.OMEGA_SLUGS.items()}


def _group(slug: str) -> str:
    if slug not in golden.GROUPS:
        raise UsageError(f"unknown group {slug!r}; choose from {', '.join(golden.GROUPS)}")
    return slug


def _omega(slug: str) -> str:
    if slug in OMEGA_FROM_SLUG:
        return OMEGA_FROM_SLUG[slug]
    if slug in COMBINED_SLUGS:
        return COMBINED_SLUGS[slug]
    if slug in localreps.OMEGAS or slug in localreps.G_COLUMNS:
        return slug
    raise UsageError(f"unknown representation type {slug!r}")


def _slug_of(label: str) -> str:
    for slug, lbl in COMBINED_SLUGS.items():
        if lbl == label:
            return slug
    return localreps.OMEGA_SLUGS.get(label, label)


# G-count of a single type, where it is determined by the combined counts.
_G_ALIAS = {"Va": "Va/a*", "Va*": "Va/a*"}
_G_UNSPLIT = {"IIIa", "VIa", "VIb", "VII", "VIIIa", "VIIIb"}


def count_series(omega: str, kind: str) -> RationalFunction:
    if kind == "P":
        if omega in localreps.G_COLUMNS and omega not in localreps.OMEGAS:
            raise UsageError(f"{omega} is a general-type label")
        return arthur.s_p(omega)
    if kind == "G":
        counts = arthur.solve_g_counts()
        if omega in counts:
            return counts[omega]
        if omega in _G_ALIAS:
            return counts[_G_ALIAS[omega]]
        if omega in _G_UNSPLIT:
            raise UsageError(f"s^(G)({omega}) is only determined in combination; "
                             "use IIIa_VIab or VII_VIIIab")
        localreps.record(omega)
        return RationalFunction.from_int(0)
    raise UsageError(f"kind {kind!r} does not apply to a representation type; use P or G")


def group_series(group: str, kind: str) -> RationalFunction:
    if kind == "M":
        return globaldims.mk_series(group)
    if kind == "S":
        return globaldims.sk_series(group)
    if kind == "P":
        return arthur.dim_sk_p(group)
    if kind == "G":
        if group == "Klingen4":
            return arthur.klingen4().SG
        return arthur.dim_sk_g_known(group)
    if kind == "codim":
        return globaldims.codim_series(group)
    raise UsageError(f"unknown kind {kind!r}")


# --- tables -------------------------------------------------------------------

class Table:
    def __init__(self, name: str, columns: Sequence[str], rows: Sequence[str],
                 values: Sequence[Sequence[object]]):
        self.name, self.columns, self.rows = name, list(columns), list(rows)
        self.values = [[_cell(v) for v in row] for row in values]


def _cell(v) -> str:
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    return str(v)


SERIES_TABLES = {"Mk": "M", "Sk": "S", "SkP": "P", "SkG": "G"}
COUNT_TABLES = {"countsP": "P", "countsG": "G"}


def _count_labels(kind: str) -> tuple[str, ...]:
    return arthur.P_LABELS if kind == "P" else arthur.G_LABELS


def _grid(name: str, rows: list[str], series: list[RationalFunction],
          max_weight: int) -> Table:
    cols = [str(k) for k in range(1, max_weight + 1)]
    vals = [f.expand(max_weight)[1:] for f in series]
    return Table(name, cols, rows, vals)


def build_table(name: str, group: str | None = None, omega: str | None = None,
                max_weight: int | None = None) -> Table:
    groups = [group] if group else list(golden.GROUPS)
    low = name.startswith("lowweights:")
    base = name.split(":", 1)[1] if low else name
    if low and max_weight is None:
        max_weight = 20

    if base == "conjugacy":
        table = s6.conjugacy_table()
        return Table(name, ["order", *s6.CLASS_LABELS], list(table),
                     [[order, *row] for order, row in table.values()])
    if base == "s6fixed":
        table = s6.s6_fixed_table()
        return Table(name, [s6.partition_label(p) for p in s6.IRREPS], list(table),
                     list(table.values()))
    if base == "localdim":
        table = localreps.dim_table()
        omegas = [omega] if omega else list(localreps.OMEGAS)
        return Table(name, localreps.LOCAL_LABELS, omegas, [table[o] for o in omegas])
    if base == "codim":
        vals = [[*globaldims.codim_params(g), globaldims.codim_series(g)] for g in groups]
        return Table(name, ["alpha", "beta", "gamma", "delta", "series"], groups, vals)
    if base in SERIES_TABLES:
        series = [group_series(g, SERIES_TABLES[base]) for g in groups]
        if max_weight is not None:
            return _grid(name, groups, series, max_weight)
        return Table(name, ["series"], groups, [[s] for s in series])
    if base in COUNT_TABLES:
        kind = COUNT_TABLES[base]
        labels = [omega] if omega else list(_count_labels(kind))
        series = [count_series(lbl, kind) for lbl in labels]
        rows = [_slug_of(lbl) for lbl in labels]
        if max_weight is not None:
            return _grid(name, rows, series, max_weight)
        return Table(name, ["series"], rows, [[s] for s in series])
    raise UsageError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")


TABLE_NAMES = ("conjugacy", "s6fixed", "localdim", "codim", "Mk", "Sk", "SkP", "SkG",
               "countsP", "countsG", "lowweights:Mk", "lowweights:Sk", "lowweights:SkP",
               "lowweights:SkG", "lowweights:countsP", "lowweights:countsG")


def render(table: Table, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"name": table.name, "rows": table.rows,
                           "columns": table.columns, "values": table.values},
                          indent=2, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["", *table.columns])
        for r, row in zip(table.rows, table.values):
            w.writerow([r, *row])
        return buf.getvalue().rstrip("\n")
    head = ["", *table.columns]
    body = [[r, *row] for r, row in zip(table.rows, table.values)]
    widths = [max(len(x[i]) for x in [head, *body]) for i in range(len(head))]
    lines = ["  ".join(c.rjust(w) if i else c.ljust(w) for i, (c, w) in enumerate(zip(x, widths)))
             for x in [head, *body]]
    return "\n".join(line.rstrip() for line in lines)


# --- verification scopes --------------------------------------------------------

def _systems(order: int) -> Report:
    return arthur.verify_systems(order)


SCOPES: dict[str, Callable[[int], Report]] = {
    "s6": lambda order: s6.verify(),
    "localdim": lambda order: localreps.verify(),
    "codim": lambda order: globaldims.verify_codim_consistency(order).extend(
        globaldims.verify_low_weights()),
    "systems": _systems,
    "klingen4": lambda order: arthur.verify_klingen4(),
    "appendix": lambda order: jacobi.verify_appendix(),
}


def run_verify(scope: str, order: int = DEFAULT_ORDER) -> Report:
    if scope == "all":
        rep = Report()
        for fn in SCOPES.values():
            rep.extend(fn(order))
        return rep
    if scope not in SCOPES:
        raise UsageError(f"unknown scope {scope!r}; choose from all, {', '.join(SCOPES)}")
    return SCOPES[scope](order)


# --- argument handling ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="siegeldim", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--group", help="group slug")
        sp.add_argument("--omega", help="representation type slug")
        sp.add_argument("--format", choices=("text", "csv", "json"), default="text")

    t = sub.add_parser("table", help="print a recomputed table")
    t.add_argument("name", help="one of: " + ", ".join(TABLE_NAMES))
    common(t)
    t.add_argument("--max-weight", type=int, help="print values for weights 1..N")

    s = sub.add_parser("series", help="print one generating series")
    common(s)
    s.add_argument("--kind", choices=("M", "S", "P", "G", "codim"), required=True)
    s.add_argument("--order", type=int, help="also print the expansion through t^N")

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("scope", nargs="?", default="all",
                   help="all, " + ", ".join(SCOPES))
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--order", type=int, default=DEFAULT_ORDER)
    return p


def _cmd_series(args) -> str:
    if bool(args.group) == bool(args.omega):
        raise UsageError("give exactly one of --group or --omega")
    if args.group:
        f = group_series(_group(args.group), args.kind)
    else:
        f = count_series(_omega(args.omega), args.kind)
    out = str(f)
    if args.order is not None:
        coeffs = " ".join(format_rational(c) for c in f.expand(args.order))
        out += "\n" + coeffs
    if args.format == "json":
        return json.dumps({"series": str(f)} if args.order is None else
                          {"series": str(f), "coefficients": out.split("\n")[1].split()},
                          sort_keys=True)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
        if args.command == "table":
            group = _group(args.group) if args.group else None
            omega = _omega(args.omega) if args.omega else None
            if args.max_weight is not None and args.max_weight < 1:
                raise UsageError("--max-weight must be positive")
            print(render(build_table(args.name, group, omega, args.max_weight), args.format))
            return EXIT_OK
        if args.command == "series":
            print(_cmd_series(args))
            return EXIT_OK
        rep = run_verify(args.scope, args.order)
        if args.format == "json":
            print(json.dumps(rep.as_dict(), indent=2, sort_keys=True))
        else:
            for c in rep.checks:
                line = f"{c.status.upper():4}  {c.id}"
                if not c.passed and c.detail:
                    line += f"  ({c.detail})"
                print(line)
            print(f"{len(rep) - len(rep.failures())}/{len(rep)} checks passed")
        return EXIT_OK if rep.ok else EXIT_FAIL
    except UsageError as exc:
        print(f"siegeldim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(f"siegeldim: error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
