"""Characters of S6 and the isomorphism S6 -> Sp(4, F2).

Sp(4, F2) is the group of 4x4 bit matrices ``g`` with ``g^T J g = J`` where
``J`` is the antidiagonal matrix of ones.  S6 acts on the even-weight
subsets of ``{1..6}`` modulo the full set; with the ordered basis
``e1={1,2}, e2={5,6}, f2={4,5}, f1={2,3}`` the intersection pairing is
exactly ``J``, and the matrix of a permutation is read off from that action.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .report import Report

Partition = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]  # rows of bits
Perm = tuple[int, ...]  # images of 1..6, zero-based: perm[i] = sigma(i+1)-1

# Column order of the cycle-type tables: 1, (12), (12)(34), (12)(34)(56),
# (123), (123)(45), (123)(456), (1234), (1234)(56), (12345), (123456).
CLASSES: tuple[Partition, ...] = (
    (1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2),
    (3, 1, 1, 1), (3, 2, 1), (3, 3), (4, 1, 1), (4, 2), (5, 1), (6,),
)
CLASS_LABELS = ("1", "(12)", "(12)(34)", "(12)(34)(56)", "(123)", "(123)(45)",
                "(123)(456)", "(1234)", "(1234)(56)", "(12345)", "(123456)")

IRREPS: tuple[Partition, ...] = (
    (6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (3, 1, 1, 1),
    (2, 2, 2), (2, 2, 1, 1), (2, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1),
)

J2: Matrix = ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))
IDENTITY: Matrix = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


def partition_label(p: Partition) -> str:
    """``[4,1,1]``; repeated ones are not abbreviated except for ``[1^6]``."""
    if p == (1,) * 6:
        return "[1^6]"
    return "[" + ",".join(map(str, p)) + "]"


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


def centralizer_order(mu: Partition) -> int:
    z = 1
    for part in set(mu):
        m = mu.count(part)
        z *= part ** m * factorial(m)
    return z


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // centralizer_order(mu)


# --- Murnaghan-Nakayama ----------------------------------------------------

def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], mu: Partition) -> int:
    """chi at cycle type ``mu`` of the partition with beta-set ``beta``."""
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    bset = set(beta)
    for b in beta:
        if b - r >= 0 and b - r not in bset:
            # removing a rim hook of length r; height = beads jumped over
            height = sum(1 for c in beta if b - r < c < b)
            new = tuple(sorted((bset - {b}) | {b - r}, reverse=True))
            total += (-1) ** height * _mn(new, rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    length = max(len(lam), 1) + sum(mu)
    return _mn(_beta_set(lam, length), tuple(sorted(mu, reverse=True)))


@dataclass(frozen=True)
class CharacterTable:
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    irreps: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]  # values[i][j] = chi_{irreps[i]}(classes[j])

    def dims(self) -> tuple[int, ...]:
        return tuple(row[0] for row in self.values)

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self.irreps.index(lam)]


def check_orthogonality(table: CharacterTable) -> None:
    order = sum(table.class_sizes)
    n = len(table.irreps)
    for a in range(n):
        for b in range(n):
            s = sum(h * x * y for h, x, y in
                    zip(table.class_sizes, table.values[a], table.values[b]))
            if s != (order if a == b else 0):
                raise AssertionError(f"row orthogonality fails at {a},{b}")
    for j in range(n):
        for l in range(n):
            s = sum(table.values[i][j] * table.values[i][l] for i in range(n))
            expected = order // table.class_sizes[j] if j == l else 0
            if s != expected:
                raise AssertionError(f"column orthogonality fails at {j},{l}")


@lru_cache(maxsize=None)
def character_table() -> CharacterTable:
    values = tuple(tuple(character(lam, mu) for mu in CLASSES) for lam in IRREPS)
    table = CharacterTable(CLASSES, tuple(class_size(mu) for mu in CLASSES),
                           IRREPS, values)
    check_orthogonality(table)
    return table


# --- Sp(4, F2) -------------------------------------------------------------

def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] & b[k][j] for k in range(4)) & 1 for j in range(4))
        for i in range(4))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def is_symplectic(g: Matrix) -> bool:
    return mat_mul(mat_mul(transpose(g), J2), g) == J2


def _omega(x: Sequence[int], y: Sequence[int]) -> int:
    return (x[0] & y[3]) ^ (x[1] & y[2]) ^ (x[2] & y[1]) ^ (x[3] & y[0])


@lru_cache(maxsize=None)
def sp4f2() -> frozenset[Matrix]:
    """All 720 elements, by brute force over the 2^16 bit matrices.

    The symplectic condition says the columns pair like the basis vectors, so
    we enumerate column 4-tuples and test the six pairings.
    """
    vecs = list(itertools.product((0, 1), repeat=4))
    out = set()
    for cols in itertools.product(vecs, repeat=4):
        if all(_omega(cols[i], cols[j]) == J2[i][j]
               for i in range(4) for j in range(i + 1, 4)):
            out.add(transpose(cols))
    return frozenset(out)


# --- the isomorphism -------------------------------------------------------

BASIS_SETS = ({1, 2}, {5, 6}, {4, 5}, {2, 3})


def _vec(subset: Iterable[int]) -> int:
    v = 0
    for i in subset:
        v |= 1 << (i - 1)
    return v


_FULL = 0b111111


@lru_cache(maxsize=None)
def _coords() -> dict[int, tuple[int, ...]]:
    """Coordinates in the basis of every even-weight vector (mod the full set)."""
    basis = [_vec(s) for s in BASIS_SETS]
    table = {}
    for bits in itertools.product((0, 1), repeat=4):
        v = 0
        for b, x in zip(bits, basis):
            if b:
                v ^= x
        table[v] = bits
        table[v ^ _FULL] = bits
    return table


def apply_perm(perm: Perm, subset: Iterable[int]) -> set[int]:
    return {perm[i - 1] + 1 for i in subset}


def perm_to_matrix(perm: Perm) -> Matrix:
    coords = _coords()
    cols = [coords[_vec(apply_perm(perm, s))] for s in BASIS_SETS]
    return transpose(tuple(cols))


def perm_compose(a: Perm, b: Perm) -> Perm:
    """``a * b``: apply ``b`` first."""
    return tuple(a[b[i]] for i in range(len(b)))


def perm_from_cycles(*cycles: Sequence[int], n: int = 6) -> Perm:
    perm = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            perm[x - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(perm)


def cycle_type(perm: Perm) -> Partition:
    seen = set()
    parts = []
    for i in range(len(perm)):
        if i in seen:
            continue
        length = 0
        j = i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class IsoTable:
    to_matrix: Mapping[Perm, Matrix]
    to_perm: Mapping[Matrix, Perm]


def check_homomorphism(iso: IsoTable, samples: int = 100, seed: int = 0) -> None:
    rng = random.Random(seed)
    perms = sorted(iso.to_matrix)
    gens = [perm_from_cycles((1, 2)), perm_from_cycles((1, 2, 3, 4, 5, 6))]
    pairs = [(a, b) for a in gens for b in gens]
    pairs += [(rng.choice(perms), rng.choice(perms)) for _ in range(samples)]
    for a, b in pairs:
        lhs = iso.to_matrix[perm_compose(a, b)]
        rhs = mat_mul(iso.to_matrix[a], iso.to_matrix[b])
        if lhs != rhs:
            raise AssertionError(f"not a homomorphism at {a}, {b}")


@lru_cache(maxsize=None)
def build_iso() -> IsoTable:
    to_matrix = {}
    for perm in itertools.permutations(range(6)):
        g = perm_to_matrix(perm)
        if not is_symplectic(g):
            raise AssertionError(f"image of {perm} is not symplectic")
        to_matrix[perm] = g
    to_perm = {g: p for p, g in to_matrix.items()}
    if len(to_perm) != 720 or set(to_perm) != sp4f2():
        raise AssertionError("map S6 -> Sp(4,F2) is not a bijection")
    iso = IsoTable(to_matrix, to_perm)
    check_homomorphism(iso)
    return iso


# --- subgroups given by mod-2 patterns ------------------------------------

@dataclass(frozen=True)
class SubgroupPattern:
    """``mask[i][j] == 0`` forces entry (i, j) to vanish mod 2."""

    name: str
    mask: tuple[tuple[int, ...], ...]
    allowed_d: frozenset[Matrix] | None = None  # lower-right 2x2 block, if restricted

    def matches(self, g: Matrix) -> bool:
        if any(g[i][j] and not self.mask[i][j] for i in range(4) for j in range(4)):
            return False
        if self.allowed_d is not None:
            d = ((g[2][2], g[2][3]), (g[3][2], g[3][3]))
            return d in self.allowed_d
        return True


def _mask(text: str) -> tuple[tuple[int, ...], ...]:
    rows = text.split()
    return tuple(tuple(0 if c == "0" else 1 for c in row) for row in rows)


# Gamma0*(4): kernel of the sign character on the D block, i.e. D mod 2 lies
# in the cyclic subgroup of order 3 of SL(2, F2).
_GAMMA0STAR_D = frozenset({((1, 0), (0, 1)), ((0, 1), (1, 1)), ((1, 1), (1, 0))})

PATTERNS: tuple[SubgroupPattern, ...] = (
    SubgroupPattern("Gamma(2)", _mask("*000 0*00 00*0 000*")),
    SubgroupPattern("Sp(4,Z)", _mask("**** **** **** ****")),
    SubgroupPattern("K(4)", _mask("*00* 0**0 0**0 *00*")),
    SubgroupPattern("Gamma0(2)", _mask("**** **** 00** 00**")),
    SubgroupPattern("Gamma0(4)", _mask("**00 **00 00** 00**")),
    SubgroupPattern("Gamma0*(4)", _mask("**00 **00 00** 00**"), _GAMMA0STAR_D),
    SubgroupPattern("Gamma0'(2)", _mask("**** 0*** 0*** 000*")),
    SubgroupPattern("M(4)", _mask("*000 0**0 0**0 *00*")),
    SubgroupPattern("B(2)", _mask("**** 0*** 00** 000*")),
)


def pattern(name: str) -> SubgroupPattern:
    for p in PATTERNS:
        if p.name == name:
            return p
    raise KeyError(f"unknown subgroup pattern {name!r}")


def subgroup_members(p: SubgroupPattern) -> frozenset[Matrix]:
    members = frozenset(g for g in sp4f2() if p.matches(g))
    if not members:
        raise ValueError(f"pattern {p.name} matches nothing")
    packed = {_pack(g) for g in members}
    for a in packed:
        for b in packed:
            if _packed_mul(a, b) not in packed:
                raise ValueError(f"pattern {p.name} is not closed under products")
    return members


def _pack(g: Matrix) -> tuple[int, ...]:
    return tuple(sum(bit << j for j, bit in enumerate(row)) for row in g)


def _packed_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for row in a:
        acc = 0
        for k in range(4):
            if row >> k & 1:
                acc ^= b[k]
        out.append(acc)
    return tuple(out)


def cycle_type_counts(members: Iterable[Matrix], iso: IsoTable | None = None
                      ) -> dict[Partition, int]:
    iso = iso or build_iso()
    counts = {mu: 0 for mu in CLASSES}
    for g in members:
        counts[cycle_type(iso.to_perm[g])] += 1
    return counts


def counts_row(counts: Mapping[Partition, int]) -> tuple[int, ...]:
    return tuple(counts[mu] for mu in CLASSES)


def _average(values: Iterable[Fraction | int], order: int, what: str) -> int:
    total = Fraction(sum(values), order)
    if total.denominator != 1 or total < 0:
        raise ValueError(f"{what} is {total}, not a non-negative integer")
    return int(total)


def fixed_dim(lam: Partition, counts: Mapping[Partition, int], order: int) -> int:
    """Dimension of the H-fixed vectors in the irrep ``lam``."""
    if sum(counts.values()) != order:
        raise ValueError("class counts do not add up to the group order")
    chi = character_table().row(lam)
    return _average((counts[mu] * chi[j] for j, mu in enumerate(CLASSES)),
                    order, "fixed-space dimension")


def multiplicity(tau: Mapping[Partition, int], rho: Mapping[Partition, int],
                 counts: Mapping[Partition, int], order: int) -> int:
    """Multiplicity of ``tau`` in ``rho`` restricted to H.

    Characters are given as class functions on cycle types; S6 characters are
    real so no conjugation is needed.
    """
    if sum(counts.values()) != order:
        raise ValueError("class counts do not add up to the group order")
    return _average((counts[mu] * tau[mu] * rho[mu] for mu in CLASSES),
                    order, "multiplicity")


def class_function(lam: Partition) -> dict[Partition, int]:
    return dict(zip(CLASSES, character_table().row(lam)))


@lru_cache(maxsize=None)
def conjugacy_table() -> dict[str, tuple[int, tuple[int, ...]]]:
    """Pattern name -> (order, cycle-type counts in column order)."""
    iso = build_iso()
    out = {}
    for p in PATTERNS:
        members = subgroup_members(p)
        out[p.name] = (len(members), counts_row(cycle_type_counts(members, iso)))
    return out


@lru_cache(maxsize=None)
def s6_fixed_table() -> dict[str, tuple[int, ...]]:
    """Pattern name -> fixed-space dimension of each irrep (irrep order)."""
    out = {}
    for name, (order, row) in conjugacy_table().items():
        counts = dict(zip(CLASSES, row))
        out[name] = tuple(fixed_dim(lam, counts, order) for lam in IRREPS)
    return out


def verify() -> Report:
    from . import golden

    rep = Report()
    iso = build_iso()
    rep.add("sp4f2.order", len(sp4f2()) == 720, f"{len(sp4f2())} elements")
    for cycles, rows in golden.ISO_EXAMPLES:
        got = iso.to_matrix[perm_from_cycles(*cycles)]
        rep.add(f"iso.{cycles}", got == rows, str(got))
    table = character_table()
    try:
        check_orthogonality(table)
        rep.add("characters.orthogonality", True)
    except AssertionError as exc:
        rep.add("characters.orthogonality", False, str(exc))
    conj = conjugacy_table()
    for name, want in golden.CONJUGACY.items():
        rep.add(f"conjugacy.{name}", conj[name] == want, str(conj[name]))
    dims = table.dims()
    for name, want in golden.S6_FIXED.items():
        got = s6_fixed_table()[name]
        rep.add(f"s6fixed.{name}", got == want, str(got))
        order = conj[name][0]
        rep.add(f"burnside.{name}",
                sum(d * f for d, f in zip(dims, got)) * order == 720)
    return rep
