"""Finite groupoids given by Cayley tables.

Elements are the integers ``0 .. n-1``; ``table[a][b]`` is the product ``ab``.
Besides the AG laws this module holds intra-regularity, crisp subsets and
crisp ideals, and the exhaustive census of small left-invertive tables.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded, MagmaError

DEFAULT_MAX_ORDER = 4


@dataclass(frozen=True)
class FiniteMagma:
    n: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise MagmaError(f"carrier size must be a positive integer, got {self.n!r}")
        if len(self.table) != self.n or any(len(row) != self.n for row in self.table):
            raise MagmaError(f"table must be {self.n}x{self.n}")
        for a, row in enumerate(self.table):
            for b, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < self.n:
                    raise MagmaError(f"entry ({a},{b}) = {v!r} outside [0, {self.n})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def elements(self) -> range:
        return range(self.n)

    @cached_property
    def factorizations(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each element z, every pair (b, c) with bc = z, in lexicographic order."""
        found: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for b in range(self.n):
            for c in range(self.n):
                found[self.table[b][c]].append((b, c))
        return tuple(tuple(pairs) for pairs in found)

    def rows(self, base: int = 0) -> list[list[int]]:
        return [[v + base for v in row] for row in self.table]

    def __repr__(self) -> str:
        return f"FiniteMagma(n={self.n}, table={self.rows()})"


def make_magma(n: int, table: Sequence[Sequence[int]]) -> FiniteMagma:
    """Build a magma from an ``n x n`` nested sequence of 0-based indices."""
    if len(table) != n or any(len(row) != n for row in table):
        raise MagmaError(f"dimension mismatch: expected {n}x{n} table")
    return FiniteMagma(n, tuple(tuple(int(v) for v in row) for row in table))


class LawKind(str, enum.Enum):
    LEFT_INVERTIVE = "left_invertive"
    MEDIAL = "medial"
    PARAMEDIAL = "paramedial"
    LAW4 = "law4"
    HAS_LEFT_IDENTITY = "has_left_identity"


# arity and (lhs, rhs) evaluators for the equational laws
def _left_invertive(t, a, b, c):
    return t[t[a][b]][c], t[t[c][b]][a]


def _medial(t, a, b, c, d):
    return t[t[a][b]][t[c][d]], t[t[a][c]][t[b][d]]


def _paramedial(t, a, b, c, d):
    return t[t[a][b]][t[c][d]], t[t[d][c]][t[b][a]]


def _law4(t, a, b, c):
    return t[a][t[b][c]], t[b][t[a][c]]


EQUATIONS = {
    LawKind.LEFT_INVERTIVE: (3, _left_invertive),
    LawKind.MEDIAL: (4, _medial),
    LawKind.PARAMEDIAL: (4, _paramedial),
    LawKind.LAW4: (3, _law4),
}


@dataclass(frozen=True)
class LawReport:
    law: LawKind
    holds: bool
    witness: Optional[tuple[int, ...]] = None


def check_law(magma: FiniteMagma, law: LawKind | str) -> LawReport:
    """Decide a law exhaustively.

    For the equations the witness is the lexicographically first violating
    tuple; for ``has_left_identity`` it is the smallest left identity.
    """
    law = LawKind(law)
    if law is LawKind.HAS_LEFT_IDENTITY:
        ids = left_identities(magma)
        return LawReport(law, bool(ids), (ids[0],) if ids else None)
    arity, sides = EQUATIONS[law]
    t = magma.table
    for args in itertools.product(range(magma.n), repeat=arity):
        lhs, rhs = sides(t, *args)
        if lhs != rhs:
            return LawReport(law, False, args)
    return LawReport(law, True)


def left_identities(magma: FiniteMagma) -> list[int]:
    ident = tuple(range(magma.n))
    return [e for e in range(magma.n) if magma.table[e] == ident]


def is_ag_groupoid(magma: FiniteMagma) -> bool:
    return check_law(magma, LawKind.LEFT_INVERTIVE).holds


@dataclass(frozen=True)
class IntraRegularityWitness:
    a: int
    x: int
    y: int

    def check(self, magma: FiniteMagma) -> bool:
        t = magma.table
        return t[t[self.x][t[self.a][self.a]]][self.y] == self.a


def intra_regular_witnesses(magma: FiniteMagma, a: int) -> list[IntraRegularityWitness]:
    """All (x, y) with (x(aa))y = a, lexicographically ordered."""
    if not 0 <= a < magma.n:
        raise MagmaError(f"element {a} not in carrier of size {magma.n}")
    t = magma.table
    aa = t[a][a]
    return [
        IntraRegularityWitness(a, x, y)
        for x in range(magma.n)
        for y in range(magma.n)
        if t[t[x][aa]][y] == a
    ]


def intra_regular_witness(magma: FiniteMagma, a: int) -> Optional[IntraRegularityWitness]:
    found = intra_regular_witnesses(magma, a)
    return found[0] if found else None


@dataclass(frozen=True)
class IntraRegularity:
    holds: bool
    witnesses: dict[int, IntraRegularityWitness]
    failing: Optional[int] = None


def is_intra_regular(magma: FiniteMagma) -> IntraRegularity:
    witnesses = {}
    for a in range(magma.n):
        w = intra_regular_witness(magma, a)
        if w is None:
            return IntraRegularity(False, witnesses, a)
        witnesses[a] = w
    return IntraRegularity(True, witnesses)


# -- crisp subsets ---------------------------------------------------------


@dataclass(frozen=True)
class CrispSubset:
    """A subset of ``range(n)`` stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise MagmaError(f"mask {self.mask:#b} does not fit a carrier of size {self.n}")

    @classmethod
    def of(cls, n: int, elements) -> "CrispSubset":
        mask = 0
        for x in elements:
            if not 0 <= x < n:
                raise MagmaError(f"element {x} not in carrier of size {n}")
            mask |= 1 << x
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "CrispSubset":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "CrispSubset":
        return cls(n, 0)

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.n and bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return (x for x in range(self.n) if self.mask >> x & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def members(self) -> list[int]:
        return list(self)

    def issubset(self, other: "CrispSubset") -> bool:
        return self.mask & ~other.mask == 0

    def __and__(self, other: "CrispSubset") -> "CrispSubset":
        return CrispSubset(self.n, self.mask & other.mask)

    def __or__(self, other: "CrispSubset") -> "CrispSubset":
        return CrispSubset(self.n, self.mask | other.mask)

    def __repr__(self) -> str:
        return f"CrispSubset({self.members()})"


def nonempty_subsets(n: int) -> Iterator[CrispSubset]:
    for mask in range(1, 1 << n):
        yield CrispSubset(n, mask)


def _same_carrier(magma: FiniteMagma, *subsets: CrispSubset) -> None:
    for s in subsets:
        if s.n != magma.n:
            raise MagmaError(f"subset over {s.n} elements used with a magma of order {magma.n}")


def subset_product(magma: FiniteMagma, X: CrispSubset, Y: CrispSubset) -> CrispSubset:
    _same_carrier(magma, X, Y)
    mask = 0
    t = magma.table
    ys = Y.members()
    for x in X:
        row = t[x]
        for y in ys:
            mask |= 1 << row[y]
    return CrispSubset(magma.n, mask)


class CrispIdealKind(str, enum.Enum):
    SUBGROUPOID = "subgroupoid"
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two_sided"
    GENERALIZED_BI = "generalized_bi"
    BI = "bi"
    INTERIOR = "interior"
    QUASI = "quasi"


@dataclass(frozen=True)
class CrispVerdict:
    kind: CrispIdealKind
    holds: bool
    witness: Optional[int] = None


def _first_outside(candidate: CrispSubset, X: CrispSubset) -> Optional[int]:
    outside = candidate.mask & ~X.mask
    if not outside:
        return None
    return (outside & -outside).bit_length() - 1


def is_crisp_ideal(magma: FiniteMagma, X: CrispSubset, kind: CrispIdealKind | str) -> CrispVerdict:
    """Check one of the crisp ideal notions; the witness is the smallest offending element."""
    kind = CrispIdealKind(kind)
    _same_carrier(magma, X)
    if not X:
        raise MagmaError("crisp ideal predicates require a non-empty subset")
    S = CrispSubset.full(magma.n)
    prod = lambda P, Q: subset_product(magma, P, Q)  # noqa: E731

    if kind is CrispIdealKind.TWO_SIDED:
        left = is_crisp_ideal(magma, X, CrispIdealKind.LEFT)
        if not left.holds:
            return CrispVerdict(kind, False, left.witness)
        right = is_crisp_ideal(magma, X, CrispIdealKind.RIGHT)
        return CrispVerdict(kind, right.holds, right.witness)
    if kind is CrispIdealKind.BI:
        sub = is_crisp_ideal(magma, X, CrispIdealKind.SUBGROUPOID)
        if not sub.holds:
            return CrispVerdict(kind, False, sub.witness)
        gbi = is_crisp_ideal(magma, X, CrispIdealKind.GENERALIZED_BI)
        return CrispVerdict(kind, gbi.holds, gbi.witness)

    if kind is CrispIdealKind.SUBGROUPOID:
        image = prod(X, X)
    elif kind is CrispIdealKind.LEFT:
        image = prod(S, X)
    elif kind is CrispIdealKind.RIGHT:
        image = prod(X, S)
    elif kind is CrispIdealKind.GENERALIZED_BI:
        image = prod(prod(X, S), X)
    elif kind is CrispIdealKind.INTERIOR:
        image = prod(prod(S, X), S)
    else:  # quasi: AS ∩ SA ⊆ A
        image = prod(X, S) & prod(S, X)
    bad = _first_outside(image, X)
    return CrispVerdict(kind, bad is None, bad)


# -- census ------------------------------------------------------------------


def enumerate_ag_groupoids(
    n: int,
    require_left_identity: bool = False,
    max_order: int = DEFAULT_MAX_ORDER,
) -> Iterator[FiniteMagma]:
    """Yield every left-invertive ``n x n`` table in lexicographic order.

    Cells are filled row-major by depth-first search; a partial table is
    abandoned as soon as some fully defined instance of (ab)c = (cb)a fails.
    """
    if n < 1:
        raise MagmaError("order must be positive")
    if n > max_order:
        raise BudgetExceeded(f"order {n} exceeds the enumeration bound {max_order}")
    cells = n * n
    flat = [-1] * cells
    ident = list(range(n))
    # triples (a, b, c) in which cell k = (i, j) is an inner product ab or cb
    inner = [
        [(i, j, c) for c in range(n)] + [(a, j, i) for a in range(n)]
        for i in range(n)
        for j in range(n)
    ]

    def holds(a: int, b: int, c: int) -> bool:
        ab = flat[a * n + b]
        cb = flat[c * n + b]
        if ab < 0 or cb < 0:
            return True
        lhs = flat[ab * n + c]
        rhs = flat[cb * n + a]
        return lhs < 0 or rhs < 0 or lhs == rhs

    def consistent(k: int) -> bool:
        if not all(holds(a, b, c) for a, b, c in inner[k]):
            return False
        # cell k = (i, j) as an outer product: (ab)c with ab = i, c = j, or (cb)a with cb = i, a = j
        i, j = divmod(k, n)
        for p in range(cells):
            if flat[p] == i:
                x, b = divmod(p, n)
                if not holds(x, b, j) or not holds(j, b, x):
                    return False
        return True

    def emit() -> Optional[FiniteMagma]:
        rows = [flat[i * n:(i + 1) * n] for i in range(n)]
        if require_left_identity and ident not in rows:
            return None
        return FiniteMagma(n, tuple(tuple(r) for r in rows))

    def fill(k: int) -> Iterator[FiniteMagma]:
        if k == cells:
            m = emit()
            if m is not None:
                yield m
            return
        for v in range(n):
            flat[k] = v
            if consistent(k):
                yield from fill(k + 1)
        flat[k] = -1

    yield from fill(0)
