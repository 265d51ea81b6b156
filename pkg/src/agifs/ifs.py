"""Intuitionistic fuzzy sets over a finite carrier, with exact rational grades.

An IFS is a pair of grade vectors ``(mu, gamma)``; grades are
:class:`fractions.Fraction` values in [0, 1].  Decimal strings such as
``"0.3"`` are read as exact tenths, never through floating point.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded, ConstraintError, IFSError
from .magma import CrispSubset, FiniteMagma

Grade = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

MAX_DECIMALS = 6
_DECIMAL = re.compile(r"^(\d+)(?:\.(\d+))?$")
_RATIO = re.compile(r"^(\d+)/(\d+)$")

DEFAULT_IFS_BUDGET = 1_000_000


def grade(value) -> Fraction:
    """Coerce ``value`` to an exact grade in [0, 1].

    Accepts ints, Fractions and strings of the form ``"p/q"`` or a decimal
    with at most six fractional digits.  Floats are refused.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise IFSError(f"grades must be exact; got {value!r}")
    if isinstance(value, (int, Fraction)):
        g = Fraction(value)
    elif isinstance(value, str):
        s = value.strip()
        if m := _RATIO.match(s):
            if int(m.group(2)) == 0:
                raise IFSError(f"zero denominator in grade {value!r}")
            g = Fraction(int(m.group(1)), int(m.group(2)))
        elif m := _DECIMAL.match(s):
            if m.group(2) is not None and len(m.group(2)) > MAX_DECIMALS:
                raise IFSError(f"grade {value!r} has more than {MAX_DECIMALS} decimals")
            g = Fraction(s)
        else:
            raise IFSError(f"cannot read grade {value!r}")
    else:
        raise IFSError(f"cannot read grade {value!r}")
    if not ZERO <= g <= ONE:
        raise IFSError(f"grade {g} outside [0, 1]")
    return g


@dataclass(frozen=True)
class IFS:
    """Membership ``mu`` and nonmembership ``gamma`` over ``range(n)``.

    ``strict`` records the construction mode only; it takes no part in
    equality or hashing.
    """

    mu: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]
    strict: bool = field(default=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.mu)

    def __hash__(self) -> int:
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.mu, self.gamma))
            object.__setattr__(self, "_hash", h)
        return h

    @cached_property
    def violations(self) -> tuple[int, ...]:
        """Elements where mu + gamma exceeds 1."""
        return tuple(x for x in range(self.n) if self.mu[x] + self.gamma[x] > ONE)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def grades(self) -> set[Fraction]:
        return set(self.mu) | set(self.gamma)

    def __repr__(self) -> str:
        mu = ", ".join(str(g) for g in self.mu)
        gamma = ", ".join(str(g) for g in self.gamma)
        return f"IFS(mu=[{mu}], gamma=[{gamma}])"


def make_ifs(mu: Sequence, gamma: Sequence, strict: bool = True) -> IFS:
    if len(mu) != len(gamma):
        raise IFSError(f"mu has {len(mu)} grades but gamma has {len(gamma)}")
    if not mu:
        raise IFSError("an IFS needs at least one element")
    mu_t = tuple(grade(g) for g in mu)
    gamma_t = tuple(grade(g) for g in gamma)
    if strict:
        for x, (m, g) in enumerate(zip(mu_t, gamma_t)):
            if m + g > ONE:
                raise ConstraintError(x, m + g)
    return IFS(mu_t, gamma_t, strict)


def delta(n: int) -> IFS:
    """The whole-carrier set: mu = 1, gamma = 0 everywhere."""
    if n < 1:
        raise IFSError("carrier size must be positive")
    return IFS((ONE,) * n, (ZERO,) * n, True)


def bottom(n: int) -> IFS:
    return IFS((ZERO,) * n, (ONE,) * n, True)


def characteristic(X: CrispSubset) -> IFS:
    mu = tuple(ONE if x in X else ZERO for x in range(X.n))
    return IFS(mu, tuple(ONE - m for m in mu), True)


def _check_carrier(n: int, *sets: IFS) -> None:
    for A in sets:
        if A.n != n:
            raise IFSError(f"carrier mismatch: {A.n} vs {n}")


def compose(magma: FiniteMagma, A: IFS, B: IFS) -> IFS:
    """Sup-min product on mu and inf-max product on gamma over all z = bc.

    Elements with no factorization get mu = 0 and gamma = 1.
    """
    _check_carrier(magma.n, A, B)
    ma, mb, ga, gb = A.mu, B.mu, A.gamma, B.gamma
    mu = []
    gamma = []
    for pairs in magma.factorizations:
        mu.append(max((min(ma[b], mb[c]) for b, c in pairs), default=ZERO))
        gamma.append(min((max(ga[b], gb[c]) for b, c in pairs), default=ONE))
    return IFS(tuple(mu), tuple(gamma), False)


class LatticeOpKind(str, enum.Enum):
    INTERSECTION = "intersection"
    UNION = "union"


def lattice_op(A: IFS, B: IFS, kind: LatticeOpKind | str) -> IFS:
    kind = LatticeOpKind(kind)
    _check_carrier(A.n, B)
    if kind is LatticeOpKind.INTERSECTION:
        mu = tuple(map(min, A.mu, B.mu))
        gamma = tuple(map(max, A.gamma, B.gamma))
    else:
        mu = tuple(map(max, A.mu, B.mu))
        gamma = tuple(map(min, A.gamma, B.gamma))
    return IFS(mu, gamma, A.strict and B.strict)


def intersection(A: IFS, B: IFS) -> IFS:
    return lattice_op(A, B, LatticeOpKind.INTERSECTION)


def union(A: IFS, B: IFS) -> IFS:
    return lattice_op(A, B, LatticeOpKind.UNION)


def ifs_leq(A: IFS, B: IFS) -> bool:
    """A ⊆ B: mu_A <= mu_B and gamma_A >= gamma_B pointwise."""
    _check_carrier(A.n, B)
    return all(a <= b for a, b in zip(A.mu, B.mu)) and all(
        a >= b for a, b in zip(A.gamma, B.gamma)
    )


def level_cut(A: IFS, alpha) -> CrispSubset:
    alpha = grade(alpha)
    if alpha == ZERO:
        raise IFSError("level cuts are defined for alpha in (0, 1]")
    return CrispSubset.of(
        A.n, (x for x in range(A.n) if A.mu[x] >= alpha and A.gamma[x] <= alpha)
    )


def cut_levels(A: IFS) -> list[Fraction]:
    """Alphas in (0, 1] that between them produce every distinct level cut of A.

    The cut only changes at the grades of A, so the positive grades plus one
    midpoint per gap (including the gap below the smallest) suffice.
    """
    points = sorted({ZERO, ONE} | A.grades())
    levels = set(p for p in points if p > ZERO)
    for lo, hi in zip(points, points[1:]):
        levels.add((lo + hi) / 2)
    return sorted(levels)


@dataclass(frozen=True)
class GradeChain:
    """The grades {0, 1/k, ..., 1}."""

    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 1:
            raise IFSError(f"grade chain needs k >= 1, got {self.k!r}")

    @cached_property
    def grades(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(i, self.k) for i in range(self.k + 1))

    @cached_property
    def pairs(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Admissible (mu, gamma) pairs, lexicographically ordered."""
        return tuple((m, g) for m in self.grades for g in self.grades if m + g <= ONE)

    def count(self, n: int) -> int:
        return len(self.pairs) ** n


def enumerate_ifs(n: int, chain: GradeChain, budget: Optional[int] = DEFAULT_IFS_BUDGET) -> Iterator[IFS]:
    """Every strict IFS on n elements with grades in the chain.

    Order is lexicographic in (element, mu, gamma) with element 0 slowest.
    """
    if budget is not None and chain.count(n) > budget:
        raise BudgetExceeded(f"{chain.count(n)} sets on {n} elements with k={chain.k} exceed budget {budget}")
    for combo in itertools.product(chain.pairs, repeat=n):
        yield IFS(tuple(p[0] for p in combo), tuple(p[1] for p in combo), True)


def random_ifs(n: int, chain: GradeChain, rng) -> IFS:
    combo = [rng.choice(chain.pairs) for _ in range(n)]
    return IFS(tuple(p[0] for p in combo), tuple(p[1] for p in combo), True)
