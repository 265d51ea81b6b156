"""Intuitionistic fuzzy ideal predicates.

Every predicate returns a :class:`PredicateVerdict`.  On failure the witness
is the first violating tuple, iterating x, then y, then a (for the ``(xa)y``
shapes), each ascending, with the mu inequality tested before the gamma one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import IFSError, MagmaError
from .ifs import IFS, characteristic, compose, delta, intersection
from .magma import CrispIdealKind, CrispSubset, CrispVerdict, FiniteMagma, is_crisp_ideal


class FuzzyIdealKind(str, enum.Enum):
    SUBGROUPOID = "subgroupoid"
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two_sided"
    GENERALIZED_BI = "generalized_bi"
    BI = "bi"
    INTERIOR = "interior"
    QUASI = "quasi"


MU = "mu"
GAMMA = "gamma"


@dataclass(frozen=True)
class PredicateVerdict:
    kind: FuzzyIdealKind
    holds: bool
    witness: Optional[tuple[int, ...]] = None
    component: Optional[str] = None
    # elements of a lenient input breaking mu + gamma <= 1; informational only
    lenient_elements: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


def _pairwise(magma, A, kind):
    """subgroupoid / left / right: inequalities on mu(xy), gamma(xy)."""
    t, mu, gm = magma.table, A.mu, A.gamma
    for x in range(magma.n):
        row = t[x]
        for y in range(magma.n):
            z = row[y]
            if kind is FuzzyIdealKind.LEFT:
                m, g = mu[y], gm[y]
            elif kind is FuzzyIdealKind.RIGHT:
                m, g = mu[x], gm[x]
            else:
                m, g = min(mu[x], mu[y]), max(gm[x], gm[y])
            if mu[z] < m:
                return (x, y), MU
            if gm[z] > g:
                return (x, y), GAMMA
    return None, None


def _triple(magma, A, kind):
    """generalized bi / interior: inequalities on mu((xa)y), gamma((xa)y)."""
    t, mu, gm = magma.table, A.mu, A.gamma
    n = magma.n
    for x in range(n):
        for y in range(n):
            if kind is FuzzyIdealKind.GENERALIZED_BI:
                m, g = min(mu[x], mu[y]), max(gm[x], gm[y])
            for a in range(n):
                z = t[t[x][a]][y]
                if kind is FuzzyIdealKind.INTERIOR:
                    m, g = mu[a], gm[a]
                if mu[z] < m:
                    return (x, a, y), MU
                if gm[z] > g:
                    return (x, a, y), GAMMA
    return None, None


def quasi_image(magma: FiniteMagma, A: IFS) -> IFS:
    """(A∘δ) ∩ (δ∘A): pointwise min on mu, pointwise max on gamma."""
    d = delta(magma.n)
    return intersection(compose(magma, A, d), compose(magma, d, A))


def _quasi(magma, A):
    Q = quasi_image(magma, A)
    for z in range(magma.n):
        if Q.mu[z] > A.mu[z]:
            return (z,), MU
        if Q.gamma[z] < A.gamma[z]:
            return (z,), GAMMA
    return None, None


def is_if_ideal(magma: FiniteMagma, A: IFS, kind: FuzzyIdealKind | str) -> PredicateVerdict:
    kind = FuzzyIdealKind(kind)
    if A.n != magma.n:
        raise IFSError(f"carrier mismatch: IFS on {A.n} elements, magma of order {magma.n}")
    if kind is FuzzyIdealKind.TWO_SIDED:
        parts = (FuzzyIdealKind.LEFT, FuzzyIdealKind.RIGHT)
    elif kind is FuzzyIdealKind.BI:
        parts = (FuzzyIdealKind.SUBGROUPOID, FuzzyIdealKind.GENERALIZED_BI)
    else:
        parts = (kind,)
    for part in parts:
        if part in (FuzzyIdealKind.GENERALIZED_BI, FuzzyIdealKind.INTERIOR):
            witness, comp = _triple(magma, A, part)
        elif part is FuzzyIdealKind.QUASI:
            witness, comp = _quasi(magma, A)
        else:
            witness, comp = _pairwise(magma, A, part)
        if witness is not None:
            return PredicateVerdict(kind, False, witness, comp, A.violations)
    return PredicateVerdict(kind, True, lenient_elements=A.violations)


def recheck_violation(magma: FiniteMagma, A: IFS, verdict: PredicateVerdict) -> bool:
    """Re-evaluate a failed verdict's witness directly from the definitions.

    Returns True when the witness is a genuine violation for ``verdict.kind``.
    """
    if verdict.holds or verdict.witness is None:
        return False
    t, w = magma.table, verdict.witness
    kind = verdict.kind
    checks = []  # (product element, elements bounding it)
    if len(w) == 2:
        x, y = w
        z = t[x][y]
        if kind in (FuzzyIdealKind.LEFT, FuzzyIdealKind.TWO_SIDED):
            checks.append((z, [y]))
        if kind in (FuzzyIdealKind.RIGHT, FuzzyIdealKind.TWO_SIDED):
            checks.append((z, [x]))
        if kind in (FuzzyIdealKind.SUBGROUPOID, FuzzyIdealKind.BI):
            checks.append((z, [x, y]))
    elif len(w) == 3:
        x, a, y = w
        z = t[t[x][a]][y]
        if kind in (FuzzyIdealKind.GENERALIZED_BI, FuzzyIdealKind.BI):
            checks.append((z, [x, y]))
        if kind is FuzzyIdealKind.INTERIOR:
            checks.append((z, [a]))
    elif len(w) == 1 and kind is FuzzyIdealKind.QUASI:
        (z,) = w
        # with delta's grades substituted, (A∘δ)(z) ranges over left factors, (δ∘A)(z) over right ones
        pairs = [(b, c) for b in range(magma.n) for c in range(magma.n) if t[b][c] == z]
        if not pairs:
            q_mu, q_gamma = 0, 1
        else:
            q_mu = min(max(A.mu[b] for b, _ in pairs), max(A.mu[c] for _, c in pairs))
            q_gamma = max(min(A.gamma[b] for b, _ in pairs), min(A.gamma[c] for _, c in pairs))
        if verdict.component == MU:
            return q_mu > A.mu[z]
        return q_gamma < A.gamma[z]
    for z, sources in checks:
        if verdict.component == MU and A.mu[z] < min(A.mu[s] for s in sources):
            return True
        if verdict.component == GAMMA and A.gamma[z] > max(A.gamma[s] for s in sources):
            return True
    return False


_BRIDGE = {k: CrispIdealKind(k.value) for k in FuzzyIdealKind}


@dataclass(frozen=True)
class BridgeResult:
    crisp: CrispVerdict
    fuzzy: PredicateVerdict

    @property
    def agree(self) -> bool:
        return self.crisp.holds == self.fuzzy.holds


def crisp_fuzzy_bridge(magma: FiniteMagma, X: CrispSubset, kind: FuzzyIdealKind | str) -> BridgeResult:
    """Compare a crisp ideal test on X with the fuzzy test on its characteristic set."""
    kind = FuzzyIdealKind(kind)
    if not X:
        raise MagmaError("the bridge requires a non-empty subset")
    return BridgeResult(
        is_crisp_ideal(magma, X, _BRIDGE[kind]),
        is_if_ideal(magma, characteristic(X), kind),
    )
