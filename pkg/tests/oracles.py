"""Brute-force reference implementations, written straight from the definitions.

None of these import the package's algorithms; they work on plain nested
lists and Fractions so that agreement with the library means something.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def left_invertive(t) -> bool:
    n = len(t)
    return all(t[t[a][b]][c] == t[t[c][b]][a] for a in range(n) for b in range(n) for c in range(n))


def census(n: int, with_identity: bool = False) -> list:
    """Every n x n table satisfying (ab)c = (cb)a, by filtering all n^(n^2) tables."""
    found = []
    for flat in itertools.product(range(n), repeat=n * n):
        t = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if not left_invertive(t):
            continue
        if with_identity and not any(all(t[e][x] == x for x in range(n)) for e in range(n)):
            continue
        found.append(t)
    return found


def intra_witnesses(t, a) -> list:
    n = len(t)
    aa = t[a][a]
    return [(x, y) for x in range(n) for y in range(n) if t[t[x][aa]][y] == a]


def compose(t, A, B):
    """(mu, gamma) of A∘B by a double loop over every (b, c)."""
    n = len(t)
    mu = [Fraction(0)] * n
    gamma = [Fraction(1)] * n
    seen = [False] * n
    for b in range(n):
        for c in range(n):
            z = t[b][c]
            m = min(A[0][b], B[0][c])
            g = max(A[1][b], B[1][c])
            if not seen[z]:
                mu[z], gamma[z], seen[z] = m, g, True
            else:
                mu[z] = max(mu[z], m)
                gamma[z] = min(gamma[z], g)
    return mu, gamma


def meet(A, B):
    return [min(p, q) for p, q in zip(A[0], B[0])], [max(p, q) for p, q in zip(A[1], B[1])]


def subset_product(t, X, Y) -> set:
    return {t[x][y] for x in X for y in Y}


def crisp_ideal(t, X, kind) -> bool:
    n = len(t)
    X = set(X)
    S = set(range(n))
    XX = subset_product(t, X, X)
    if kind == "subgroupoid":
        return XX <= X
    if kind == "left":
        return subset_product(t, S, X) <= X
    if kind == "right":
        return subset_product(t, X, S) <= X
    if kind == "two_sided":
        return subset_product(t, S, X) <= X and subset_product(t, X, S) <= X
    if kind == "generalized_bi":
        return subset_product(t, subset_product(t, X, S), X) <= X
    if kind == "bi":
        return XX <= X and subset_product(t, subset_product(t, X, S), X) <= X
    if kind == "interior":
        return subset_product(t, subset_product(t, S, X), S) <= X
    if kind == "quasi":
        return subset_product(t, X, S) & subset_product(t, S, X) <= X
    raise ValueError(kind)


def fuzzy_ideal(t, A, kind) -> bool:
    n = len(t)
    mu, gm = A
    R = range(n)
    if kind == "subgroupoid":
        return all(mu[t[x][y]] >= min(mu[x], mu[y]) and gm[t[x][y]] <= max(gm[x], gm[y]) for x in R for y in R)
    if kind == "left":
        return all(mu[t[x][y]] >= mu[y] and gm[t[x][y]] <= gm[y] for x in R for y in R)
    if kind == "right":
        return all(mu[t[x][y]] >= mu[x] and gm[t[x][y]] <= gm[x] for x in R for y in R)
    if kind == "two_sided":
        return fuzzy_ideal(t, A, "left") and fuzzy_ideal(t, A, "right")
    if kind == "generalized_bi":
        return all(
            mu[t[t[x][a]][y]] >= min(mu[x], mu[y]) and gm[t[t[x][a]][y]] <= max(gm[x], gm[y])
            for x in R for a in R for y in R
        )
    if kind == "bi":
        return fuzzy_ideal(t, A, "subgroupoid") and fuzzy_ideal(t, A, "generalized_bi")
    if kind == "interior":
        return all(mu[t[t[x][a]][y]] >= mu[a] and gm[t[t[x][a]][y]] <= gm[a] for x in R for a in R for y in R)
    if kind == "quasi":
        d = ([Fraction(1)] * n, [Fraction(0)] * n)
        qm, qg = meet(compose(t, A, d), compose(t, d, A))
        return all(qm[z] <= mu[z] and qg[z] >= gm[z] for z in R)
    raise ValueError(kind)


def chain_sets(n: int, k: int):
    grades = [Fraction(i, k) for i in range(k + 1)]
    pairs = [(m, g) for m in grades for g in grades if m + g <= 1]
    for combo in itertools.product(pairs, repeat=n):
        yield [p[0] for p in combo], [p[1] for p in combo]
