"""The two five-element AG-groupoids used throughout, with their data sets.

Tables are written 1-based and shifted to 0-based on load.
Both have left identity 4 (index 3).  ``G1`` is intra-regular; in ``G2``
element 3 (index 2) is not.
"""

from __future__ import annotations

from .ifs import IFS, make_ifs
from .magma import FiniteMagma, make_magma

G1_ROWS = [
    [1, 1, 1, 1, 1],
    [1, 2, 2, 2, 2],
    [1, 2, 4, 5, 3],
    [1, 2, 3, 4, 5],
    [1, 2, 5, 3, 4],
]

G2_ROWS = [
    [1, 1, 1, 1, 1],
    [1, 5, 5, 3, 5],
    [1, 5, 5, 2, 5],
    [1, 2, 3, 4, 5],
    [1, 5, 5, 5, 5],
]

# (mu, gamma) grade strings per element 1..5
G1_IDEAL_IFS = (["1", "0", "0", "0", "0"], ["0.3", "0.4", "0.2", "0.2", "0.2"])
G1_CUT_IFS = (["0.4", "0.8", "0", "0", "0"], ["0.4", "0.3", "0.9", "0.9", "1"])
G1_CUT_ALPHA = "0.4"
G2_A = (["0.3", "0.3", "0.3", "0.1", "0.4"], ["0.2", "0.3", "0.4", "0.5", "0.2"])
G2_B = (["0.5", "0.5", "0.5", "0.4", "0.6"], ["0.3", "0.4", "0.5", "0.6", "0.3"])


def _shift(rows):
    return [[v - 1 for v in row] for row in rows]


def g1() -> FiniteMagma:
    return make_magma(5, _shift(G1_ROWS))


def g2() -> FiniteMagma:
    return make_magma(5, _shift(G2_ROWS))


def _load(data, strict: bool) -> IFS:
    return make_ifs(data[0], data[1], strict=strict)


def g1_ideal_ifs(strict: bool = False) -> IFS:
    """The set offered on G1 as a two-sided ideal; mu + gamma = 13/10 at element 1."""
    return _load(G1_IDEAL_IFS, strict)


def g1_cut_ifs(strict: bool = False) -> IFS:
    """The set whose cut at 0.4 is {1, 2} while it is not a fuzzy one-sided ideal."""
    return _load(G1_CUT_IFS, strict)


def g2_a(strict: bool = True) -> IFS:
    return _load(G2_A, strict)


def g2_b(strict: bool = True) -> IFS:
    return _load(G2_B, strict)
