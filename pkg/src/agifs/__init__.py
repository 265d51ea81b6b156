"""Finite AG-groupoids, intuitionistic fuzzy sets over them, and a claim audit lab."""

from .errors import AGError, ArityError, BudgetExceeded, ConstraintError, IFSError, MagmaError, ParseError
from .ideals import FuzzyIdealKind, crisp_fuzzy_bridge, is_if_ideal
from .ifs import IFS, GradeChain, characteristic, compose, delta, enumerate_ifs, grade, intersection, level_cut, make_ifs, union
from .magma import (
    CrispIdealKind,
    CrispSubset,
    FiniteMagma,
    LawKind,
    check_law,
    enumerate_ag_groupoids,
    is_crisp_ideal,
    is_intra_regular,
    left_identities,
    make_magma,
)
from .claims import ClaimId, ClaimReport, SearchBudget, Scope, Verdict, audit_all, duo_audit, search_counterexample, verify_claim, verify_semilattice

__version__ = "0.1.0"
