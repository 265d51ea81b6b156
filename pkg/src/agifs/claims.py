"""Executable registry of the algebraic claims, and their audits.

Every statement is checked extensionally on a concrete magma.  Statements
about "every IFS" are quantified over the strict sets with grades in a
finite :class:`~agifs.ifs.GradeChain`, and every report says so through its
``scope``.  Refutations carry a witness in the condition language of
:mod:`agifs.conditions`, which re-verifies it independently of this module.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

from .conditions import HOLDS, IFF, IMPLIES, cond, ifs_from_data, ifs_to_data, is_violated
from .errors import ArityError, BudgetExceeded
from .ideals import FuzzyIdealKind, is_if_ideal
from .ifs import (
    IFS,
    GradeChain,
    characteristic,
    compose,
    cut_levels,
    delta,
    enumerate_ifs,
    ifs_leq,
    intersection,
    level_cut,
    random_ifs,
)
from .magma import (
    CrispIdealKind,
    CrispSubset,
    FiniteMagma,
    LawKind,
    check_law,
    enumerate_ag_groupoids,
    intra_regular_witness,
    is_crisp_ideal,
    is_intra_regular,
    left_identities,
    nonempty_subsets,
)

F = FuzzyIdealKind


class ClaimId(str, enum.Enum):
    LAW_MEDIAL_FROM_LI = "LAW_MEDIAL_FROM_LI"
    LAW_PARAMEDIAL_WITH_E = "LAW_PARAMEDIAL_WITH_E"
    LAW_4_WITH_E = "LAW_4_WITH_E"
    LIFTED_LAWS = "LIFTED_LAWS"
    T_LEVELCUT_FWD = "T_LEVELCUT_FWD"
    T_LEVELCUT_BI_FWD = "T_LEVELCUT_BI_FWD"
    L_COMPOSE_CHAR = "L_COMPOSE_CHAR"
    T_BI_CHAR = "T_BI_CHAR"
    T_INT_CHAR = "T_INT_CHAR"
    L_LEFT_IFF_RIGHT = "L_LEFT_IFF_RIGHT"
    C_FUZZY_DUO = "C_FUZZY_DUO"
    T_DUO_EQUIV = "T_DUO_EQUIV"
    L_CHAR_BRIDGE = "L_CHAR_BRIDGE"
    L_ABSORB = "L_ABSORB"
    C_ABSORB_IDEAL = "C_ABSORB_IDEAL"
    L_DELTA_IDEM = "L_DELTA_IDEM"
    T_QUASI_CHAR = "T_QUASI_CHAR"
    T_QUASI_EQ_2SIDED = "T_QUASI_EQ_2SIDED"
    T_INT_EQ_2SIDED = "T_INT_EQ_2SIDED"
    T_GRAND_EQUIV = "T_GRAND_EQUIV"
    L_PROD_EQ_MEET = "L_PROD_EQ_MEET"
    L_PROD_EQ_MEET_NONCONVERSE = "L_PROD_EQ_MEET_NONCONVERSE"
    L_IDEMPOTENT = "L_IDEMPOTENT"
    T_SEMILATTICE = "T_SEMILATTICE"


class Verdict(str, enum.Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    NOT_APPLICABLE = "not_applicable"


class Scope(str, enum.Enum):
    EXHAUSTIVE = "exhaustive-over-chain"
    SAMPLED = "sampled"
    SINGLE = "single-instance"


@dataclass(frozen=True)
class SearchBudget:
    max_order: int = 4
    chain_k: int = 2
    max_instances: int = 100_000
    seed: Optional[int] = 0
    samples: int = 200
    # None: follow the claim's hypotheses; True/False: force the census filter
    left_identity: Optional[bool] = None

    def __post_init__(self) -> None:
        for name in ("max_order", "chain_k", "max_instances", "samples"):
            if getattr(self, name) < 1:
                raise ValueError(f"budget field {name} must be positive")


@dataclass
class ClaimReport:
    claim: ClaimId
    verdict: Verdict
    scope: Scope
    statement: str
    magma: FiniteMagma
    chain_k: Optional[int] = None
    inputs: list = field(default_factory=list)
    witness: Optional[dict] = None
    failed_precondition: Optional[str] = None
    details: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    truncated: bool = False


# -- registry ---------------------------------------------------------------

AG = "left_invertive"
E = "left_identity"
IR = "intra_regular"
NOT_IR = "not_intra_regular"


@dataclass(frozen=True)
class ClaimDef:
    id: ClaimId
    statement: str
    requires: tuple[str, ...]
    arity: int  # number of IFS inputs for a single instance; 0 for magma-level claims


STATEMENTS = [
    (ClaimId.LAW_MEDIAL_FROM_LI, "every AG-groupoid satisfies (ab)(cd) = (ac)(bd)", (AG,), 0),
    (ClaimId.LAW_PARAMEDIAL_WITH_E, "an AG-groupoid with left identity satisfies (ab)(cd) = (dc)(ba)", (AG, E), 0),
    (ClaimId.LAW_4_WITH_E, "an AG-groupoid with left identity satisfies a(bc) = b(ac)", (AG, E), 0),
    (ClaimId.LIFTED_LAWS, "the IFS of an AG-groupoid under ∘ satisfy (ab)c=(cb)a, (ab)(cd)=(ac)(bd), (ab)(cd)=(dc)(ba) and a(bc)=b(ac)", (AG,), 4),
    (ClaimId.T_LEVELCUT_FWD, "if A is a fuzzy right (left, two-sided) ideal then every non-empty cut A_α is a right (left, two-sided) ideal", (AG,), 1),
    (ClaimId.T_LEVELCUT_BI_FWD, "if A is a fuzzy bi- (generalized bi-) ideal then every non-empty cut A_α is a bi- (generalized bi-) ideal", (AG,), 1),
    (ClaimId.L_COMPOSE_CHAR, "A is a subgroupoid iff A∘A ⊆ A; a left ideal iff δ∘A ⊆ A; a right ideal iff A∘δ ⊆ A", (AG,), 1),
    (ClaimId.T_BI_CHAR, "with S intra-regular with left identity: A is a bi-ideal iff (A∘δ)∘A = A and A∘A = A", (AG, E, IR), 1),
    (ClaimId.T_INT_CHAR, "with S intra-regular with left identity: A is an interior ideal iff (δ∘A)∘δ = A", (AG, E, IR), 1),
    (ClaimId.L_LEFT_IFF_RIGHT, "with S intra-regular with left identity: A is a left ideal iff A is a right ideal", (AG, E, IR), 1),
    (ClaimId.C_FUZZY_DUO, "an intra-regular AG-groupoid with left identity is a fuzzy duo", (AG, E, IR), 1),
    (ClaimId.T_DUO_EQUIV, "an intra-regular AG-groupoid with left identity is a left (right) duo iff it is a fuzzy left (right) duo", (AG, E, IR), 0),
    (ClaimId.L_CHAR_BRIDGE, "X is a subgroupoid (left, right, two-sided ideal) iff χ_X is a fuzzy one", (AG,), 0),
    (ClaimId.L_ABSORB, "in an intra-regular S, δ∘A = A and A∘δ = A for every IFS A", (AG, IR), 1),
    (ClaimId.C_ABSORB_IDEAL, "in an intra-regular S, δ∘A = A and A∘δ = A for every fuzzy left (right, two-sided) ideal A", (AG, IR), 1),
    (ClaimId.L_DELTA_IDEM, "in an intra-regular S, δ∘δ = δ", (AG, IR), 0),
    (ClaimId.T_QUASI_CHAR, "with S intra-regular with left identity: A is a quasi ideal iff (A∘δ) ∩ (δ∘A) = A", (AG, E, IR), 1),
    (ClaimId.T_QUASI_EQ_2SIDED, "with S intra-regular with left identity: A is two-sided iff A is a quasi ideal", (AG, E, IR), 1),
    (ClaimId.T_INT_EQ_2SIDED, "with S intra-regular with left identity: A is two-sided iff A is an interior ideal", (AG, E, IR), 1),
    (ClaimId.T_GRAND_EQUIV, "with S intra-regular with left identity: left, right, two-sided, bi, generalized bi, interior, quasi, and (A∘δ = A and δ∘A = A) coincide", (AG, E, IR), 1),
    (ClaimId.L_PROD_EQ_MEET, "with S intra-regular with left identity: A∘B = A ∩ B for fuzzy two-sided ideals A, B", (AG, E, IR), 2),
    (ClaimId.L_PROD_EQ_MEET_NONCONVERSE, "a non-intra-regular AG-groupoid with left identity on which A∘B = A ∩ B for fuzzy two-sided ideals A, B", (AG, E, NOT_IR), 2),
    (ClaimId.L_IDEMPOTENT, "in an intra-regular S every fuzzy two-sided ideal satisfies A∘A = A", (AG, IR), 1),
    (ClaimId.T_SEMILATTICE, "in an intra-regular S the fuzzy two-sided ideals form a semilattice under ∘ with identity δ", (AG, IR), 0),
]

REGISTRY: dict[ClaimId, ClaimDef] = {cid: ClaimDef(cid, text, req, arity) for cid, text, req, arity in STATEMENTS}

# claims about the magma alone, decided on a single instance
MAGMA_LEVEL = frozenset(
    {ClaimId.LAW_MEDIAL_FROM_LI, ClaimId.LAW_PARAMEDIAL_WITH_E, ClaimId.LAW_4_WITH_E, ClaimId.L_DELTA_IDEM}
)

GRAND_PROPERTIES = (
    "left",
    "right",
    "two_sided",
    "bi",
    "generalized_bi",
    "interior",
    "quasi",
    "absorbs_delta",
)

# expressions in the condition language
A_D = ["o", "A", "delta"]
D_A = ["o", "delta", "A"]
A_A = ["o", "A", "A"]
A_B = ["o", "A", "B"]


# -- evaluation context ------------------------------------------------------


class Lab:
    """Caches compositions and predicates for one magma and grade chain."""

    def __init__(
        self,
        magma: FiniteMagma,
        chain: Optional[GradeChain] = None,
        budget: Optional[SearchBudget] = None,
        truncate: bool = False,
    ):
        self.magma = magma
        self.chain = chain
        self.budget = budget or SearchBudget()
        self.truncate = truncate
        self.truncated = False
        self.delta = delta(magma.n)
        self._products: dict[tuple[IFS, IFS], IFS] = {}
        self._preds: dict[tuple[IFS, str], bool] = {}
        self._crisp: dict[tuple[int, str], bool] = {}

    # primitive operations with caching
    def o(self, A: IFS, B: IFS) -> IFS:
        key = (A, B)
        P = self._products.get(key)
        if P is None:
            P = self._products[key] = compose(self.magma, A, B)
        return P

    def pred(self, A: IFS, kind: str) -> bool:
        kind = getattr(kind, "value", kind)
        key = (A, kind)
        v = self._preds.get(key)
        if v is None:
            if kind == "absorbs_delta":
                v = self.o(A, self.delta) == A and self.o(self.delta, A) == A
            elif kind == F.TWO_SIDED.value:
                v = self.pred(A, "left") and self.pred(A, "right")
            elif kind == F.BI.value:
                v = self.pred(A, "subgroupoid") and self.pred(A, "generalized_bi")
            else:
                v = is_if_ideal(self.magma, A, kind).holds
            self._preds[key] = v
        return v

    def crisp(self, X: CrispSubset, kind: str) -> bool:
        kind = getattr(kind, "value", kind)
        key = (X.mask, kind)
        v = self._crisp.get(key)
        if v is None:
            v = self._crisp[key] = is_crisp_ideal(self.magma, X, kind).holds
        return v

    def ev(self, expr, sets: Sequence[IFS]) -> IFS:
        if isinstance(expr, str):
            return self.delta if expr == "delta" else sets["ABCD".index(expr)]
        op, lhs, rhs = expr
        left, right = self.ev(lhs, sets), self.ev(rhs, sets)
        if op == "o":
            return self.o(left, right)
        if op == "meet":
            return intersection(left, right)
        raise ValueError(op)

    # condition builders: value computed through the caches above
    def c_fuzzy(self, kind: str, sets: Sequence[IFS], expr="A") -> dict:
        kind = getattr(kind, "value", kind)
        target = self.ev(expr, sets)
        if kind == "absorbs_delta":
            return self.c_and(self.c_equal(["o", expr, "delta"], expr, sets), self.c_equal(["o", "delta", expr], expr, sets))
        args = {"kind": kind, "sets": [ifs_to_data(S) for S in sets]}
        if expr != "A":
            args["expr"] = expr
        return cond("fuzzy_ideal", self.pred(target, kind), **args)

    def c_equal(self, lhs, rhs, sets: Sequence[IFS], expected: bool = True) -> dict:
        value = self.ev(lhs, sets) == self.ev(rhs, sets)
        return cond("equal", value, expected, lhs=lhs, rhs=rhs, sets=[ifs_to_data(S) for S in sets])

    def c_subset(self, lhs, rhs, sets: Sequence[IFS]) -> dict:
        value = ifs_leq(self.ev(lhs, sets), self.ev(rhs, sets))
        return cond("subset_of", value, lhs=lhs, rhs=rhs, sets=[ifs_to_data(S) for S in sets])

    def c_crisp(self, kind: str, X: CrispSubset) -> dict:
        return cond("crisp_ideal", self.crisp(X, kind), kind=getattr(kind, "value", kind), subset=X.members())

    def c_cut(self, kind: str, A: IFS, alpha) -> dict:
        cut = level_cut(A, alpha)
        value = not cut or self.crisp(cut, kind)
        return cond("cut_ideal", value, kind=getattr(kind, "value", kind), sets=[ifs_to_data(A)], alpha=str(alpha), cut=cut.members())

    @staticmethod
    def c_and(*parts: dict) -> dict:
        return cond("and", all(p["value"] for p in parts), parts=list(parts))

    # magma-level facts
    @cached_property
    def is_ag(self) -> bool:
        return check_law(self.magma, LawKind.LEFT_INVERTIVE).holds

    @cached_property
    def identities(self) -> list[int]:
        return left_identities(self.magma)

    @cached_property
    def intra(self):
        return is_intra_regular(self.magma)

    def precondition_failure(self, requires: Iterable[str]) -> Optional[tuple[str, dict]]:
        for req in requires:
            if req == AG and not self.is_ag:
                w = check_law(self.magma, LawKind.LEFT_INVERTIVE).witness
                return "left_invertive: (ab)c = (cb)a fails", {"tuple": list(w)}
            if req == E and not self.identities:
                return "left_identity: no element e with ex = x for all x", {}
            if req == IR and not self.intra.holds:
                return (
                    "intra_regular: some element a has no x, y with (x(aa))y = a",
                    {
                        "failing_element": self.intra.failing,
                        "failing_elements": [a for a in self.magma.elements if intra_regular_witness(self.magma, a) is None],
                    },
                )
            if req == NOT_IR and self.intra.holds:
                return "not_intra_regular: the magma is intra-regular", {}
        return None

    # populations
    def require_chain(self, claim: ClaimId) -> GradeChain:
        if self.chain is None:
            raise ArityError(f"{claim.value} quantifies over all IFS; supply inputs or a grade chain")
        return self.chain

    @cached_property
    def population(self) -> list[IFS]:
        chain = self.chain
        total = chain.count(self.magma.n)
        cap = self.budget.max_instances
        if total > cap:
            if not self.truncate:
                raise BudgetExceeded(f"{total} sets exceed the budget of {cap}")
            self.truncated = True
            return list(itertools.islice(enumerate_ifs(self.magma.n, chain, budget=None), cap))
        return list(enumerate_ifs(self.magma.n, chain, budget=None))

    @cached_property
    def two_sided_family(self) -> list[IFS]:
        return [A for A in self.population if self.pred(A, "two_sided")]

    def fuzzy_duo(self, side: str) -> tuple[bool, Optional[IFS]]:
        for A in self.population:
            if self.pred(A, side) and not self.pred(A, "two_sided"):
                return False, A
        return True, None

    def crisp_duo(self, side: str) -> tuple[bool, Optional[CrispSubset]]:
        for X in nonempty_subsets(self.magma.n):
            if self.crisp(X, side) and not self.crisp(X, "two_sided"):
                return False, X
        return True, None


# -- evaluation driver -------------------------------------------------------


@dataclass
class Outcome:
    verdict: Verdict
    scope: Scope
    witness: Optional[dict] = None
    details: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    unmet: Optional[str] = None


Statement = tuple[str, list]  # (form, conditions)


def _scan(instances: Iterable, check: Callable[..., Optional[list[Statement]]], scope: Scope) -> Outcome:
    """Run ``check`` over every instance.

    ``check`` returns None when its hypothesis does not apply to the instance,
    else the list of statements to test (statements known to hold may be
    omitted).  The first violated statement becomes the witness.
    """
    checked = applicable = failures = 0
    first = None
    for inst in instances:
        checked += 1
        stmts = check(*inst)
        if stmts is None:
            continue
        applicable += 1
        bad = [(form, conds) for form, conds in stmts if is_violated(form, conds)]
        if bad:
            failures += 1
            if first is None:
                first = {"form": bad[0][0], "conditions": bad[0][1]}
    details = {"instances": checked, "applicable": applicable, "failures": failures}
    if applicable == 0:
        return Outcome(Verdict.NOT_APPLICABLE, scope, details=details, unmet="hypothesis: not satisfied by any instance in scope")
    return Outcome(Verdict.REFUTED if failures else Verdict.CONFIRMED, scope, first, details)


def _instances(lab: Lab, claim: ClaimId, inputs: Optional[Sequence[IFS]], arity: int):
    """Instances of IFS tuples plus their scope."""
    if inputs:
        if len(inputs) != arity:
            raise ArityError(f"{claim.value} takes {arity} IFS inputs, got {len(inputs)}")
        for A in inputs:
            if A.n != lab.magma.n:
                raise ArityError(f"input on {A.n} elements for a magma of order {lab.magma.n}")
        return [tuple(inputs)], Scope.SINGLE
    lab.require_chain(claim)
    if arity == 1:
        return [(A,) for A in lab.population], Scope.EXHAUSTIVE
    fam = lab.two_sided_family
    return list(itertools.product(fam, repeat=arity)), Scope.EXHAUSTIVE


# -- individual claims -------------------------------------------------------


def _law_claim(law: LawKind):
    def run(lab: Lab, inputs) -> Outcome:
        rep = check_law(lab.magma, law)
        if rep.holds:
            return Outcome(Verdict.CONFIRMED, Scope.SINGLE, details={"law": law.value})
        w = {"form": HOLDS, "conditions": [cond("law", False, law=law.value, tuple=list(rep.witness))]}
        return Outcome(Verdict.REFUTED, Scope.SINGLE, w, {"law": law.value})

    return run


LIFTED = [
    ("left_invertive", 3, [["o", ["o", "A", "B"], "C"], ["o", ["o", "C", "B"], "A"]]),
    ("medial", 4, [["o", ["o", "A", "B"], ["o", "C", "D"]], ["o", ["o", "A", "C"], ["o", "B", "D"]]]),
    ("paramedial", 4, [["o", ["o", "A", "B"], ["o", "C", "D"]], ["o", ["o", "D", "C"], ["o", "B", "A"]]]),
    ("law4", 3, [["o", "A", ["o", "B", "C"]], ["o", "B", ["o", "A", "C"]]]),
]


def _lifted_laws(lab: Lab, inputs) -> Outcome:
    n = lab.magma.n
    if inputs:
        tuples, scope = _instances(lab, ClaimId.LIFTED_LAWS, inputs, 4)
    else:
        singletons = [characteristic(CrispSubset.of(n, [x])) for x in range(n)]
        tuples = list(itertools.product(singletons, repeat=4)) if n ** 4 <= 10_000 else []
        rng = random.Random(lab.budget.seed)
        chain = lab.chain or GradeChain(lab.budget.chain_k)
        tuples += [tuple(random_ifs(n, chain, rng) for _ in range(4)) for _ in range(lab.budget.samples)]
        scope = Scope.SAMPLED

    def check(*sets):
        stmts = []
        for law, arity, (lhs, rhs) in LIFTED:
            used = list(sets[:arity])
            if lab.ev(lhs, used) != lab.ev(rhs, used):
                stmts.append((HOLDS, [lab.c_equal(lhs, rhs, used)]))
        return stmts

    out = _scan(tuples, check, scope)
    if out.witness:
        out.details["failed_law"] = _lifted_law_of(out.witness)
    return out


def _lifted_law_of(witness: dict) -> str:
    lhs = witness["conditions"][0]["args"]["lhs"]
    for law, _, (l, _) in LIFTED:
        if l == lhs:
            return law
    return "?"


def _levelcut(kinds: tuple[str, ...]):
    def run(lab: Lab, inputs) -> Outcome:
        claim = ClaimId.T_LEVELCUT_FWD if "right" in kinds else ClaimId.T_LEVELCUT_BI_FWD
        instances, scope = _instances(lab, claim, inputs, 1)
        converse = []

        def check(A):
            held = [k for k in kinds if lab.pred(A, k)]
            stmts = []
            for alpha in cut_levels(A):
                cut = level_cut(A, alpha)
                if not cut:
                    continue
                for k in kinds:
                    ideal = lab.crisp(cut, k)
                    if k in held and not ideal:
                        stmts.append((IMPLIES, [lab.c_fuzzy(k, [A]), lab.c_cut(k, A, alpha)]))
                    elif ideal and k not in held and not converse:
                        converse.append({"form": IMPLIES, "conditions": [lab.c_cut(k, A, alpha), lab.c_fuzzy(k, [A])]})
            return stmts if held else None

        out = _scan(instances, check, scope)
        out.details["kinds"] = list(kinds)
        out.details["converse_witness"] = converse[0] if converse else None
        if out.verdict is Verdict.NOT_APPLICABLE and inputs:
            out.unmet = f"hypothesis: input is not a fuzzy {' / '.join(kinds)} ideal"
        return out

    return run


def _iff_claim(claim: ClaimId, pairs: Callable[[Lab, IFS], list]):
    def run(lab: Lab, inputs) -> Outcome:
        instances, scope = _instances(lab, claim, inputs, 1)
        return _scan(instances, lambda A: [(IFF, list(p)) for p in pairs(lab, A)], scope)

    return run


def _compose_char_pairs(lab, A):
    return [
        (lab.c_fuzzy("subgroupoid", [A]), lab.c_subset(A_A, "A", [A])),
        (lab.c_fuzzy("left", [A]), lab.c_subset(D_A, "A", [A])),
        (lab.c_fuzzy("right", [A]), lab.c_subset(A_D, "A", [A])),
    ]


def _bi_char_pairs(lab, A):
    return [(lab.c_fuzzy("bi", [A]), lab.c_and(lab.c_equal(["o", A_D, "A"], "A", [A]), lab.c_equal(A_A, "A", [A])))]


def _int_char_pairs(lab, A):
    return [(lab.c_fuzzy("interior", [A]), lab.c_equal(["o", D_A, "delta"], "A", [A]))]


def _quasi_char_pairs(lab, A):
    return [(lab.c_fuzzy("quasi", [A]), lab.c_equal(["meet", A_D, D_A], "A", [A]))]


def _pred_pair(k1: str, k2: str):
    return lambda lab, A: [(lab.c_fuzzy(k1, [A]), lab.c_fuzzy(k2, [A]))]


def _fuzzy_duo_claim(lab: Lab, inputs) -> Outcome:
    instances, scope = _instances(lab, ClaimId.C_FUZZY_DUO, inputs, 1)

    def check(A):
        stmts = []
        for side in ("left", "right"):
            if lab.pred(A, side):
                stmts.append((IMPLIES, [lab.c_fuzzy(side, [A]), lab.c_fuzzy("two_sided", [A])]))
        return stmts or None

    out = _scan(instances, check, scope)
    if out.verdict is Verdict.NOT_APPLICABLE and inputs:
        out.unmet = "hypothesis: input is neither a fuzzy left nor a fuzzy right ideal"
    return out


def _duo_outcome(lab: Lab) -> Outcome:
    chain = lab.require_chain(ClaimId.T_DUO_EQUIV)
    details = {"chain_k": chain.k}
    first = None
    for side in ("left", "right"):
        crisp, X = lab.crisp_duo(side)
        fuzzy, A = lab.fuzzy_duo(side)
        details[f"crisp_{side}_duo"] = crisp
        details[f"fuzzy_{side}_duo"] = fuzzy
        details[f"crisp_{side}_witness"] = X.members() if X is not None else None
        details[f"fuzzy_{side}_witness"] = ifs_to_data(A) if A is not None else None
        if crisp != fuzzy and first is None:
            first = {
                "form": IFF,
                "conditions": [cond("crisp_duo", crisp, side=side), cond("fuzzy_duo", fuzzy, side=side, k=chain.k)],
            }
    scope = Scope.SAMPLED if lab.truncated else Scope.EXHAUSTIVE
    out = Outcome(Verdict.REFUTED if first else Verdict.CONFIRMED, scope, first, details)
    out.notes.append(f"fuzzy duo side is bounded to grades in the chain k={chain.k}")
    return out


def _duo_claim(lab: Lab, inputs) -> Outcome:
    if inputs:
        raise ArityError("T_DUO_EQUIV takes no IFS inputs")
    return _duo_outcome(lab)


BRIDGE_KINDS = ("subgroupoid", "left", "right", "two_sided")
EXTENDED_KINDS = ("generalized_bi", "bi", "interior", "quasi")


def _bridge_claim(lab: Lab, inputs) -> Outcome:
    if inputs:
        raise ArityError("L_CHAR_BRIDGE quantifies over subsets and takes no IFS inputs")
    n = lab.magma.n
    if n > 12:
        raise BudgetExceeded("subset enumeration is limited to carriers of size 12")
    extended = {k: 0 for k in EXTENDED_KINDS}

    def check(X):
        chi = characteristic(X)
        for k in EXTENDED_KINDS:
            if lab.crisp(X, k) != lab.pred(chi, k):
                extended[k] += 1
        return [(IFF, [lab.c_crisp(k, X), lab.c_fuzzy(k, [chi])]) for k in BRIDGE_KINDS]

    out = _scan([(X,) for X in nonempty_subsets(n)], check, Scope.EXHAUSTIVE)
    out.details["extended_kind_disagreements"] = extended
    out.notes.append("quantified over every non-empty subset of the carrier")
    return out


def _absorb_claim(lab: Lab, inputs) -> Outcome:
    instances, scope = _instances(lab, ClaimId.L_ABSORB, inputs, 1)

    def check(A):
        return [(HOLDS, [lab.c_equal(D_A, "A", [A])]), (HOLDS, [lab.c_equal(A_D, "A", [A])])]

    return _scan(instances, check, scope)


def _absorb_ideal_claim(lab: Lab, inputs) -> Outcome:
    instances, scope = _instances(lab, ClaimId.C_ABSORB_IDEAL, inputs, 1)

    def check(A):
        kinds = [k for k in ("left", "right", "two_sided") if lab.pred(A, k)]
        if not kinds:
            return None
        absorbs = lab.c_and(lab.c_equal(D_A, "A", [A]), lab.c_equal(A_D, "A", [A]))
        return [(IMPLIES, [lab.c_fuzzy(k, [A]), absorbs]) for k in kinds]

    return _scan(instances, check, scope)


def _delta_idem(lab: Lab, inputs) -> Outcome:
    if inputs:
        raise ArityError("L_DELTA_IDEM takes no IFS inputs")
    return _scan([()], lambda: [(HOLDS, [lab.c_equal(["o", "delta", "delta"], "delta", [])])], Scope.SINGLE)


def _grand_claim(lab: Lab, inputs) -> Outcome:
    instances, scope = _instances(lab, ClaimId.T_GRAND_EQUIV, inputs, 1)
    props = GRAND_PROPERTIES
    size = len(props)
    separating = [[None] * size for _ in range(size)]
    counts = [[0] * size for _ in range(size)]
    for (A,) in instances:
        values = [lab.pred(A, p) for p in props]
        for i in range(size):
            for j in range(i + 1, size):
                if values[i] != values[j]:
                    counts[i][j] += 1
                    counts[j][i] += 1
                    if separating[i][j] is None:
                        separating[i][j] = A
    matrix = [[counts[i][j] == 0 for j in range(size)] for i in range(size)]
    first = None
    pair_witnesses = {}
    for i in range(size):
        for j in range(i + 1, size):
            A = separating[i][j]
            if A is None:
                continue
            w = {"form": IFF, "conditions": [lab.c_fuzzy(props[i], [A]), lab.c_fuzzy(props[j], [A])]}
            pair_witnesses[f"{props[i]}|{props[j]}"] = w
            if first is None:
                first = w
    details = {
        "properties": list(props),
        "matrix": matrix,
        "separation_counts": counts,
        "pair_witnesses": pair_witnesses,
        "instances": len(instances),
    }
    return Outcome(Verdict.REFUTED if first else Verdict.CONFIRMED, scope, first, details)


def comparison_table(lab: Lab, A: IFS, B: IFS) -> list[dict]:
    """Element-wise A∘B against A ∩ B."""
    P, M = lab.o(A, B), intersection(A, B)
    return [
        {
            "element": z,
            "product_mu": str(P.mu[z]),
            "meet_mu": str(M.mu[z]),
            "product_gamma": str(P.gamma[z]),
            "meet_gamma": str(M.gamma[z]),
            "equal": P.mu[z] == M.mu[z] and P.gamma[z] == M.gamma[z],
        }
        for z in range(lab.magma.n)
    ]


def _prod_meet_claim(lab: Lab, inputs) -> Outcome:
    instances, scope = _instances(lab, ClaimId.L_PROD_EQ_MEET, inputs, 2)

    def check(A, B):
        if not (lab.pred(A, "two_sided") and lab.pred(B, "two_sided")):
            return None
        hyp = lab.c_and(lab.c_fuzzy("two_sided", [A, B], "A"), lab.c_fuzzy("two_sided", [A, B], "B"))
        return [(IMPLIES, [hyp, lab.c_equal(A_B, ["meet", "A", "B"], [A, B])])]

    out = _scan(instances, check, scope)
    if out.verdict is Verdict.NOT_APPLICABLE and inputs:
        out.unmet = "hypothesis: inputs are not both fuzzy two-sided ideals"
    return out


def _prod_meet_nonconverse(lab: Lab, inputs) -> Outcome:
    if inputs:
        instances, scope = _instances(lab, ClaimId.L_PROD_EQ_MEET_NONCONVERSE, inputs, 2)

        def check(A, B):
            return [(HOLDS, [
                lab.c_fuzzy("two_sided", [A, B], "A"),
                lab.c_fuzzy("two_sided", [A, B], "B"),
                lab.c_equal(A_B, ["meet", "A", "B"], [A, B]),
            ])]
    else:
        instances, scope = _instances(lab, ClaimId.L_PROD_EQ_MEET_NONCONVERSE, None, 2)

        def check(A, B):
            return [(HOLDS, [lab.c_equal(A_B, ["meet", "A", "B"], [A, B])])]

    return _scan(instances, check, scope)


def _idempotent_claim(lab: Lab, inputs) -> Outcome:
    instances, scope = _instances(lab, ClaimId.L_IDEMPOTENT, inputs, 1)

    def check(A):
        if not lab.pred(A, "two_sided"):
            return None
        return [(IMPLIES, [lab.c_fuzzy("two_sided", [A]), lab.c_equal(A_A, "A", [A])])]

    return _scan(instances, check, scope)


def _semilattice_outcome(lab: Lab) -> Outcome:
    lab.require_chain(ClaimId.T_SEMILATTICE)
    fam = lab.two_sided_family
    failures = {"idempotent": 0, "identity": 0, "closure": 0, "commutative": 0, "associative": 0}
    first = None

    def record(prop: str, conds: list) -> None:
        nonlocal first
        failures[prop] += 1
        if first is None:
            first = {"form": HOLDS, "conditions": conds}

    d = lab.delta
    for A in fam:
        if lab.o(A, A) != A:
            record("idempotent", [lab.c_equal(A_A, "A", [A])])
        if lab.o(d, A) != A or lab.o(A, d) != A:
            record("identity", [lab.c_equal(D_A, "A", [A]), lab.c_equal(A_D, "A", [A])])
    for A, B in itertools.product(fam, repeat=2):
        if not lab.pred(lab.o(A, B), "two_sided"):
            record("closure", [lab.c_fuzzy("two_sided", [A, B], A_B)])
        if lab.o(A, B) != lab.o(B, A):
            record("commutative", [lab.c_equal(A_B, ["o", "B", "A"], [A, B])])
    for A, B, C in itertools.product(fam, repeat=3):
        if lab.o(lab.o(A, B), C) != lab.o(A, lab.o(B, C)):
            record("associative", [lab.c_equal(["o", A_B, "C"], ["o", "A", ["o", "B", "C"]], [A, B, C])])
    details = {"family_size": len(fam), "failures": failures}
    scope = Scope.SAMPLED if lab.truncated else Scope.EXHAUSTIVE
    return Outcome(Verdict.REFUTED if first else Verdict.CONFIRMED, scope, first, details)


def _semilattice_claim(lab: Lab, inputs) -> Outcome:
    if inputs:
        raise ArityError("T_SEMILATTICE takes no IFS inputs; it quantifies over the chain")
    return _semilattice_outcome(lab)


EVALUATORS: dict[ClaimId, Callable[[Lab, Optional[Sequence[IFS]]], Outcome]] = {
    ClaimId.LAW_MEDIAL_FROM_LI: _law_claim(LawKind.MEDIAL),
    ClaimId.LAW_PARAMEDIAL_WITH_E: _law_claim(LawKind.PARAMEDIAL),
    ClaimId.LAW_4_WITH_E: _law_claim(LawKind.LAW4),
    ClaimId.LIFTED_LAWS: _lifted_laws,
    ClaimId.T_LEVELCUT_FWD: _levelcut(("right", "left", "two_sided")),
    ClaimId.T_LEVELCUT_BI_FWD: _levelcut(("bi", "generalized_bi")),
    ClaimId.L_COMPOSE_CHAR: _iff_claim(ClaimId.L_COMPOSE_CHAR, _compose_char_pairs),
    ClaimId.T_BI_CHAR: _iff_claim(ClaimId.T_BI_CHAR, _bi_char_pairs),
    ClaimId.T_INT_CHAR: _iff_claim(ClaimId.T_INT_CHAR, _int_char_pairs),
    ClaimId.L_LEFT_IFF_RIGHT: _iff_claim(ClaimId.L_LEFT_IFF_RIGHT, _pred_pair("left", "right")),
    ClaimId.C_FUZZY_DUO: _fuzzy_duo_claim,
    ClaimId.T_DUO_EQUIV: _duo_claim,
    ClaimId.L_CHAR_BRIDGE: _bridge_claim,
    ClaimId.L_ABSORB: _absorb_claim,
    ClaimId.C_ABSORB_IDEAL: _absorb_ideal_claim,
    ClaimId.L_DELTA_IDEM: _delta_idem,
    ClaimId.T_QUASI_CHAR: _iff_claim(ClaimId.T_QUASI_CHAR, _quasi_char_pairs),
    ClaimId.T_QUASI_EQ_2SIDED: _iff_claim(ClaimId.T_QUASI_EQ_2SIDED, _pred_pair("two_sided", "quasi")),
    ClaimId.T_INT_EQ_2SIDED: _iff_claim(ClaimId.T_INT_EQ_2SIDED, _pred_pair("two_sided", "interior")),
    ClaimId.T_GRAND_EQUIV: _grand_claim,
    ClaimId.L_PROD_EQ_MEET: _prod_meet_claim,
    ClaimId.L_PROD_EQ_MEET_NONCONVERSE: _prod_meet_nonconverse,
    ClaimId.L_IDEMPOTENT: _idempotent_claim,
    ClaimId.T_SEMILATTICE: _semilattice_claim,
}


# -- public operations -------------------------------------------------------


def _report(lab: Lab, entry: ClaimDef, inputs, out: Outcome, failed=None, fail_detail=None) -> ClaimReport:
    details = dict(out.details)
    if fail_detail:
        details.update(fail_detail)
    if inputs and entry.id in (ClaimId.L_PROD_EQ_MEET, ClaimId.L_PROD_EQ_MEET_NONCONVERSE) and len(inputs) == 2:
        details["comparison"] = comparison_table(lab, *inputs)
    return ClaimReport(
        claim=entry.id,
        verdict=out.verdict,
        scope=Scope.SAMPLED if lab.truncated and out.scope is Scope.EXHAUSTIVE else out.scope,
        statement=entry.statement,
        magma=lab.magma,
        chain_k=lab.chain.k if lab.chain else None,
        inputs=list(inputs or []),
        witness=out.witness,
        failed_precondition=failed or out.unmet,
        details=details,
        notes=list(out.notes),
        truncated=lab.truncated,
    )


def verify_claim(
    claim: ClaimId | str,
    magma: FiniteMagma,
    inputs: Optional[Sequence[IFS]] = None,
    chain: Optional[GradeChain] = None,
    budget: Optional[SearchBudget] = None,
    lab: Optional[Lab] = None,
) -> ClaimReport:
    """Evaluate one claim on one magma.

    Preconditions are checked first; a failing one yields ``not_applicable``
    naming it.  With ``inputs`` the claim is checked on those sets only,
    otherwise over every strict IFS with grades in ``chain``.
    """
    entry = REGISTRY[ClaimId(claim)]
    lab = lab or Lab(magma, chain, budget)
    failure = lab.precondition_failure(entry.requires)
    if failure is not None:
        single = inputs or entry.id in MAGMA_LEVEL
        out = Outcome(Verdict.NOT_APPLICABLE, Scope.SINGLE if single else Scope.EXHAUSTIVE)
        return _report(lab, entry, inputs, out, failure[0], failure[1])
    return _report(lab, entry, inputs, EVALUATORS[entry.id](lab, inputs))


def audit_all(magma: FiniteMagma, chain: GradeChain, budget: Optional[SearchBudget] = None) -> list[ClaimReport]:
    """Every claim on one magma, in registry order, sharing one cache.

    A chain population larger than ``budget.max_instances`` is cut to its
    first ``max_instances`` members and the affected reports are flagged.
    """
    lab = Lab(magma, chain, budget, truncate=True)
    return [verify_claim(cid, magma, lab=lab) for cid in ClaimId]


def verify_semilattice(magma: FiniteMagma, chain: GradeChain, budget: Optional[SearchBudget] = None) -> ClaimReport:
    return verify_claim(ClaimId.T_SEMILATTICE, magma, chain=chain, budget=budget)


def duo_audit(magma: FiniteMagma, chain: GradeChain, budget: Optional[SearchBudget] = None) -> ClaimReport:
    """Both duo biconditionals, evaluated whatever the magma.

    Unlike ``verify_claim(T_DUO_EQUIV, ...)`` this never short-circuits on
    the hypotheses; their status is recorded in the notes.
    """
    if magma.n > 12:
        raise BudgetExceeded("subset enumeration is limited to carriers of size 12")
    lab = Lab(magma, chain, budget)
    entry = REGISTRY[ClaimId.T_DUO_EQUIV]
    out = _duo_outcome(lab)
    failure = lab.precondition_failure(entry.requires)
    out.details["hypotheses_hold"] = failure is None
    if failure is not None:
        out.notes.append(f"hypothesis fails ({failure[0]}); the biconditional is evaluated as stated")
        out.details.update(failure[1])
    return _report(lab, entry, None, out)


@dataclass
class Counterexample:
    magma: FiniteMagma
    inputs: list
    report: ClaimReport
    examined: int


def _census_filter(entry: ClaimDef, budget: SearchBudget) -> bool:
    if budget.left_identity is not None:
        return budget.left_identity
    return E in entry.requires


def levelcut_converse(lab: Lab, kinds: Sequence[str]) -> Optional[dict]:
    """First (A, alpha) whose non-empty cut is a crisp ideal while A is not a fuzzy one."""
    for A in lab.population:
        for alpha in cut_levels(A):
            cut = level_cut(A, alpha)
            if not cut:
                continue
            for k in kinds:
                if lab.crisp(cut, k) and not lab.pred(A, k):
                    return {"form": IMPLIES, "conditions": [lab.c_cut(k, A, alpha), lab.c_fuzzy(k, [A])]}
    return None


def search_counterexample(
    claim: ClaimId | str,
    budget: Optional[SearchBudget] = None,
    converse: bool = False,
) -> Optional[Counterexample]:
    """Scan the AG-groupoid census for an instance refuting ``claim``.

    Orders 1..``budget.max_order`` are visited in census order; magmas whose
    chain population exceeds ``budget.max_instances`` are skipped.  With
    ``converse`` (level-cut claims only) the search looks for a set whose cut
    is a crisp ideal although the set is not a fuzzy one.
    """
    budget = budget or SearchBudget()
    entry = REGISTRY[ClaimId(claim)]
    if converse and entry.id not in (ClaimId.T_LEVELCUT_FWD, ClaimId.T_LEVELCUT_BI_FWD):
        raise ArityError("only the level-cut claims have a converse search")
    chain = GradeChain(budget.chain_k)
    with_identity = _census_filter(entry, budget)
    examined = 0
    for order in range(1, budget.max_order + 1):
        if entry.arity and chain.count(order) > budget.max_instances:
            break
        for magma in enumerate_ag_groupoids(order, with_identity, max_order=budget.max_order):
            lab = Lab(magma, chain, budget)
            if lab.precondition_failure(entry.requires) is not None:
                continue
            examined += 1
            try:
                if converse:
                    kinds = ("right", "left", "two_sided") if entry.id is ClaimId.T_LEVELCUT_FWD else ("bi", "generalized_bi")
                    w = levelcut_converse(lab, kinds)
                    if w is None:
                        continue
                    report = _report(lab, entry, None, Outcome(Verdict.REFUTED, Scope.EXHAUSTIVE, w, {"direction": "converse"}))
                else:
                    report = verify_claim(entry.id, magma, lab=lab)
                    if report.verdict is not Verdict.REFUTED:
                        continue
            except BudgetExceeded:
                continue
            sets = _witness_sets(report.witness["conditions"]) if report.witness else []
            return Counterexample(magma, [ifs_from_data(d) for d in sets], report, examined)
    return None


def _witness_sets(conditions: list[dict]) -> list:
    for c in conditions:
        if c["name"] == "and":
            found = _witness_sets(c["args"]["parts"])
        else:
            found = c["args"].get("sets", [])
        if found:
            return found
    return []
