"""Named conditions and independent re-verification of claim witnesses.

A witness is plain data: a logical ``form`` and a list of conditions, each
carrying a name, JSON-ready arguments and the truth value recorded when the
witness was produced.  :func:`reverify` recomputes every condition from the
definitional operations (magma, ifs, ideals modules), checks the recomputed
values match, and checks that the form is genuinely violated.

Expressions over sets are nested lists: a symbol (``"A"`` .. ``"D"`` bound
to the witness sets, or ``"delta"``), ``["o", l, r]`` for the composition
product, ``["meet", l, r]`` and ``["join", l, r]`` for the lattice operations.
"""

from __future__ import annotations

from typing import Callable, Optional

from .errors import AGError
from .ifs import (
    IFS,
    GradeChain,
    compose,
    delta,
    enumerate_ifs,
    grade,
    ifs_leq,
    intersection,
    level_cut,
    make_ifs,
    union,
)
from .ideals import is_if_ideal
from .magma import (
    EQUATIONS,
    CrispIdealKind,
    CrispSubset,
    FiniteMagma,
    LawKind,
    check_law,
    is_crisp_ideal,
    is_intra_regular,
    left_identities,
    nonempty_subsets,
)

HOLDS = "holds"
IMPLIES = "implies"
IFF = "iff"

SYMBOLS = ("A", "B", "C", "D")


def ifs_to_data(A: IFS) -> dict:
    return {"mu": [str(g) for g in A.mu], "gamma": [str(g) for g in A.gamma]}


def ifs_from_data(data: dict) -> IFS:
    return make_ifs(data["mu"], data["gamma"], strict=False)


def cond(name: str, value: bool, expected: bool = True, **args) -> dict:
    """A condition record; IFS arguments must already be in data form."""
    return {"name": name, "args": args, "value": bool(value), "expected": expected}


def is_violated(form: str, conditions: list[dict]) -> bool:
    if form == HOLDS:
        return any(c["value"] != c.get("expected", True) for c in conditions)
    if form == IMPLIES:
        hyp, concl = conditions
        return hyp["value"] and not concl["value"]
    if form == IFF:
        lhs, rhs = conditions
        return lhs["value"] != rhs["value"]
    raise AGError(f"unknown form {form!r}")


def evaluate_expr(magma: FiniteMagma, expr, sets: list[IFS]) -> IFS:
    if isinstance(expr, str):
        if expr == "delta":
            return delta(magma.n)
        return sets[SYMBOLS.index(expr)]
    op, lhs, rhs = expr
    left = evaluate_expr(magma, lhs, sets)
    right = evaluate_expr(magma, rhs, sets)
    if op == "o":
        return compose(magma, left, right)
    if op == "meet":
        return intersection(left, right)
    if op == "join":
        return union(left, right)
    raise AGError(f"unknown operator {op!r}")


def _sets(args) -> list[IFS]:
    return [ifs_from_data(d) for d in args.get("sets", [])]


def _fuzzy_duo(magma: FiniteMagma, side: str, k: int) -> bool:
    return all(
        is_if_ideal(magma, A, "two_sided").holds
        for A in enumerate_ifs(magma.n, GradeChain(k), budget=None)
        if is_if_ideal(magma, A, side).holds
    )


def _crisp_duo(magma: FiniteMagma, side: str) -> bool:
    return all(
        is_crisp_ideal(magma, X, CrispIdealKind.TWO_SIDED).holds
        for X in nonempty_subsets(magma.n)
        if is_crisp_ideal(magma, X, side).holds
    )


def _law(magma, args):
    law = LawKind(args["law"])
    if args.get("tuple") is None:
        return check_law(magma, law).holds
    _, sides = EQUATIONS[law]
    lhs, rhs = sides(magma.table, *args["tuple"])
    return lhs == rhs


def _cut_ideal(magma, args):
    (A,) = _sets(args)
    cut = level_cut(A, grade(args["alpha"]))
    return not cut or is_crisp_ideal(magma, cut, args["kind"]).holds


EVALUATORS: dict[str, Callable[[FiniteMagma, dict], bool]] = {
    "law": _law,
    "left_invertive": lambda m, a: check_law(m, LawKind.LEFT_INVERTIVE).holds,
    "left_identity": lambda m, a: bool(left_identities(m)),
    "intra_regular": lambda m, a: is_intra_regular(m).holds,
    "fuzzy_ideal": lambda m, a: is_if_ideal(
        m, evaluate_expr(m, a.get("expr", "A"), _sets(a)), a["kind"]
    ).holds,
    "crisp_ideal": lambda m, a: is_crisp_ideal(m, CrispSubset.of(m.n, a["subset"]), a["kind"]).holds,
    "equal": lambda m, a: evaluate_expr(m, a["lhs"], _sets(a)) == evaluate_expr(m, a["rhs"], _sets(a)),
    "subset_of": lambda m, a: ifs_leq(evaluate_expr(m, a["lhs"], _sets(a)), evaluate_expr(m, a["rhs"], _sets(a))),
    "cut_ideal": _cut_ideal,
    "crisp_duo": lambda m, a: _crisp_duo(m, a["side"]),
    "fuzzy_duo": lambda m, a: _fuzzy_duo(m, a["side"], a["k"]),
}


def evaluate(magma: FiniteMagma, condition: dict) -> bool:
    name = condition["name"]
    if name == "and":
        return all(evaluate(magma, part) for part in condition["args"]["parts"])
    return EVALUATORS[name](magma, condition["args"])


def reverify(magma: FiniteMagma, witness: Optional[dict]) -> tuple[bool, list[str]]:
    """Recompute a witness from scratch.

    Returns ``(ok, problems)``: ``ok`` is True when every recorded value is
    reproduced and the recorded form is violated.
    """
    if not witness:
        return False, ["no witness"]
    problems = []
    recomputed = []
    for c in witness["conditions"]:
        value = evaluate(magma, c)
        if value != c["value"]:
            problems.append(f"{c['name']} recorded {c['value']} but evaluates to {value}")
        recomputed.append({**c, "value": value})
    if not is_violated(witness["form"], recomputed):
        problems.append(f"form {witness['form']!r} is not violated")
    return not problems, problems
