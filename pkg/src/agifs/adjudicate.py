"""Check the facts asserted about the two example tables against computation.

Each :class:`Assertion` pairs an asserted truth value with a computed one.
Nothing here encodes an expected outcome: the discrepancy list is whatever
the computation disagrees with.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fixtures
from .claims import ClaimId, ClaimReport, verify_claim
from .errors import ConstraintError
from .ideals import is_if_ideal
from .ifs import compose, grade, intersection, level_cut
from .magma import (
    CrispSubset,
    LawKind,
    check_law,
    intra_regular_witness,
    is_crisp_ideal,
    is_intra_regular,
    left_identities,
)
from .report import format_report, report_to_data, shift


@dataclass
class Assertion:
    id: str
    fixture: str
    statement: str
    asserted: bool
    computed: bool
    evidence: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return self.asserted == self.computed

    def to_data(self) -> dict:
        return {
            "id": self.id,
            "fixture": self.fixture,
            "statement": self.statement,
            "asserted": self.asserted,
            "computed": self.computed,
            "agrees": self.agrees,
            "evidence": self.evidence,
        }


@dataclass
class Adjudication:
    assertions: list[Assertion]
    strict_load: dict
    claim_reports: list[ClaimReport]

    @property
    def discrepancies(self) -> list[Assertion]:
        return [a for a in self.assertions if not a.agrees]

    def to_data(self) -> dict:
        """0-based; callers shift element indices when writing documents."""
        return {
            "strict_load": self.strict_load,
            "assertions": [a.to_data() for a in self.assertions],
            "discrepancies": [a.to_data() for a in self.discrepancies],
            "claim_reports": [report_to_data(r) for r in self.claim_reports],
        }


def strict_load_check() -> dict:
    """Try loading G1's example set in strict mode and record the outcome."""
    try:
        fixtures.g1_ideal_ifs(strict=True)
    except ConstraintError as exc:
        return {"accepted": False, "element": exc.element, "sum": str(exc.total)}
    return {"accepted": True, "element": None, "sum": None}


def _fuzzy(magma, A, kind) -> tuple[bool, dict]:
    v = is_if_ideal(magma, A, kind)
    ev = {"kind": v.kind.value}
    if not v.holds:
        ev["tuple"] = list(v.witness)
        ev["component"] = v.component
    return v.holds, ev


def _crisp(magma, X, kind) -> tuple[bool, dict]:
    v = is_crisp_ideal(magma, X, kind)
    return v.holds, {"kind": kind, "subset": X.members(), "element": v.witness}


def _validity(A) -> tuple[bool, dict]:
    return A.is_valid, {"elements": list(A.violations), "sums": [str(A.mu[x] + A.gamma[x]) for x in A.violations]}


def g1_assertions() -> list[Assertion]:
    m = fixtures.g1()
    A = fixtures.g1_ideal_ifs()
    C = fixtures.g1_cut_ifs()
    alpha = grade(fixtures.G1_CUT_ALPHA)
    ab = CrispSubset.of(5, [0, 1])  # the cut's two named elements, read as 1 and 2
    cut = level_cut(C, alpha)
    out: list[Assertion] = []

    def add(aid: str, statement: str, asserted: bool, result: tuple[bool, dict]) -> None:
        out.append(Assertion(aid, "G1", statement, asserted, result[0], result[1]))

    li = check_law(m, LawKind.LEFT_INVERTIVE)
    add("g1.ag", "G1 satisfies (ab)c = (cb)a", True, (li.holds, {"tuple": list(li.witness or [])}))
    ids = left_identities(m)
    add("g1.identity", "4 is a left identity of G1", True, (3 in ids, {"elements": ids}))
    ir = is_intra_regular(m)
    add("g1.intra", "G1 is intra-regular", True, (ir.holds, {"failing_element": ir.failing}))
    add("g1.ifs.valid", "the example set on G1 satisfies mu + gamma <= 1", True, _validity(A))
    add("g1.ifs.two_sided", "the example set is a fuzzy two-sided ideal of G1", True, _fuzzy(m, A, "two_sided"))
    add("g1.ifs.subgroupoid", "the example set is a fuzzy subgroupoid of G1", True, _fuzzy(m, A, "subgroupoid"))
    add("g1.cut.valid", "the level-cut set on G1 satisfies mu + gamma <= 1", True, _validity(C))
    add(
        "g1.cut.value",
        "the cut at 0.4 is {1, 2}",
        True,
        (cut == ab, {"cut": cut.members(), "subset": ab.members()}),
    )
    for kind in ("right", "left", "bi", "generalized_bi"):
        add(f"g1.cut.crisp_{kind}", f"{{1, 2}} is a {kind} ideal of G1", True, _crisp(m, ab, kind))
    for kind in ("right", "left", "bi", "generalized_bi"):
        add(f"g1.cut.fuzzy_{kind}", f"the level-cut set is a fuzzy {kind} ideal of G1", False, _fuzzy(m, C, kind))
    # the (ba)b inequality with a, b read as 1, 2
    z = m.mul(m.mul(1, 0), 1)
    add(
        "g1.cut.mu_bab",
        "mu((ba)b) >= mu(b) for a = 1, b = 2",
        False,
        (C.mu[z] >= C.mu[1], {"element": z, "lhs": str(C.mu[z]), "rhs": str(C.mu[1])}),
    )
    return out


def g2_assertions() -> list[Assertion]:
    m = fixtures.g2()
    A = fixtures.g2_a(strict=False)
    B = fixtures.g2_b(strict=False)
    out: list[Assertion] = []

    def add(aid: str, statement: str, asserted: bool, result: tuple[bool, dict]) -> None:
        out.append(Assertion(aid, "G2", statement, asserted, result[0], result[1]))

    li = check_law(m, LawKind.LEFT_INVERTIVE)
    add("g2.ag", "G2 satisfies (ab)c = (cb)a", True, (li.holds, {"tuple": list(li.witness or [])}))
    ids = left_identities(m)
    add("g2.identity", "4 is a left identity of G2", True, (3 in ids, {"elements": ids}))
    w = intra_regular_witness(m, 2)
    add(
        "g2.intra3",
        "3 is an intra-regular element of G2",
        False,
        (w is not None, {"element": 2, "x": w.x if w else None, "y": w.y if w else None}),
    )
    ir = is_intra_regular(m)
    add("g2.intra", "G2 is intra-regular", False, (ir.holds, {"failing_element": ir.failing}))
    add("g2.a.valid", "A on G2 satisfies mu + gamma <= 1", True, _validity(A))
    add("g2.b.valid", "B on G2 satisfies mu + gamma <= 1", True, _validity(B))
    add("g2.a.two_sided", "A is a fuzzy two-sided ideal of G2", True, _fuzzy(m, A, "two_sided"))
    add("g2.b.two_sided", "B is a fuzzy two-sided ideal of G2", True, _fuzzy(m, B, "two_sided"))

    P, M = compose(m, A, B), intersection(A, B)
    mu_bad = [z for z in range(5) if P.mu[z] != M.mu[z]]
    add(
        "g2.prod.mu",
        "mu(A∘B) = mu(A ∩ B) at every element",
        True,
        (not mu_bad, {"elements": mu_bad, "product": [str(g) for g in P.mu], "meet": [str(g) for g in M.mu]}),
    )
    gamma_bad = [z for z in range(5) if P.gamma[z] != M.gamma[z]]
    add(
        "g2.prod.gamma",
        "gamma(A∘B) = gamma(A ∩ B) = max(gamma_A, gamma_B) at every element",
        True,
        (not gamma_bad, {"elements": gamma_bad, "product": [str(g) for g in P.gamma], "meet": [str(g) for g in M.gamma]}),
    )
    lit = [min(a, b) for a, b in zip(A.gamma, B.gamma)]
    lit_bad = [z for z in range(5) if P.gamma[z] != lit[z]]
    add(
        "g2.prod.gamma_min",
        "gamma(A∘B) = min(gamma_A, gamma_B) at every element (the notation used with the example)",
        True,
        (not lit_bad, {"elements": lit_bad, "product": [str(g) for g in P.gamma], "min": [str(g) for g in lit]}),
    )
    asserted_values = {grade("0.1"), grade("0.3"), grade("0.4")}
    add(
        "g2.prod.value_set",
        "the values of mu(A∘B) form the set {0.1, 0.3, 0.4}",
        True,
        (set(P.mu) == asserted_values, {"values": sorted(str(g) for g in set(P.mu))}),
    )
    add(
        "g2.meet.value_set",
        "the values of mu(A ∩ B) form the set {0.1, 0.3, 0.4}",
        True,
        (set(M.mu) == asserted_values, {"values": sorted(str(g) for g in set(M.mu))}),
    )
    return out


def adjudicate() -> Adjudication:
    m2 = fixtures.g2()
    A, B = fixtures.g2_a(strict=False), fixtures.g2_b(strict=False)
    reports = [
        verify_claim(ClaimId.L_PROD_EQ_MEET, m2, [A, B]),
        verify_claim(ClaimId.L_PROD_EQ_MEET_NONCONVERSE, m2, [A, B]),
    ]
    return Adjudication(g1_assertions() + g2_assertions(), strict_load_check(), reports)


def format_adjudication(adj: Adjudication, base: int = 1) -> str:
    lines = ["strict load of the G1 example set:"]
    s = adj.strict_load
    if s["accepted"]:
        lines.append("  accepted")
    else:
        lines.append(f"  rejected at element {s['element'] + base}: mu + gamma = {s['sum']} > 1")
    lines.append("")
    lines.append("assertions:")
    for a in adj.assertions:
        mark = "ok " if a.agrees else "XX "
        lines.append(f"  {mark}{a.id}: {a.statement}  asserted={a.asserted} computed={a.computed}")
    lines.append("")
    lines.append(f"discrepancies ({len(adj.discrepancies)}):")
    for a in adj.discrepancies:
        lines.append(f"  {a.id}: {a.statement}")
        lines.append(f"    asserted {a.asserted}, computed {a.computed}; evidence: {shift(a.evidence, base)}")
    lines.append("")
    for r in adj.claim_reports:
        lines.append(format_report(r, base))
    return "\n".join(lines) + "\n"
