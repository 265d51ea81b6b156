import copy

import pytest
from hypothesis import given, strategies as st

import oracles
from strategies import as_pair

from agifs import fixtures
from agifs.claims import (
    REGISTRY,
    ClaimId,
    Scope,
    SearchBudget,
    Verdict,
    audit_all,
    duo_audit,
    search_counterexample,
    verify_claim,
    verify_semilattice,
)
from agifs.conditions import reverify
from agifs.errors import ArityError
from agifs.ideals import crisp_fuzzy_bridge
from agifs.ifs import GradeChain, characteristic, compose, delta, make_ifs
from agifs.magma import enumerate_ag_groupoids, make_magma, nonempty_subsets

TRIVIAL = make_magma(1, [[0]])


@pytest.fixture(scope="module")
def g1_audit(g1):
    return audit_all(g1, GradeChain(2))


@pytest.fixture(scope="module")
def g2_audit(g2):
    return audit_all(g2, GradeChain(2))


def test_registry_complete():
    assert len(ClaimId) == 24 and set(REGISTRY) == set(ClaimId)


def test_audit_g1_shape(g1, g1_audit):
    assert [r.claim for r in g1_audit] == list(ClaimId)
    for r in g1_audit:
        if r.verdict is Verdict.REFUTED:
            ok, problems = reverify(g1, r.witness)
            assert ok, (r.claim, problems)
        if r.verdict is Verdict.NOT_APPLICABLE:
            assert r.failed_precondition


def test_audit_g1_verdicts(g1_audit):
    verdicts = {r.claim: r.verdict for r in g1_audit}
    # G1 is intra-regular, so the only precondition failure is the non-converse one
    assert verdicts[ClaimId.L_PROD_EQ_MEET_NONCONVERSE] is Verdict.NOT_APPLICABLE
    assert verdicts[ClaimId.L_DELTA_IDEM] is Verdict.CONFIRMED
    for cid in (ClaimId.LAW_MEDIAL_FROM_LI, ClaimId.LAW_PARAMEDIAL_WITH_E, ClaimId.LAW_4_WITH_E):
        assert verdicts[cid] is Verdict.CONFIRMED


def test_absorb_refutation_agrees_with_oracle(g1, raw_g1, g1_audit):
    r = next(r for r in g1_audit if r.claim is ClaimId.L_ABSORB)
    d = ([1] * 5, [0] * 5)
    refuted_by_oracle = any(
        oracles.compose(raw_g1, d, A) != A or oracles.compose(raw_g1, A, d) != A for A in oracles.chain_sets(5, 2)
    )
    assert (r.verdict is Verdict.REFUTED) == refuted_by_oracle


def test_grand_matrix_g1(g1, g1_audit):
    r = next(r for r in g1_audit if r.claim is ClaimId.T_GRAND_EQUIV)
    m = r.details["matrix"]
    assert len(m) == 8 and all(len(row) == 8 for row in m)
    assert all(m[i][i] for i in range(8))
    for w in r.details["pair_witnesses"].values():
        assert reverify(g1, w)[0]


def test_audit_g2_names_element_3(g2_audit):
    gated = [r for r in g2_audit if "intra_regular" in (r.failed_precondition or "")]
    assert len(gated) >= 15
    # elements 2 and 3 both lack witnesses; the first is singled out
    assert all(r.details["failing_element"] == 1 for r in gated)
    assert all(r.details["failing_elements"] == [1, 2] for r in gated)


def test_audit_trivial_magma():
    reports = audit_all(TRIVIAL, GradeChain(1))
    assert len(reports) == 24 and not any(r.truncated for r in reports)
    assert all(r.verdict in Verdict for r in reports)


def test_audit_truncation(g1):
    reports = audit_all(g1, GradeChain(2), SearchBudget(max_instances=100))
    r = next(r for r in reports if r.claim is ClaimId.L_IDEMPOTENT)
    assert r.truncated and r.scope is Scope.SAMPLED


def test_delta_idem_on_g1(g1):
    r = verify_claim(ClaimId.L_DELTA_IDEM, g1)
    assert r.verdict is Verdict.CONFIRMED and r.scope is Scope.SINGLE


def test_levelcut_hypothesis_false_is_not_applicable(g1):
    r = verify_claim(ClaimId.T_LEVELCUT_FWD, g1, [fixtures.g1_cut_ifs()])
    assert r.verdict is Verdict.NOT_APPLICABLE and "hypothesis" in r.failed_precondition


def test_prod_meet_on_g2_shows_both_sides(g2, raw_g2):
    A, B = fixtures.g2_a(), fixtures.g2_b()
    r = verify_claim(ClaimId.L_PROD_EQ_MEET, g2, [A, B])
    assert r.verdict is Verdict.NOT_APPLICABLE
    rows = r.details["comparison"]
    mu, gamma = oracles.compose(raw_g2, as_pair(A), as_pair(B))
    mmu, mgamma = oracles.meet(as_pair(A), as_pair(B))
    assert [row["product_mu"] for row in rows] == [str(g) for g in mu]
    assert [row["meet_gamma"] for row in rows] == [str(g) for g in mgamma]
    assert [row["equal"] for row in rows] == [mu[z] == mmu[z] and gamma[z] == mgamma[z] for z in range(5)]


def test_arity_and_chain_errors(g1):
    with pytest.raises(ArityError):
        verify_claim(ClaimId.L_PROD_EQ_MEET, g1, [delta(5)])
    with pytest.raises(ArityError):
        verify_claim(ClaimId.T_INT_CHAR, g1)  # needs a chain or an input
    with pytest.raises(ArityError):
        verify_claim(ClaimId.L_DELTA_IDEM, g1, [delta(5)])


def test_semilattice():
    assert verify_semilattice(TRIVIAL, GradeChain(2)).verdict is Verdict.CONFIRMED


def test_semilattice_g1_binary(g1):
    r = verify_semilattice(g1, GradeChain(1))
    assert r.verdict in (Verdict.CONFIRMED, Verdict.REFUTED)
    if r.verdict is Verdict.REFUTED:
        assert reverify(g1, r.witness)[0]


def test_semilattice_g2_not_applicable(g2):
    r = verify_semilattice(g2, GradeChain(2))
    assert r.verdict is Verdict.NOT_APPLICABLE and "intra_regular" in r.failed_precondition


def test_duo_audit():
    r = duo_audit(TRIVIAL, GradeChain(1))
    assert r.verdict is Verdict.CONFIRMED
    assert r.details["crisp_left_duo"] and r.details["fuzzy_right_duo"]


def test_duo_audit_g1_and_g2(g1, g2):
    r1 = duo_audit(g1, GradeChain(2))
    assert r1.details["fuzzy_left_duo"] and r1.details["fuzzy_right_duo"]
    r2 = duo_audit(g2, GradeChain(2))
    assert not r2.details["hypotheses_hold"]
    assert any("hypothesis fails" in n for n in r2.notes)
    assert r2.verdict in (Verdict.CONFIRMED, Verdict.REFUTED)


def test_search_delta_idem_absent():
    assert search_counterexample(ClaimId.L_DELTA_IDEM, SearchBudget(max_order=3, left_identity=True)) is None


def test_search_absorb_witness_reverifies():
    found = search_counterexample(ClaimId.L_ABSORB, SearchBudget(max_order=3))
    assert found is not None
    assert reverify(found.magma, found.report.witness)[0]


def test_search_converse_levelcut():
    found = search_counterexample(ClaimId.T_LEVELCUT_FWD, SearchBudget(max_order=3), converse=True)
    assert found is not None and reverify(found.magma, found.report.witness)[0]


def test_search_refutation_is_monotone():
    small = search_counterexample(ClaimId.L_ABSORB, SearchBudget(max_order=2))
    large = search_counterexample(ClaimId.L_ABSORB, SearchBudget(max_order=3))
    assert small.magma == large.magma and small.report.witness == large.report.witness


def test_reverify_catches_tampering(g1):
    r = verify_claim(ClaimId.L_ABSORB, g1, chain=GradeChain(1))
    w = copy.deepcopy(r.witness)
    w["conditions"][0]["value"] = not w["conditions"][0]["value"]
    ok, problems = reverify(g1, w)
    assert not ok and problems


@given(st.integers(1, 3).flatmap(lambda n: st.sampled_from(list(enumerate_ag_groupoids(n)))))
def test_bridge_on_census(m):
    for X in nonempty_subsets(m.n):
        for kind in ("subgroupoid", "left", "right", "two_sided"):
            assert crisp_fuzzy_bridge(m, X, kind).agree


@given(st.integers(1, 3).flatmap(lambda n: st.sampled_from(list(enumerate_ag_groupoids(n, True)))))
def test_delta_idempotent_with_identity(m):
    assert compose(m, delta(m.n), delta(m.n)) == delta(m.n)


@given(st.sampled_from(list(enumerate_ag_groupoids(3))))
def test_lifted_laws_on_characteristic_sets(m):
    r = verify_claim(ClaimId.LIFTED_LAWS, m, budget=SearchBudget(samples=10))
    if r.verdict is Verdict.REFUTED:
        assert reverify(m, r.witness)[0]
    else:
        assert r.verdict is Verdict.CONFIRMED


def test_lifted_laws_single_instance(g1):
    sets = [characteristic(X) for X in list(nonempty_subsets(5))[:4]]
    r = verify_claim(ClaimId.LIFTED_LAWS, g1, sets)
    assert r.scope is Scope.SINGLE and r.verdict is Verdict.CONFIRMED


def test_not_applicable_precondition_named():
    m = make_magma(2, [[1, 0], [0, 0]])  # not left invertive
    r = verify_claim(ClaimId.LAW_MEDIAL_FROM_LI, m)
    assert r.verdict is Verdict.NOT_APPLICABLE and r.failed_precondition.startswith("left_invertive")


def test_lenient_input_is_accepted(g1):
    A = make_ifs(["1", "0", "0", "0", "0"], ["0.3", "0.4", "0.2", "0.2", "0.2"], strict=False)
    r = verify_claim(ClaimId.T_GRAND_EQUIV, g1, [A])
    assert r.scope is Scope.SINGLE
