import networkx as nx
import pytest

from app.services.claims import (
    GROUPS,
    NOT_CHECKABLE,
    REFUTED,
    REGISTRY,
    SKIPPED,
    VERIFIED,
    ScopeOptions,
    conjecture_search,
    expand_claim_ids,
    recheck,
    resolve_scope,
    run_check,
)
from app.services.errors import BudgetExceededError, UnknownClaimError
from app.services.graph_core import g6_decode


def _nx(graph6: str) -> nx.Graph:
    g = g6_decode(graph6)
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.order))
    return h


def test_registry_kinds():
    assert REGISTRY["thm-2.2"].kind == "proven"
    assert REGISTRY["thm-2.3"].kind == "suspect"
    assert REGISTRY["cor-2.2"].kind == NOT_CHECKABLE
    for spec in REGISTRY.values():
        assert spec.kind in ("proven", "suspect", "not-checkable")


def test_group_expansion():
    assert expand_claim_ids(["prop-3.1"]) == [f"prop-3.1{c}" for c in "abcdefgh"]
    assert expand_claim_ids(["thm-2.2", "prop-3.1a"]) == ["thm-2.2", "prop-3.1a"]
    assert list(GROUPS["prop-3.1"]) == expand_claim_ids(["prop-3.1"])
    with pytest.raises(UnknownClaimError):
        expand_claim_ids(["thm-9.9"])
    with pytest.raises(UnknownClaimError):
        run_check("thm-9.9")


@pytest.mark.parametrize("claim_id", ["thm-2.2", "sec3-alpha"])
def test_set_graph_claims_verified(claim_id):
    result = run_check(claim_id)
    assert result.verdict == VERIFIED
    assert result.graphs_scanned == 4
    assert [obs["n"] for obs in result.observations] == [1, 2, 3, 4]


def test_maximum_clique_count_refuted_at_four():
    result = run_check("prop-2.1")
    assert result.kind == "suspect"
    assert result.verdict == REFUTED
    assert not result.harness_bug
    assert [c.context["n"] for c in result.counterexamples] == [4]
    data = result.counterexamples[0].data
    assert (data["omega"], data["max_clique_count"], data["expected"]) == (8, 12, 8)
    assert all(obs["omega"] == 2 ** (obs["n"] - 1) for obs in result.observations)
    assert run_check("prop-2.1", ScopeOptions(range=(1, 3))).verdict == VERIFIED


def test_thm_2_5_exhaustive_part():
    result = run_check("thm-2.5", ScopeOptions(range=(1, 3)))
    assert result.verdict == VERIFIED
    assert all(obs["exact"] for obs in result.observations)


def test_unique_independent_set_side_claim_is_refuted():
    result = run_check("thm-2.3-alpha")
    assert result.verdict == REFUTED
    assert sorted(c.context["n"] for c in result.counterexamples) == [1, 2, 4]


def test_thm_3_5_refuted_by_four_cycle():
    result = run_check("thm-3.5", ScopeOptions(max_order=4))
    assert result.verdict == REFUTED
    c4 = nx.cycle_graph(4)
    assert any(nx.is_isomorphic(_nx(c.graph6), c4) for c in result.counterexamples)
    assert result.tallies["hypothesis_matched"] >= 2
    for c in result.counterexamples:
        assert recheck("thm-3.5", c.graph6, c.context) is not None


@pytest.mark.parametrize("claim_id", ["cor-3.4", "lemma-2.1", "sec1-bipartite"])
def test_proven_corpus_claims_hold(claim_id):
    result = run_check(claim_id, ScopeOptions(max_order=5))
    assert result.verdict == VERIFIED
    assert result.counterexample_count == 0
    assert not result.harness_bug


def test_complete_and_null_families():
    assert run_check("sec1-complete").verdict == VERIFIED
    assert run_check("sec1-null").verdict == VERIFIED


def test_not_checkable_claim_is_skipped():
    result = run_check("cor-2.2")
    assert result.verdict == SKIPPED
    assert result.notes


def test_prop_3_1_items_with_range():
    odd_paths = run_check("prop-3.1c", ScopeOptions(range=(3, 10)))
    assert odd_paths.verdict == VERIFIED
    assert [obs["n"] for obs in odd_paths.observations] == [5, 7, 9]
    assert all(obs["chi_imax"] == 2 for obs in odd_paths.observations)
    set_graphs = resolve_scope(REGISTRY["prop-3.1a"], ScopeOptions(range=(3, 10)))
    assert set_graphs.families[0].hi == 5


@pytest.mark.parametrize("claim_id", expand_claim_ids(["prop-3.1"]))
def test_imax_table_ledger(claim_id):
    result = run_check(claim_id)
    assert result.verdict == VERIFIED
    assert result.budget_exhausted == 0
    assert result.graphs_scanned == len(result.observations) > 0


@pytest.mark.parametrize(
    "claim_id,verdict",
    [
        ("thm-3.3", REFUTED),
        ("thm-3.5", REFUTED),
        ("cor-3.2", REFUTED),
        ("sec2-obs", REFUTED),
        ("conj-2.4", VERIFIED),
        pytest.param("lemma-1.1", VERIFIED, marks=pytest.mark.slow),
    ],
)
def test_suspect_claim_ledger_up_to_order_six(claim_id, verdict):
    result = run_check(claim_id)
    assert result.verdict == verdict
    assert result.graphs_scanned == 1 + 1 + 2 + 6 + 21 + 112
    assert not result.harness_bug
    for c in result.counterexamples:
        assert recheck(claim_id, c.graph6, c.context) is not None


def test_four_cycle_supports_the_imax_table():
    c4 = nx.cycle_graph(4)
    refuted = run_check("thm-3.5", ScopeOptions(max_order=4))
    witness = next(c for c in refuted.counterexamples if nx.is_isomorphic(_nx(c.graph6), c4))
    assert (witness.data["chi"], witness.data["chi_imax"]) == (2, 2)
    table = run_check("prop-3.1d", ScopeOptions(range=(4, 4)))
    assert table.verdict == VERIFIED
    assert table.observations[0]["chi_imax"] == 2


def test_example_thorn_colouring_claim():
    result = run_check("ex-1", ScopeOptions(range=(3, 5)))
    assert [obs["colours_used"] for obs in result.observations] == [3, 4, 5, 3, 4, 5]
    assert all(obs["proper"] for obs in result.observations)
    # t_1 = 1: la classe c1 pèse exactement Σt_i
    assert result.verdict == REFUTED
    assert all(c.context["thorns"][0] == 1 for c in result.counterexamples)
    assert all(c.data["theta_c1"] == c.data["total_thorns"] for c in result.counterexamples)
    shifted = [obs for obs in result.observations if obs["thorns"][0] == 2]
    assert len(shifted) == 3
    assert all(obs["theta_c1"] == obs["total_thorns"] - 1 for obs in shifted)
    assert not result.harness_bug


def test_cycle_values_are_recorded_without_verdict():
    result = run_check("sec2-cycles")
    assert result.kind == NOT_CHECKABLE
    assert result.verdict == SKIPPED
    assert result.counterexample_count == 0
    assert [obs["n"] for obs in result.observations] == list(range(3, 11))
    c5 = result.observations[2]
    assert (c5["chi"], c5["delta_plus_one"], c5["r_minus"]) == (3, 3, 3)


def test_counterexamples_sorted_and_capped(monkeypatch):
    from app.config import settings
    monkeypatch.setattr(settings, "max_counterexamples", 1)
    result = run_check("thm-3.5", ScopeOptions(max_order=4))
    assert len(result.counterexamples) == 1
    assert result.counterexample_count >= 2


def test_counterexample_order_is_by_graph6():
    result = run_check("thm-3.5", ScopeOptions(max_order=5))
    keys = [c.graph6 for c in result.counterexamples]
    assert keys == sorted(keys)


def test_results_are_deterministic():
    first = run_check("thm-3.3-any", ScopeOptions(max_order=5)).to_json()
    second = run_check("thm-3.3-any", ScopeOptions(max_order=5)).to_json()
    assert first == second
    assert "runtime_seconds" not in first


def test_parallel_run_matches_serial():
    serial = run_check("thm-3.5", ScopeOptions(max_order=5), jobs=1)
    parallel = run_check("thm-3.5", ScopeOptions(max_order=5), jobs=2)
    assert parallel.to_json() == serial.to_json()


def test_budget_exhaustion_marks_claim_skipped(monkeypatch):
    from app.config import settings
    monkeypatch.setattr(settings, "partition_budget", 1)
    # le triangle avec une queue a deux partitions chromatiques
    result = run_check("lemma-2.1", ScopeOptions(max_order=4))
    assert result.verdict == SKIPPED
    assert result.budget_exhausted >= 1


def test_conjecture_search_small_orders():
    result = conjecture_search(5)
    assert result.claim_id == "conj-2.4"
    assert result.verdict == VERIFIED
    assert result.tallies["hypothesis_matched"] > 0
    assert result.graphs_scanned == 1 + 1 + 2 + 6 + 21


def test_conjecture_search_limits():
    with pytest.raises(BudgetExceededError):
        conjecture_search(10)


@pytest.mark.slow
def test_thm_2_3_refuted_at_five():
    result = run_check("thm-2.3", ScopeOptions(range=(5, 5)))
    assert result.verdict == REFUTED
    assert result.counterexamples[0].context["n"] == 5


@pytest.mark.slow
def test_conjecture_search_order_seven():
    result = conjecture_search(7, jobs=2)
    assert result.verdict in (VERIFIED, REFUTED)
    assert not result.harness_bug


def test_random_conjecture_search_uses_its_own_count(monkeypatch):
    from app.config import settings
    monkeypatch.setattr(settings, "conjecture_random_count", 3)
    monkeypatch.setattr(settings, "rainbow_sample_size", 50)
    result = conjecture_search(8, seed=7)
    assert result.graphs_scanned == 3
    assert conjecture_search(8, seed=7, samples=2).graphs_scanned == 2
