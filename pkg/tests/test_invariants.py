from itertools import combinations
import random

import networkx as nx
import pytest

from app.services.errors import BudgetExceededError
from app.services.generators import complete, cycle, null, set_graph
from app.services.graph_core import Graph, build_graph, graph_from_code, iter_bits, mask_of, pair_count
from app.services.invariants import (
    _chromatic,
    chromatic_number,
    clique_number,
    count_maximum_cliques,
    enumerate_maximum_independent_sets,
    greedy_colouring_bound,
    independence_number,
    invariant_report,
    maximum_cliques,
    min_degree,
)


def _from_nx(nxg) -> Graph:
    nxg = nx.convert_node_labels_to_integers(nxg)
    return build_graph(nxg.number_of_nodes(), nxg.edges())


def _colourable(g: Graph, k: int) -> bool:
    colours = [-1] * g.order

    def assign(v: int) -> bool:
        if v == g.order:
            return True
        for c in range(k):
            if all(colours[u] != c for u in g.adjacency(v)):
                colours[v] = c
                if assign(v + 1):
                    return True
        colours[v] = -1
        return False

    return assign(0)


def _brute_chi(g: Graph) -> int:
    k = 0
    while not _colourable(g, k):
        k += 1
    return k


def _independent_subsets(g: Graph):
    for size in range(g.order, -1, -1):
        for s in combinations(range(g.order), size):
            if all(not g.has_edge(u, v) for u, v in combinations(s, 2)):
                yield s


def test_against_brute_force_on_all_order_five_graphs():
    for code in range(1 << pair_count(5)):
        g = graph_from_code(5, code)
        nxg = nx.Graph(g.edges())
        nxg.add_nodes_from(range(5))
        omega = max(len(c) for c in nx.find_cliques(nxg))
        independents = list(_independent_subsets(g))
        alpha = len(independents[0])
        assert clique_number(g) == omega
        assert independence_number(g) == alpha
        assert len(enumerate_maximum_independent_sets(g)) == sum(1 for s in independents if len(s) == alpha)
        assert chromatic_number(g) == _brute_chi(g)


def _independent_masks(g: Graph):
    """Filtre de l'ensemble des parties: masques sans arête interne"""
    return [s for s in range(1 << g.order) if all(not g.masks[v] & s for v in iter_bits(s))]


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5, 6])
def test_maximum_independent_sets_match_power_set_filter(order):
    for code in range(1 << pair_count(order)):
        g = graph_from_code(order, code)
        independent = _independent_masks(g)
        alpha = max(s.bit_count() for s in independent)
        expected = sorted(s for s in independent if s.bit_count() == alpha)
        assert independence_number(g) == alpha
        assert sorted(mask_of(s) for s in enumerate_maximum_independent_sets(g)) == expected


def test_chromatic_number_on_random_order_seven_graphs():
    rng = random.Random(3)
    for _ in range(500):
        edges = [(i, j) for i, j in combinations(range(7), 2) if rng.random() < 0.5]
        g = build_graph(7, edges)
        assert chromatic_number(g) == _brute_chi(g)


@pytest.mark.slow
def test_chromatic_number_on_ten_thousand_order_seven_graphs():
    rng = random.Random(7)
    for _ in range(10_000):
        p = rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))
        edges = [(i, j) for i, j in combinations(range(7), 2) if rng.random() < p]
        g = build_graph(7, edges)
        assert chromatic_number(g) == _brute_chi(g)


def test_search_and_covers_agree_beyond_order_seven():
    rng = random.Random(11)
    for _ in range(60):
        order = rng.randint(8, 13)
        edges = [(i, j) for i, j in combinations(range(order), 2) if rng.random() < 0.45]
        g = build_graph(order, edges)
        assert _chromatic(g, 0, 10_000_000) == _chromatic(g, order, 10_000_000)


def test_named_graphs():
    petersen = _from_nx(nx.petersen_graph())
    assert (clique_number(petersen), independence_number(petersen), chromatic_number(petersen)) == (2, 4, 3)
    grotzsch = _from_nx(nx.mycielski_graph(4))
    assert clique_number(grotzsch) == 2
    assert chromatic_number(grotzsch) == 4
    assert chromatic_number(cycle(7)) == 3
    assert chromatic_number(complete(6)) == 6
    assert chromatic_number(null(4)) == 1


def test_empty_graph_conventions():
    g = null(0)
    assert clique_number(g) == 0
    assert independence_number(g) == 0
    assert chromatic_number(g) == 0
    assert maximum_cliques(g) == []
    assert count_maximum_cliques(g) == 0


# ω = 2^(n−1) pour tout n; pour n = 4, hors des 4 étoiles, 8 autres familles intersectantes de taille 8
SET_GRAPH_MAXIMUM_CLIQUES = {1: 1, 2: 2, 3: 4, 4: 12}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_set_graph_invariants(n):
    g = set_graph(n).graph
    assert clique_number(g) == 2 ** (n - 1)
    assert count_maximum_cliques(g) == SET_GRAPH_MAXIMUM_CLIQUES[n]
    assert independence_number(g) == n
    assert chromatic_number(g) == 2 ** (n - 1)


def test_set_graph_three_maximum_cliques_are_stars():
    sg = set_graph(3)
    cliques = maximum_cliques(sg.graph)
    assert len(cliques) == 4
    # chaque clique maximum: sous-ensembles contenant un élément fixé, ou les quatre de cardinal ≥ 2
    families = [sorted(sg.labels[v].subset for v in c) for c in cliques]
    assert sorted([(1, 2), (1, 3), (2, 3), (1, 2, 3)]) in families


def test_set_graph_four_unique_maximum_independent_set():
    sg = set_graph(4)
    sets = enumerate_maximum_independent_sets(sg.graph)
    assert len(sets) == 1
    assert sorted(sg.labels[v].subset for v in sets[0]) == [(1,), (2,), (3,), (4,)]


@pytest.mark.slow
def test_set_graph_five_chromatic_number():
    assert chromatic_number(set_graph(5).graph) == 16


def test_min_degree_and_greedy_bound():
    g = build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert min_degree(g) == 1
    assert chromatic_number(g) <= greedy_colouring_bound(g) <= g.max_degree() + 1


def test_chromatic_search_budget():
    # au-delà de la méthode par couverture, la recherche arborescente consomme le budget
    grotzsch = _from_nx(nx.mycielski_graph(4))
    with pytest.raises(BudgetExceededError):
        _chromatic(grotzsch, 0, 1)
    assert _chromatic(grotzsch, 0, 1_000_000) == 4


def test_invariant_report_fields():
    report = invariant_report(cycle(5)).to_dict()
    assert report == {
        "omega": 2, "alpha": 2, "chi": 3, "max_clique_count": 5,
        "max_independent_set_count": 5, "min_degree": 2, "order": 5,
    }
