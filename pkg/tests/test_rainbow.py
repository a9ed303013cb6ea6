import pytest

from app.services.colourings import Colouring, enumerate_chromatic_partitions
from app.services.errors import GraphError, ImproperColouringError
from app.services.generators import complete, cycle, null, path, set_graph
from app.services.graph_core import build_graph, join_k1
from app.services.rainbow import (
    r_imax,
    rainbow_bounds,
    rainbow_number,
    rainbow_sample_bounds,
    yields_rainbow,
)


def test_rainbow_on_path():
    g = path(3)
    c = Colouring.from_assignment([1, 2, 1])
    report = rainbow_number(g, c)
    assert report.r == 3
    assert report.rainbow_vertices == frozenset({0, 1, 2})
    assert yields_rainbow(g, c, 0)


def test_rainbow_vertex_needs_every_colour():
    # P4 coloré 1,2,3,1: l'extrémité 0 ne voit pas la couleur 3
    g = path(4)
    c = Colouring.from_assignment([1, 2, 3, 1])
    assert not yields_rainbow(g, c, 0)
    assert rainbow_number(g, c).rainbow_vertices == frozenset({1, 2})


def test_improper_colouring_rejected():
    g = path(3)
    bad = Colouring.from_assignment([1, 1, 2])
    with pytest.raises(ImproperColouringError):
        rainbow_number(g, bad)
    with pytest.raises(ImproperColouringError):
        yields_rainbow(g, bad, 0)
    with pytest.raises(GraphError):
        yields_rainbow(g, Colouring.from_assignment([1, 2, 1]), 5)


@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_complete_and_null_graphs_are_fully_rainbow(n):
    for g in (complete(n), null(n)):
        bounds = rainbow_bounds(g)
        assert bounds.exact
        assert bounds.r_minus == bounds.r_plus == n


def test_bounds_with_witnesses():
    g = path(3)
    bounds = rainbow_bounds(g)
    assert (bounds.r_minus, bounds.r_plus) == (3, 3)
    assert bounds.partitions_scanned == 1
    assert rainbow_number(g, bounds.witness_min).r == bounds.r_minus
    as_dict = bounds.to_dict()
    assert as_dict["witness_min"]["colours"] == [1, 2, 1]


def test_bounds_cover_every_partition():
    g = cycle(6)
    values = [rainbow_number(g, c).r for c in enumerate_chromatic_partitions(g)]
    bounds = rainbow_bounds(g)
    assert (bounds.r_minus, bounds.r_plus) == (min(values), max(values))


def test_join_adds_one_rainbow_vertex():
    for g in (path(4), cycle(5), build_graph(4, [(0, 1), (2, 3)])):
        base, top = rainbow_bounds(g), rainbow_bounds(join_k1(g))
        assert top.r_minus == base.r_minus + 1
        assert top.r_plus == base.r_plus + 1


def test_truncated_bounds_are_not_exact():
    g = build_graph(6, [(0, 1), (2, 3), (4, 5)])
    bounds = rainbow_bounds(g, budget=1)
    assert not bounds.exact
    assert bounds.partitions_scanned == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_set_graph_rainbow_exhaustive(n):
    g = set_graph(n).graph
    bounds = rainbow_bounds(g)
    assert bounds.exact
    assert bounds.r_minus == bounds.r_plus == 2 ** n - 1


@pytest.mark.slow
def test_set_graph_four_rainbow_sampled():
    g = set_graph(4).graph
    bounds = rainbow_sample_bounds(g, 10_000, seed=0)
    assert not bounds.exact
    assert bounds.r_minus == bounds.r_plus == 15


def test_sampled_bounds_never_exact():
    bounds = rainbow_sample_bounds(cycle(6), 50, seed=1)
    assert not bounds.exact
    assert bounds.partitions_scanned == 50


def test_r_imax_uses_peeling_colouring():
    report = r_imax(set_graph(3).graph)
    assert report.colouring_used.num_colours == 5
    # les singletons ne voient pas la couleur du sommet disjoint; la clique {12,13,23,123} voit tout
    assert report.r == 4
    p4 = r_imax(path(4))
    assert p4.colouring_used.assignment == (1, 2, 3, 1)
    assert p4.r == 2
    assert p4.rainbow_vertices == frozenset({1, 2})


def test_five_cycle_bounds():
    bounds = rainbow_bounds(cycle(5))
    assert bounds.exact
    assert (bounds.r_minus, bounds.r_plus) == (3, 3)
