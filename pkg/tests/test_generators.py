from itertools import combinations

import pytest

from app.services.errors import GraphError, UnknownFamilyError
from app.services.generators import (
    FAMILIES,
    ThornSpec,
    complete_thorn,
    cycle,
    empty_sun,
    family,
    path,
    set_graph,
    star,
    sunlet,
    thorn_complete,
    wheel,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_set_graph_order_and_intersection_edges(n):
    sg = set_graph(n)
    g = sg.graph
    assert g.order == 2 ** n - 1
    subsets = [set(label.subset) for label in sg.labels]
    for u, v in combinations(range(g.order), 2):
        assert g.has_edge(u, v) == bool(subsets[u] & subsets[v])


def test_set_graph_labels_cardinality_major():
    sg = set_graph(3)
    assert [str(l) for l in sg.labels] == ["v1,1", "v1,2", "v1,3", "v2,1", "v2,2", "v2,3", "v3,1"]
    assert [l.subset for l in sg.labels][3:6] == [(1, 2), (1, 3), (2, 3)]
    assert sg.vertex_of(3, 1) == 6
    assert sg.label_map()["v2,2"] == 4


def test_set_graph_two_is_a_path():
    g = set_graph(2).graph
    assert g.edges() == [(0, 2), (1, 2)]


def test_set_graph_bounds():
    with pytest.raises(GraphError):
        set_graph(0)
    with pytest.raises(GraphError):
        set_graph(6)


def test_paths_and_cycles():
    assert path(1).order == 1
    assert path(5).edge_count == 4
    assert cycle(5).degrees() == [2] * 5
    with pytest.raises(GraphError):
        cycle(2)


def test_sunlet_and_empty_sun_degrees():
    s = sunlet(5)
    assert s.order == 10
    assert s.degrees() == [3] * 5 + [1] * 5
    assert s.has_edge(2, 7)
    e = empty_sun(4)
    assert e.order == 8
    assert e.degrees() == [4] * 4 + [2] * 4
    assert e.has_edge(7, 3) and e.has_edge(7, 0)


def test_thorn_complete_order_and_pendants():
    g = thorn_complete(3, ThornSpec((1, 2, 3)))
    assert g.order == 9
    assert g.degrees()[:3] == [3, 4, 5]
    assert g.degrees()[3:] == [1] * 6
    # épines attribuées dans l'ordre des sommets de base
    assert g.has_edge(0, 3) and g.has_edge(1, 4) and g.has_edge(1, 5) and g.has_edge(2, 8)


def test_thorn_spec_validation():
    with pytest.raises(GraphError):
        ThornSpec((1, 0, 2))
    with pytest.raises(GraphError):
        complete_thorn(path(3), ThornSpec((1, 1)))
    assert ThornSpec.ones(4).total == 4


def test_star_and_wheel():
    assert star(4).degrees() == [1, 1, 1, 1, 4]
    assert wheel(5).degrees() == [3] * 5 + [5]


def test_family_dispatch():
    assert set(FAMILIES) >= {"set-graph", "path", "cycle", "complete", "null", "sunlet", "empty-sun", "thorn-complete"}
    assert family("thorn-complete", 3, [1, 2, 3]).order == 9
    assert family("thorn-complete", 3).order == 6
    assert family("set-graph", 3).order == 7
    with pytest.raises(UnknownFamilyError):
        family("petersen", 3)
