from __future__ import annotations

import networkx as nx
import pytest

from factorlab import (BadParams, DegreeNotThree, EdgeMissing, Graph, StaleVertex, UnknownName,
                       is_2fh, is_pmh, make_named)
from factorlab import constructions as C
from factorlab.constructions import PAIRINGS, StarSpec, StarStep, TwoCutSpec
from factorlab.graph import girth, is_bipartite, is_cyclically_k_edge_connected


def _nx(g: Graph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.pairs())
    return h


def test_star_product_layout():
    k4 = C.complete(4)
    res = C.star_product(StarSpec(k4, 0, k4, 0))
    g = res.graph
    assert (g.n, g.m) == (6, 9)
    assert res.principal_cut.edges == frozenset({6, 7, 8})
    assert [g.edges[e].ends for e in (6, 7, 8)] == [(0, 3), (1, 4), (2, 5)]
    assert res.maps[0] == {1: 0, 2: 1, 3: 2}
    assert res.maps[1] == {1: 3, 2: 4, 3: 5}
    assert nx.is_isomorphic(_nx(g), nx.circular_ladder_graph(3))


def test_star_product_pairing_permutes_cut():
    k4 = C.complete(4)
    g = C.star_product(StarSpec(k4, 0, k4, 0, (2, 0, 1))).graph
    assert [g.edges[e].ends for e in (6, 7, 8)] == [(0, 5), (1, 3), (2, 4)]


def test_star_product_edge_maps():
    q = C.cube()
    res = C.star_product(StarSpec(q, 0, C.complete(4), 0))
    for old, new in res.edge_maps[0].items():
        a, b = q.edges[old].ends
        assert res.graph.edges[new].ends == (res.maps[0][a], res.maps[0][b])


@pytest.mark.parametrize("spec", [
    StarSpec(C.cycle(4), 0, C.complete(4), 0),
    StarSpec(C.complete(4), 4, C.complete(4), 0),
])
def test_star_product_requires_degree_three(spec):
    with pytest.raises(DegreeNotThree):
        C.star_product(spec)


def test_star_product_theta_needs_flag():
    with pytest.raises(BadParams):
        C.star_product(StarSpec(C.theta2(), 0, C.complete(4), 0))
    g = C.star_product(StarSpec(C.theta2(), 0, C.complete(4), 0, allow_theta=True)).graph
    assert nx.is_isomorphic(_nx(g), _nx(C.complete(4)))


def test_star_product_bad_pairing():
    with pytest.raises(BadParams):
        C.star_product(StarSpec(C.complete(4), 0, C.complete(4), 0, (0, 0, 1)))


def test_star_product_multiedge_neighbourhood():
    # Bip4 vertices have a repeated neighbour; half-edges keep the product well defined
    g = C.star_product(StarSpec(C.bip4(), 0, C.complete(4), 0)).graph
    assert g.is_cubic() and g.n == 6


def test_star_product_of_bipartite_factors_is_bipartite():
    k33 = C.complete_bipartite(3, 3)
    for p in PAIRINGS:
        g = C.star_product(StarSpec(k33, 0, k33, 0, p)).graph
        assert is_bipartite(g) is not None and g.is_cubic()


def test_two_cut_connection_layout():
    k4 = C.complete(4)
    res = C.two_cut_connection(TwoCutSpec(k4, 0, k4, 0))
    g = res.graph
    assert (g.n, g.m) == (8, 12)
    assert [g.edges[e].ends for e in sorted(res.principal_cut.edges)] == [(0, 4), (1, 5)]
    crossed = C.two_cut_connection(TwoCutSpec(k4, 0, k4, 0, crossed=True)).graph
    assert [crossed.edges[e].ends for e in (10, 11)] == [(0, 5), (1, 4)]


def test_two_cut_missing_edge():
    with pytest.raises(EdgeMissing):
        C.two_cut_connection(TwoCutSpec(C.complete(4), 6, C.complete(4), 0))


def test_y_extension_adds_triangle():
    k33 = C.complete_bipartite(3, 3)
    res = C.y_extension(k33, 0)
    g = res.graph
    assert g.n == 8 and girth(g) == 3
    tri = list(range(g.n - 3, g.n))
    assert all(g.adjacent(a, b) for a in tri for b in tri if a < b)


def test_y_extension_on_multiedge_vertex():
    g = C.y_extension(C.bip4(), 0).graph
    assert g.n == 6 and is_pmh(g).verdict and is_bipartite(g) is None


def test_repeated_star_tracks_base_vertices():
    k33 = C.complete_bipartite(3, 3)
    g, track = C.repeated_star(k33, [StarStep(0, C.complete(4), 0), StarStep(1, C.complete(4), 0)])
    assert g.n == 10
    assert set(track) == {2, 3, 4, 5}
    with pytest.raises(StaleVertex):
        C.repeated_star(k33, [StarStep(0, C.complete(4), 0), StarStep(0, C.complete(4), 0)])


# ------------------------------------------------------------ named graphs


def test_heawood_structure():
    g = C.heawood()
    assert (g.n, g.m) == (14, 21) and g.is_cubic()
    assert girth(g) == 6 and is_bipartite(g) is not None
    assert nx.is_isomorphic(_nx(g), nx.heawood_graph())


def test_cube_and_complete_bipartite_match_networkx():
    assert nx.is_isomorphic(_nx(C.cube()), nx.hypercube_graph(3))
    assert nx.is_isomorphic(_nx(C.complete_bipartite(3, 3)), nx.complete_bipartite_graph(3, 3))


def test_y_graph_shape():
    y = C.y_graph(2)
    assert y.n == 6 and y.degree(0) == 3 and sorted(y.neighbors(0)) == [1, 2, 3]
    assert all(y.degree(v) == 5 for v in (1, 2, 3)) and y.degree(4) == 4


def test_b_graph_shape():
    b = C.b_graph(3)
    assert b.n == 8 and b.degree(0) == 3 and b.degree(4) == 3
    assert is_bipartite(b) is not None
    be = C.b_graph(3, extra_edge=True)
    assert be.m == b.m + 1 and is_bipartite(be) is None


def test_k33_plus_edge():
    g = C.k33_plus_edge()
    assert g.m == 10 and g.adjacent(0, 1)


@pytest.mark.parametrize("name, n, m", [
    ("K4", 4, 6), ("K3,3", 6, 9), ("K_{3,3}", 6, 9), ("C6", 6, 6), ("Q3", 8, 12), ("Heawood", 14, 21),
    ("Theta2", 2, 3), ("Bip4", 4, 6), ("Prism", 6, 9), ("K33+e", 6, 10), ("Y(2)", 6, 13),
    ("Y5", 6, 13), ("B(3)", 8, 15), ("B(3)+edge", 8, 16),
])
def test_make_named(name, n, m):
    g = make_named(name)
    assert (g.n, g.m) == (n, m)


def test_make_named_params_and_errors():
    assert make_named("Y", 3).n == 8
    with pytest.raises(UnknownName):
        make_named("Petersen")
    with pytest.raises(BadParams):
        make_named("Y(1)")
    with pytest.raises(BadParams):
        make_named("Y4")


def test_prism_not_cyclically_four_connected():
    assert not is_cyclically_k_edge_connected(C.prism(), 4)
    assert not is_2fh(C.prism()).verdict
