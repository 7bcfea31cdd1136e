from __future__ import annotations

import math

import networkx as nx
import pytest

from factorlab import EdgeCut, Graph, LoopRejected, ParseError
from factorlab import constructions as C
from factorlab.catalog import load_bipartite_cubic, load_cubic
from factorlab.graph import (chordless_cycles, girth, is_bipartite, is_connected,
                             is_cycle_separating, is_cyclically_k_edge_connected, parse_edge_list,
                             parse_graph6, read_graph6_stream, write_edge_list, write_graph6)


def test_edge_ids_are_dense_and_ordered():
    g = Graph(3, [(0, 1), (1, 2), (0, 1)])
    assert [e.id for e in g.edges] == [0, 1, 2]
    assert g.incident(1) == (0, 1, 2)
    assert g.edges_between(0, 1) == [0, 2]
    assert g.degree(1) == 3 and g.degree(2) == 1


def test_loops_rejected():
    with pytest.raises(LoopRejected):
        Graph(2, [(1, 1)])


def test_half_edges_resolve_to_vertices():
    g = C.theta2()
    hs = g.half_edges(0)
    assert len(hs) == 3
    assert all(h.vertex(g) == 0 for h in hs)


def test_multiedge_queries():
    b = C.bip4()
    assert b.has_multiedge()
    assert all(b.has_multiedge_at(v) for v in range(4))
    assert not C.complete(4).has_multiedge()


def test_delete_vertices_renumbers_in_order():
    g = C.cycle(5)
    h, vmap, emap = g.delete_vertices([2])
    assert vmap == {0: 0, 1: 1, 3: 2, 4: 3}
    assert h.n == 4 and h.m == 3
    assert set(emap) == {0, 3, 4}


def test_delete_edges_keeps_vertices():
    g = C.complete(4)
    h, emap = g.delete_edges([0, 5])
    assert h.n == 4 and h.m == 4
    assert emap == {1: 0, 2: 1, 3: 2, 4: 3}


def test_edge_cut_from_side():
    g = C.prism()
    cut = EdgeCut.from_side(g, range(3))
    assert len(cut.edges) == 3
    assert cut.to_json()["sides"] == [[0, 1, 2], [3, 4, 5]]


# ------------------------------------------------------------ parsing


def test_edge_list_roundtrip_with_multiedges():
    g = C.bip4()
    text = write_edge_list(g)
    assert text.endswith("\n") and text.startswith("4 6\n")
    assert parse_edge_list(text) == g


def test_edge_list_comments_and_blank_lines():
    g = parse_edge_list("# theta\n2 3\n\n0 1\n0 1\n# mid\n1 0\n")
    assert g.n == 2 and g.m == 3


@pytest.mark.parametrize("text, line", [
    ("3 2\n0 1\n", 2),
    ("3 1\n0 x\n", 2),
    ("3 1\n0 5\n", 2),
    ("0 0\n", 1),
    ("", 1),
])
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_edge_list_loop_rejected():
    with pytest.raises(LoopRejected):
        parse_edge_list("2 1\n1 1\n")


def test_graph6_known_strings():
    assert write_graph6(C.complete(4)) == "C~"
    for g in (C.cube(), C.heawood(), C.complete_bipartite(3, 3), C.cycle(7)):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.pairs())
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert write_graph6(g) == ref
        assert parse_graph6(ref).edge_key() == g.edge_key()


def test_graph6_header_and_stream():
    s = write_graph6(C.complete(4))
    assert parse_graph6(">>graph6<<" + s).m == 6
    assert len(list(read_graph6_stream([s, "", s + "\n"]))) == 2


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x01", "?", "~??"])
def test_graph6_malformed(bad):
    with pytest.raises(ParseError):
        parse_graph6(bad)


def test_graph6_refuses_multigraphs():
    with pytest.raises(ValueError):
        write_graph6(C.theta2())


# ------------------------------------------------------------ queries


def test_connectivity_and_bipartition():
    assert is_connected(C.heawood())
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    sides = is_bipartite(C.complete_bipartite(3, 3))
    assert sides == (frozenset({0, 1, 2}), frozenset({3, 4, 5}))
    assert is_bipartite(C.complete(4)) is None
    assert is_bipartite(C.bip4()) is not None


@pytest.mark.parametrize("g, expect", [
    (C.theta2(), 2), (C.bip4(), 2), (C.complete(4), 3), (C.cube(), 4),
    (C.complete_bipartite(3, 3), 4), (C.heawood(), 6), (C.cycle(9), 9),
])
def test_girth(g, expect):
    assert girth(g) == expect


def test_girth_forest_is_infinite():
    assert math.isinf(girth(Graph(3, [(0, 1), (1, 2)])))


def test_girth_matches_networkx_on_catalog():
    for n in (6, 8, 10):
        for g in load_cubic(n):
            assert girth(g) == nx.girth(nx.Graph(g.pairs()))


def test_cycle_separating():
    g = C.prism()
    cut = EdgeCut.from_side(g, range(3))
    assert is_cycle_separating(g, cut.edges)
    assert not is_cycle_separating(g, [0])


def test_chordless_cycles_of_k4_are_triangles():
    cyc = chordless_cycles(C.complete(4))
    assert len(cyc) == 4 and all(len(c) == 3 for c in cyc)


@pytest.mark.parametrize("g, k, expect", [
    (C.heawood(), 4, True), (C.complete_bipartite(3, 3), 4, True), (C.cube(), 4, True),
    (C.prism(), 4, False), (C.prism(), 3, True), (C.complete(4), 4, True),
])
def test_cyclic_connectivity_named(g, k, expect):
    assert is_cyclically_k_edge_connected(g, k) is expect


def test_cyclic_connectivity_strategies_agree():
    graphs = [g for n in (6, 8, 10) for g in load_cubic(n)] + load_bipartite_cubic(12)
    for g in graphs:
        for k in (3, 4, 5):
            if g.m <= 18 or k <= 4:
                assert (is_cyclically_k_edge_connected(g, k, strategy="subsets")
                        == is_cyclically_k_edge_connected(g, k, strategy="flow"))
