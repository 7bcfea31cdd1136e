"""Named-graph catalog and exhaustive generation of small connected cubic graphs.

Generation grows every connected loopless cubic multigraph on ``n + 2``
vertices from those on ``n`` by two moves: edge insertion (subdivide two
edges, or one edge twice, and join the new vertices) and bridge joining
(subdivide an edge in each of two smaller graphs and join the new vertices).
Isomorphic duplicates are removed with networkx after bucketing by a
closed-walk/distance invariant.  Resulting counts match the known tables
(1, 2, 6, 20, 91, 509 multigraphs; 1, 2, 5, 19, 85, 509 simple graphs).
"""

from __future__ import annotations

import functools
from importlib import resources
from typing import Callable, Iterator

import networkx as nx
import numpy as np

from . import constructions as C
from .graph import Graph, is_bipartite, parse_edge_list, read_graph6_stream

CUBIC_SIMPLE_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}
CUBIC_MULTI_COUNTS = {2: 1, 4: 2, 6: 6, 8: 20, 10: 91, 12: 509}
BIPARTITE_CUBIC_COUNTS = {6: 1, 8: 1, 10: 2, 12: 5, 14: 13}


def _to_nx(g: Graph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.pairs())
    return h


def _invariant(g: Graph) -> tuple:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.pairs():
        a[u, v] += 1
        a[v, u] += 1
    walks = []
    p = np.eye(g.n, dtype=np.int64)
    for _ in range(7):
        p = p @ a
        walks.append(np.diag(p).copy())
    dist = dict(nx.all_pairs_shortest_path_length(nx.Graph(_to_nx(g))))
    return tuple(sorted(tuple(int(w[v]) for w in walks) + tuple(sorted(dist[v].values()))
                        for v in range(g.n)))


def dedupe(graphs) -> list[Graph]:
    """Keep one representative per isomorphism class, first seen wins."""
    buckets: dict[tuple, list[nx.MultiGraph]] = {}
    out = []
    for g in graphs:
        h = _to_nx(g)
        bucket = buckets.setdefault(_invariant(g), [])
        if any(nx.is_isomorphic(h, o) for o in bucket):
            continue
        bucket.append(h)
        out.append(g)
    return out


def _insertions(g: Graph) -> Iterator[Graph]:
    n, pairs = g.n, g.pairs()
    x, y = n, n + 1
    for i in range(g.m):
        for j in range(i, g.m):
            rest = [p for k, p in enumerate(pairs) if k != i and k != j]
            a, b = pairs[i]
            if i == j:
                new = [(a, x), (x, y), (x, y), (y, b)]
            else:
                c, d = pairs[j]
                new = [(a, x), (x, b), (c, y), (y, d), (x, y)]
            yield Graph(n + 2, rest + new)


def _bridge_joins(g1: Graph, g2: Graph) -> Iterator[Graph]:
    n1 = g1.n
    x = n1
    off = n1 + 1
    y = off + g2.n
    p1, p2 = g1.pairs(), [(a + off, b + off) for a, b in g2.pairs()]
    for i, (a, b) in enumerate(p1):
        for j, (c, d) in enumerate(p2):
            pairs = (p1[:i] + p1[i + 1:] + [(a, x), (x, b)]
                     + p2[:j] + p2[j + 1:] + [(c, y), (y, d)] + [(x, y)])
            yield Graph(y + 1, pairs)


@functools.lru_cache(maxsize=None)
def cubic_multigraphs(n: int) -> tuple[Graph, ...]:
    """All connected loopless cubic multigraphs on ``n`` vertices, up to isomorphism."""
    if n < 2 or n % 2:
        return ()
    if n == 2:
        return (C.theta2(),)
    return tuple(dedupe(_candidates(n, lambda g: True)))


def _candidates(n: int, keep: Callable[[Graph], bool]) -> Iterator[Graph]:
    for g in cubic_multigraphs(n - 2):
        for h in _insertions(g):
            if keep(h):
                yield h
    for a in range(2, n - 1, 2):
        b = n - 2 - a
        if b < a:
            continue
        for g1 in cubic_multigraphs(a):
            for g2 in cubic_multigraphs(b):
                for h in _bridge_joins(g1, g2):
                    if keep(h):
                        yield h


def cubic_graphs(n: int, *, bipartite: bool = False) -> list[Graph]:
    """Connected simple cubic graphs on ``n`` vertices (optionally only bipartite)."""
    if n < 4 or n % 2:
        return []

    def keep(g: Graph) -> bool:
        return not g.has_multiedge() and (not bipartite or is_bipartite(g) is not None)

    if n <= 12:
        return [g for g in cubic_multigraphs(n) if keep(g)]
    return dedupe(_candidates(n, keep))


# ------------------------------------------------------------ shipped data


def _data_lines(name: str) -> list[str]:
    return resources.files("factorlab.data").joinpath(name).read_text().splitlines()


def load_cubic(n: int) -> list[Graph]:
    """Frozen catalog of connected simple cubic graphs, ``4 <= n <= 12``."""
    return list(read_graph6_stream(_data_lines(f"cubic_{n}.g6")))


def load_bipartite_cubic(n: int) -> list[Graph]:
    """Frozen catalog of connected simple bipartite cubic graphs, ``6 <= n <= 14``."""
    return list(read_graph6_stream(_data_lines(f"bipartite_cubic_{n}.g6")))


def load_cubic_multigraphs(n: int) -> list[Graph]:
    """Frozen catalog of connected cubic multigraphs with a multiedge, ``n <= 6``."""
    text = "\n".join(_data_lines(f"cubic_multi_{n}.txt"))
    return [parse_edge_list(block) for block in text.split("\n\n") if block.strip()]


# ------------------------------------------------------------ named catalog


def named_catalog() -> dict[str, Graph]:
    """The small named graphs used throughout the checks."""
    return {
        "Theta2": C.theta2(),
        "C4": C.cycle(4),
        "C6": C.cycle(6),
        "K4": C.complete(4),
        "Bip4": C.bip4(),
        "K3,3": C.complete_bipartite(3, 3),
        "Prism": C.prism(),
        "Q3": C.cube(),
        "Heawood": C.heawood(),
        "Y(2)": C.y_graph(2),
        "B(3)": C.b_graph(3),
        "B(3)+edge": C.b_graph(3, True),
        "K33+e": C.k33_plus_edge(),
    }
