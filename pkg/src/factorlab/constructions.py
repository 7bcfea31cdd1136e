"""Star products, 2-cut connections, Y-extensions and the named graph families."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (BadParams, DegreeNotThree, EdgeMissing, StaleVertex,
                     UnknownName)
from .graph import EdgeCut, Graph

PAIRINGS: tuple[tuple[int, int, int], ...] = tuple(itertools.permutations(range(3)))


@dataclass(frozen=True)
class StarSpec:
    g1: Graph
    v1: int
    g2: Graph
    v2: int
    pairing: tuple[int, int, int] = (0, 1, 2)
    allow_theta: bool = False


@dataclass(frozen=True)
class TwoCutSpec:
    g1: Graph
    e1: int
    g2: Graph
    e2: int
    crossed: bool = False


@dataclass
class Composite:
    """Result of a binary construction.

    ``maps[i]`` sends surviving vertices of the i-th operand to ids in ``graph``;
    ``edge_maps[i]`` does the same for surviving edges.
    """

    graph: Graph
    principal_cut: EdgeCut
    maps: tuple[dict[int, int], dict[int, int]]
    edge_maps: tuple[dict[int, int], dict[int, int]] = field(default_factory=lambda: ({}, {}))


def _is_theta(g: Graph) -> bool:
    return g.n == 2 and g.m == 3


def star_product(spec: StarSpec) -> Composite:
    """Delete ``v1`` and ``v2`` and join the freed half-edges.

    The i-th half-edge at ``v1`` (incident edges in id order) is joined to the
    ``pairing[i]``-th half-edge at ``v2``.  Vertices of ``g1 - v1`` come first,
    then those of ``g2 - v2``; the three joining edges are appended last.
    """
    g1, v1, g2, v2 = spec.g1, spec.v1, spec.g2, spec.v2
    for g, v in ((g1, v1), (g2, v2)):
        if not 0 <= v < g.n or g.degree(v) != 3:
            raise DegreeNotThree(f"vertex {v} must exist and have degree 3")
    if not spec.allow_theta and (_is_theta(g1) or _is_theta(g2)):
        raise BadParams("star product with the 2-vertex cubic graph needs allow_theta=True")
    if sorted(spec.pairing) != [0, 1, 2]:
        raise BadParams(f"pairing {spec.pairing} is not a permutation of 0,1,2")
    h1, map1, emap1 = g1.delete_vertices([v1])
    h2, map2, emap2 = g2.delete_vertices([v2])
    off = h1.n
    map2 = {k: x + off for k, x in map2.items()}
    pairs = h1.pairs() + [(a + off, b + off) for a, b in h2.pairs()]
    emap2 = {k: x + h1.m for k, x in emap2.items()}
    ends1 = [g1.edges[e].other(v1) for e in g1.incident(v1)]
    ends2 = [g2.edges[e].other(v2) for e in g2.incident(v2)]
    first_cut = len(pairs)
    for i in range(3):
        pairs.append((map1[ends1[i]], map2[ends2[spec.pairing[i]]]))
    graph = Graph(h1.n + h2.n, pairs)
    cut = EdgeCut(frozenset(range(first_cut, first_cut + 3)),
                  (frozenset(range(off)), frozenset(range(off, graph.n))))
    return Composite(graph, cut, (map1, map2), (emap1, emap2))


def two_cut_connection(spec: TwoCutSpec) -> Composite:
    """Delete ``e1 = x1y1`` and ``e2 = x2y2`` and add ``x1x2, y1y2``
    (or ``x1y2, y1x2`` when ``crossed``)."""
    g1, g2 = spec.g1, spec.g2
    if not 0 <= spec.e1 < g1.m:
        raise EdgeMissing(f"edge {spec.e1} not in first graph")
    if not 0 <= spec.e2 < g2.m:
        raise EdgeMissing(f"edge {spec.e2} not in second graph")
    x1, y1 = g1.edges[spec.e1].ends
    x2, y2 = g2.edges[spec.e2].ends
    h1, emap1 = g1.delete_edges([spec.e1])
    h2, emap2 = g2.delete_edges([spec.e2])
    off = g1.n
    pairs = h1.pairs() + [(a + off, b + off) for a, b in h2.pairs()]
    emap2 = {k: x + h1.m for k, x in emap2.items()}
    if spec.crossed:
        x2, y2 = y2, x2
    first_cut = len(pairs)
    pairs += [(x1, x2 + off), (y1, y2 + off)]
    graph = Graph(g1.n + g2.n, pairs)
    cut = EdgeCut(frozenset({first_cut, first_cut + 1}),
                  (frozenset(range(off)), frozenset(range(off, graph.n))))
    maps = ({v: v for v in range(g1.n)}, {v: v + off for v in range(g2.n)})
    return Composite(graph, cut, maps, (emap1, emap2))


def y_extension(g: Graph, v: int, pairing: tuple[int, int, int] = (0, 1, 2)) -> Composite:
    """Expand ``v`` into a triangle, i.e. a star product with K4 at its vertex 0.

    The three triangle vertices are the last three vertex ids of the result.
    """
    if not 0 <= v < g.n or g.degree(v) != 3:
        raise DegreeNotThree(f"vertex {v} must have degree 3")
    return star_product(StarSpec(g, v, complete(4), 0, pairing))


@dataclass(frozen=True)
class StarStep:
    at: int
    attach: Graph
    attach_at: int
    pairing: tuple[int, int, int] = (0, 1, 2)


def repeated_star(base: Graph, ops: Sequence[StarStep]) -> tuple[Graph, dict[int, int]]:
    """Left fold of star products.  ``at`` names a vertex of the original ``base``.

    Returns the final graph and the map from surviving base vertices to final ids.
    """
    g = base
    track = {v: v for v in range(base.n)}
    for step in ops:
        if step.at not in track:
            raise StaleVertex(f"base vertex {step.at} was consumed by an earlier step")
        res = star_product(StarSpec(g, track[step.at], step.attach, step.attach_at, step.pairing))
        first = res.maps[0]
        track = {v: first[cur] for v, cur in track.items() if v != step.at}
        g = res.graph
    return g, track


# ------------------------------------------------------------ named graphs


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams("K_n needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Classes ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise BadParams("K_{a,b} needs a, b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("C_n needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def cube() -> Graph:
    """Q3 on bit strings 0..7, edges between strings differing in one bit."""
    return Graph(8, [(x, x ^ (1 << b)) for x in range(8) for b in range(3) if x < x ^ (1 << b)])


def heawood() -> Graph:
    """LCF [5,-5]^7: the 14-cycle plus chords ``{i, i+5}`` for even ``i``."""
    pairs = [(i, (i + 1) % 14) for i in range(14)]
    pairs += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(14, pairs)


def theta2() -> Graph:
    return Graph(2, [(0, 1)] * 3)


def bip4() -> Graph:
    """Bipartite cubic multigraph on classes {0,1} and {2,3}."""
    return Graph(4, [(0, 2), (0, 2), (0, 3), (1, 2), (1, 3), (1, 3)])


def y_graph(n: int) -> Graph:
    """K_{2n+1} on vertices 1..2n+1 plus vertex 0 joined to 1, 2, 3."""
    if n < 2:
        raise BadParams("Y(n) needs n >= 2")
    k = 2 * n + 1
    pairs = [(0, 1), (0, 2), (0, 3)]
    pairs += [(i, j) for i, j in itertools.combinations(range(1, k + 1), 2)]
    return Graph(k + 1, pairs)


def b_graph(n: int, extra_edge: bool = False) -> Graph:
    """Vertices ``u_i = i`` and ``v_i = n + 1 + i`` for ``i = 0..n``.

    With ``extra_edge`` the edge ``v_{n-1} v_n`` is added.
    """
    if n < 3:
        raise BadParams("B(n) needs n >= 3")
    u = list(range(n + 1))
    v = [n + 1 + i for i in range(n + 1)]
    pairs = [(u[0], v[1]), (u[0], v[2]), (u[0], v[3]), (v[0], u[1]), (v[0], u[2]), (v[0], u[3])]
    pairs += [(u[i], v[j]) for i in range(1, n + 1) for j in range(1, n + 1)]
    if extra_edge:
        pairs.append((v[n - 1], v[n]))
    return Graph(2 * n + 2, pairs)


def k33_plus_edge() -> Graph:
    """K3,3 (classes {0,1,2}, {3,4,5}) with the extra edge 0-1."""
    return complete_bipartite(3, 3).add_edges([(0, 1)])


def prism() -> Graph:
    """Star product of two copies of K4 with the identity pairing."""
    return star_product(StarSpec(complete(4), 0, complete(4), 0)).graph


NAMED_HELP = ("K<n>, K<a>,<b>, C<n>, Q3, Heawood, Theta2, Bip4, Y(<n>), B(<n>), "
              "K33+e, B(<n>)+edge, Prism")

_NAMED_PATTERNS = [
    (r"K(\d+)", lambda m: complete(int(m[1]))),
    (r"K_?\{?(\d+),(\d+)\}?", lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (r"C(\d+)", lambda m: cycle(int(m[1]))),
    (r"Q3", lambda m: cube()),
    (r"Heawood", lambda m: heawood()),
    (r"Theta2", lambda m: theta2()),
    (r"Bip4", lambda m: bip4()),
    (r"Prism", lambda m: prism()),
    (r"K33\+e|K3,3\+e", lambda m: k33_plus_edge()),
    (r"Y\((\d+)\)", lambda m: y_graph(int(m[1]))),
    (r"Y_?(\d+)", lambda m: _y_by_order(int(m[1]))),
    (r"B\((\d+)\)\+edge|Bn\+edge\((\d+)\)", lambda m: b_graph(int(m[1] or m[2]), True)),
    (r"B\((\d+)\)", lambda m: b_graph(int(m[1]))),
]


def _y_by_order(k: int) -> Graph:
    if k < 5 or k % 2 == 0:
        raise BadParams("Y_k needs odd k >= 5")
    return y_graph((k - 1) // 2)


def make_named(name: str, *params: int) -> Graph:
    """Build a named graph, e.g. ``make_named("K3,3")``, ``make_named("Y", 2)``."""
    if params:
        return _named_with_params(name, params)
    key = name.replace(" ", "")
    for pattern, build in _NAMED_PATTERNS:
        m = re.fullmatch(pattern, key)
        if m:
            return build(m)
    raise UnknownName(f"unknown graph name {name!r}; known: {NAMED_HELP}")


def _named_with_params(name: str, params: Sequence[int]) -> Graph:
    table = {
        "K_n": complete, "K": complete, "K_{a,b}": complete_bipartite,
        "C_n": cycle, "C": cycle, "Y": y_graph,
        "B": b_graph, "Bn+edge": lambda n: b_graph(n, True),
    }
    if name not in table:
        raise UnknownName(f"unknown parametrised family {name!r}")
    try:
        return table[name](*params)
    except TypeError as exc:
        raise BadParams(str(exc)) from None
