"""Loopless multigraph with stable vertex and edge ids, plus structural queries."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InfeasibleSize, LoopRejected, ParseError


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"vertex {x} is not an endpoint of edge {self.id}")

    @property
    def ends(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class HalfEdge:
    """One end of an edge; ``end`` is 0 for ``u`` and 1 for ``v``."""

    edge: int
    end: int

    def vertex(self, g: Graph) -> int:
        return g.edges[self.edge].ends[self.end]


class Graph:
    """Immutable loopless multigraph on vertices ``0..n-1``.

    Edge ids are the positions in ``edges`` and never change.  Parallel edges
    are distinct edges with distinct ids.
    """

    __slots__ = ("n", "edges", "_inc", "_masks")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = []
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(pairs):
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {i} ({u},{v}) out of range for n={n}")
            if u == v:
                raise LoopRejected(f"edge {i} is a loop at vertex {u}")
            edges.append(Edge(i, u, v))
            inc[u].append(i)
            inc[v].append(i)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(edges)
        self._inc = tuple(tuple(x) for x in inc)
        self._masks = tuple(sum(1 << e for e in x) for x in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def pairs(self) -> list[tuple[int, int]]:
        return [e.ends for e in self.edges]

    def incident(self, v: int) -> tuple[int, ...]:
        """Incident edge ids of ``v`` in id order."""
        return self._inc[v]

    def incident_mask(self, v: int) -> int:
        return self._masks[v]

    def half_edges(self, v: int) -> list[HalfEdge]:
        out = []
        for e in self._inc[v]:
            edge = self.edges[e]
            out.append(HalfEdge(e, 0 if edge.u == v else 1))
        return out

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self._inc]

    def neighbors(self, v: int) -> list[int]:
        """Neighbours with repetition, one entry per incident edge."""
        return [self.edges[e].other(v) for e in self._inc[v]]

    def is_regular(self, k: int) -> bool:
        return all(len(x) == k for x in self._inc)

    def is_cubic(self) -> bool:
        return self.n > 0 and self.is_regular(3)

    def has_multiedge(self) -> bool:
        seen = set()
        for e in self.edges:
            key = (min(e.ends), max(e.ends))
            if key in seen:
                return True
            seen.add(key)
        return False

    def has_multiedge_at(self, v: int) -> bool:
        nb = self.neighbors(v)
        return len(nb) != len(set(nb))

    def adjacent(self, u: int, v: int) -> bool:
        return any(self.edges[e].other(u) == v for e in self._inc[u])

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self._inc[u] if self.edges[e].other(u) == v]

    def edge_key(self) -> tuple:
        """Sorted multiset of endpoint pairs; equality ignores edge ids."""
        return tuple(sorted((min(e.ends), max(e.ends)) for e in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.pairs() == other.pairs()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.pairs())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def delete_vertices(self, drop: Iterable[int]) -> tuple[Graph, dict[int, int], dict[int, int]]:
        """Remove vertices; survivors are renumbered densely in order.

        Returns ``(graph, vertex_map, edge_map)`` mapping old ids to new ids.
        """
        drop = set(drop)
        vmap = {}
        for v in range(self.n):
            if v not in drop:
                vmap[v] = len(vmap)
        emap = {}
        pairs = []
        for e in self.edges:
            if e.u in drop or e.v in drop:
                continue
            emap[e.id] = len(pairs)
            pairs.append((vmap[e.u], vmap[e.v]))
        return Graph(len(vmap), pairs), vmap, emap

    def delete_edges(self, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        drop = set(drop)
        emap = {}
        pairs = []
        for e in self.edges:
            if e.id in drop:
                continue
            emap[e.id] = len(pairs)
            pairs.append(e.ends)
        return Graph(self.n, pairs), emap

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        return Graph(self.n, self.pairs() + list(pairs))

    def edge_subgraph_components(self, edge_ids: Iterable[int]) -> list[list[int]]:
        """Vertex components of the spanning subgraph with the given edges."""
        return _components(self.n, [self.edges[e].ends for e in edge_ids])


@dataclass(frozen=True)
class EdgeCut:
    edges: frozenset[int]
    sides: tuple[frozenset[int], frozenset[int]] = field(default=(frozenset(), frozenset()))

    @classmethod
    def from_side(cls, g: Graph, side: Iterable[int]) -> EdgeCut:
        """The cut ``delta(side)``: every edge with exactly one end in ``side``."""
        s = frozenset(side)
        cut = frozenset(e.id for e in g.edges if (e.u in s) != (e.v in s))
        return cls(cut, (s, frozenset(range(g.n)) - s))

    def to_json(self) -> dict:
        return {"edges": sorted(self.edges), "sides": [sorted(s) for s in self.sides]}


def _components(n: int, pairs: Sequence[tuple[int, int]]) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


# ---------------------------------------------------------------- I/O


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.  ``#`` lines are comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError("empty input", line=1)
    lineno, header = rows[0]
    n, m = _two_ints(header, lineno)
    if n <= 0:
        raise ParseError("vertex count must be positive", line=lineno)
    if m < 0:
        raise ParseError("edge count must be non-negative", line=lineno)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"expected {m} edge lines, found {len(body)}", line=last)
    pairs = []
    for lineno, line in body:
        u, v = _two_ints(line, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", line=lineno)
        if u == v:
            raise LoopRejected(f"line {lineno}: loop at vertex {u}")
        pairs.append((u, v))
    return Graph(n, pairs)


def _two_ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers, got {line!r}", line=lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {line!r}", line=lineno) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{e.u} {e.v}" for e in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (n <= 62).  Edges come out in column order."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 character {ch!r} at offset {i}")
        data.append(c - 63)
    n = data[0]
    if n == 63:
        raise ParseError("graph6 headers for n > 62 are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    if n == 0:
        raise ParseError("graph6 string encodes an empty graph")
    bits = []
    for x in body:
        bits.extend((x >> (5 - k)) & 1 for k in range(6))
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return Graph(n, pairs)


def write_graph6(g: Graph) -> str:
    if g.has_multiedge():
        raise ValueError("graph6 encodes simple graphs only")
    if not 1 <= g.n <= 62:
        raise ValueError("graph6 writer supports 1 <= n <= 62")
    adj = {(min(e.ends), max(e.ends)) for e in g.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for raw in lines:
        line = raw.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------- queries


def incident_edges(g: Graph, v: int) -> frozenset[int]:
    return frozenset(g.incident(v))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == g.n


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Return a 2-colouring as two vertex classes, or ``None``."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    a = frozenset(v for v in range(g.n) if colour[v] == 0)
    return a, frozenset(range(g.n)) - a


def girth(g: Graph) -> float:
    """Length of a shortest cycle; 2 for a parallel pair, ``inf`` for forests."""
    if g.has_multiedge():
        return 2
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for e in g.incident(x):
                if e == via[x]:
                    continue
                y = g.edges[e].other(x)
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    via[y] = e
                    queue.append(y)
                else:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_cycle_separating(g: Graph, cut: Iterable[int]) -> bool:
    """True iff at least two components of ``g - cut`` contain a cycle."""
    cut = set(cut)
    keep = [e for e in g.edges if e.id not in cut]
    comps = _components(g.n, [e.ends for e in keep])
    where = {}
    for i, comp in enumerate(comps):
        for v in comp:
            where[v] = i
    edge_count = [0] * len(comps)
    for e in keep:
        edge_count[where[e.u]] += 1
    cyclic = sum(1 for i, comp in enumerate(comps) if edge_count[i] >= len(comp))
    return cyclic >= 2


DEFAULT_CUT_WORK = 2_000_000


def is_cyclically_k_edge_connected(g: Graph, k: int, *, work_bound: int = DEFAULT_CUT_WORK,
                                   strategy: str = "auto") -> bool:
    """True iff ``g`` has no cycle-separating edge set with fewer than ``k`` edges.

    ``strategy`` is ``"subsets"`` (brute force over edge subsets), ``"flow"``
    (min cuts between vertex-disjoint chordless cycles) or ``"auto"``, which
    runs the flow method and, when ``m <= 24``, confirms with brute force.
    """
    if k <= 1:
        return True
    if strategy == "subsets":
        return _cyc_conn_subsets(g, k, work_bound)
    if strategy == "flow":
        return _cyc_conn_flow(g, k, work_bound)
    if strategy != "auto":
        raise ValueError(f"unknown strategy {strategy!r}")
    flow = _cyc_conn_flow(g, k, work_bound)
    if g.m <= 24:
        brute = _cyc_conn_subsets(g, k, work_bound)
        if brute != flow:
            raise AssertionError("cyclic connectivity strategies disagree")
    return flow


def _cyc_conn_subsets(g: Graph, k: int, work_bound: int) -> bool:
    total = sum(math.comb(g.m, r) for r in range(k))
    if total > work_bound:
        raise InfeasibleSize(f"{total} edge subsets exceed work bound {work_bound}")
    for r in range(k):
        for cut in itertools.combinations(range(g.m), r):
            if is_cycle_separating(g, cut):
                return False
    return True


def chordless_cycles(g: Graph, limit: int | None = None) -> list[frozenset[int]]:
    """Vertex sets of all chordless cycles of length >= 3 in the simple support."""
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    found = []
    # rooted at the smallest vertex; each cycle is closed in one direction only
    for s in range(g.n):
        stack = [[s]]
        while stack:
            path = stack.pop()
            x = path[-1]
            for y in adj[x]:
                if y == s:
                    if len(path) >= 3 and path[1] < x and _is_chordless(adj, frozenset(path)):
                        found.append(frozenset(path))
                        if limit is not None and len(found) > limit:
                            raise InfeasibleSize(f"more than {limit} chordless cycles")
                    continue
                if y < s or y in path:
                    continue
                if any(z in adj[y] for z in path[1:-1]):
                    continue
                stack.append(path + [y])
    return found


def _is_chordless(adj, cyc: frozenset[int]) -> bool:
    return all(len(adj[v] & cyc) == 2 for v in cyc)


def _cyc_conn_flow(g: Graph, k: int, work_bound: int) -> bool:
    cycles = []
    if g.has_multiedge():
        seen = set()
        for e in g.edges:
            key = (min(e.ends), max(e.ends))
            if key in seen:
                cycles.append(frozenset(key))
            seen.add(key)
    cycles.extend(chordless_cycles(g, limit=work_bound))
    cycles = list(dict.fromkeys(cycles))
    pairs_checked = 0
    for i, a in enumerate(cycles):
        for b in cycles[i + 1:]:
            if a & b:
                continue
            pairs_checked += 1
            if pairs_checked > work_bound:
                raise InfeasibleSize(f"cycle pairs exceed work bound {work_bound}")
            if _edge_disjoint_paths(g, a, b, k) < k:
                return False
    return True


def _edge_disjoint_paths(g: Graph, src: frozenset[int], dst: frozenset[int], cap: int) -> int:
    """Max number of edge-disjoint paths from ``src`` to ``dst`` (stops at ``cap``).

    Unit-capacity augmenting paths on the undirected multigraph; edges inside
    either terminal set are ignored since the sets act as contracted nodes.
    """
    # flow[e] in {-1, 0, 1}: direction relative to (u, v)
    flow = [0] * g.m
    total = 0
    while total < cap:
        prev: dict[int, tuple[int, int]] = {}
        queue = deque(src)
        seen = set(src)
        hit = None
        while queue and hit is None:
            x = queue.popleft()
            for e in g.incident(x):
                edge = g.edges[e]
                y = edge.other(x)
                if y in seen:
                    continue
                if x in src and y in src:
                    continue
                sign = 1 if x == edge.u else -1
                if flow[e] == sign:
                    continue
                seen.add(y)
                prev[y] = (x, e)
                if y in dst:
                    hit = y
                    break
                queue.append(y)
        if hit is None:
            break
        y = hit
        while y not in src:
            x, e = prev[y]
            sign = 1 if x == g.edges[e].u else -1
            flow[e] += sign
            y = x
        total += 1
    return total
