"""Naive reference implementations and an independent certificate checker.

Nothing here calls the search engines in :mod:`factorlab.factors`; every
answer comes from filtering edge subsets directly, so the two can be
compared against each other.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .graph import Graph


def _degree_counts(g: Graph, edges: Iterable[int]) -> list[int]:
    deg = [0] * g.n
    for e in edges:
        u, v = g.edges[e].ends
        deg[u] += 1
        deg[v] += 1
    return deg


def _pieces(g: Graph, edges: Iterable[int]) -> list[set[int]]:
    """Vertex sets of the connected pieces spanned by ``edges`` (touched vertices only)."""
    parent: dict[int, int] = {}

    def root(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            x = parent[x]
        return x

    for e in edges:
        u, v = g.edges[e].ends
        parent[root(u)] = root(v)
    groups: dict[int, set[int]] = {}
    for x in list(parent):
        groups.setdefault(root(x), set()).add(x)
    return list(groups.values())


def naive_is_pm(g: Graph, edges: Iterable[int]) -> bool:
    edges = list(edges)
    return len(set(edges)) == len(edges) and all(0 <= e < g.m for e in edges) \
        and _degree_counts(g, edges) == [1] * g.n


def naive_is_two_factor(g: Graph, edges: Iterable[int]) -> bool:
    edges = list(edges)
    return len(set(edges)) == len(edges) and all(0 <= e < g.m for e in edges) \
        and _degree_counts(g, edges) == [2] * g.n


def naive_perfect_matchings(g: Graph) -> list[frozenset[int]]:
    if g.n % 2:
        return []
    return [frozenset(s) for s in itertools.combinations(range(g.m), g.n // 2)
            if naive_is_pm(g, s)]


def naive_two_factors(g: Graph) -> list[frozenset[int]]:
    return [frozenset(s) for s in itertools.combinations(range(g.m), g.n) if naive_is_two_factor(g, s)]


def naive_is_hamiltonian_cycle(g: Graph, edges: Iterable[int]) -> bool:
    edges = list(edges)
    return naive_is_two_factor(g, edges) and len(_pieces(g, edges)) == 1


def naive_extensions(g: Graph, m: frozenset[int]) -> Iterator[frozenset[int]]:
    """Perfect matchings ``N`` of ``G - M`` with ``M | N`` a single cycle."""
    rest = [e for e in range(g.m) if e not in m]
    for s in itertools.combinations(rest, g.n // 2):
        if naive_is_pm(g, s) and naive_is_hamiltonian_cycle(g, m | frozenset(s)):
            yield frozenset(s)


def naive_is_pmh(g: Graph) -> bool:
    pms = naive_perfect_matchings(g)
    return bool(pms) and all(next(naive_extensions(g, pm), None) is not None for pm in pms)


def naive_is_2fh(g: Graph) -> bool:
    return all(len(_pieces(g, tf)) == 1 for tf in naive_two_factors(g))


# ------------------------------------------------------------ certificates


def validate_certificate(g: Graph, cert: dict) -> bool:
    """Re-check a negative-verdict certificate from scratch."""
    kind = cert.get("kind")
    try:
        if kind == "failing_matching":
            m = frozenset(cert["matching"])
            if not naive_is_pm(g, cert["matching"]):
                return False
            if "edge" in cert:
                e = cert["edge"]
                return not any(e in (m | n) for n in naive_extensions(g, m))
            return next(naive_extensions(g, m), None) is None
        if kind == "disconnected_two_factor":
            return naive_is_two_factor(g, cert["edges"]) and len(_pieces(g, cert["edges"])) > 1
        if kind == "odd_two_factor":
            if not naive_is_two_factor(g, cert["edges"]):
                return False
            return any(len(p) % 2 for p in _pieces(g, cert["edges"]))
        if kind == "uncovered_edge":
            v, e, m = cert["vertex"], cert["edge"], frozenset(cert["matching"])
            if not naive_is_pm(g, cert["matching"]) or e in m or v not in g.edges[e].ends:
                return False
            return not any(e in n for n in naive_extensions(g, m))
        if kind == "multiedge_at_vertex":
            v = cert["vertex"]
            nbrs = [g.edges[e].other(v) for e in g.incident(v)]
            return g.n > 2 and len(set(nbrs)) < len(nbrs)
    except (KeyError, IndexError, TypeError):
        return False
    return False


def certificate_mutations(g: Graph, cert: dict) -> Iterator[dict]:
    """Every single-edge corruption of a certificate: drop one listed edge,
    or swap it for an edge with a different endpoint pair."""
    for key in ("matching", "edges"):
        if key not in cert:
            continue
        listed = list(cert[key])
        for i, e in enumerate(listed):
            yield {**cert, key: listed[:i] + listed[i + 1:]}
            ends = frozenset(g.edges[e].ends)
            for f in range(g.m):
                if f not in listed and frozenset(g.edges[f].ends) != ends:
                    yield {**cert, key: listed[:i] + [f] + listed[i + 1:]}
    if cert.get("kind") == "uncovered_edge":
        m = set(cert["matching"])
        for f in g.incident(cert["vertex"]):
            if f in m:
                yield {**cert, "edge": f}
