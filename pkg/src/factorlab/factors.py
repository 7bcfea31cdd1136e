"""Perfect matchings, 2-factors and Hamiltonian extensions, and the deciders built on them.

Enumeration order is fixed everywhere: branch on the lowest-indexed vertex that
still needs edges, trying its incident edges by increasing id.  Certificates
are therefore reproducible run to run.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InfeasibleSize, NoPerfectMatching, NotPerfect
from .graph import EdgeCut, Graph

DEFAULT_WORK_BOUND = 10_000_000
WORKBOUND_ENV = "FACTORLAB_WORKBOUND"

Matching = frozenset  # frozenset[int] of edge ids


def default_work_bound() -> int:
    raw = os.environ.get(WORKBOUND_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_WORK_BOUND


class Budget:
    """Counts search nodes and raises :class:`InfeasibleSize` past ``limit``."""

    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None = None):
        self.limit = default_work_bound() if limit is None else limit
        self.nodes = 0

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.nodes > self.limit:
            raise InfeasibleSize(f"search exceeded {self.limit} nodes")


def _budget(budget: Budget | None) -> Budget:
    return Budget() if budget is None else budget


@dataclass(frozen=True)
class TwoFactor:
    edges: frozenset[int]
    components: tuple[tuple[int, ...], ...]

    @property
    def is_hamiltonian(self) -> bool:
        return len(self.components) == 1

    def odd_cycle(self) -> tuple[int, ...] | None:
        for c in self.components:
            if len(c) % 2:
                return c
        return None

    def to_json(self) -> dict:
        return {"edges": sorted(self.edges), "components": [list(c) for c in self.components]}


@dataclass(frozen=True)
class Extension:
    """A perfect matching ``partner`` with ``base | partner`` a Hamiltonian cycle."""

    base: frozenset[int]
    partner: frozenset[int]

    @property
    def cycle(self) -> frozenset[int]:
        return self.base | self.partner

    def to_json(self) -> dict:
        return {"base": sorted(self.base), "partner": sorted(self.partner)}


@dataclass
class PropertyReport:
    name: str
    verdict: bool
    certificate: dict | None = None
    stats: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {
            "property": self.name,
            "verdict": self.verdict,
            "certificate": self.certificate,
            "stats": self.stats,
        }


# ------------------------------------------------------------ enumeration


def enumerate_perfect_matchings(g: Graph, budget: Budget | None = None) -> Iterator[frozenset[int]]:
    """Every perfect matching once; parallel edges give distinct matchings."""
    if g.n % 2 or g.n == 0:
        return
    budget = _budget(budget)
    full = (1 << g.n) - 1
    ends = [e.ends for e in g.edges]
    inc = [g.incident(v) for v in range(g.n)]
    chosen: list[int] = []

    def rec(covered: int) -> Iterator[frozenset[int]]:
        if covered == full:
            yield frozenset(chosen)
            return
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        for e in inc[v]:
            a, b = ends[e]
            w = b if a == v else a
            if covered >> w & 1:
                continue
            budget.tick()
            chosen.append(e)
            yield from rec(covered | (1 << v) | (1 << w))
            chosen.pop()

    yield from rec(0)


def has_perfect_matching(g: Graph, budget: Budget | None = None) -> bool:
    return next(enumerate_perfect_matchings(g, budget), None) is not None


def cycle_decomposition(g: Graph, edge_ids: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Vertex sequences of the cycles of a 2-regular spanning edge set."""
    at: list[list[int]] = [[] for _ in range(g.n)]
    for e in edge_ids:
        a, b = g.edges[e].ends
        at[a].append(e)
        at[b].append(e)
    seen = [False] * g.n
    cycles = []
    for s in range(g.n):
        if seen[s]:
            continue
        cyc = [s]
        seen[s] = True
        prev_edge = at[s][0]
        x = g.edges[prev_edge].other(s)
        while x != s:
            seen[x] = True
            cyc.append(x)
            e1, e2 = at[x]
            nxt = e2 if e1 == prev_edge else e1
            prev_edge = nxt
            x = g.edges[nxt].other(x)
        cycles.append(tuple(cyc))
    return tuple(cycles)


def enumerate_two_factors(g: Graph, budget: Budget | None = None) -> Iterator[TwoFactor]:
    """Every spanning 2-regular edge set once, with its cycle decomposition."""
    if g.n == 0 or any(d < 2 for d in g.degrees()):
        return
    budget = _budget(budget)
    n = g.n
    ends = [e.ends for e in g.edges]
    inc = [g.incident(v) for v in range(n)]
    need = [2] * n
    decided = [False] * g.m
    chosen: list[int] = []

    def available(w: int) -> int:
        return sum(1 for e in inc[w] if not decided[e])

    def rec() -> Iterator[TwoFactor]:
        v = next((x for x in range(n) if need[x] > 0), None)
        if v is None:
            yield TwoFactor(frozenset(chosen), cycle_decomposition(g, chosen))
            return
        open_edges = [e for e in inc[v] if not decided[e]]
        cands = []
        for e in open_edges:
            a, b = ends[e]
            w = b if a == v else a
            if need[w] > 0:
                cands.append(e)
        k = need[v]
        if len(cands) < k:
            return
        for combo in itertools.combinations(cands, k):
            if k == 2:
                a0, b0 = ends[combo[0]]
                a1, b1 = ends[combo[1]]
                w0 = b0 if a0 == v else a0
                if w0 == (b1 if a1 == v else a1) and need[w0] < 2:
                    continue
            budget.tick()
            touched = set()
            for e in open_edges:
                decided[e] = True
            for e in combo:
                a, b = ends[e]
                w = b if a == v else a
                need[w] -= 1
                touched.add(w)
                chosen.append(e)
            need[v] = 0
            closed = []
            for w in touched:
                if need[w] == 0:
                    for e in inc[w]:
                        if not decided[e]:
                            decided[e] = True
                            closed.append(e)
            ok = True
            affected = set()
            for e in open_edges + closed:
                affected.update(ends[e])
            for w in affected:
                if need[w] > available(w):
                    ok = False
                    break
            if ok:
                yield from rec()
            for e in closed:
                decided[e] = False
            for e in combo:
                a, b = ends[e]
                w = b if a == v else a
                need[w] += 1
                chosen.pop()
            need[v] = k
            for e in open_edges:
                decided[e] = False

    yield from rec()


def is_perfect_matching(g: Graph, edges: Iterable[int]) -> bool:
    hit = [0] * g.n
    for e in edges:
        if not 0 <= e < g.m:
            return False
        a, b = g.edges[e].ends
        hit[a] += 1
        hit[b] += 1
    return g.n > 0 and all(h == 1 for h in hit)


def _check_pm(g: Graph, m: Iterable[int]) -> frozenset[int]:
    m = frozenset(m)
    if not is_perfect_matching(g, m):
        raise NotPerfect(f"edge set {sorted(m)} is not a perfect matching")
    return m


def iter_extensions(g: Graph, m: frozenset[int], budget: Budget | None = None) -> Iterator[Extension]:
    """Hamiltonian cycles through ``m`` found by walking alternately along ``m``.

    Every such cycle is a perfect matching of ``g - m`` that closes into a single
    cycle; growing the cycle from vertex 0 visits each one exactly once and
    abandons partial matchings as soon as they would close early.
    """
    budget = _budget(budget)
    n = g.n
    ends = [e.ends for e in g.edges]
    mate = [-1] * n
    for e in m:
        a, b = ends[e]
        mate[a] = e
        mate[b] = e
    free_inc = [[e for e in g.incident(v) if e not in m] for v in range(n)]
    visited = [False] * n
    partner: list[int] = []

    def other(e: int, x: int) -> int:
        a, b = ends[e]
        return b if a == x else a

    start = 0
    first = other(mate[start], start)
    visited[start] = visited[first] = True

    def rec(x: int, count: int) -> Iterator[Extension]:
        if count == n:
            for e in free_inc[x]:
                if other(e, x) == start:
                    budget.tick()
                    yield Extension(m, frozenset(partner + [e]))
            return
        for e in free_inc[x]:
            y = other(e, x)
            if visited[y]:
                continue
            budget.tick()
            z = other(mate[y], y)
            visited[y] = visited[z] = True
            partner.append(e)
            yield from rec(z, count + 2)
            partner.pop()
            visited[y] = visited[z] = False

    yield from rec(first, 2)


def extensions_of(g: Graph, m: Iterable[int], budget: Budget | None = None) -> list[Extension]:
    return list(iter_extensions(g, _check_pm(g, m), budget))


def extension_count(g: Graph, m: Iterable[int], budget: Budget | None = None) -> int:
    return sum(1 for _ in iter_extensions(g, _check_pm(g, m), budget))


# ------------------------------------------------------------ deciders


def _require_pm(g: Graph, budget: Budget) -> None:
    if not has_perfect_matching(g, budget):
        raise NoPerfectMatching(f"graph with n={g.n} has no perfect matching")


def is_pmh(g: Graph, *, exhaustive: bool = False, budget: Budget | None = None) -> PropertyReport:
    """Every perfect matching extends to a Hamiltonian cycle."""
    budget = _budget(budget)
    t0 = time.perf_counter()
    _require_pm(g, budget)
    table = []
    failing = None
    pms = 0
    for pm in enumerate_perfect_matchings(g, budget):
        pms += 1
        if exhaustive:
            count = sum(1 for _ in iter_extensions(g, pm, budget))
            table.append({"matching": sorted(pm), "extensions": count})
            if count == 0 and failing is None:
                failing = pm
        elif next(iter_extensions(g, pm, budget), None) is None:
            failing = pm
            break
    stats = {"perfect_matchings": pms, "nodes": budget.nodes,
             "elapsed": time.perf_counter() - t0, "multigraph": g.has_multiedge()}
    if failing is not None:
        cert: dict = {"kind": "failing_matching", "matching": sorted(failing)}
        if exhaustive:
            cert["table"] = table
        return PropertyReport("pmh", False, cert, stats)
    cert = {"kind": "extension_table", "table": table} if exhaustive else None
    return PropertyReport("pmh", True, cert, stats)


def is_2fh(g: Graph, budget: Budget | None = None) -> PropertyReport:
    """Every 2-factor is a Hamiltonian cycle (vacuously true without 2-factors)."""
    budget = _budget(budget)
    t0 = time.perf_counter()
    count = 0
    for tf in enumerate_two_factors(g, budget):
        count += 1
        if not tf.is_hamiltonian:
            stats = {"two_factors_seen": count, "nodes": budget.nodes,
                     "elapsed": time.perf_counter() - t0, "vacuous": False}
            return PropertyReport("2fh", False, {"kind": "disconnected_two_factor", **tf.to_json()}, stats)
    stats = {"two_factors": count, "nodes": budget.nodes,
             "elapsed": time.perf_counter() - t0, "vacuous": count == 0}
    return PropertyReport("2fh", True, None, stats)


def is_e2f(g: Graph, budget: Budget | None = None) -> PropertyReport:
    """Every cycle of every 2-factor has even length (digons count as even)."""
    budget = _budget(budget)
    t0 = time.perf_counter()
    count = 0
    for tf in enumerate_two_factors(g, budget):
        count += 1
        odd = tf.odd_cycle()
        if odd is not None:
            cert = {"kind": "odd_two_factor", **tf.to_json(), "odd_cycle": list(odd)}
            return PropertyReport("e2f", False, cert,
                                  {"two_factors_seen": count, "nodes": budget.nodes,
                                   "elapsed": time.perf_counter() - t0})
    return PropertyReport("e2f", True, None,
                          {"two_factors": count, "nodes": budget.nodes,
                           "elapsed": time.perf_counter() - t0, "vacuous": count == 0})


def _covered_edges(g: Graph, pm: frozenset[int], budget: Budget) -> frozenset[int]:
    out: set[int] = set()
    for ext in iter_extensions(g, pm, budget):
        out |= ext.partner
    return frozenset(out)


def is_malleable(g: Graph, v: int, budget: Budget | None = None) -> PropertyReport:
    """Per-edge malleability: for each perfect matching ``M`` every edge at ``v``
    outside ``M`` lies on some Hamiltonian cycle extending ``M``."""
    budget = _budget(budget)
    t0 = time.perf_counter()
    if g.degree(v) < 2:
        raise ValueError(f"vertex {v} has degree {g.degree(v)} < 2")
    _require_pm(g, budget)
    if g.n > 2 and g.has_multiedge_at(v):
        return PropertyReport("malleable", False, {"kind": "multiedge_at_vertex", "vertex": v},
                              {"reason": "multiedge_at_vertex", "nodes": budget.nodes})
    star = set(g.incident(v))
    pms = 0
    for pm in enumerate_perfect_matchings(g, budget):
        pms += 1
        covered = _covered_edges(g, pm, budget)
        missing = sorted(star - pm - covered)
        if missing:
            cert = {"kind": "uncovered_edge", "vertex": v, "matching": sorted(pm), "edge": missing[0]}
            return PropertyReport("malleable", False, cert,
                                  {"perfect_matchings_seen": pms, "nodes": budget.nodes,
                                   "elapsed": time.perf_counter() - t0})
    return PropertyReport("malleable", True, None,
                          {"perfect_matchings": pms, "degree": g.degree(v), "nodes": budget.nodes,
                           "elapsed": time.perf_counter() - t0})


def malleable_vertices(g: Graph, budget: Budget | None = None) -> frozenset[int]:
    """All vertices passing :func:`is_malleable`, sharing one pass over the matchings."""
    budget = _budget(budget)
    _require_pm(g, budget)
    alive = {v for v in range(g.n) if g.degree(v) >= 2 and not (g.n > 2 and g.has_multiedge_at(v))}
    for pm in enumerate_perfect_matchings(g, budget):
        if not alive:
            break
        covered = _covered_edges(g, pm, budget) | pm
        alive = {v for v in alive if all(e in covered for e in g.incident(v))}
    return frozenset(alive)


def malleability_witnesses(g: Graph, v: int, m: Iterable[int],
                           budget: Budget | None = None) -> list[Extension] | None:
    """Assemble ``deg(v) - 1`` Hamiltonian cycles extending ``m`` that together
    cover the edges at ``v``, one per edge outside ``m``; ``None`` if impossible."""
    m = _check_pm(g, m)
    need = [e for e in g.incident(v) if e not in m]
    exts = extensions_of(g, m, budget)
    picked = []
    for e in need:
        hit = next((x for x in exts if e in x.partner), None)
        if hit is None:
            return None
        picked.append(hit)
    return picked


def is_tight_cut(g: Graph, cut: EdgeCut | Iterable[int], budget: Budget | None = None) -> bool:
    edges = cut.edges if isinstance(cut, EdgeCut) else frozenset(cut)
    budget = _budget(budget)
    found = False
    for pm in enumerate_perfect_matchings(g, budget):
        found = True
        if len(pm & edges) != 1:
            return False
    if not found:
        raise NoPerfectMatching(f"graph with n={g.n} has no perfect matching")
    return True


def extends_through_edge(g: Graph, e: int, budget: Budget | None = None) -> PropertyReport:
    """Every perfect matching extends to a Hamiltonian cycle containing ``e``."""
    budget = _budget(budget)
    t0 = time.perf_counter()
    _require_pm(g, budget)
    pms = 0
    for pm in enumerate_perfect_matchings(g, budget):
        pms += 1
        ok = any(e in ext.cycle for ext in iter_extensions(g, pm, budget))
        if not ok:
            return PropertyReport("extends_through_edge", False,
                                  {"kind": "failing_matching", "matching": sorted(pm), "edge": e},
                                  {"perfect_matchings_seen": pms, "nodes": budget.nodes,
                                   "elapsed": time.perf_counter() - t0})
    return PropertyReport("extends_through_edge", True, None,
                          {"perfect_matchings": pms, "nodes": budget.nodes,
                           "elapsed": time.perf_counter() - t0})


@dataclass(frozen=True)
class TwoFactorConditions:
    all_ham_containing: bool
    all_are_ham_through: bool

    def to_json(self) -> dict:
        return {"allHamContaining": self.all_ham_containing,
                "allAreHamThrough": self.all_are_ham_through}


def two_factor_conditions(g: Graph, e: int, budget: Budget | None = None) -> TwoFactorConditions:
    """``all_ham_containing``: every 2-factor through ``e`` is Hamiltonian.
    ``all_are_ham_through``: every 2-factor is a Hamiltonian cycle through ``e``."""
    containing = True
    through = True
    for tf in enumerate_two_factors(g, budget):
        if e in tf.edges:
            if not tf.is_hamiltonian:
                containing = False
                through = False
        else:
            through = False
        if not containing and not through:
            break
    return TwoFactorConditions(containing, through)


def find_unique_extension_pm(g: Graph, budget: Budget | None = None) -> frozenset[int] | None:
    """First perfect matching (in enumeration order) with exactly one extension."""
    budget = _budget(budget)
    _require_pm(g, budget)
    for pm in enumerate_perfect_matchings(g, budget):
        it = iter_extensions(g, pm, budget)
        if next(it, None) is not None and next(it, None) is None:
            return pm
    return None
