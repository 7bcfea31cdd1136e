from __future__ import annotations

import pytest

from factorlab import (Budget, EdgeCut, Graph, InfeasibleSize, NoPerfectMatching, NotPerfect,
                       enumerate_perfect_matchings, enumerate_two_factors, extends_through_edge,
                       extension_count, extensions_of, find_unique_extension_pm, is_2fh, is_e2f,
                       is_malleable, is_pmh, is_tight_cut, malleability_witnesses,
                       malleable_vertices, two_factor_conditions)
from factorlab import constructions as C
from factorlab.factors import WORKBOUND_ENV, default_work_bound
from factorlab.oracle import naive_extensions, naive_is_hamiltonian_cycle

# Counts frozen from the subset-filter oracle in factorlab.oracle.
PM_COUNTS = {"Theta2": 3, "Bip4": 5, "K4": 3, "K3,3": 6, "Prism": 4, "Q3": 9, "Heawood": 24,
             "C6": 2, "Y(2)": 9, "B(3)": 18, "K33+e": 6}
TWO_FACTOR_COUNTS = {"Theta2": 3, "Bip4": 5, "K4": 3, "K3,3": 6, "Prism": 4, "Q3": 9,
                     "Heawood": 24, "C6": 1, "Y(2)": 21, "B(3)": 45, "K33+e": 6}
EXTENSION_PROFILE = {"Theta2": [2, 2, 2], "Bip4": [1, 1, 1, 1, 4], "K4": [2, 2, 2],
                     "Prism": [0, 2, 2, 2], "Q3": [1, 1, 1, 1, 1, 1, 2, 2, 2], "C6": [1, 1]}


def named(label: str) -> Graph:
    return C.make_named(label)


@pytest.mark.parametrize("label", sorted(PM_COUNTS))
def test_pm_counts(label):
    assert sum(1 for _ in enumerate_perfect_matchings(named(label))) == PM_COUNTS[label]


@pytest.mark.parametrize("label", sorted(TWO_FACTOR_COUNTS))
def test_two_factor_counts(label):
    assert sum(1 for _ in enumerate_two_factors(named(label))) == TWO_FACTOR_COUNTS[label]


@pytest.mark.parametrize("label", sorted(EXTENSION_PROFILE))
def test_extension_profiles(label):
    g = named(label)
    counts = sorted(extension_count(g, pm) for pm in enumerate_perfect_matchings(g))
    assert counts == EXTENSION_PROFILE[label]


def test_pm_order_is_deterministic():
    g = C.complete(4)
    assert [sorted(m) for m in enumerate_perfect_matchings(g)] == [[0, 5], [1, 4], [2, 3]]


def test_odd_order_has_no_matchings():
    assert list(enumerate_perfect_matchings(C.cycle(5))) == []


def test_parallel_edges_are_distinct_matchings():
    assert len(list(enumerate_perfect_matchings(C.theta2()))) == 3


def test_extensions_are_hamiltonian():
    g = C.heawood()
    for pm in list(enumerate_perfect_matchings(g))[:5]:
        exts = extensions_of(g, pm)
        assert {x.partner for x in exts} == set(naive_extensions(g, pm))
        assert all(naive_is_hamiltonian_cycle(g, x.cycle) for x in exts)


def test_extensions_reject_non_matching():
    with pytest.raises(NotPerfect):
        extensions_of(C.complete(4), [0, 1])


def test_theta_digon_counts_as_hamiltonian():
    g = C.theta2()
    assert is_pmh(g).verdict and is_2fh(g).verdict
    assert malleable_vertices(g) == {0, 1}


# ------------------------------------------------------------ deciders


@pytest.mark.parametrize("label, pmh, fh", [
    ("K4", True, True), ("K3,3", True, True), ("Heawood", True, True), ("Q3", True, False),
    ("Prism", False, False), ("Bip4", True, False), ("C6", True, True), ("B(3)", True, False),
    ("Y(2)", True, False), ("K33+e", True, True),
])
def test_named_verdicts(label, pmh, fh):
    g = named(label)
    assert is_pmh(g).verdict is pmh
    assert is_2fh(g).verdict is fh


def test_pmh_certificate_points_at_failing_matching():
    rep = is_pmh(C.prism())
    assert rep.certificate["kind"] == "failing_matching"
    assert extension_count(C.prism(), rep.certificate["matching"]) == 0


def test_pmh_exhaustive_table():
    rep = is_pmh(C.cube(), exhaustive=True)
    assert rep.verdict
    assert sorted(r["extensions"] for r in rep.certificate["table"]) == EXTENSION_PROFILE["Q3"]


def test_pmh_without_matching_raises():
    with pytest.raises(NoPerfectMatching):
        is_pmh(Graph(4, [(0, 1), (0, 2), (0, 3)]))


def test_2fh_certificate_and_vacuous_flag():
    rep = is_2fh(C.cube())
    assert rep.certificate["kind"] == "disconnected_two_factor"
    assert len(rep.certificate["components"]) > 1
    tree = Graph(3, [(0, 1), (1, 2)])
    assert is_2fh(tree).stats["vacuous"]


def test_e2f():
    assert is_e2f(C.cube()).verdict
    # every 2-factor of K4 is a 4-cycle
    assert is_e2f(C.complete(4)).verdict


def test_e2f_odd_cycle_certificate():
    rep = is_e2f(C.prism())
    assert not rep.verdict
    assert len(rep.certificate["odd_cycle"]) == 3


def test_e2f_digons_are_even():
    assert is_e2f(C.bip4()).verdict


def test_malleable_named():
    assert malleable_vertices(C.complete_bipartite(3, 3)) == frozenset(range(6))
    assert malleable_vertices(C.cube()) == frozenset()
    y = C.y_graph(2)
    assert is_malleable(y, 0).verdict and not is_malleable(y, 1).verdict
    ke = C.k33_plus_edge()
    assert malleable_vertices(ke) == {2, 3, 4, 5}


def test_malleable_certificate():
    rep = is_malleable(C.y_graph(2), 1)
    cert = rep.certificate
    assert cert["kind"] == "uncovered_edge" and cert["vertex"] == 1
    assert cert["edge"] not in cert["matching"]


def test_multiedge_vertex_not_malleable():
    rep = is_malleable(C.bip4(), 0)
    assert not rep.verdict and rep.stats["reason"] == "multiedge_at_vertex"


def test_malleability_witnesses_cover_star():
    g = C.complete_bipartite(3, 3)
    for pm in enumerate_perfect_matchings(g):
        cycles = malleability_witnesses(g, 0, pm)
        assert len(cycles) == 2
        covered = set().union(*(x.cycle for x in cycles))
        assert set(g.incident(0)) <= covered


def test_malleability_witnesses_missing():
    y = C.y_graph(2)
    pm = is_malleable(y, 1).certificate["matching"]
    assert malleability_witnesses(y, 1, pm) is None


def test_tight_cut():
    res = C.star_product(C.StarSpec(C.cube(), 0, C.cube(), 0))
    assert is_tight_cut(res.graph, res.principal_cut)
    p = C.star_product(C.StarSpec(C.complete(4), 0, C.complete(4), 0))
    assert not is_tight_cut(p.graph, p.principal_cut)
    assert is_tight_cut(C.cube(), EdgeCut.from_side(C.cube(), [0]))


def test_extends_through_edge_and_conditions():
    t = C.theta2()
    assert extends_through_edge(t, 0).verdict
    q = C.cube()
    assert not any(extends_through_edge(q, e).verdict for e in range(q.m))
    c = two_factor_conditions(C.cycle(4), 0)
    assert c.all_ham_containing and c.all_are_ham_through
    assert c.to_json() == {"allHamContaining": True, "allAreHamThrough": True}


def test_unique_extension_pm():
    pm = find_unique_extension_pm(C.cube())
    assert pm is not None and extension_count(C.cube(), pm) == 1
    assert find_unique_extension_pm(C.heawood()) is None


# ------------------------------------------------------------ work bounds


def test_budget_raises():
    with pytest.raises(InfeasibleSize):
        is_2fh(C.heawood(), Budget(10))


def test_env_overrides_default_bound(monkeypatch):
    monkeypatch.setenv(WORKBOUND_ENV, "123")
    assert default_work_bound() == 123
    with pytest.raises(InfeasibleSize):
        is_pmh(C.heawood())
    monkeypatch.setenv(WORKBOUND_ENV, "junk")
    assert default_work_bound() == 10_000_000


def test_per_edge_malleability_matches_cycle_assembly():
    from factorlab.catalog import named_catalog
    for label, g in named_catalog().items():
        if g.n > 8:
            continue
        pms = list(enumerate_perfect_matchings(g))
        for v in range(g.n):
            if g.degree(v) < 2:
                continue
            assembled = all(malleability_witnesses(g, v, pm) is not None for pm in pms)
            if g.n > 2 and g.has_multiedge_at(v):
                assert not is_malleable(g, v).verdict
            else:
                assert is_malleable(g, v).verdict == assembled, (label, v)
