"""Whole-family sweeps. Run with `pytest -m slow`.

The graph catalogue holds one representative of every connected multigraph
with at most `MAX_EDGES_WITH_LOOPS` edges, and of every connected loopless
multigraph with at most `MAX_EDGES` edges.
"""
from collections import defaultdict
from functools import lru_cache

import networkx as nx
import numpy as np
import pytest

from tuttekit.cli.fuzz import random_multigraph, run_fuzz
from tuttekit.graphs import (
    Multigraph, canonical_form, cycle_matroid, minimal_disconnecting_sets,
    minimal_edge_cuts
)
from tuttekit.matroid import make_uniform
from tuttekit.theorems import verify

pytestmark = pytest.mark.slow

MAX_EDGES = 9
MAX_EDGES_WITH_LOOPS = 7


def _invariant(graph: Multigraph):
    degree = defaultdict(int)
    loops = defaultdict(int)
    for u, v in graph.edges:
        degree[u] += 1
        degree[v] += 1
        if u == v:
            loops[u] += 1
    return graph.n, tuple(sorted((degree[v], loops[v])
                                 for v in range(graph.n)))


class _Catalogue:
    """Non-isomorphic graphs, bucketed by a cheap invariant and compared
    exactly with `nx.is_isomorphic` on the multigraph."""

    def __init__(self):
        self.buckets = defaultdict(list)
        self.graphs = []

    def add(self, graph: Multigraph):
        bucket = self.buckets[_invariant(graph)]
        candidate = graph.to_networkx()
        if any(nx.is_isomorphic(candidate, other) for other in bucket):
            return
        bucket.append(candidate)
        self.graphs.append(graph)


def _extensions(graph: Multigraph, loops: bool):
    n = graph.n
    for u in range(n):
        for v in range(u if loops else u + 1, n):
            yield Multigraph(n, graph.edges + ((u, v),))
        yield Multigraph(n + 1, graph.edges + ((u, n),))


@lru_cache(maxsize=None)
def connected_multigraphs(m: int, loops: bool = True):
    """Every connected multigraph with exactly `m` edges, up to
    isomorphism. Each one arises from one with `m - 1` edges by adding a
    cycle edge or a pendant edge."""
    if m == 0:
        return (Multigraph(1, ()),)
    catalogue = _Catalogue()
    for smaller in connected_multigraphs(m - 1, loops):
        for graph in _extensions(smaller, loops):
            catalogue.add(graph)
    return tuple(catalogue.graphs)


def catalogue_level(m: int):
    return connected_multigraphs(m, loops=m <= MAX_EDGES_WITH_LOOPS)


def assert_agrees(instance):
    report = verify(instance, 'all', engine='all')
    assert report.agreement, '\n'.join([str(instance)] + report.lines())


class TestCatalogue:
    def test_small_counts(self):
        assert [len(connected_multigraphs(m, loops=False))
                for m in range(4)] == [1, 1, 2, 5]
        assert [len(connected_multigraphs(m)) for m in range(3)] == [1, 2, 4]

    def test_all_connected(self):
        for m in range(MAX_EDGES_WITH_LOOPS + 1):
            for graph in connected_multigraphs(m):
                assert graph.is_connected() and graph.m == m, graph

    @pytest.mark.parametrize('m', range(7))
    def test_canonical_forms_separate_the_catalogue(self, m):
        forms = [canonical_form(g) for g in connected_multigraphs(m)]
        assert None not in forms
        assert len(set(forms)) == len(forms)


@pytest.mark.parametrize('m', range(MAX_EDGES + 1))
def test_graph_catalogue(m):
    failures = []
    for graph in catalogue_level(m):
        report = verify(graph, 'all', engine='all')
        if not report.agreement:
            failures.append('\n'.join([str(graph)] + report.lines()))
    assert not failures, '\n\n'.join(failures[:3])


@pytest.mark.parametrize('m', range(MAX_EDGES + 1))
def test_bonds_against_direct_search(m):
    for graph in catalogue_level(m):
        cuts = minimal_edge_cuts(graph).cuts_by_size
        bonds = sorted(c for same_size in cuts.values() for c in same_size)
        assert bonds == minimal_disconnecting_sets(graph), graph


def test_bonds_on_ten_edges():
    rng = np.random.default_rng(10)
    for _ in range(40):
        graph = random_multigraph(rng, 10, connected=True)
        cuts = minimal_edge_cuts(graph).cuts_by_size
        bonds = sorted(c for same_size in cuts.values() for c in same_size)
        assert bonds == minimal_disconnecting_sets(graph), graph


def test_random_graphs():
    rng = np.random.default_rng(2024)
    for _ in range(40):
        assert_agrees(random_multigraph(rng, 9, connected=True))


@pytest.mark.parametrize('n', range(9))
def test_uniform_matroids(n):
    for r in range(n + 1):
        assert_agrees(make_uniform(r, n))


def test_duals_of_graph_matroids():
    rng = np.random.default_rng(8)
    for _ in range(20):
        matroid = cycle_matroid(random_multigraph(rng, 8)).dual()
        assert_agrees(matroid)


def test_fuzz_thousand_graphs():
    outcomes, failure = run_fuzz('graphs', 12, seed=1, trials=1000)
    assert len(outcomes) == 1000
    assert failure is None, '\n'.join(failure.lines)

    replay, _ = run_fuzz('graphs', 12, seed=1, trials=20)
    assert [o.instance for o in replay] == \
        [o.instance for o in outcomes[:20]]
