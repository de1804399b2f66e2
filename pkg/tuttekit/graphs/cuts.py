"""Minimal edge cuts, edge connectivity, girth and h(G).

Cuts are read off the cycle matroid: C is a minimal edge cut exactly when
E - C is a hyperplane of M(G). The direct searches in this module
(`minimal_disconnecting_sets`, `girth_by_bfs`, `h_by_search`) work on the
graph itself and serve as independent cross-checks.
"""
import math
from collections import defaultdict
from functools import lru_cache
from typing import List, Optional

import networkx as nx

from tuttekit.errors import InvalidParameters, NotApplicable
from tuttekit.graphs.multigraph import (
    Multigraph, component_count, cycle_matroid
)
from tuttekit.helpers import popcount, subsets_of_size
from tuttekit.matroid import Matroid, require_exhaustive
from tuttekit.structure import enumerate_circuits, enumerate_flats
from tuttekit.var_types import CutReport, SubsetMask


@lru_cache(maxsize=256)
def graph_matroid(graph: Multigraph) -> Matroid:
    """Cycle matroid of `graph`, shared between calls on equal graphs."""
    return cycle_matroid(graph)


def minimal_edge_cuts(graph: Multigraph) -> CutReport:
    matroid = graph_matroid(graph)
    circuits = enumerate_circuits(matroid)

    by_size = defaultdict(list)
    for cut in circuits.cocircuits:
        by_size[popcount(cut)].append(cut)
    cuts_by_size = {size: tuple(cuts)
                    for size, cuts in sorted(by_size.items())}

    connectivity = None
    if graph.n >= 2 and graph.is_connected() and cuts_by_size:
        connectivity = min(cuts_by_size)

    return CutReport(
        cuts_by_size=cuts_by_size,
        edge_connectivity=connectivity,
        girth=circuits.d.get(1),
        h_value=circuits.d.get(2)
    )


def require_connected(graph: Multigraph):
    if graph.n < 2:
        raise NotApplicable(
            f'Edge connectivity needs at least two vertices, got {graph.n}'
        )
    if not graph.is_connected():
        raise NotApplicable(f'{graph} is disconnected')


def edge_connectivity(graph: Multigraph) -> int:
    require_connected(graph)
    return minimal_edge_cuts(graph).edge_connectivity


def is_k_edge_connected(graph: Multigraph, k_plus_1: int) -> bool:
    """Whether `graph` stays connected after removing any `k_plus_1 - 1`
    edges."""
    if k_plus_1 < 1:
        raise InvalidParameters(
            f'k + 1 must be a positive integer, got {k_plus_1}'
        )
    return edge_connectivity(graph) >= k_plus_1


def minimal_disconnecting_sets(graph: Multigraph) -> List[SubsetMask]:
    """Inclusion-minimal edge sets whose removal adds a component."""
    require_exhaustive(graph.m, 'minimal_disconnecting_sets')
    everything = graph.all_edges
    base = component_count(graph, everything)
    result = []
    for subset in range(1 << graph.m):
        if component_count(graph, everything & ~subset) <= base:
            continue
        if all(component_count(graph, (everything & ~subset) | (1 << e))
               == base for e in range(graph.m) if subset >> e & 1):
            result.append(SubsetMask(subset))
    return result


def girth_by_bfs(graph: Multigraph) -> Optional[int]:
    """Shortest cycle length; loops count 1 and parallel pairs 2."""
    if any(u == v for u, v in graph.edges):
        return 1
    seen = set()
    for u, v in graph.edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            return 2
        seen.add(key)
    simple = nx.Graph()
    simple.add_nodes_from(range(graph.n))
    simple.add_edges_from(graph.edges)
    girth = nx.girth(simple)
    return None if girth == math.inf else int(girth)


def _is_bridgeless(graph: Multigraph, subset: SubsetMask) -> bool:
    base = component_count(graph, subset)
    return all(component_count(graph, subset & ~(1 << e)) == base
               for e in range(graph.m) if subset >> e & 1)


@lru_cache(maxsize=256)
def h_by_search(graph: Multigraph) -> Optional[int]:
    """Smallest bridgeless edge set of corank 2, by ascending size."""
    require_exhaustive(graph.m, 'h_by_search')
    for size in range(graph.m + 1):
        for subset in subsets_of_size(graph.m, size):
            corank = size - graph.n + component_count(graph, subset)
            if corank == 2 and _is_bridgeless(graph, subset):
                return size
    return None


def three_way_cut_size(graph: Multigraph) -> Optional[int]:
    """Fewest edges whose removal leaves three components, for connected
    graphs; None when there are fewer than three vertices."""
    require_connected(graph)
    f2 = enumerate_flats(graph_matroid(graph)).f.get(2)
    return None if f2 is None else graph.m - f2
