"""Multigraphs and their cycle matroids."""
from dataclasses import dataclass
from typing import Tuple

import networkx as nx
from networkx.utils import UnionFind

from tuttekit.errors import InvalidParameters
from tuttekit.matroid import Matroid
from tuttekit.var_types import CYCLE_OF_GRAPH, GroundSet, SubsetMask

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices 0..n-1.

    Loops (u == v) and parallel edges are allowed. The order of `edges` is
    the ground-set order of the cycle matroid.

    Args:
        n: Number of vertices.
        edges: Endpoint pairs.

    """
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameters(f'Vertex count must be nonnegative, '
                                    f'got {self.n}')
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for index, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameters(
                    f'Edge {index} = ({u}, {v}) has an endpoint outside '
                    f'0..{self.n - 1}'
                )
        object.__setattr__(self, 'edges', edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_edges(self) -> SubsetMask:
        return SubsetMask((1 << self.m) - 1)

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def is_bridge(self, e: int) -> bool:
        if self.is_loop(e):
            return False
        everything = self.all_edges
        return (component_count(self, everything & ~(1 << e))
                > component_count(self, everything))

    def is_connected(self) -> bool:
        return component_count(self, self.all_edges) <= 1

    def delete(self, e: int) -> 'Multigraph':
        return Multigraph(self.n, self.edges[:e] + self.edges[e + 1:])

    def contract(self, e: int) -> 'Multigraph':
        """Identifies the endpoints of edge `e` and removes it.

        Edges parallel to `e` become loops. The higher endpoint is merged
        into the lower one and later vertices shift down by one.
        """
        u, v = self.edges[e]
        if u == v:
            return self.delete(e)
        keep, gone = min(u, v), max(u, v)

        def relabel(w):
            if w == gone:
                return keep
            return w - 1 if w > gone else w

        remaining = self.edges[:e] + self.edges[e + 1:]
        return Multigraph(
            self.n - 1,
            tuple((relabel(a), relabel(b)) for a, b in remaining)
        )

    def subdivide(self, e: int) -> 'Multigraph':
        """Replaces edge `e` by a path of length two through a new vertex."""
        u, v = self.edges[e]
        w = self.n
        edges = self.edges[:e] + ((u, w), (w, v)) + self.edges[e + 1:]
        return Multigraph(self.n + 1, edges)

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        for index, (u, v) in enumerate(self.edges):
            graph.add_edge(u, v, key=index)
        return graph

    def __str__(self):
        edges = ' '.join(f'{u}-{v}' for u, v in self.edges)
        return f'graph(n={self.n}, m={self.m}: {edges})'


def component_count(graph: Multigraph, subset: SubsetMask) -> int:
    """Number of components of the spanning subgraph (V, subset)."""
    if graph.n == 0:
        return 0
    components = UnionFind(range(graph.n))
    index = 0
    while subset:
        if subset & 1:
            components.union(*graph.edges[index])
        subset >>= 1
        index += 1
    return len({components[v] for v in range(graph.n)})


def cycle_matroid(graph: Multigraph) -> Matroid:
    """Matroid on the edges with rk(A) = n - k(A)."""
    n = graph.n

    def oracle(subset):
        return n - component_count(graph, subset)

    return Matroid(GroundSet(graph.m), oracle, CYCLE_OF_GRAPH,
                   name=str(graph))


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    offset = 0
    edges = []
    for graph in graphs:
        edges += [(u + offset, v + offset) for u, v in graph.edges]
        offset += graph.n
    return Multigraph(offset, tuple(edges))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((u, v) for u in range(n)
                               for v in range(u + 1, n)))


def cycle_graph(n: int) -> Multigraph:
    if n < 1:
        raise InvalidParameters(f'Cycle needs at least one vertex, got {n}')
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Multigraph:
    """Path on `n` vertices."""
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))
