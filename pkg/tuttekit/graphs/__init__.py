"""Multigraphs, cycle matroids and cut invariants."""
from tuttekit.graphs.multigraph import (
    Multigraph, component_count, cycle_matroid, disjoint_union,
    complete_graph, cycle_graph, path_graph
)
from tuttekit.graphs.cuts import (
    graph_matroid, minimal_edge_cuts, edge_connectivity, is_k_edge_connected,
    minimal_disconnecting_sets, girth_by_bfs, h_by_search, three_way_cut_size
)
from tuttekit.graphs.canonical import canonical_form
