"""Coefficient formulas specialised to multigraphs.

With g = m - n + 1 for a connected graph on n vertices and m edges:

* G is (k+1)-edge-connected exactly when [y^j] T(1, y) = C(m-j-1, n-2)
  for every j in [g-k, g] (`graph_gjk_iff`).
* For a (k+1)-edge-connected G and g - 3(k+1)/2 < j <= g,
  [y^j] T(1, y) = C(m-j-1, n-2) - sum_{i=k+1}^{g-j} C(m-j-i-1, n-2)|EC_i|
  where EC_i are the minimal edge cuts of size i (`graph_cg_coeff`).
* f_2(M(G)) <= m - 3(k+1)/2 (`lemma36_bound_check`).
* The x-side circuit and threshold forms with k(G) components, girth
  g(G) and h(G) (`graph_corollary_x`, `graph_corollary_x_iff`).

The graph-level quantities are computed on the graph itself (cut lists,
BFS girth, subset search for h) and checked against the cycle matroid.
"""
from typing import Optional

from tuttekit.engines import tutte
from tuttekit.errors import (
    PreconditionError, ValidityRangeError, VerificationFailure
)
from tuttekit.graphs import (
    Multigraph, component_count, edge_connectivity, girth_by_bfs,
    graph_matroid, h_by_search, minimal_edge_cuts, three_way_cut_size
)
from tuttekit.graphs.cuts import require_connected
from tuttekit.helpers import popcount
from tuttekit.polynomial import BivariatePolynomial
from tuttekit.structure import enumerate_circuits, enumerate_flats
from tuttekit.theorems.binomials import identity_closed_form
from tuttekit.theorems.circuits import coeff_x_circuit, threshold_x_iff
from tuttekit.theorems.sums import require_index
from tuttekit.var_types import CheckResult


def cyclomatic_number(graph: Multigraph) -> int:
    """g = m - n + 1 of a connected graph."""
    return graph.m - graph.n + 1


def _require_edge_connectivity(graph: Multigraph, k: int) -> int:
    require_index(k, 'k')
    connectivity = edge_connectivity(graph)
    if connectivity < k + 1:
        raise PreconditionError(
            f'{graph} has edge connectivity {connectivity}, '
            f'needs at least k + 1 = {k + 1}'
        )
    return connectivity


def graph_gjk_iff(graph: Multigraph, k: int,
                  poly: Optional[BivariatePolynomial] = None
                  ) -> CheckResult:
    """Checks (k+1)-edge-connectivity against the closed form on [g-k, g].

    Indices below zero compare the closed form with the coefficient 0.
    The certificate is `(j, closed_form, engine_value)` for the first j
    where the closed form fails, or None when it holds throughout.
    """
    require_connected(graph)
    require_index(k, 'k')
    poly = poly if poly is not None else tutte(graph)
    at_x_1 = poly.specialize_x_at_1()
    g = cyclomatic_number(graph)
    connectivity = edge_connectivity(graph)

    failure = None
    for j in range(g - k, g + 1):
        closed = identity_closed_form(graph.m, graph.n - 1, j)
        engine = at_x_1[j] if j >= 0 else 0
        if closed != engine:
            failure = (j, closed, engine)
            break

    connected_enough = connectivity >= k + 1
    identity_holds = failure is None
    return CheckResult(
        connected_enough == identity_holds,
        failure,
        {'edge_connectivity': connectivity,
         'identity_holds': identity_holds}
    )


def graph_gjk_via_matroid(graph: Multigraph, k: int) -> CheckResult:
    """Same equivalence read off the cycle matroid: every bond has more
    than k edges exactly when every hyperplane has fewer than m - k."""
    require_connected(graph)
    require_index(k, 'k')
    f1 = enumerate_flats(graph_matroid(graph)).f.get(1)
    connectivity = edge_connectivity(graph)
    small_hyperplanes = f1 is None or f1 < graph.m - k
    return CheckResult(
        small_hyperplanes == (connectivity >= k + 1),
        None if f1 is None else (k, f1, connectivity),
        {'f1': f1, 'edge_connectivity': connectivity}
    )


def cg_in_range(graph: Multigraph, j: int, k: int) -> bool:
    g = cyclomatic_number(graph)
    return 0 <= j <= g and 2 * j > 2 * g - 3 * (k + 1)


def graph_cg_coeff(graph: Multigraph, j: int, k: int) -> int:
    """[y^j] T(1, y) corrected by the minimal edge cuts of size k+1..g-j.

    Raises:
        NotApplicable: `graph` is disconnected or has fewer than two
            vertices.
        PreconditionError: `graph` is not (k+1)-edge-connected.
        ValidityRangeError: j outside g - 3(k+1)/2 < j <= g.

    """
    require_connected(graph)
    require_index(j, 'j')
    _require_edge_connectivity(graph, k)
    g = cyclomatic_number(graph)
    if not cg_in_range(graph, j, k):
        raise ValidityRangeError(
            f'j = {j} is outside 2j > 2g - 3(k+1) = {2 * g - 3 * (k + 1)}, '
            f'j <= g = {g}'
        )
    cuts = minimal_edge_cuts(graph)
    m, rank = graph.m, graph.n - 1
    correction = sum(
        identity_closed_form(m - i, rank, j) * cuts.count(i)
        for i in range(k + 1, g - j + 1)
    )
    return identity_closed_form(m, rank, j) - correction


def lemma36_bound_check(graph: Multigraph, k: int) -> CheckResult:
    """Checks 2 f_2(M(G)) <= 2m - 3(k+1) for a (k+1)-edge-connected G.

    Removing the complement of a largest rank r-2 flat leaves exactly
    three components; that complement is the smallest three-way cut and
    is reported with the result. Passes vacuously when f_2 is undefined.
    """
    require_connected(graph)
    _require_edge_connectivity(graph, k)
    bound = 2 * graph.m - 3 * (k + 1)
    three_way_cut = three_way_cut_size(graph)
    if three_way_cut is None:
        return CheckResult(True, details={'f2': None, 'bound': bound,
                                          'three_way_cut': None})
    f2 = graph.m - three_way_cut
    passed = 2 * f2 <= bound
    return CheckResult(
        passed,
        None if passed else (k, f2, bound),
        {'f2': f2, 'bound': bound, 'three_way_cut': three_way_cut}
    )


def _graph_circuit_data(graph: Multigraph):
    components = component_count(graph, graph.all_edges)
    nullity = graph.m - graph.n + components
    h = h_by_search(graph)
    matroid = graph_matroid(graph)
    d2 = enumerate_circuits(matroid).d.get(2)
    if h != d2:
        raise VerificationFailure(
            f'{graph}: subset search gives h = {h}, cycle matroid gives '
            f'd2 = {d2}'
        )
    return components, nullity, h


def corollary_x_in_range(graph: Multigraph, i: int) -> bool:
    components = component_count(graph, graph.all_edges)
    h = h_by_search(graph)
    return h is None or i > graph.n - components - h


def graph_corollary_x(graph: Multigraph, i: int) -> int:
    """[x^i] T(x, 1) from the cycles of G, for i > n - k(G) - h(G).

    The value is also computed on the cycle matroid; a mismatch raises
    `VerificationFailure`.
    """
    require_index(i, 'i')
    components, nullity, h = _graph_circuit_data(graph)
    if not corollary_x_in_range(graph, i):
        raise ValidityRangeError(
            f'i = {i} is outside the range i > n - k(G) - h(G) = '
            f'{graph.n - components - h}'
        )
    m = graph.m
    cycles = enumerate_circuits(graph_matroid(graph)).circuits
    correction = sum(
        identity_closed_form(m - popcount(c), nullity, i)
        for c in cycles
        if h is None or popcount(c) < h
    )
    value = identity_closed_form(m, nullity, i) - correction
    matroid_value = coeff_x_circuit(graph_matroid(graph), i)
    if value != matroid_value:
        raise VerificationFailure(
            f'{graph}: graph form gives [x^{i}] = {value}, cycle matroid '
            f'gives {matroid_value}'
        )
    return value


def graph_corollary_x_iff(graph: Multigraph,
                          poly: Optional[BivariatePolynomial] = None
                          ) -> CheckResult:
    """Checks g(G) > n - k(G) - i  <=>  [x^i] T(x, 1) = C(m-i-1, n-k(G)-i)
    for every i in 0..n - k(G), with g(G) from breadth-first search."""
    poly = poly if poly is not None else tutte(graph)
    at_y_1 = poly.specialize_y_at_1()
    components = component_count(graph, graph.all_edges)
    rank = graph.n - components
    nullity = graph.m - rank
    girth = girth_by_bfs(graph)
    d1 = enumerate_circuits(graph_matroid(graph)).d.get(1)
    if girth != d1:
        raise VerificationFailure(
            f'{graph}: breadth-first search gives girth {girth}, cycle '
            f'matroid gives d1 = {d1}'
        )

    result = CheckResult(True, details={'girth': girth})
    for i in range(rank + 1):
        closed = identity_closed_form(graph.m, nullity, i)
        engine = at_y_1[i]
        condition = girth is None or girth > rank - i
        if condition != (closed == engine):
            result = CheckResult(False, (i, closed, engine),
                                 {'girth': girth})
            break

    matroid_result = threshold_x_iff(graph_matroid(graph), poly)
    if bool(matroid_result) != bool(result):
        raise VerificationFailure(
            f'{graph}: graph and cycle matroid threshold checks disagree'
        )
    return result
