"""Canonical forms of multigraphs, used as memoisation keys.

Vertices are coloured by iterated neighbourhood refinement over the
multiplicity matrix. When refinement leaves tied cells, each vertex of the
first tied cell is individualised in turn and the lexicographically least
adjacency encoding over the resulting discrete colourings is kept. Graphs
whose tied cells are larger than `env.canonical_tie_limit` get no form and
are not cached.

Isolated vertices are dropped first; they do not affect any Tutte
invariant.
"""
import math
from typing import List, Optional, Tuple

from tuttekit import env
from tuttekit.graphs.multigraph import Multigraph

CanonicalForm = Tuple[int, Tuple[int, ...]]


class _SearchBudgetExceeded(Exception):
    pass


def _multiplicities(graph: Multigraph) -> List[List[int]]:
    used = sorted({v for edge in graph.edges for v in edge})
    index = {v: i for i, v in enumerate(used)}
    size = len(used)
    matrix = [[0] * size for _ in range(size)]
    for u, v in graph.edges:
        a, b = index[u], index[v]
        matrix[a][b] += 1
        if a != b:
            matrix[b][a] += 1
    return matrix


def _recolour(signatures) -> List[int]:
    ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [ranking[sig] for sig in signatures]


def refine(matrix: List[List[int]], colours: List[int]) -> List[int]:
    """Coarsest equitable refinement of `colours`."""
    size = len(matrix)
    while True:
        signatures = [
            (colours[v], matrix[v][v], tuple(sorted(
                (colours[w], matrix[v][w])
                for w in range(size) if w != v and matrix[v][w]
            )))
            for v in range(size)
        ]
        refined = _recolour(signatures)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


def _encoding(matrix, colours) -> Tuple[int, ...]:
    order = sorted(range(len(matrix)), key=lambda v: colours[v])
    return tuple(matrix[order[i]][order[j]]
                 for i in range(len(order)) for j in range(i, len(order)))


def _cells(colours):
    cells = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def _search(matrix, colours, budget):
    colours = refine(matrix, colours)
    tied = [cell for cell in _cells(colours) if len(cell) > 1]
    if not tied:
        budget[0] -= 1
        if budget[0] < 0:
            raise _SearchBudgetExceeded
        return _encoding(matrix, colours)
    best = None
    for v in tied[0]:
        individualised = [2 * c + (0 if w == v else 1)
                          for w, c in enumerate(colours)]
        candidate = _search(matrix, individualised, budget)
        if best is None or candidate < best:
            best = candidate
    return best


def canonical_form(graph: Multigraph) -> Optional[CanonicalForm]:
    """Isomorphism-invariant key of `graph`, or None if too symmetric."""
    matrix = _multiplicities(graph)
    size = len(matrix)
    colours = refine(matrix, [0] * size)
    if any(len(cell) > env.canonical_tie_limit for cell in _cells(colours)):
        return None
    budget = [math.factorial(env.canonical_tie_limit)]
    try:
        return size, _search(matrix, colours, budget)
    except _SearchBudgetExceeded:
        return None
