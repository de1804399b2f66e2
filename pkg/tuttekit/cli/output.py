"""Text and JSON rendering for command output.

Text output is bit-exact and line oriented; JSON output carries the same
data as one object with sorted keys.
"""
import json
from collections import Counter
from typing import Any, Dict, List, Union

from tuttekit.graphs import (
    Multigraph, component_count, graph_matroid, minimal_edge_cuts
)
from tuttekit.helpers import popcount
from tuttekit.matroid import Matroid
from tuttekit.polynomial import BivariatePolynomial, UnivariatePolynomial
from tuttekit.structure import enumerate_circuits, enumerate_flats


def polynomial_data(poly: Union[BivariatePolynomial, UnivariatePolynomial]
                    ) -> List[List[int]]:
    if isinstance(poly, BivariatePolynomial):
        return [[i, j, c] for (i, j), c in sorted(poly.coeffs.items())]
    return [[d, c] for d, c in sorted(poly.coeffs.items())]


def _by_size(masks) -> Dict[int, int]:
    return dict(sorted(Counter(popcount(a) for a in masks).items()))


def report_data(instance: Union[Matroid, Multigraph]) -> Dict[str, Any]:
    """Structural summary of a matroid, or of a graph and its cycle
    matroid. Undefined quantities are None."""
    graph = instance if isinstance(instance, Multigraph) else None
    matroid = graph_matroid(graph) if graph is not None else instance
    flats = enumerate_flats(matroid)
    circuits = enumerate_circuits(matroid)

    data = {
        'size': matroid.size,
        'rank': matroid.r,
        'flats': _by_size(flats.flats),
        'hyperplanes': _by_size(flats.hyperplanes),
        'circuits': _by_size(circuits.circuits),
        'cocircuits': _by_size(circuits.cocircuits),
        'f1': flats.f.get(1),
        'f2': flats.f.get(2),
        'd1': circuits.d.get(1),
        'd2': circuits.d.get(2),
    }
    if graph is not None:
        cuts = minimal_edge_cuts(graph)
        data.update({
            'vertices': graph.n,
            'edges': graph.m,
            'components': component_count(graph, graph.all_edges),
            'girth': cuts.girth,
            'h': cuts.h_value,
            'edge_connectivity': cuts.edge_connectivity,
            'edge_cuts': {size: len(found)
                          for size, found in cuts.cuts_by_size.items()},
        })
    return data


def _text_value(value) -> str:
    if value is None:
        return '-'
    if isinstance(value, dict):
        return ' '.join(f'{k}:{v}' for k, v in value.items()) or '-'
    return str(value)


def report_lines(data: Dict[str, Any]) -> List[str]:
    return [f'{key} {_text_value(value)}' for key, value in data.items()]


def to_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True)
