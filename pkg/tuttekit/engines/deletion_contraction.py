"""Tutte polynomial of a multigraph by deletion and contraction.

    T(G) = T(G - e) + T(G / e)     e neither a loop nor a bridge
    T(G) = x^B y^L                 every edge a loop (L) or a bridge (B)

Intermediate results are memoised under the canonical form of the
multigraph, so isomorphic minors are expanded once. Graphs too symmetric
to canonicalise cheaply are expanded without caching. The cache only
saves work: results are identical with `cache=False`.
"""
import logging
import threading
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from tuttekit.engines.registry import register_engine
from tuttekit.errors import InvalidParameters
from tuttekit.graphs import Multigraph, canonical_form
from tuttekit.polynomial import BivariatePolynomial

log = logging.getLogger(__name__)

PIVOT_RULES = ('highest', 'random')

_shared_cache: Dict = {}
_cache_lock = threading.Lock()


@dataclass
class DelconStats:
    calls: int = 0
    cache_hits: int = 0
    cache_skips: int = 0


def clear_cache():
    with _cache_lock:
        _shared_cache.clear()


def _pivot_candidates(graph: Multigraph):
    return [e for e in range(graph.m)
            if not graph.is_loop(e) and not graph.is_bridge(e)]


class _Expansion:
    def __init__(self, cache: bool, pivot: str, seed: Optional[int],
                 stats: DelconStats):
        if pivot not in PIVOT_RULES:
            raise InvalidParameters(
                f'Pivot rule must be one of {PIVOT_RULES}, got {pivot!r}'
            )
        self.cache = cache
        self.pivot = pivot
        self.rng = np.random.default_rng(seed)
        self.stats = stats

    def choose(self, graph: Multigraph) -> Optional[int]:
        if self.pivot == 'highest':
            for e in reversed(range(graph.m)):
                if not graph.is_loop(e) and not graph.is_bridge(e):
                    return e
            return None
        candidates = _pivot_candidates(graph)
        if not candidates:
            return None
        return candidates[int(self.rng.integers(len(candidates)))]

    def __call__(self, graph: Multigraph) -> BivariatePolynomial:
        self.stats.calls += 1
        pivot = self.choose(graph)
        if pivot is None:
            loops = sum(1 for e in range(graph.m) if graph.is_loop(e))
            return BivariatePolynomial.monomial(graph.m - loops, loops)

        key = canonical_form(graph) if self.cache else None
        if key is not None:
            with _cache_lock:
                cached = _shared_cache.get(key)
            if cached is not None:
                self.stats.cache_hits += 1
                return cached
        elif self.cache:
            self.stats.cache_skips += 1

        result = self(graph.delete(pivot)) + self(graph.contract(pivot))
        if key is not None:
            with _cache_lock:
                _shared_cache[key] = result
        return result


def tutte_deletion_contraction(graph: Multigraph,
                               cache: bool = True,
                               pivot: str = 'highest',
                               seed: Optional[int] = None,
                               stats: Optional[DelconStats] = None
                               ) -> BivariatePolynomial:
    """Tutte polynomial of `graph` by the deletion-contraction recurrence.

    Args:
        graph: Any multigraph; loops and parallel edges are allowed.
        cache: Memoise minors by canonical form.
        pivot: `'highest'` expands the highest-index edge that is neither a
            loop nor a bridge; `'random'` picks one uniformly.
        seed: Seed for the random pivot rule.
        stats: Optional counters, updated in place.

    """
    stats = stats if stats is not None else DelconStats()
    result = _Expansion(cache, pivot, seed, stats)(graph)
    log.debug('%s: %d calls, %d cache hits, %d uncacheable', graph,
              stats.calls, stats.cache_hits, stats.cache_skips)
    return result


@register_engine('delcon', graph_only=True)
def tutte_delcon_engine(graph: Multigraph) -> BivariatePolynomial:
    return tutte_deletion_contraction(graph)
