"""Registry of Tutte polynomial engines.

Engines register under a name with `register_engine`. Matroid engines
also accept a `Multigraph`, which is replaced by its cycle matroid; graph
engines accept only multigraphs.
"""
import logging
from typing import Callable, Dict, List, Union

from tuttekit.errors import (
    InvalidParameters, NotApplicable, VerificationFailure
)
from tuttekit.graphs import Multigraph, graph_matroid
from tuttekit.matroid import Matroid
from tuttekit.polynomial import BivariatePolynomial

log = logging.getLogger(__name__)

Instance = Union[Matroid, Multigraph]

_registry: Dict[str, Callable] = {}
_graph_only = set()


def register_engine(name: str, graph_only: bool = False):
    def decorator(the_engine):
        assert name not in _registry, \
            f'Engine {name} is already defined'
        _registry[name] = the_engine
        if graph_only:
            _graph_only.add(name)
        return the_engine

    return decorator


def engine_names() -> List[str]:
    return sorted(_registry)


def applicable_engines(instance: Instance) -> List[str]:
    if isinstance(instance, Multigraph):
        return engine_names()
    return [name for name in engine_names() if name not in _graph_only]


def _run(name: str, instance: Instance) -> BivariatePolynomial:
    try:
        engine = _registry[name]
    except KeyError as ex:
        raise InvalidParameters(
            f'Unknown engine {name!r}; expected one of '
            f'{", ".join(engine_names())} or all'
        ) from ex
    if name in _graph_only:
        if not isinstance(instance, Multigraph):
            raise NotApplicable(f'Engine {name} needs a graph, got {instance}')
        return engine(instance)
    if isinstance(instance, Multigraph):
        instance = graph_matroid(instance)
    return engine(instance)


def tutte(instance: Instance, engine: str = 'subset') -> BivariatePolynomial:
    """Tutte polynomial of a matroid or multigraph.

    Args:
        instance: A `Matroid` or a `Multigraph`.
        engine: Registered engine name, or `'all'` to run every applicable
            engine and insist that they agree.

    Raises:
        VerificationFailure: `engine='all'` and two engines disagree.

    """
    if engine != 'all':
        return _run(engine, instance)

    results = {}
    for name in applicable_engines(instance):
        results[name] = _run(name, instance)
        log.debug('engine %s: %s', name, results[name])
    first_name, first = next(iter(results.items()))
    for name, poly in results.items():
        if poly != first:
            raise VerificationFailure(
                f'Engines disagree on {instance}: {first_name} gives '
                f'{first}, {name} gives {poly}'
            )
    return first
