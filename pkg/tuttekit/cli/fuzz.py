"""Seeded random instances and the fuzz driver.

Every trial draws from its own generator, spawned from the root seed by
`numpy.random.SeedSequence`, so a trial is reproducible on its own and the
outcome does not depend on how trials are spread over workers.

Graph family: choose m uniformly in 0..max_elements, then n uniformly in
1..m+1, then m edges with independent uniform endpoints (loops and
parallel edges allowed). With `connected=True` the first n-1 edges form a
random spanning tree (vertex v joins a uniform earlier vertex) and the
edge order is shuffled afterwards.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np

from tuttekit import env
from tuttekit.errors import TuttekitError, UsageError
from tuttekit.graphs import Multigraph, cycle_matroid
from tuttekit.matroid import Matroid, make_from_bases, make_uniform
from tuttekit.theorems import verify

log = logging.getLogger(__name__)

FAMILIES = ('graphs', 'uniform', 'bases')


def random_multigraph(rng: np.random.Generator, max_edges: int,
                      connected: bool = False) -> Multigraph:
    m = int(rng.integers(0, max_edges + 1))
    n = int(rng.integers(1, m + 2))
    edges = []
    if connected:
        edges += [(int(rng.integers(v)), v) for v in range(1, n)]
    while len(edges) < m:
        edges.append((int(rng.integers(n)), int(rng.integers(n))))
    order = rng.permutation(m)
    return Multigraph(n, tuple(edges[k] for k in order))


def random_uniform(rng: np.random.Generator, max_elements: int) -> Matroid:
    n = int(rng.integers(0, max_elements + 1))
    return make_uniform(int(rng.integers(0, n + 1)), n)


def random_bases_matroid(rng: np.random.Generator, max_elements: int,
                         connected: bool = False) -> Matroid:
    """Explicit-bases matroid re-encoding a random cycle matroid, or its
    dual (base complements) with probability one half."""
    graph = random_multigraph(rng, max_elements, connected)
    bases = cycle_matroid(graph).bases()
    if rng.random() < 0.5:
        bases = [graph.all_edges & ~b for b in bases]
    return make_from_bases(graph.m, bases)


def sample_instance(family: str, rng: np.random.Generator,
                    max_elements: int, connected: bool = False
                    ) -> Union[Matroid, Multigraph]:
    if family == 'graphs':
        return random_multigraph(rng, max_elements, connected)
    if family == 'uniform':
        return random_uniform(rng, max_elements)
    if family == 'bases':
        return random_bases_matroid(rng, max_elements, connected)
    raise UsageError(f'Unknown family {family!r}; expected one of '
                     f'{", ".join(FAMILIES)}')


@dataclass
class TrialOutcome:
    trial: int
    instance: str
    passed: bool
    lines: List[str]


@dataclass(frozen=True)
class _Task:
    trial: int
    seed: np.random.SeedSequence
    family: str
    max_elements: int
    connected: bool
    theorems: str
    engine: str
    limit: int


def _run_trial(task: _Task) -> TrialOutcome:
    previous_limit = env.max_ground
    env.max_ground = task.limit
    try:
        return _verify_sample(task)
    finally:
        env.max_ground = previous_limit


def _verify_sample(task: _Task) -> TrialOutcome:
    rng = np.random.default_rng(task.seed)
    instance = sample_instance(task.family, rng, task.max_elements,
                               task.connected)
    try:
        report = verify(instance, task.theorems, task.engine)
    except TuttekitError as ex:
        return TrialOutcome(task.trial, str(instance), False,
                            [f'ERROR: {type(ex).__name__}: {ex}'])
    return TrialOutcome(task.trial, str(instance), report.agreement,
                        report.lines())


def run_fuzz(family: str, max_elements: int, seed: int, trials: int,
             connected: bool = False, theorems: str = 'all',
             engine: str = 'all', workers: int = 1
             ) -> Tuple[List[TrialOutcome], Optional[TrialOutcome]]:
    """Runs `trials` seeded trials and returns every outcome (sorted by
    trial) together with the first failure, if any."""
    if family not in FAMILIES:
        raise UsageError(f'Unknown family {family!r}; expected one of '
                         f'{", ".join(FAMILIES)}')
    if trials < 0 or max_elements < 0 or workers < 1:
        raise UsageError('trials and max-elements must be nonnegative and '
                         'workers positive')
    limit = env.exhaustive_limit()
    tasks = [
        _Task(t, child, family, max_elements, connected, theorems, engine,
              limit)
        for t, child in enumerate(np.random.SeedSequence(seed).spawn(trials))
    ]
    if workers == 1:
        outcomes = [_run_trial(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_trial, tasks))
    outcomes.sort(key=lambda outcome: outcome.trial)
    failure = next((o for o in outcomes if not o.passed), None)
    log.info('fuzz %s: %d trials, %d failures', family, len(outcomes),
             sum(1 for o in outcomes if not o.passed))
    return outcomes, failure
