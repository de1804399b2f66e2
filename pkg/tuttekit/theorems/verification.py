"""Cross-checks of every coefficient formula against an engine.

`verify` computes the Tutte polynomial of an instance directly and
compares each formula with it, index by index, inside the formula's
validity range. Exhaustive identities that are not coefficient formulas
(duality, the binomial identity, the iff thresholds) are recorded as
checks.

Serialised reports are line oriented::

    # <annotation>
    <method> <index> <value>
    CHECK <name> pass|fail
    AGREEMENT: pass|fail
    COUNTEREXAMPLE: <index> <method> <value> <engine-value>

The last line appears only on failure and names the first disagreement.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from tuttekit.engines import applicable_engines, duality_check, tutte
from tuttekit.errors import UsageError
from tuttekit.graphs import Multigraph, edge_connectivity, graph_matroid
from tuttekit.matroid import Matroid
from tuttekit.structure import (
    enumerate_circuits, enumerate_flats, sigma_profile
)
from tuttekit.theorems import circuits, graph_corollaries, hyperplanes, sums
from tuttekit.theorems.binomials import lemma31_both_sides

log = logging.getLogger(__name__)

Instance = Union[Matroid, Multigraph]


class CoeffMethod(Enum):
    DIRECT_ENGINE = 'direct-engine'
    SIGMA_SUM = 'sigma-sum'
    TAU_SUM = 'tau-sum'
    HYPERPLANE_CORRECTION = 'hyperplane-correction'
    COCIRCUIT_CORRECTION = 'cocircuit-correction'
    CIRCUIT_CORRECTION = 'circuit-correction'
    THRESHOLD_CLOSED_FORM = 'threshold-closed-form'

    def label(self, side: str) -> str:
        return f'{self.value}/{side}'


THEOREMS = (
    'sigma', 'tau', 'dual', 'hyperplane', 'cocircuit', 'threshold-y',
    'circuit', 'threshold-x', 'lemma31', 'gjk', 'cg', 'lemma36',
    'corollary-x', 'sigma-hyperplane'
)
GRAPH_THEOREMS = ('gjk', 'cg', 'lemma36', 'corollary-x')


@dataclass(frozen=True)
class CoefficientRow:
    method: str
    index: int
    value: int
    engine_value: int

    @property
    def agrees(self) -> bool:
        return self.value == self.engine_value

    def line(self) -> str:
        return f'{self.method} {self.index} {self.value}'


@dataclass(frozen=True)
class CheckRow:
    name: str
    passed: bool
    counterexample: Optional[Tuple[Any, int, int]] = None

    def line(self) -> str:
        return f'CHECK {self.name} {"pass" if self.passed else "fail"}'


@dataclass
class VerificationReport:
    """Formula values against engine values for one instance.

    Attributes:
        instance: Description of the matroid or graph.
        engine: Engine used as ground truth.
        rows: One row per (method, index) inside the validity range.
        checks: Exhaustive identity checks.
        annotations: Validity ranges and skipped theorems.

    """
    instance: str
    engine: str
    rows: List[CoefficientRow] = field(default_factory=list)
    checks: List[CheckRow] = field(default_factory=list)
    annotations: List[str] = field(default_factory=list)

    @property
    def agreement(self) -> bool:
        return (all(row.agrees for row in self.rows)
                and all(check.passed for check in self.checks))

    def counterexample(self) -> Optional[Tuple[Any, str, Any, Any]]:
        for row in self.rows:
            if not row.agrees:
                return row.index, row.method, row.value, row.engine_value
        for check in self.checks:
            if not check.passed:
                index, value, engine = check.counterexample or ('-', '-', '-')
                return index, check.name, value, engine
        return None

    def lines(self) -> List[str]:
        result = [f'# {note}' for note in self.annotations]
        result += [row.line() for row in self.rows]
        result += [check.line() for check in self.checks]
        result.append(f'AGREEMENT: {"pass" if self.agreement else "fail"}')
        failure = self.counterexample()
        if failure is not None:
            result.append('COUNTEREXAMPLE: ' + ' '.join(map(str, failure)))
        return result

    def to_dict(self) -> Dict[str, Any]:
        failure = self.counterexample()
        return {
            'instance': self.instance,
            'engine': self.engine,
            'annotations': list(self.annotations),
            'rows': [[row.method, row.index, row.value, row.engine_value]
                     for row in self.rows],
            'checks': [[check.name, check.passed] for check in self.checks],
            'agreement': self.agreement,
            'counterexample': None if failure is None else list(failure)
        }


def select_theorems(theorems: Union[str, Iterable[str]]) -> List[str]:
    if isinstance(theorems, str):
        theorems = THEOREMS if theorems == 'all' else theorems.split(',')
    selected = [name.strip() for name in theorems if name.strip()]
    unknown = [name for name in selected if name not in THEOREMS]
    if unknown:
        raise UsageError(
            f'Unknown theorem key(s) {", ".join(unknown)}; expected all or '
            f'a list from {", ".join(THEOREMS)}'
        )
    return [name for name in THEOREMS if name in selected]


class _Verifier:
    def __init__(self, instance: Instance, engine: str):
        self.instance = instance
        self.graph = instance if isinstance(instance, Multigraph) else None
        self.matroid = (graph_matroid(instance) if self.graph is not None
                        else instance)
        self.report = VerificationReport(str(instance), engine)
        self.poly = self._ground_truth(engine)
        self.at_x_1 = self.poly.specialize_x_at_1()
        self.at_y_1 = self.poly.specialize_y_at_1()
        self.n = self.matroid.size
        self.r = self.matroid.r

    def _ground_truth(self, engine):
        if engine != 'all':
            return tutte(self.instance, engine)
        names = applicable_engines(self.instance)
        results = {name: tutte(self.instance, name) for name in names}
        reference = results[names[0]]
        for name in names[1:]:
            self.check(f'engines[{names[0]}={name}]',
                       results[name] == reference)
        return reference

    @property
    def y_indices(self):
        return range(self.n - self.r + 1)

    @property
    def x_indices(self):
        return range(self.r + 1)

    def row(self, method: str, index: int, value: int, side: str):
        engine = self.at_x_1[index] if side == 'y' else self.at_y_1[index]
        self.report.rows.append(CoefficientRow(method, index, value, engine))

    def check(self, name: str, passed: bool, counterexample=None):
        self.report.checks.append(CheckRow(name, bool(passed), counterexample))

    def note(self, text: str):
        self.report.annotations.append(text)

    def run_engine_rows(self):
        for j in self.y_indices:
            self.row(CoeffMethod.DIRECT_ENGINE.label('y'), j,
                     self.at_x_1[j], 'y')
        for i in self.x_indices:
            self.row(CoeffMethod.DIRECT_ENGINE.label('x'), i,
                     self.at_y_1[i], 'x')

    def run_sigma(self):
        for j in self.y_indices:
            self.row(CoeffMethod.SIGMA_SUM.label('y'), j,
                     sums.coeff_y_sigma(self.matroid, j), 'y')

    def run_tau(self):
        for i in self.x_indices:
            self.row(CoeffMethod.TAU_SUM.label('x'), i,
                     sums.coeff_x_tau(self.matroid, i), 'x')

    def run_dual(self):
        for i in self.x_indices:
            self.row('sigma-sum-dual/x', i,
                     sums.coeff_x_dual_sigma(self.matroid, i), 'x')
        result = duality_check(self.matroid)
        certificate = None
        if result.certificate is not None:
            i, j, primal, dual = result.certificate
            certificate = (f'{i},{j}', primal, dual)
        self.check('duality', result.passed, certificate)

        dual = self.matroid.dual()
        d = enumerate_circuits(self.matroid).d
        f_dual = enumerate_flats(dual).f
        for k in (1, 2):
            if k in d and k in f_dual:
                total = d[k] + f_dual[k]
                self.check(f'dk-plus-dual-fk[k={k}]', total == self.n,
                           (k, total, self.n))

    def run_hyperplane(self, cocircuit=False):
        method = (CoeffMethod.COCIRCUIT_CORRECTION if cocircuit
                  else CoeffMethod.HYPERPLANE_CORRECTION)
        formula = (hyperplanes.coeff_y_cocircuit if cocircuit
                   else hyperplanes.coeff_y_hyperplane)
        self.note(f'{method.label("y")} '
                  f'{hyperplanes.hyperplane_validity(self.matroid)}')
        for j in self.y_indices:
            if hyperplanes.in_hyperplane_range(self.matroid, j):
                self.row(method.label('y'), j, formula(self.matroid, j), 'y')

    def run_threshold_y(self):
        label = CoeffMethod.THRESHOLD_CLOSED_FORM.label('y')
        self.note(f'{label} '
                  f'{hyperplanes.threshold_y_validity(self.matroid)}')
        for j in self.y_indices:
            if hyperplanes.threshold_y_applies(self.matroid, j):
                self.row(label, j,
                         hyperplanes.coeff_y_threshold(self.matroid, j), 'y')
        result = hyperplanes.threshold_y_iff(self.matroid, self.poly)
        self.check('threshold-y-iff', result.passed, result.certificate)

    def run_circuit(self):
        label = CoeffMethod.CIRCUIT_CORRECTION.label('x')
        self.note(f'{label} {circuits.circuit_validity(self.matroid)}')
        for i in self.x_indices:
            if circuits.in_circuit_range(self.matroid, i):
                self.row(label, i,
                         circuits.coeff_x_circuit(self.matroid, i), 'x')

    def run_threshold_x(self):
        label = CoeffMethod.THRESHOLD_CLOSED_FORM.label('x')
        self.note(f'{label} {circuits.threshold_x_validity(self.matroid)}')
        for i in self.x_indices:
            if circuits.threshold_x_applies(self.matroid, i):
                self.row(label, i,
                         circuits.coeff_x_threshold(self.matroid, i), 'x')
        result = circuits.threshold_x_iff(self.matroid, self.poly)
        self.check('threshold-x-iff', result.passed, result.certificate)

    def run_lemma31(self):
        failure = None
        for m in range(self.n + 1):
            for p in range(m + 1):
                for k in range(m - p + 1):
                    lhs, rhs = lemma31_both_sides(m, p, k)
                    if lhs != rhs and failure is None:
                        failure = (f'{m},{p},{k}', lhs, rhs)
        self.check(f'binomial-identity[m<={self.n}]', failure is None,
                   failure)

    def run_sigma_hyperplane(self):
        sigma = sigma_profile(self.matroid)
        f2 = enumerate_flats(self.matroid).f.get(2)
        for t in self.y_indices:
            if f2 is None or self.r + t > f2:
                self.report.rows.append(CoefficientRow(
                    'hyperplane-count/sigma', t,
                    sums.sigma_via_hyperplanes(self.matroid, t),
                    sigma[self.r + t]
                ))

    def _connectivity(self) -> Optional[int]:
        graph = self.graph
        if graph.n < 2 or not graph.is_connected():
            return None
        return edge_connectivity(graph)

    def run_gjk(self, connectivity):
        for k in range(connectivity + 1):
            result = graph_corollaries.graph_gjk_iff(self.graph, k, self.poly)
            self.check(f'gjk[k={k}]', result.passed, result.certificate)
            via = graph_corollaries.graph_gjk_via_matroid(self.graph, k)
            self.check(f'gjk-matroid[k={k}]', via.passed)

    def run_cg(self, connectivity):
        g = graph_corollaries.cyclomatic_number(self.graph)
        for k in range(connectivity):
            label = f'graph-cg[k={k}]/y'
            self.note(f'{label} valid: 2j > 2g - 3(k+1) = '
                      f'{2 * g - 3 * (k + 1)}')
            for j in range(g + 1):
                if graph_corollaries.cg_in_range(self.graph, j, k):
                    self.row(label, j, graph_corollaries.graph_cg_coeff(
                        self.graph, j, k), 'y')

    def run_lemma36(self, connectivity):
        for k in range(connectivity):
            result = graph_corollaries.lemma36_bound_check(self.graph, k)
            self.check(f'lemma36[k={k}]', result.passed, result.certificate)

    def run_corollary_x(self):
        label = 'graph-corollary/x'
        for i in self.x_indices:
            if graph_corollaries.corollary_x_in_range(self.graph, i):
                self.row(label, i,
                         graph_corollaries.graph_corollary_x(self.graph, i),
                         'x')
        result = graph_corollaries.graph_corollary_x_iff(self.graph,
                                                         self.poly)
        self.check('corollary-x-iff', result.passed, result.certificate)

    def run(self, theorems: List[str]) -> VerificationReport:
        self.run_engine_rows()
        simple = {
            'sigma': self.run_sigma,
            'tau': self.run_tau,
            'dual': self.run_dual,
            'hyperplane': self.run_hyperplane,
            'cocircuit': lambda: self.run_hyperplane(cocircuit=True),
            'threshold-y': self.run_threshold_y,
            'circuit': self.run_circuit,
            'threshold-x': self.run_threshold_x,
            'lemma31': self.run_lemma31,
            'sigma-hyperplane': self.run_sigma_hyperplane,
        }
        for name in theorems:
            if name in simple:
                simple[name]()
        graph_theorems = [name for name in theorems if name in GRAPH_THEOREMS]
        if not graph_theorems:
            return self.report
        if self.graph is None:
            self.note(f'skipped {", ".join(graph_theorems)}: needs a graph')
            return self.report

        connectivity = self._connectivity()
        for name in graph_theorems:
            if name == 'corollary-x':
                self.run_corollary_x()
            elif connectivity is None:
                self.note(f'skipped {name}: needs a connected graph with at '
                          f'least two vertices')
            else:
                getattr(self, f'run_{name}')(connectivity)
        return self.report


def verify(instance: Instance,
           theorems: Union[str, Iterable[str]] = 'all',
           engine: str = 'subset') -> VerificationReport:
    """Builds a `VerificationReport` for a matroid or multigraph.

    Args:
        instance: The matroid or multigraph to check.
        theorems: `'all'`, a comma separated string, or a list of keys
            from `THEOREMS`. Graph theorems are skipped, with a note, for
            matroids; those needing connectivity are skipped for
            disconnected graphs.
        engine: Engine providing the ground truth; `'all'` also records
            whether the engines agree.

    """
    selected = select_theorems(theorems)
    report = _Verifier(instance, engine).run(selected)
    log.info('%s: %d rows, %d checks, agreement %s', report.instance,
             len(report.rows), len(report.checks), report.agreement)
    return report
