"""Fundamental types and type annotations for `tuttekit`."""

from dataclasses import dataclass, field
from typing import NewType, Dict, List, Optional, Tuple, Any

import numpy as np

from tuttekit.errors import InvalidParameters

SubsetMask = NewType('SubsetMask', int)
Rank = NewType('Rank', int)

MatroidKind = NewType('MatroidKind', str)
UNIFORM = MatroidKind('uniform')
EXPLICIT_BASES = MatroidKind('explicit-bases')
CYCLE_OF_GRAPH = MatroidKind('cycle-of-graph')
DUAL_OF = MatroidKind('dual-of')
ORACLE = MatroidKind('oracle')


@dataclass(frozen=True)
class GroundSet:
    """Ground set {0, ..., size - 1}, totally ordered by index."""
    size: int = 0

    def __post_init__(self):
        if self.size < 0:
            raise InvalidParameters(
                f'Ground set size must be nonnegative, got {self.size}'
            )

    @property
    def full(self) -> SubsetMask:
        return SubsetMask((1 << self.size) - 1)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def __contains__(self, mask):
        return mask >= 0 and not mask >> self.size


@dataclass
class _Profile:
    counts: np.ndarray

    def __getitem__(self, t):
        return int(self.counts[t])

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return (int(c) for c in self.counts)

    def __eq__(self, other):
        try:
            return list(self) == list(other)
        except TypeError:
            return False

    def tolist(self) -> List[int]:
        return list(self)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(eq=False)
class SigmaProfile(_Profile):
    """Number of spanning sets of each cardinality."""


@dataclass(eq=False)
class TauProfile(_Profile):
    """Number of independent sets of each cardinality."""


@dataclass(frozen=True)
class FlatReport:
    """Flats and hyperplanes of a matroid.

    Attributes:
        rank: Rank of the matroid.
        flats: All closed sets, ascending by mask.
        flat_ranks: Rank of every flat.
        hyperplanes: Flats of rank `rank - 1`.
        f: `f[k]` is the largest size of a flat of rank `rank - k`;
            absent when no such flat exists.

    """
    rank: int
    flats: Tuple[SubsetMask, ...]
    flat_ranks: Dict[SubsetMask, int]
    hyperplanes: Tuple[SubsetMask, ...]
    f: Dict[int, int]


@dataclass(frozen=True)
class CircuitReport:
    """Circuits, cocircuits and minimum D-set sizes.

    Attributes:
        circuits: Minimal dependent sets, ascending by mask.
        cocircuits: Complements of the hyperplanes, ascending by mask.
        d: `d[k]` is the smallest size of a D-set of corank `k`; absent
            when there is none.

    """
    circuits: Tuple[SubsetMask, ...]
    cocircuits: Tuple[SubsetMask, ...]
    d: Dict[int, int]


@dataclass(frozen=True)
class CutReport:
    """Minimal edge cuts of a multigraph and derived invariants."""
    cuts_by_size: Dict[int, Tuple[SubsetMask, ...]]
    edge_connectivity: Optional[int]
    girth: Optional[int]
    h_value: Optional[int]

    def count(self, size: int) -> int:
        return len(self.cuts_by_size.get(size, ()))


@dataclass(frozen=True)
class ActivityRecord:
    """A base together with its internal and external activity."""
    base: SubsetMask
    internal_activity: int
    external_activity: int


@dataclass
class CheckResult:
    """Outcome of an exhaustive check.

    Evaluates truthy when the check passed. On failure, `certificate`
    holds whatever witnesses the violation.
    """
    passed: bool
    certificate: Optional[Any] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return self.passed
