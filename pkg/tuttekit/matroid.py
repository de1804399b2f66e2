"""Matroids on small ordered ground sets, given by a rank oracle."""
import logging
import threading
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from tuttekit import env
from tuttekit.errors import InvalidBases, InvalidParameters, SizeLimitError
from tuttekit.helpers import (
    all_masks, elements, format_mask, mask_sizes, popcount, popcounts
)
from tuttekit.var_types import (
    GroundSet, SubsetMask, Rank, MatroidKind,
    UNIFORM, EXPLICIT_BASES, DUAL_OF, ORACLE
)

log = logging.getLogger(__name__)

RankOracle = Callable[[SubsetMask], Rank]
TableBuilder = Callable[[], np.ndarray]


def require_exhaustive(size: int, what: str = 'enumeration'):
    """Raises `SizeLimitError` if `size` elements exceed the active limit."""
    limit = env.exhaustive_limit()
    if size > limit:
        raise SizeLimitError(
            f'{what} over 2^{size} subsets refused: ground set has {size} '
            f'elements, limit is {limit}'
        )


class Matroid:
    """Matroid on the ground set {0, ..., n-1} given by its rank function.

    Matroids are immutable. Rank values, the full rank table and derived
    reports are memoised on the instance; the memo is guarded by a lock so
    a matroid can be shared between threads.

    Args:
        ground: The ground set.
        oracle: Rank function on subset masks.
        kind: Provenance tag.
        table_builder: Optional vectorised builder for the rank table of
            all subsets; must agree with `oracle`.
        name: Optional description used in reports.

    """

    def __init__(self,
                 ground: GroundSet,
                 oracle: RankOracle,
                 kind: MatroidKind = ORACLE,
                 table_builder: Optional[TableBuilder] = None,
                 name: Optional[str] = None):
        self.ground = ground
        self.kind = kind
        self.name = name or f'{kind}({ground.size})'
        self._oracle = oracle
        self._table_builder = table_builder
        self._lock = threading.RLock()
        self._rank_cache = {}
        self._memo = {}
        self._table = None
        self._r = None
        self.source = None

    def __repr__(self):
        return f'Matroid<{self.name}>'

    @property
    def size(self) -> int:
        return self.ground.size

    @property
    def full(self) -> SubsetMask:
        return self.ground.full

    @property
    def r(self) -> int:
        """Rank of the whole ground set."""
        if self._r is None:
            self._r = self.rank(self.full)
        return self._r

    def rank(self, subset: SubsetMask) -> int:
        if subset not in self.ground:
            raise InvalidParameters(
                f'Subset {subset:#x} is not within a ground set of '
                f'{self.size} elements'
            )
        if self._table is not None:
            return int(self._table[subset])
        if not env.rank_cache:
            return self._oracle(subset)
        try:
            return self._rank_cache[subset]
        except KeyError:
            pass
        value = self._oracle(subset)
        with self._lock:
            self._rank_cache[subset] = value
        return value

    def rank_table(self) -> np.ndarray:
        """Rank of every subset, indexed by mask."""
        if self._table is not None:
            return self._table
        require_exhaustive(self.size, 'rank table')
        with self._lock:
            if self._table is None:
                if self._table_builder is not None:
                    table = self._table_builder()
                else:
                    table = np.fromiter(
                        (self._oracle(a) for a in range(1 << self.size)),
                        dtype=np.int16, count=1 << self.size
                    )
                log.debug('built rank table of %s (%d subsets)',
                          self.name, 1 << self.size)
                self._table = table
        return self._table

    def memoised(self, key, compute: Callable):
        """Returns `compute()`, computed at most once per matroid."""
        try:
            return self._memo[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._memo:
                self._memo[key] = compute()
            return self._memo[key]

    def corank(self, subset: SubsetMask) -> int:
        return popcount(subset) - self.rank(subset)

    def is_independent(self, subset: SubsetMask) -> bool:
        return self.rank(subset) == popcount(subset)

    def is_spanning(self, subset: SubsetMask) -> bool:
        return self.rank(subset) == self.r

    def is_base(self, subset: SubsetMask) -> bool:
        return popcount(subset) == self.r and self.is_independent(subset)

    def is_circuit(self, subset: SubsetMask) -> bool:
        size = popcount(subset)
        if size == 0 or self.rank(subset) != size - 1:
            return False
        return all(self.rank(subset & ~(1 << e)) == size - 1
                   for e in elements(subset))

    def is_in_d(self, subset: SubsetMask) -> bool:
        """Whether no element of `subset` is a coloop of the restriction."""
        rk = self.rank(subset)
        return all(self.rank(subset & ~(1 << e)) == rk
                   for e in elements(subset))

    def closure(self, subset: SubsetMask) -> SubsetMask:
        rk = self.rank(subset)
        result = subset
        for e in self.ground:
            bit = 1 << e
            if not subset & bit and self.rank(subset | bit) == rk:
                result |= bit
        return SubsetMask(result)

    def loops(self) -> SubsetMask:
        return self.closure(SubsetMask(0))

    def coloops(self) -> SubsetMask:
        r = self.r
        return SubsetMask(sum(
            1 << e for e in self.ground
            if self.rank(self.full & ~(1 << e)) < r
        ))

    def bases(self) -> List[SubsetMask]:
        table = self.rank_table()
        sizes = mask_sizes(self.size)
        r = self.r
        hits = np.nonzero((table == r) & (sizes == r))[0]
        return [SubsetMask(int(b)) for b in hits]

    def dual(self) -> 'Matroid':
        """The dual matroid, rk*(A) = |A| + rk(X - A) - r."""
        if self.kind == DUAL_OF and self.source is not None:
            return self.source
        full = self.full
        r = self.r

        def oracle(subset):
            return popcount(subset) + self.rank(full & ~subset) - r

        def table_builder():
            table = self.rank_table()
            sizes = mask_sizes(self.size)
            # full & ~A == full - A, so the complement table is the reversal
            return (sizes + table[::-1] - r).astype(np.int16)

        result = Matroid(self.ground, oracle, DUAL_OF,
                         table_builder, name=f'dual({self.name})')
        result.source = self
        return result

    def permute(self, order: Sequence[int]) -> 'Matroid':
        """Same matroid with element `order[i]` relabelled as `i`."""
        if sorted(order) != list(self.ground):
            raise InvalidParameters(
                f'{list(order)} is not a permutation of {self.size} elements'
            )

        def oracle(subset):
            original = 0
            for new_index, old_index in enumerate(order):
                if subset >> new_index & 1:
                    original |= 1 << old_index
            return self.rank(original)

        return Matroid(self.ground, oracle, self.kind,
                       name=f'{self.name}[{",".join(map(str, order))}]')

    def same_as(self, other: 'Matroid') -> bool:
        """Extensional equality of rank functions."""
        if self.size != other.size:
            return False
        return bool(np.array_equal(self.rank_table(), other.rank_table()))


def make_uniform(r: int, n: int) -> Matroid:
    """Uniform matroid U_{r,n}: rk(A) = min(|A|, r)."""
    if r < 0 or n < 0 or r > n:
        raise InvalidParameters(
            f'Uniform matroid needs 0 <= r <= n, got r={r}, n={n}'
        )

    def oracle(subset):
        return min(popcount(subset), r)

    def table_builder():
        return np.minimum(mask_sizes(n), r).astype(np.int16)

    return Matroid(GroundSet(n), oracle, UNIFORM, table_builder,
                   name=f'U({r},{n})')


def submodularity_violation(table: np.ndarray,
                            n: int) -> Optional[Tuple[int, int]]:
    """First pair (A + e, A + f) with rk(A+e) + rk(A+f) < rk(A+e+f) + rk(A),
    or None when the table is submodular."""
    table = table.astype(np.int64)
    masks = all_masks(n)
    for e in range(n):
        for f in range(e + 1, n):
            pair = (1 << e) | (1 << f)
            base = masks[(masks & pair) == 0]
            lhs = table[base | (1 << e)] + table[base | (1 << f)]
            rhs = table[base | pair] + table[base]
            bad = np.nonzero(lhs < rhs)[0]
            if len(bad):
                a = int(base[bad[0]])
                return a | (1 << e), a | (1 << f)
    return None


def _table_from_bases(n: int, bases: List[int]) -> np.ndarray:
    masks = all_masks(n)
    table = np.zeros(1 << n, dtype=np.int16)
    for b in bases:
        table = np.maximum(table, popcounts(masks & b, n))
    return table


def validate_bases(n: int, bases: Iterable[SubsetMask]) -> List[SubsetMask]:
    """Checks a base list and returns it deduplicated and sorted.

    Raises:
        InvalidBases: The list is empty, has bases of different sizes, has
            elements outside the ground set, or violates base exchange. The
            certificate names the violating bases.

    """
    ground = GroundSet(n)
    unique = sorted(set(int(b) for b in bases))
    if not unique:
        raise InvalidBases('A matroid needs at least one base')
    for b in unique:
        if b not in ground:
            raise InvalidBases(
                f'Base {format_mask(b)} has elements outside 0..{n - 1}',
                certificate=(b,)
            )
    sizes = {popcount(b) for b in unique}
    if len(sizes) > 1:
        first = unique[0]
        other = next(b for b in unique if popcount(b) != popcount(first))
        raise InvalidBases(
            f'Bases have unequal cardinalities: {format_mask(first)} and '
            f'{format_mask(other)}',
            certificate=(first, other)
        )
    if n <= env.exhaustive_limit():
        table = _table_from_bases(n, unique)
        if submodularity_violation(table, n) is None:
            return [SubsetMask(b) for b in unique]

    lookup = set(unique)
    for b1 in unique:
        for b2 in unique:
            if b1 == b2:
                continue
            for e in elements(b1 & ~b2):
                without = b1 & ~(1 << e)
                if not any(without | (1 << f) in lookup
                           for f in elements(b2 & ~b1)):
                    raise InvalidBases(
                        f'Base exchange fails for {format_mask(b1)}, '
                        f'{format_mask(b2)} removing {e}',
                        certificate=(b1, b2, e)
                    )
    return [SubsetMask(b) for b in unique]


def make_from_bases(n: int, bases: Iterable[SubsetMask]) -> Matroid:
    """Matroid whose bases are exactly `bases`; rk(A) = max |A & B|."""
    checked = validate_bases(n, bases)

    def oracle(subset):
        return max(popcount(subset & b) for b in checked)

    def table_builder():
        return _table_from_bases(n, checked)

    return Matroid(GroundSet(n), oracle, EXPLICIT_BASES, table_builder,
                   name=f'bases({n}; {len(checked)})')


def rank(matroid: Matroid, subset: SubsetMask) -> int:
    return matroid.rank(subset)


def closure(matroid: Matroid, subset: SubsetMask) -> SubsetMask:
    return matroid.closure(subset)


def dual(matroid: Matroid) -> Matroid:
    return matroid.dual()
