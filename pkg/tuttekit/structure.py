"""Exhaustive structure of a matroid: flats, circuits, profiles.

Every function here walks all 2^|X| subsets through the matroid's rank
table, so each refuses ground sets above the exhaustive limit. Results are
memoised on the matroid.
"""
import logging
from functools import wraps

import numpy as np

from tuttekit.helpers import all_masks, mask_sizes
from tuttekit.matroid import (
    Matroid, require_exhaustive, submodularity_violation
)
from tuttekit.var_types import (
    CheckResult, CircuitReport, FlatReport, SigmaProfile, SubsetMask,
    TauProfile
)

log = logging.getLogger(__name__)


def exhaustive(func):
    """Checks the size limit, then memoises the result on the matroid."""
    @wraps(func)
    def wrapper(matroid: Matroid):
        require_exhaustive(matroid.size, func.__name__)
        return matroid.memoised(func.__name__, lambda: func(matroid))
    return wrapper


def _flat_mask(matroid: Matroid) -> np.ndarray:
    """Boolean array: subset is closed."""
    table = matroid.rank_table()
    masks = all_masks(matroid.size)
    closed = np.ones(len(masks), dtype=bool)
    for e in matroid.ground:
        bit = 1 << e
        outside = (masks & bit) == 0
        closed &= ~(outside & (table[masks | bit] == table))
    return closed


def _d_mask(matroid: Matroid) -> np.ndarray:
    """Boolean array: removing any element keeps the rank."""
    table = matroid.rank_table()
    masks = all_masks(matroid.size)
    result = np.ones(len(masks), dtype=bool)
    for e in matroid.ground:
        bit = 1 << e
        inside = (masks & bit) != 0
        result &= ~(inside & (table[masks & ~bit] != table))
    return result


@exhaustive
def enumerate_flats(matroid: Matroid) -> FlatReport:
    table = matroid.rank_table()
    sizes = mask_sizes(matroid.size)
    r = matroid.r
    flats = np.nonzero(_flat_mask(matroid))[0]
    flat_ranks = {SubsetMask(int(a)): int(table[a]) for a in flats}
    hyperplanes = tuple(a for a, rk in flat_ranks.items() if rk == r - 1)

    f = {}
    for k in range(1, r + 1):
        of_rank = flats[table[flats] == r - k]
        if len(of_rank):
            f[k] = int(sizes[of_rank].max())
    log.debug('%s: %d flats, %d hyperplanes', matroid.name,
              len(flats), len(hyperplanes))
    return FlatReport(
        rank=r,
        flats=tuple(flat_ranks),
        flat_ranks=flat_ranks,
        hyperplanes=hyperplanes,
        f=f
    )


@exhaustive
def enumerate_circuits(matroid: Matroid) -> CircuitReport:
    table = matroid.rank_table()
    sizes = mask_sizes(matroid.size)
    masks = all_masks(matroid.size)
    independent = table == sizes

    circuits = ~independent
    for e in matroid.ground:
        bit = 1 << e
        inside = (masks & bit) != 0
        circuits &= ~(inside & ~independent[masks & ~bit])
    circuit_list = tuple(SubsetMask(int(c)) for c in np.nonzero(circuits)[0])

    full = matroid.full
    cocircuits = tuple(sorted(
        SubsetMask(full & ~h) for h in enumerate_flats(matroid).hyperplanes
    ))

    in_d = _d_mask(matroid)
    corank = sizes - table
    d = {}
    for k in range(1, matroid.size - matroid.r + 1):
        hits = in_d & (corank == k)
        if hits.any():
            d[k] = int(sizes[hits].min())
    return CircuitReport(circuits=circuit_list, cocircuits=cocircuits, d=d)


def is_in_d(matroid: Matroid, subset: SubsetMask) -> bool:
    return matroid.is_in_d(subset)


@exhaustive
def sigma_profile(matroid: Matroid) -> SigmaProfile:
    sizes = mask_sizes(matroid.size)
    spanning = matroid.rank_table() == matroid.r
    counts = np.bincount(sizes[spanning], minlength=matroid.size + 1)
    return SigmaProfile(counts.astype(np.int64))


@exhaustive
def tau_profile(matroid: Matroid) -> TauProfile:
    sizes = mask_sizes(matroid.size)
    independent = matroid.rank_table() == sizes
    counts = np.bincount(sizes[independent], minlength=matroid.size + 1)
    return TauProfile(counts.astype(np.int64))


def check_rank_axioms(matroid: Matroid) -> CheckResult:
    """Exhaustively checks normalisation, boundedness, monotonicity and
    submodularity.

    Monotonicity and submodularity are checked in their local forms
    (single added elements), which are equivalent to the global axioms.
    The certificate is `(axiom, A, B)` naming the violating subsets.
    """
    require_exhaustive(matroid.size, 'check_rank_axioms')
    table = matroid.rank_table().astype(np.int64)
    sizes = mask_sizes(matroid.size)
    masks = all_masks(matroid.size)

    if table[0] != 0:
        return CheckResult(False, ('normalisation', 0, 0))
    bad = np.nonzero((table < 0) | (table > sizes))[0]
    if len(bad):
        a = int(bad[0])
        return CheckResult(False, ('bounds', a, a))

    for e in matroid.ground:
        bit = 1 << e
        base = masks[(masks & bit) == 0]
        bad = np.nonzero(table[base] > table[base | bit])[0]
        if len(bad):
            a = int(base[bad[0]])
            return CheckResult(False, ('monotonicity', a, a | bit))

    pair = submodularity_violation(table, matroid.size)
    if pair is not None:
        return CheckResult(False, ('submodularity',) + pair)
    return CheckResult(True)
