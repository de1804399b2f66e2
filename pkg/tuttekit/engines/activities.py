"""Tutte polynomial as a sum over bases weighted by activities.

With the ground set ordered by index, an element e outside a base B is
externally active when no smaller f in B makes B - f + e a base, and an
element e in B is internally active when no smaller f outside B makes
B - e + f a base. Each base contributes x^(internal) y^(external).
"""
from collections import Counter
from typing import List, Tuple

from tuttekit.engines.registry import register_engine
from tuttekit.helpers import elements
from tuttekit.matroid import Matroid, require_exhaustive
from tuttekit.polynomial import BivariatePolynomial
from tuttekit.var_types import ActivityRecord, SubsetMask


def internal_activity(matroid: Matroid, base: SubsetMask) -> int:
    table = matroid.rank_table()
    r = matroid.r
    count = 0
    for e in elements(base):
        without = base & ~(1 << e)
        if not any(table[without | (1 << f)] == r
                   for f in range(e) if not base >> f & 1):
            count += 1
    return count


def external_activity(matroid: Matroid, base: SubsetMask) -> int:
    table = matroid.rank_table()
    r = matroid.r
    count = 0
    for e in matroid.ground:
        if base >> e & 1:
            continue
        if not any(table[(base & ~(1 << f)) | (1 << e)] == r
                   for f in elements(base) if f < e):
            count += 1
    return count


def tutte_by_activities(
        matroid: Matroid
) -> Tuple[BivariatePolynomial, List[ActivityRecord]]:
    """Returns the Tutte polynomial and the activity record of every base.

    Records are sorted by base mask. The polynomial does not depend on
    the ground-set order; the records do.
    """
    require_exhaustive(matroid.size, 'activity enumeration')
    records = [
        ActivityRecord(base,
                       internal_activity(matroid, base),
                       external_activity(matroid, base))
        for base in matroid.bases()
    ]
    tally = Counter((rec.internal_activity, rec.external_activity)
                    for rec in records)
    return BivariatePolynomial.from_dict(tally), records


@register_engine('activities')
def tutte_activities_engine(matroid: Matroid) -> BivariatePolynomial:
    poly, _ = tutte_by_activities(matroid)
    return poly
