"""Tutte polynomial by expansion over all subsets of the ground set.

    T(x, y) = sum over A of (x - 1)^(r - rk A) (y - 1)^(|A| - rk A)

Subsets are grouped by their (corank of A in r, nullity) pair first, so
only one polynomial expansion is made per distinct pair.
"""
import logging

import numpy as np

from tuttekit.engines.registry import register_engine
from tuttekit.helpers import mask_sizes
from tuttekit.matroid import Matroid, require_exhaustive
from tuttekit.polynomial import BivariatePolynomial, x, y

log = logging.getLogger(__name__)


@register_engine('subset')
def tutte_subset_expansion(matroid: Matroid) -> BivariatePolynomial:
    require_exhaustive(matroid.size, 'subset expansion')
    table = matroid.rank_table().astype(np.int64)
    sizes = mask_sizes(matroid.size).astype(np.int64)
    width = matroid.size + 1
    x_power = matroid.r - table
    y_power = sizes - table
    counts = np.bincount(x_power * width + y_power)

    result = BivariatePolynomial()
    for key in np.nonzero(counts)[0]:
        a, b = divmod(int(key), width)
        term = int(counts[key]) * (x - 1) ** a * (y - 1) ** b
        result = result + BivariatePolynomial.from_expr(term)
    log.debug('%s: subset expansion over %d rank/nullity classes',
              matroid.name, int(np.count_nonzero(counts)))
    return result
