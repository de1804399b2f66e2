"""y-side coefficients of T(1, y) from hyperplanes and cocircuits.

For j > f_2 - r,

    [y^j] T(1, y) = C(|X|-j-1, r-1) - sum_{H, |H| > f_2} C(|H|-j-1, r-1)

and, reading each hyperplane H as the cocircuit X - H,

    [y^j] T(1, y) = C(|X|-j-1, r-1)
                    - sum_{C*, |C*| < |X| - f_2} C(|X|-|C*|-j-1, r-1).

When no flat of rank r - 2 exists, f_2 is taken as minus infinity: every
j is valid and every hyperplane enters the correction. The leading term
goes through `identity_closed_form`, which also covers rank zero.
"""
from typing import Optional

from tuttekit.engines import tutte
from tuttekit.errors import ValidityRangeError
from tuttekit.helpers import popcount
from tuttekit.matroid import Matroid
from tuttekit.polynomial import BivariatePolynomial
from tuttekit.structure import enumerate_circuits, enumerate_flats
from tuttekit.theorems.binomials import identity_closed_form
from tuttekit.theorems.sums import require_index
from tuttekit.var_types import CheckResult


def y_lower_bound(matroid: Matroid) -> Optional[int]:
    """f_2 - r, or None when f_2 is undefined."""
    f2 = enumerate_flats(matroid).f.get(2)
    return None if f2 is None else f2 - matroid.r


def hyperplane_validity(matroid: Matroid) -> str:
    bound = y_lower_bound(matroid)
    if bound is None:
        return 'valid: all j (f2 undefined)'
    return f'valid: j > f2 - r = {bound}'


def in_hyperplane_range(matroid: Matroid, j: int) -> bool:
    bound = y_lower_bound(matroid)
    return bound is None or j > bound


def _require_hyperplane_range(matroid: Matroid, j: int):
    require_index(j, 'j')
    if not in_hyperplane_range(matroid, j):
        raise ValidityRangeError(
            f'j = {j} is outside the range j > f2 - r = '
            f'{y_lower_bound(matroid)}'
        )


def coeff_y_hyperplane(matroid: Matroid, j: int) -> int:
    _require_hyperplane_range(matroid, j)
    flats = enumerate_flats(matroid)
    n, r = matroid.size, matroid.r
    f2 = flats.f.get(2)
    correction = sum(
        identity_closed_form(popcount(h), r, j)
        for h in flats.hyperplanes
        if f2 is None or popcount(h) > f2
    )
    return identity_closed_form(n, r, j) - correction


def coeff_y_cocircuit(matroid: Matroid, j: int) -> int:
    _require_hyperplane_range(matroid, j)
    n, r = matroid.size, matroid.r
    f2 = enumerate_flats(matroid).f.get(2)
    correction = sum(
        identity_closed_form(n - popcount(c), r, j)
        for c in enumerate_circuits(matroid).cocircuits
        if f2 is None or popcount(c) < n - f2
    )
    return identity_closed_form(n, r, j) - correction


def threshold_y_applies(matroid: Matroid, j: int) -> bool:
    """f_1 < j + r; always true when there are no hyperplanes."""
    f1 = enumerate_flats(matroid).f.get(1)
    return f1 is None or f1 < j + matroid.r


def threshold_y_validity(matroid: Matroid) -> str:
    f1 = enumerate_flats(matroid).f.get(1)
    if f1 is None:
        return 'valid: all j (f1 undefined)'
    return f'valid: j > f1 - r = {f1 - matroid.r}'


def coeff_y_threshold(matroid: Matroid, j: int) -> int:
    """C(|X|-j-1, r-1), when the largest hyperplane is small enough."""
    require_index(j, 'j')
    if not threshold_y_applies(matroid, j):
        raise ValidityRangeError(
            f'Closed form needs f1 < j + r; got f1 = '
            f'{enumerate_flats(matroid).f[1]}, j + r = {j + matroid.r}'
        )
    return identity_closed_form(matroid.size, matroid.r, j)


def threshold_y_iff(matroid: Matroid,
                    poly: Optional[BivariatePolynomial] = None
                    ) -> CheckResult:
    """Checks f_1 < j + r  <=>  [y^j] T(1, y) = C(|X|-j-1, r-1) for every
    j in 0..|X| - r, against the engine polynomial.

    The certificate of a failure is `(j, closed_form, engine_value)`.
    """
    poly = poly if poly is not None else tutte(matroid)
    at_x_1 = poly.specialize_x_at_1()
    n, r = matroid.size, matroid.r
    table = {}
    for j in range(n - r + 1):
        closed = identity_closed_form(n, r, j)
        engine = at_x_1[j]
        condition = threshold_y_applies(matroid, j)
        table[j] = (condition, closed, engine)
        if condition != (closed == engine):
            return CheckResult(False, (j, closed, engine), {'table': table})
    return CheckResult(True, details={'table': table})
