"""x-side coefficients of T(x, 1) from circuits.

For i > r - d_2,

    [x^i] T(x, 1) = C(|X|-i-1, r-i)
                    - sum_{C, |C| < d_2} C(|X|-|C|-i-1, |X|-r-1)

which is the hyperplane form applied to the dual matroid, whose
hyperplanes are the complements of the circuits. d_2 undefined counts as
plus infinity. Closed forms are written in the dual shape
C(|X|-i-1, |X|-r-1), which agrees with C(|X|-i-1, r-i) when |X| > r and
stays exact for free matroids.
"""
from typing import Optional

from tuttekit.engines import tutte
from tuttekit.errors import ValidityRangeError
from tuttekit.helpers import popcount
from tuttekit.matroid import Matroid
from tuttekit.polynomial import BivariatePolynomial
from tuttekit.structure import enumerate_circuits
from tuttekit.theorems.binomials import identity_closed_form
from tuttekit.theorems.sums import require_index
from tuttekit.var_types import CheckResult


def x_lower_bound(matroid: Matroid) -> Optional[int]:
    """r - d_2, or None when d_2 is undefined."""
    d2 = enumerate_circuits(matroid).d.get(2)
    return None if d2 is None else matroid.r - d2


def circuit_validity(matroid: Matroid) -> str:
    bound = x_lower_bound(matroid)
    if bound is None:
        return 'valid: all i (d2 undefined)'
    return f'valid: i > r - d2 = {bound}'


def in_circuit_range(matroid: Matroid, i: int) -> bool:
    bound = x_lower_bound(matroid)
    return bound is None or i > bound


def x_closed_form(matroid: Matroid, i: int) -> int:
    n = matroid.size
    return identity_closed_form(n, n - matroid.r, i)


def coeff_x_circuit(matroid: Matroid, i: int) -> int:
    require_index(i, 'i')
    if not in_circuit_range(matroid, i):
        raise ValidityRangeError(
            f'i = {i} is outside the range i > r - d2 = '
            f'{x_lower_bound(matroid)}'
        )
    report = enumerate_circuits(matroid)
    n, r = matroid.size, matroid.r
    d2 = report.d.get(2)
    correction = sum(
        identity_closed_form(n - popcount(c), n - r, i)
        for c in report.circuits
        if d2 is None or popcount(c) < d2
    )
    return x_closed_form(matroid, i) - correction


def threshold_x_applies(matroid: Matroid, i: int) -> bool:
    """d_1 > r - i; always true when there are no circuits."""
    d1 = enumerate_circuits(matroid).d.get(1)
    return d1 is None or d1 > matroid.r - i


def threshold_x_validity(matroid: Matroid) -> str:
    d1 = enumerate_circuits(matroid).d.get(1)
    if d1 is None:
        return 'valid: all i (d1 undefined)'
    return f'valid: i > r - d1 = {matroid.r - d1}'


def coeff_x_threshold(matroid: Matroid, i: int) -> int:
    require_index(i, 'i')
    if not threshold_x_applies(matroid, i):
        raise ValidityRangeError(
            f'Closed form needs d1 > r - i; got d1 = '
            f'{enumerate_circuits(matroid).d[1]}, r - i = {matroid.r - i}'
        )
    return x_closed_form(matroid, i)


def threshold_x_iff(matroid: Matroid,
                    poly: Optional[BivariatePolynomial] = None
                    ) -> CheckResult:
    """Checks d_1 > r - i  <=>  [x^i] T(x, 1) = C(|X|-i-1, r-i) for every
    i in 0..r. The certificate is `(i, closed_form, engine_value)`."""
    poly = poly if poly is not None else tutte(matroid)
    at_y_1 = poly.specialize_y_at_1()
    table = {}
    for i in range(matroid.r + 1):
        closed = x_closed_form(matroid, i)
        engine = at_y_1[i]
        condition = threshold_x_applies(matroid, i)
        table[i] = (condition, closed, engine)
        if condition != (closed == engine):
            return CheckResult(False, (i, closed, engine), {'table': table})
    return CheckResult(True, details={'table': table})


coeff_x_threshold_iff = threshold_x_iff
