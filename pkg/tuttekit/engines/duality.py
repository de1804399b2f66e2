"""Duality check, T_M(x, y) = T_M*(y, x)."""
from tuttekit.engines.subset import tutte_subset_expansion
from tuttekit.matroid import Matroid
from tuttekit.var_types import CheckResult


def duality_check(matroid: Matroid) -> CheckResult:
    """Compares the subset expansions of `matroid` and its dual.

    The certificate of a failure is `(i, j, t_ij(M), t_ji(M*))` for the
    first differing coefficient.
    """
    primal = tutte_subset_expansion(matroid)
    dual = tutte_subset_expansion(matroid.dual())
    swapped = dual.swap()
    details = {'primal': primal, 'dual': dual}
    if primal == swapped:
        return CheckResult(True, details=details)
    support = sorted(set(primal.coeffs) | set(swapped.coeffs))
    for i, j in support:
        if primal.coefficient(i, j) != swapped.coefficient(i, j):
            return CheckResult(
                False,
                (i, j, primal.coefficient(i, j), swapped.coefficient(i, j)),
                details
            )
    return CheckResult(False, details=details)
