"""Tutte coefficients as alternating sums over spanning and independent
set counts.

    [y^j] T(1, y) = sum_{t=j}^{|X|-r} (-1)^(t-j) C(t, j) sigma_{r+t}
    [x^i] T(x, 1) = sum_{t=i}^{r} (-1)^(t-i) C(t, i) tau_{r-t}
"""
from tuttekit.errors import InvalidParameters, ValidityRangeError
from tuttekit.helpers import popcount
from tuttekit.matroid import Matroid
from tuttekit.structure import enumerate_flats, sigma_profile, tau_profile
from tuttekit.theorems.binomials import binomial


def require_index(value: int, name: str = 'j'):
    if value < 0:
        raise InvalidParameters(f'{name} must be nonnegative, got {value}')


def coeff_y_sigma(matroid: Matroid, j: int) -> int:
    require_index(j, 'j')
    sigma = sigma_profile(matroid)
    r = matroid.r
    return sum((-1) ** (t - j) * binomial(t, j) * sigma[r + t]
               for t in range(j, matroid.size - r + 1))


def coeff_x_tau(matroid: Matroid, i: int) -> int:
    require_index(i, 'i')
    tau = tau_profile(matroid)
    r = matroid.r
    return sum((-1) ** (t - i) * binomial(t, i) * tau[r - t]
               for t in range(i, r + 1))


def coeff_x_dual_sigma(matroid: Matroid, i: int) -> int:
    """[x^i] T_M(x, 1) read off the spanning sets of the dual."""
    return coeff_y_sigma(matroid.dual(), i)


def sigma_via_hyperplanes(matroid: Matroid, t: int) -> int:
    """Number of spanning sets of size r + t, counted through hyperplanes.

    A set of more than f_2 elements lies in at most one hyperplane, so
    the non-spanning sets of that size are counted hyperplane by
    hyperplane. Valid for r + t > f_2 (every t when f_2 is undefined).
    """
    require_index(t, 't')
    flats = enumerate_flats(matroid)
    r = matroid.r
    size = r + t
    f2 = flats.f.get(2)
    if f2 is not None and size <= f2:
        raise ValidityRangeError(
            f'Hyperplane count needs r + t > f2; got r + t = {size}, '
            f'f2 = {f2}'
        )
    sizes = [popcount(h) for h in flats.hyperplanes]
    return binomial(matroid.size, size) - sum(binomial(s, size)
                                              for s in sizes)
