"""Binomial coefficients and the alternating binomial identity.

`binomial` is zero whenever k < 0, k > n or n < 0, which is what lets the
correction sums elsewhere in `tuttekit.theorems` be evaluated term by term
without range guards.
"""
from typing import Tuple

from scipy.special import comb

from tuttekit.errors import PreconditionError


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))


def alternating_sum(m: int, p: int, k: int) -> int:
    """sum_{i=k}^{m-p} (-1)^(i-k) C(m, p+i) C(i, k)."""
    return sum((-1) ** (i - k) * binomial(m, p + i) * binomial(i, k)
               for i in range(k, m - p + 1))


def identity_closed_form(m: int, p: int, k: int) -> int:
    """Closed form of `alternating_sum(m, p, k)`.

    For p >= 1 this is C(m - k - 1, p - 1). For p = 0 the sum collapses to
    1 when k == m and 0 otherwise, which C(m - k - 1, -1) does not give.
    Both agree with the sum for every p + k <= m, and vanish above it.
    """
    if p >= 1:
        return binomial(m - k - 1, p - 1)
    return int(k == m)


def lemma31_both_sides(m: int, p: int, k: int) -> Tuple[int, int]:
    """Both sides of the alternating binomial identity.

    Raises:
        PreconditionError: Negative arguments, or p + k > m.

    """
    if min(m, p, k) < 0:
        raise PreconditionError(
            f'Identity needs nonnegative m, p, k; got ({m}, {p}, {k})'
        )
    if p + k > m:
        raise PreconditionError(
            f'Identity needs p + k <= m; got p + k = {p + k} > m = {m}'
        )
    return alternating_sum(m, p, k), identity_closed_form(m, p, k)
