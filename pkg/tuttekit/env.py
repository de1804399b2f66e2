"""tuttekit Environment Variables.

Attributes:
     HARD_LIMIT - largest ground set that exhaustive (2^n) enumeration
        will accept, regardless of configuration.
     DEFAULT_CLI_LIMIT - exhaustive limit used by the command line when
        neither `--max-size` nor `TUTTE_MAX_GROUND` is given.
     canonical_tie_limit - largest tied refinement cell that the
        deletion-contraction canonicaliser resolves by permutation.
     rank_cache - memoise rank oracle queries.
     max_ground - limit set explicitly (the command line sets it from
        `--max-size`); takes precedence over `TUTTE_MAX_GROUND`.

Notes:
    `TUTTE_MAX_GROUND` is read on every call to `exhaustive_limit`, so it
    may be changed between computations. Values above `HARD_LIMIT` are
    clamped.

"""
import os

from tuttekit.errors import UsageError

HARD_LIMIT = 24
DEFAULT_CLI_LIMIT = 20
ENV_VARIABLE = 'TUTTE_MAX_GROUND'

canonical_tie_limit = 8
rank_cache = True
max_ground = None


def exhaustive_limit(default: int = HARD_LIMIT) -> int:
    """Returns the active exhaustive-enumeration limit."""
    if max_ground is not None:
        return min(max_ground, HARD_LIMIT)
    value = os.environ.get(ENV_VARIABLE)
    if value is None or value.strip() == '':
        return min(default, HARD_LIMIT)
    try:
        limit = int(value)
    except ValueError as ex:
        raise UsageError(
            f'{ENV_VARIABLE} must be an integer, got {value!r}'
        ) from ex
    if limit < 0:
        raise UsageError(f'{ENV_VARIABLE} must be nonnegative, got {limit}')
    return min(limit, HARD_LIMIT)
