"""Tutte polynomial engines.

Importing this package registers the `subset`, `activities` and `delcon`
engines with `tutte`.
"""
from tuttekit.engines.registry import (
    register_engine, engine_names, applicable_engines, tutte
)
from tuttekit.engines.subset import tutte_subset_expansion
from tuttekit.engines.activities import (
    tutte_by_activities, internal_activity, external_activity
)
from tuttekit.engines.deletion_contraction import (
    DelconStats, tutte_deletion_contraction, clear_cache
)
from tuttekit.engines.duality import duality_check
