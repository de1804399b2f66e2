"""tuttekit - exact matroid and Tutte polynomial toolkit."""

from tuttekit.var_types import *
from tuttekit.matroid import (
    Matroid, make_uniform, make_from_bases, validate_bases, rank, closure,
    dual
)
from tuttekit.structure import (
    enumerate_flats, enumerate_circuits, is_in_d, sigma_profile,
    tau_profile, check_rank_axioms
)
from tuttekit.polynomial import (
    BivariatePolynomial, UnivariatePolynomial, specialize_x_at_1,
    specialize_y_at_1, evaluate
)
