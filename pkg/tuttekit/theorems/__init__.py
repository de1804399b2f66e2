"""Coefficient formulas for T(1, y) and T(x, 1) and their verification."""
from tuttekit.theorems.binomials import (
    binomial, identity_closed_form, lemma31_both_sides
)
from tuttekit.theorems.sums import (
    coeff_y_sigma, coeff_x_tau, coeff_x_dual_sigma, sigma_via_hyperplanes
)
from tuttekit.theorems.hyperplanes import (
    coeff_y_hyperplane, coeff_y_cocircuit, coeff_y_threshold,
    threshold_y_iff, hyperplane_validity, threshold_y_validity
)
from tuttekit.theorems.circuits import (
    coeff_x_circuit, coeff_x_threshold, threshold_x_iff, coeff_x_threshold_iff,
    circuit_validity, threshold_x_validity
)
from tuttekit.theorems.graph_corollaries import (
    graph_gjk_iff, graph_gjk_via_matroid, graph_cg_coeff,
    lemma36_bound_check, graph_corollary_x, graph_corollary_x_iff
)
from tuttekit.theorems.verification import (
    CoeffMethod, VerificationReport, THEOREMS, verify
)
