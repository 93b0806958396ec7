"""Exact unimodality checks for (1+x)^m (1+x^k) and the k^4 membership threshold."""

from ._core import (
    BracketFailure,
    D_value,
    H_family,
    L_value,
    M_value,
    N_value,
    NotFound,
    PreconditionViolation,
    ReductionViolation,
    a_of_u,
    beta_exact,
    binomial,
    case_polynomial_probe,
    central_ratio_even,
    central_ratio_odd,
    certified_alpha,
    classify,
    expand_family,
    generic_min_N,
    inequality_one_probe,
    is_strongly_unimodal,
    is_unimodal,
    max_L,
    membership_certificate,
    p_value,
    ratio_vs_coefficients,
    theorem21_bounds,
    threshold,
)

__version__ = "0.1.0"
