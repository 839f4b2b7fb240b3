from .estimates import (
    CERTIFIED,
    HEURISTIC,
    LocalityRow,
    MuInterval,
    estimate_lambda,
    exact_value,
    locality_scan,
    mu_interval,
    ratio_estimate,
    return_probability,
    upper_envelope,
)
from .solvers import (
    GOLDEN,
    NoRootError,
    bisect_root,
    cubic_girth_lower,
    cubic_girth_residual,
    fisher_g,
    fisher_iterate,
    fisher_mu_pull,
    fisher_mu_push,
    fisher_rate_bounds,
    girth_degree_residual,
    girth_degree_upper,
    semicubic_h,
    semicubic_solve,
    spectral_lower,
)
