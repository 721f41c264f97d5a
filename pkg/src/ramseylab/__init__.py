"""Exact Ramsey-type numbers for progression families, with certificates,
closed-form bounds, exact counting oracles, and seeded Monte-Carlo checks."""

__version__ = "0.1.0"

from .bounds import (
    BoundValue,
    TowerExpr,
    gowers_upper,
    q1_new_base,
    q1_vijay_beta,
    q_exact,
    q_landman_coeff,
    sp_lower_constructive,
    sp_lower_probabilistic,
    sp_upper,
    vdw_lower_general,
    vdw_lower_primes,
    vdw_lower_probabilistic,
)
from .concentration import (
    ExperimentReport,
    RandomGraph,
    chromatic_number,
    clique_number,
    gnp_sample,
    has_three_path_all_pairs,
    lis_length,
    run_azuma_chromatic,
    run_chebyshev_threepoint,
    run_chernoff_coinflip,
    run_clique_survey,
    run_janson_threepath,
    run_janson_triangle,
    run_talagrand_lis,
)
from .counting import (
    CountReport,
    LambdaVector,
    RSet,
    build_R_set,
    closure_property_check,
    count_S,
    count_T,
    dominant_eigenvalue,
    lambda_vector,
    mc_good_fraction,
    scope2_closed_sum,
    scopem_multinomial_sum,
    union_bound_check,
)
from .errors import (
    ApplicabilityError,
    BudgetExceededError,
    CeilingReachedError,
    RamseyLabError,
    TimeBudgetError,
)
from .progressions import (
    Coloring,
    Progression,
    ProgressionKind,
    enumerate_progressions,
    feasible_differences,
    find_monochromatic,
    find_monochromatic_ending_at,
    is_progression,
)
from .rng import Rng
from .search import (
    Certificate,
    RamseyResult,
    SearchConfig,
    exists_good_coloring,
    ramsey_number,
    verify_certificate,
)

__all__ = [
    "ApplicabilityError",
    "BoundValue",
    "BudgetExceededError",
    "CeilingReachedError",
    "Certificate",
    "Coloring",
    "CountReport",
    "ExperimentReport",
    "LambdaVector",
    "Progression",
    "ProgressionKind",
    "RSet",
    "RamseyLabError",
    "RamseyResult",
    "RandomGraph",
    "Rng",
    "SearchConfig",
    "TimeBudgetError",
    "TowerExpr",
    "build_R_set",
    "chromatic_number",
    "clique_number",
    "closure_property_check",
    "count_S",
    "count_T",
    "dominant_eigenvalue",
    "enumerate_progressions",
    "exists_good_coloring",
    "feasible_differences",
    "find_monochromatic",
    "find_monochromatic_ending_at",
    "gnp_sample",
    "gowers_upper",
    "has_three_path_all_pairs",
    "is_progression",
    "lambda_vector",
    "lis_length",
    "mc_good_fraction",
    "q1_new_base",
    "q1_vijay_beta",
    "q_exact",
    "q_landman_coeff",
    "ramsey_number",
    "run_azuma_chromatic",
    "run_chebyshev_threepoint",
    "run_chernoff_coinflip",
    "run_clique_survey",
    "run_janson_threepath",
    "run_janson_triangle",
    "run_talagrand_lis",
    "scope2_closed_sum",
    "scopem_multinomial_sum",
    "sp_lower_constructive",
    "sp_lower_probabilistic",
    "sp_upper",
    "union_bound_check",
    "vdw_lower_general",
    "vdw_lower_primes",
    "vdw_lower_probabilistic",
    "verify_certificate",
]
