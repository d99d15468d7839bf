//! Correspondence (DP-) coloring: covers, solvers, and the hypothesis checkers of
//! the local-occupancy coloring theorems.

mod conditions;
mod cover;
mod solve;

pub use cover::{
    cover_from_lists, random_cover, twisted_c4, uniform_lists, Color, ColoringAssignment,
    CorrespondenceCover, Twist,
};
pub use conditions::{
    alpha_min, bknp_condition_check, bknp_conditions, dkps_condition_check, dkps_degree_scale,
    dkps_ell, dkps_list_requirement, instantiated_ell_t, l1_min_degree, list_size_threshold,
    list_size_threshold_with_max, m1_min_degree, median_bound, AlphaMin, BknpConditions,
    BknpParams, BknpReport, BknpVertexReport, DkpsReport, ListSizeCheck, PartitionWitness,
    ThresholdKind, MAX_ALPHA_MIN_DEGREE,
};
pub use solve::{
    chi_c_estimate, chromatic_number, heuristic_color, heuristic_portfolio, solve_exact,
    ChiCEstimate, Outcome, MAX_EXACT_LIST, MAX_EXACT_VERTICES,
};
