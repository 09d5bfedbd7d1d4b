//! Boundary Schwarz quantities, diameters and the inequality checks built on them.

mod boundary;
mod diameter;
mod growth;
mod identities;

pub use boundary::{
    boundary_modulus_derivative, cayley_quotient, inner_boundary_estimate, julia_check,
    modulus_inequality_check, quaternionic_bounds, BoundaryReport, InnerEstimate, JuliaReport,
    VanishingBound,
};
pub use diameter::{
    cauchy_estimate_check, diameters, landau_toeplitz_check, low_discrepancy_sphere,
    CauchyEstimate, DiameterEstimate, DiameterKind, DirectionSet, LandauToeplitzReport,
};
pub use growth::{
    extremum_scan, growth_distortion_check, quarter_covering, CoveringReport, ExtremumReport,
    GridMinimum, GridSpec, GrowthReport,
};
pub use identities::{
    camshaft_search, convex_combination_check, frame_for, log_quotient_eval, pointwise_star_check,
    star_eval, t_transform, CamshaftWitness, IdentityCheck, PointwiseStarReport,
};

#[cfg(test)]
mod tests;
