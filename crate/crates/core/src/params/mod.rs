//! Generators of hyperplanes and halfspaces in the space of stability
//! parameters.

pub mod birational;
pub mod rank_maximal;
pub mod region;
pub mod screening;
pub mod special;
pub mod standard;
pub mod vanishing;
pub mod walls;

pub use birational::{alpha_max, alpha_min, birationality_boundary, on_birationality_boundary, BoundaryHyperplane};
pub use rank_maximal::{rank_maximal_region, MapFlags};
pub use region::{LabeledHalfspace, RegionReport};
pub use special::{extremal_summary, pattern_dimension, region_1m1, region_m1n, ExtremalSummary, PatternRegion};
pub use standard::{r2g2_region, standard_hyperplane, standard_region};
pub use vanishing::{flip_codim_lower_bound, flip_dim_bound, vanishing_flags, FlipFiltration, Verdict};
pub use walls::{enumerate_walls, wall_for_signature, SubchainSignature, Wall, WallKind, WallSet};
