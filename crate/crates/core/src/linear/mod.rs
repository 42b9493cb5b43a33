//! Linear chains: representations of the linearly oriented type-A quiver.

pub mod classify;
pub mod ff;
pub mod interval;
pub mod oracle;
pub mod vset;

pub use classify::{classify_linear_3chain_parameters, ray_asymptotic_semistable, Classification, SemistableSet};
pub use interval::{
    chi_linear, enumerate_interval_decompositions, interval_dimension_vector, interval_pairing, DimensionVector,
    IntervalDecomposition, IntervalModule, Pairing, DEFAULT_DECOMPOSITION_CAP,
};
pub use oracle::{hom_ext_dims, oracle_exists_semistable, oracle_is_semistable, FiniteFieldRep, OracleVerdict};
pub use vset::{in_v_set, VWitness};
