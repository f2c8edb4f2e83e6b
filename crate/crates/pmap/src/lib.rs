//! Principal minors, cycle sums and Nanson-type tests for whether a set of numbers can be the
//! principal minors of one matrix, applied to correlations of Grothendieck measures.

mod error;
mod minors;
mod nanson;
mod witness;

pub use error::PmapError;
pub use minors::{cluster_from_minors, indices_of, mask_of, principal_minors, ClusterTable, MinorTable, MAX_MINOR_SIZE};
pub use nanson::{nanson4, nanson_n, NansonValue, MAX_NANSON_SIZE};
pub use witness::{correlation_minors, determinantality_witness, witness_scale};
