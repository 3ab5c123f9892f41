// Matrix code indexes rows and columns directly, and `!(x <= tol)` is used
// on purpose so that NaN fails a bound.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod classical;
pub mod e8;
pub mod exact_poly;
pub mod radicals;
pub mod report;
pub mod root_systems;
pub mod spectral;
pub mod toda_masses;
pub mod verification;
