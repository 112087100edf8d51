//! Statistic-swapping bijections: the sweep map on decorated Dyck paths, the
//! zeta map on polyominoes, and the map from polyominoes to Dyck paths.
//!
//! Every inverse rebuilds a candidate preimage, maps it forward again and
//! reports [`crate::DeltaError::NotInImage`] unless it lands exactly on the
//! input.

mod poly_dyck;
mod sweep;
mod zeta;

pub use crate::dyck::rise_to_fall;
pub use poly_dyck::{dyck_to_poly, poly_to_dyck};
pub use sweep::{sweep, sweep_inv};
pub use zeta::{zeta, zeta_inv};
