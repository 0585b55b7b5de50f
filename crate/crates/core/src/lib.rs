//! Minimal heights of blocks and Sylow subgroups for symmetric, alternating
//! and finite reductive groups.

pub mod arith;
pub mod cyclo;
pub mod engine;
pub mod height;
pub mod lie;
pub mod partition;
pub mod pgroup;
pub mod symblocks;
pub mod verify;

pub use height::MinHeight;
pub use partition::{CoreQuotient, Partition, PartitionError};
