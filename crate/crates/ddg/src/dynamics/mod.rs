//! Time dynamics of the generator: gradual per-component drifts and
//! large-impact global events.

pub mod global;
pub mod local;
