//! Exact piecewise-linear realization of F on [0,1].

pub mod dyadic;
pub mod map;

pub use dyadic::Dyadic;
pub use map::{pl_equal, pl_oracle, PlMap};
