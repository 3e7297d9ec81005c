//! Internal and external angle sums of beta and beta' simplices, computed
//! exactly in Q[pi^(1/2), pi^(-1/2)] where possible and numerically
//! otherwise, together with the f-vector formulas built on them.

pub mod error;
pub mod scalars;
pub mod series;
pub mod trig;
pub mod quadrature;
pub mod angles;
pub mod polytope;
pub mod montecarlo;
pub mod verify;

pub use error::{Error, Result};
pub use scalars::{Family, PiNumber, Rational};
