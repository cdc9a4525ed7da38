//! Exactly solvable angular Schrodinger operators built on sums of inverse squared sines
//! and cosines, with their planar and three-body extensions.

pub mod angular;
pub mod composite;
pub mod error;
pub mod identities;
pub mod model;
pub mod numerics;
pub mod report;
pub mod special;

pub use error::{Error, Result};
pub use model::{Couplings, DomainCell, ModelParams, NClass};
