//! Exact classification of pencils of plane conics into their eight
//! PGL(3) orbits, together with the intersection theory on the
//! Grassmannian G(1,5) that computes the classes of the orbit closures.

pub mod error;
pub mod classifier;
pub mod cli;
pub mod exact_forms;
pub mod flag_chern;
pub mod harness;
pub mod schubert;

pub use error::{Error, Result};
