//! Multiplicities, colength and generator elements for the variety of Leibniz
//! algebras generated by the Heisenberg algebra extended by its polynomial
//! module.
//!
//! * [`partitions`]: partitions, Young diagram statistics, shape classes.
//! * [`invariants`]: multiplicities `m_λ`, colength `l_n`, the counting
//!   sequences behind it and the codimension.
//! * [`algebra`]: exact arithmetic in the generating algebra.
//! * [`symbolic`]: free expressions, alternating templates, the generator
//!   catalog, linearization and independence certificates.
//! * [`verify`]: the checks shared by the command line and the test suites.

pub mod algebra;
pub mod error;
pub mod invariants;
pub mod partitions;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
