//! Standard parabolic faces of highest weight modules over semisimple Lie
//! algebras, computed from Dynkin data and checked against brute force.
//!
//! Node labels are 0-based in the API and 1-based (Bourbaki) in text and
//! JSON. Weights use fundamental-weight coordinates.

pub mod cli;
pub mod dynkin;
pub mod error;
pub mod facecalc;
pub mod linalg;
pub mod modulespec;
pub mod nodeset;
pub mod oracle;
pub mod rational;
pub mod rootsystem;
pub mod types;
pub mod weyl;

pub use error::{Diagnostic, Error, Result};
pub use modulespec::{CoordClass, ModuleSpec, Preset};
pub use nodeset::NodeSet;
pub use rational::Q;
pub use rootsystem::{RootSystem, RootVector, Weight};
pub use types::{DynkinType, Family};
