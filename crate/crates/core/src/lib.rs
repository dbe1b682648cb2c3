//! Flat-foldability of origami crease patterns.
//!
//! * [`vertex`]: single-vertex conditions and counting of valid
//!   mountain-valley assignments.
//! * [`oracle`]: exhaustive layer-ordering search used as ground truth.
//! * [`pattern`]: necessary conditions for multi-vertex crease patterns.

pub mod angle;
pub mod assignment;
pub mod corpus;
pub mod crease_pattern;
pub mod error;
pub mod oracle;
pub mod pattern;
pub mod vertex;

pub use angle::{Angle, AngleSequence, SequenceKind};
pub use assignment::{MvAssignment, MvLabel};
pub use crease_pattern::{normalize_pattern, vertex_star, CreasePattern, Point};
pub use error::{Error, Result};
