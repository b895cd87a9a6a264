pub mod anchored;
pub mod engine;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod monge;
pub mod oracle;
pub mod rmq;
pub mod stab;

pub use engine::{Answer, BuildStats, Index};
pub use error::{Error, Result};
pub use geometry::{Point, PointSet, Provenance, Rect, TaggedRect};
