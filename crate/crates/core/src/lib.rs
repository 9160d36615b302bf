//! Perfect matching complexes of honeycomb graphs: construction, discrete
//! Morse pairings, integer homology and a theorem-checking harness.

pub mod cli;
pub mod complex;
pub mod error;
pub mod face;
pub mod figure;
pub mod graph;
pub mod hexgraph;
pub mod homology;
pub mod morse;
pub mod partitions;
pub mod verify;

pub use error::{Error, Result};
pub use face::Face;
pub use graph::{GraphView, SimpleGraph};
pub use hexgraph::{EdgeLabel, Family, HexGraph};
pub use partitions::{Matching, PlanePartition};
